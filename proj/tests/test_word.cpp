#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>

#include "perm5/word.hpp"

using namespace perm5;

namespace {

std::vector<Word> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Word> out;
    do {
        out.push_back(Word(std::vector<int>(v)));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_CASE("word construction and validation") {
    CHECK_THROWS_AS(Word({1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Word({1, -1}), std::invalid_argument);
    CHECK(Word::parse("2 6 4").letters() == std::vector<int>{2, 6, 4});
    CHECK(Word::parse("").empty());
    CHECK(Word({1, 2, 3}).is_permutation());
    CHECK_FALSE(Word({0, 1, 2}).is_permutation());
    CHECK_FALSE(Word({1, 3}).is_permutation());
    CHECK(Word({5, 8, 2}).standardized() == Word({2, 3, 1}));
    CHECK(Word({5, 8, 2}).str() == "5 8 2");
}

TEST_CASE("statistics on the running 20-letter example") {
    Word w = Word::parse("2 6 4 7 10 14 9 15 17 20 19 16 18 11 12 13 8 3 5 1");
    StatRecord r = statistics(w);
    CHECK(r.lrmax == std::vector<int>{2, 6, 7, 10, 14, 15, 17, 20});
    CHECK(r.iar == std::vector<int>{2, 6});
    CHECK(r.br == std::vector<int>{6, 14, 20});
}

TEST_CASE("statistics on small words") {
    StatRecord id3 = statistics(Word({1, 2, 3}));
    CHECK(id3.des.empty());
    CHECK(id3.lrmax == std::vector<int>{1, 2, 3});
    CHECK(id3.iar == std::vector<int>{1, 2, 3});
    CHECK(id3.asc == 2);

    StatRecord r = statistics(Word({5, 8, 2, 9, 3, 7, 4, 1, 6}));
    CHECK(r.exc == 4);
    CHECK(r.lmaxz == 4);
    CHECK(r.rlmin == std::vector<int>{1, 6});

    CHECK_THROWS_AS(statistics(Word()), std::invalid_argument);
}

TEST_CASE("peak sentinels sit below every letter") {
    CHECK(statistics(Word({0})).pk == std::vector<int>{0});
    CHECK(statistics(Word({1, 0})).pk == std::vector<int>{1});
    CHECK(statistics(Word({0, 1})).pk == std::vector<int>{1});
    CHECK(statistics(Word({2, 0, 1})).pk == std::vector<int>{1, 2});
}

TEST_CASE("symmetry operations") {
    CHECK(inverse(Word({2, 3, 1})) == Word({3, 1, 2}));
    CHECK(reverse(Word({1, 2, 3})) == Word({3, 2, 1}));
    CHECK(complement(Word({1, 3, 2})) == Word({3, 1, 2}));
    CHECK_THROWS_AS(inverse(Word({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(complement(Word({2, 4})), std::invalid_argument);
    for (const Word& p : all_perms(5)) {
        CHECK(inverse(inverse(p)) == p);
        CHECK(reverse(reverse(p)) == p);
        CHECK(complement(complement(p)) == p);
    }
}

TEST_CASE("statistic identities over S_n") {
    for (int n = 1; n <= 8; ++n) {
        for (const Word& p : all_perms(n)) {
            StatRecord r = statistics(p);
            CHECK(static_cast<int>(r.des.size()) + r.asc == n - 1);
            CHECK(r.iasc == n - 1 - static_cast<int>(r.ides.size()));
            // Ides(p) equals the descent positions of the inverse, read as values
            CHECK(r.ides == statistics(inverse(p)).des);
            // the initial ascending run consists of left-to-right maxima
            CHECK(std::includes(r.lrmax.begin(), r.lrmax.end(), r.iar.begin(), r.iar.end()));
        }
    }
}

TEST_CASE("statistics only depend on relative order where they should") {
    Word w = Word::parse("12 50 3 47 20");
    Word s = w.standardized();
    StatRecord rw = statistics(w), rs = statistics(s);
    CHECK(rw.ides == rs.ides);
    CHECK(rw.des == rs.des);
    CHECK(rw.exc == rs.exc);
    CHECK(rw.lmaxz == rs.lmaxz);
    // value-based set statistics carry the word's own letters
    CHECK(rw.lrmax == std::vector<int>{12, 50});
    CHECK(rw.lrmin == std::vector<int>{3, 12});
    CHECK(rw.rlmax == std::vector<int>{20, 47, 50});
    CHECK(rw.iar == std::vector<int>{12, 50});
}
