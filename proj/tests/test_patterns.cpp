#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <set>

#include "perm5/patterns.hpp"

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

// Independent oracle: try every k-subset of positions directly.
bool naive_contains(const Word& w, const Word& p) {
    const int n = w.size(), k = p.size();
    if (k > n) return false;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<int> sub;
        for (int i : idx) sub.push_back(w[i]);
        if (Word(sub).standardized() == p) return true;
        int j = k - 1;
        while (j >= 0 && idx[j] == n - k + j) --j;
        if (j < 0) return false;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
}

}  // namespace

TEST_CASE("contains_pattern examples") {
    CHECK_FALSE(contains_pattern(Word({1, 2, 3}), Word({2, 1})));
    CHECK(contains_pattern(Word::parse("5 8 2 9 3 7 4 1 6"), Word({3, 1, 2})));
    Word big = Word::parse("2 6 4 7 10 14 9 15 17 20 19 16 18 11 12 13 8 3 5 1");
    CHECK_FALSE(contains_pattern(big, Word::parse("3 1 2 4 5")));
    CHECK_FALSE(contains_pattern(big, Word::parse("3 1 2 4")));
    CHECK(contains_pattern(big, Word::parse("3 1 2")));
    CHECK_FALSE(contains_pattern(Word({1, 2}), Word({1, 2, 3})));
    CHECK_THROWS_AS(contains_pattern(Word({1, 2, 3}), Word({1, 3})), std::invalid_argument);
}

TEST_CASE("matcher agrees with the all-subsequences oracle") {
    std::vector<Word> pats;  // every pattern of length <= 5
    for (int k = 1; k <= 5; ++k)
        for (const Word& p : all_perms(k)) pats.push_back(p);
    REQUIRE(pats.size() == 1 + 2 + 6 + 24 + 120);
    for (int n = 1; n <= 7; ++n)
        for (const Word& w : all_perms(n))
            for (const Word& p : pats)
                CHECK(contains_pattern(w, p) == naive_contains(w, p));
    // length 8: every pattern against a deterministic slice of S_8
    const std::vector<Word> s8 = all_perms(8);
    for (size_t i = 0; i < s8.size(); i += 37)
        for (const Word& p : pats)
            CHECK(contains_pattern(s8[i], p) == naive_contains(s8[i], p));
}

TEST_CASE("enumerate_class counts and membership") {
    PatternSet ps21 = PatternSet::parse("21");
    std::vector<Word> got;
    enumerate_class(1, ps21, [&](const Word& w) { got.push_back(w); });
    CHECK(got == std::vector<Word>{Word({1})});

    PatternSet ps = PatternSet::parse("3124,3214");
    CHECK(class_size(4, ps) == 22);

    // against filtering the full symmetric group
    for (int n = 1; n <= 6; ++n) {
        std::set<Word> expected;
        for (const Word& p : all_perms(n))
            if (avoids(p, ps)) expected.insert(p);
        std::set<Word> produced;
        enumerate_class(n, ps, [&](const Word& w) {
            CHECK(produced.insert(w).second);  // no duplicates
        });
        CHECK(produced == expected);
    }

    // count-only filter oracle at n = 8 for the four proved classes
    const std::vector<Word> s8 = all_perms(8);
    for (const char* csv : {"45312,45321,54312,54321", "31245,32145,31254,32154",
                            "31425,32415,31524,32514", "41325,51324,42315,52314"}) {
        PatternSet cls = PatternSet::parse(csv);
        std::uint64_t filtered = 0;
        for (const Word& p : s8)
            if (avoids(p, cls)) ++filtered;
        CHECK(class_size(8, cls) == filtered);
    }
}

TEST_CASE("enumerate_class partitions by first letter") {
    PatternSet ps = PatternSet::parse("31245,32145,31254,32154");
    const int n = 6;
    std::vector<Word> whole, parts;
    enumerate_class(n, ps, [&](const Word& w) { whole.push_back(w); });
    for (int first = 1; first <= n; ++first)
        enumerate_class_with_first(n, first, ps, [&](const Word& w) { parts.push_back(w); });
    CHECK(whole == parts);
    CHECK(class_size(n, ps, 4) == whole.size());
}

TEST_CASE("first_violation names the pattern") {
    PatternSet ps = PatternSet::parse("3124,3214");
    CHECK(first_violation(Word::parse("3 1 2 4"), ps) == "3124");
    CHECK(first_violation(Word::parse("1 2 3 4"), ps) == "");
}
