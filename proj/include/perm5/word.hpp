#pragma once

#include <compare>
#include <string>
#include <vector>

namespace perm5 {

// A word is a finite sequence of pairwise distinct non-negative integers.
// Permutations are the special case whose letter set is exactly {1,...,n}.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    // Parses space-separated letters, e.g. "2 6 4 7".
    static Word parse(const std::string& text);

    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int operator[](int i) const { return letters_[i]; }  // 0-based

    bool is_permutation() const;

    // The order-isomorphic permutation of [n].
    Word standardized() const;

    std::string str() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
};

// Every statistic of one word. Set-valued statistics hold sorted letter
// values, except des which holds 1-based positions. ides is computed on the
// standardization, so it is a subset of [n-1]; the numeric statistics exc and
// lmaxz are likewise standardization-invariant.
struct StatRecord {
    std::vector<int> des;
    std::vector<int> ides;
    std::vector<int> lrmax, lrmin, rlmax, rlmin;
    std::vector<int> iar, pk, br;
    int exc = 0;
    int lmaxz = 0;
    int asc = 0;
    int iasc = 0;
};

// Throws std::invalid_argument on the empty word.
StatRecord statistics(const Word& w);

// Numeric value of a named statistic (set sizes for set-valued ones).
// Names: des ides asc iasc exc lmaxz lrmax lrmin rlmax rlmin iar pk br.
int stat_value(const StatRecord& r, const std::string& name);

Word inverse(const Word& p);     // permutations only
Word reverse(const Word& w);
Word complement(const Word& p);  // permutations only

// 0-based positions of left-to-right / right-to-left maxima.
std::vector<int> lrmax_positions(const std::vector<int>& w);
std::vector<int> rlmax_positions(const std::vector<int>& w);

std::string format_set(const std::vector<int>& s);  // "{2,6,7}"

}  // namespace perm5
