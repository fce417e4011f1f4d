#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "perm5/word.hpp"

namespace perm5 {

// A non-empty set of classical patterns; each pattern must be a permutation
// of {1,...,k}.
class PatternSet {
public:
    explicit PatternSet(std::vector<Word> patterns);

    // "3124,3214" (one digit per letter) or comma-separated space-delimited
    // words such as "3 1 2 4,3 2 1 4".
    static PatternSet parse(const std::string& text);

    const std::vector<Word>& patterns() const { return patterns_; }
    std::string str() const;

private:
    std::vector<Word> patterns_;
};

// True iff some subsequence of w is order-isomorphic to p. Containment is
// monotone under appending letters. Throws if p is not a permutation.
bool contains_pattern(const Word& w, const Word& p);

bool avoids(const Word& w, const PatternSet& ps);

// Name of the first pattern of ps contained in w, or "" when w avoids all.
std::string first_violation(const Word& w, const PatternSet& ps);

// True iff appending `next` to `prefix` creates an occurrence of p ending at
// the new letter. The prefix is assumed to avoid p already.
bool extension_creates_match(const std::vector<int>& prefix, int next, const Word& p);

// Yields the permutations of [n] avoiding every pattern in ps, each exactly
// once and in lexicographic order. Prefixes already containing a pattern are
// pruned, which is valid because containment is extension-monotone.
void enumerate_class(int n, const PatternSet& ps,
                     const std::function<void(const Word&)>& yield);

// Restriction of enumerate_class to permutations starting with `first`;
// enumerate_class(n, ps, f) equals the concatenation over first = 1..n.
void enumerate_class_with_first(int n, int first, const PatternSet& ps,
                                const std::function<void(const Word&)>& yield);

// Parallel sweep over the class. fn must be safe to call concurrently; the
// search tree is partitioned by first letter, so the visit order within one
// first-letter block is deterministic.
void for_each_in_class(int n, const PatternSet& ps, int threads,
                       const std::function<void(const Word&)>& fn);

std::uint64_t class_size(int n, const PatternSet& ps, int threads = 1);

}  // namespace perm5
