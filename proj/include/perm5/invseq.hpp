#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "perm5/word.hpp"

namespace perm5 {

// A sequence (e_1,...,e_n) with 0 <= e_i < i.
class InversionSequence {
public:
    InversionSequence() = default;
    explicit InversionSequence(std::vector<int> entries);

    static InversionSequence parse(const std::string& text);  // "0 0 1 0 2"

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](int i) const { return entries_[i]; }  // 0-based

    std::string str() const;

    bool operator==(const InversionSequence&) const = default;
    auto operator<=>(const InversionSequence&) const = default;

private:
    std::vector<int> entries_;
};

struct InvStatRecord {
    int dist = 0;   // distinct positive entries
    int rep = 0;    // n - 1 - dist
    int rlmin = 0;  // strict right-to-left minima
    int zero = 0;   // zero entries
    int satu = 0;   // saturated entries e_i = i - 1
};

InvStatRecord inv_statistics(const InversionSequence& e);

int inv_stat_value(const InvStatRecord& r, const std::string& name);

// True iff some subsequence of e is order-isomorphic to the pattern with all
// of the pattern's strict inequalities strict in e; equal entries never
// instantiate distinct pattern letters. The pattern must have distinct
// letters (e.g. {2,0,1} for 201).
bool seq_contains(const InversionSequence& e, const std::vector<int>& pattern);

bool avoids_201_210(const InversionSequence& e);

// The Lehmer code: e_i counts earlier letters exceeding pi_i.
InversionSequence lehmer_code(const Word& p);

// The right-to-left coding: e_n = pi_n - 1, and going leftwards e_i = pi_i - 1
// when pi_i <= i, otherwise e_i is the k-th smallest distinct entry value of
// the suffix when pi_i is the k-th largest letter of the prefix.
InversionSequence ms_code(const Word& p);

// Inverse of ms_code via an exhaustively built table, cached per length.
Word ms_decode(const InversionSequence& e);
int ms_decode_max_length();

// Appending k to e keeps it (201,210)-avoiding? Candidates are 0..|e|.
std::vector<int> valid_extensions_201_210(const std::vector<int>& e);

// Yields I_n(201,210) in lexicographic order via pruned extension search.
void enumerate_inv_201_210(int n, const std::function<void(const InversionSequence&)>& yield);
std::uint64_t inv_class_size_201_210(int n);

// Generic pruned enumeration of I_n avoiding the given patterns.
void enumerate_inv_class(int n, const std::vector<std::vector<int>>& patterns,
                         const std::function<void(const InversionSequence&)>& yield);

}  // namespace perm5
