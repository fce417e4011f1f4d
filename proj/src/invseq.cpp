#include "perm5/invseq.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace perm5 {

InversionSequence::InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] < 0 || entries_[i] > static_cast<int>(i))
            throw std::invalid_argument("not an inversion sequence: e_" + std::to_string(i + 1) +
                                        " = " + std::to_string(entries_[i]));
}

InversionSequence InversionSequence::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> entries;
    int v;
    while (in >> v) entries.push_back(v);
    if (!in.eof()) throw std::invalid_argument("malformed inversion sequence: " + text);
    return InversionSequence(std::move(entries));
}

std::string InversionSequence::str() const {
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries_[i]);
    }
    return out;
}

InvStatRecord inv_statistics(const InversionSequence& seq) {
    const std::vector<int>& e = seq.entries();
    const int n = static_cast<int>(e.size());
    InvStatRecord r;
    {
        std::vector<int> pos(e.begin(), e.end());
        std::sort(pos.begin(), pos.end());
        pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
        r.dist = static_cast<int>(pos.size());
        if (!pos.empty() && pos.front() == 0) --r.dist;
    }
    r.rep = n == 0 ? 0 : n - 1 - r.dist;
    int suffix_min = INT32_MAX;
    for (int i = n - 1; i >= 0; --i) {
        if (e[i] < suffix_min) ++r.rlmin;
        suffix_min = std::min(suffix_min, e[i]);
    }
    for (int i = 0; i < n; ++i) {
        if (e[i] == 0) ++r.zero;
        if (e[i] == i) ++r.satu;
    }
    return r;
}

int inv_stat_value(const InvStatRecord& r, const std::string& name) {
    if (name == "dist") return r.dist;
    if (name == "rep") return r.rep;
    if (name == "rlmin") return r.rlmin;
    if (name == "zero") return r.zero;
    if (name == "satu") return r.satu;
    throw std::invalid_argument("unknown inversion-sequence statistic: " + name);
}

namespace {

void check_seq_pattern(const std::vector<int>& p) {
    if (p.empty()) throw std::invalid_argument("empty sequence pattern");
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j])
                throw std::invalid_argument("sequence pattern must have distinct letters");
}

bool seq_match_from(const std::vector<int>& e, int start, const std::vector<int>& p, int j,
                    std::vector<int>& chosen) {
    const int k = static_cast<int>(p.size());
    const int n = static_cast<int>(e.size());
    if (j == k) return true;
    for (int i = start; i <= n - (k - j); ++i) {
        bool ok = true;
        for (int j2 = 0; j2 < j && ok; ++j2)
            ok = p[j2] < p[j] ? chosen[j2] < e[i] : chosen[j2] > e[i];
        if (!ok) continue;
        chosen[j] = e[i];
        if (seq_match_from(e, i + 1, p, j + 1, chosen)) return true;
    }
    return false;
}

bool seq_extension_creates_match(const std::vector<int>& e, int next, const std::vector<int>& p) {
    const int k = static_cast<int>(p.size());
    if (static_cast<int>(e.size()) + 1 < k) return false;
    if (k == 1) return true;
    const int last = p[k - 1];
    std::vector<int> chosen(k);
    std::function<bool(int, int)> rec = [&](int start, int j) -> bool {
        if (j == k - 1) return true;
        for (int i = start; i <= static_cast<int>(e.size()) - (k - 1 - j); ++i) {
            if (!(p[j] < last ? e[i] < next : e[i] > next)) continue;
            bool ok = true;
            for (int j2 = 0; j2 < j && ok; ++j2)
                ok = p[j2] < p[j] ? chosen[j2] < e[i] : chosen[j2] > e[i];
            if (!ok) continue;
            chosen[j] = e[i];
            if (rec(i + 1, j + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

bool seq_contains(const InversionSequence& e, const std::vector<int>& pattern) {
    check_seq_pattern(pattern);
    if (static_cast<int>(pattern.size()) > e.size()) return false;
    std::vector<int> chosen(pattern.size());
    return seq_match_from(e.entries(), 0, pattern, 0, chosen);
}

bool avoids_201_210(const InversionSequence& e) {
    return !seq_contains(e, {2, 0, 1}) && !seq_contains(e, {2, 1, 0});
}

InversionSequence lehmer_code(const Word& p) {
    if (!p.is_permutation())
        throw std::invalid_argument("lehmer_code requires a permutation of [n]");
    const int n = p.size();
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (p[j] > p[i]) ++e[i];
    return InversionSequence(std::move(e));
}

InversionSequence ms_code(const Word& p) {
    if (!p.is_permutation())
        throw std::invalid_argument("ms_code requires a permutation of [n]");
    const int n = p.size();
    std::vector<int> e(n);
    if (n == 0) return InversionSequence(e);
    e[n - 1] = p[n - 1] - 1;
    for (int i = n - 2; i >= 0; --i) {
        if (p[i] <= i + 1) {
            e[i] = p[i] - 1;
            continue;
        }
        int k = 0;  // rank of p_i from the largest among the prefix
        for (int j = 0; j <= i; ++j)
            if (p[j] >= p[i]) ++k;
        // k-th smallest of the suffix entry values; {e_j : i < j <= n} is a
        // set, so repeated values count once (the multiset reading is not
        // even injective from length 5 on)
        std::vector<int> suffix(e.begin() + i + 1, e.end());
        std::sort(suffix.begin(), suffix.end());
        suffix.erase(std::unique(suffix.begin(), suffix.end()), suffix.end());
        e[i] = suffix[k - 1];
    }
    return InversionSequence(std::move(e));
}

namespace {

constexpr int kMsDecodeMax = 9;

// Inversion sequences are mixed-radix numerals: rank = sum e_i * (i-1)!.
std::uint64_t inv_rank(const std::vector<int>& e) {
    std::uint64_t rank = 0, fact = 1;
    for (size_t i = 0; i < e.size(); ++i) {
        rank += e[i] * fact;
        fact *= i + 1;
    }
    return rank;
}

std::uint64_t pack_perm(const Word& p) {
    std::uint64_t out = 0;
    for (int i = 0; i < p.size(); ++i) out |= static_cast<std::uint64_t>(p[i]) << (4 * i);
    return out;
}

Word unpack_perm(std::uint64_t bits, int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<int>((bits >> (4 * i)) & 0xF);
    return Word(std::move(out));
}

const std::vector<std::uint64_t>& ms_decode_table(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::uint64_t>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::vector<std::uint64_t> table(fact, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        Word p{std::vector<int>(perm)};
        table[inv_rank(ms_code(p).entries())] = pack_perm(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables.emplace(n, std::move(table)).first->second;
}

}  // namespace

int ms_decode_max_length() { return kMsDecodeMax; }

Word ms_decode(const InversionSequence& e) {
    const int n = e.size();
    if (n == 0) return Word();
    if (n > kMsDecodeMax)
        throw std::invalid_argument("ms_decode supports n <= " + std::to_string(kMsDecodeMax));
    std::uint64_t bits = ms_decode_table(n)[inv_rank(e.entries())];
    if (bits == 0) throw std::logic_error("ms_decode: sequence not in the image of ms_code");
    return unpack_perm(bits, n);
}

std::vector<int> valid_extensions_201_210(const std::vector<int>& e) {
    const int m = static_cast<int>(e.size());
    std::vector<int> out;
    // Appending k creates 210 iff some inversion pair lies above k, and 201
    // iff some dominated entry e_j sits below k under a prefix max above k.
    int dominated_max = -1;  // max e_j over positions with a larger earlier entry
    {
        int premax = -1;
        for (int j = 0; j < m; ++j) {
            if (premax > e[j]) dominated_max = std::max(dominated_max, e[j]);
            premax = std::max(premax, e[j]);
        }
    }
    for (int k = 0; k <= m; ++k) {
        if (k < dominated_max) continue;  // 210
        bool ok = true;
        int premax = -1;
        for (int j = 0; j < m && ok; ++j) {
            if (e[j] < k && premax > k) ok = false;  // 201
            premax = std::max(premax, e[j]);
        }
        if (ok) out.push_back(k);
    }
    return out;
}

namespace {

void enumerate_201_210_rec(int n, std::vector<int>& e,
                           const std::function<void(const InversionSequence&)>& yield) {
    if (static_cast<int>(e.size()) == n) {
        yield(InversionSequence(std::vector<int>(e)));
        return;
    }
    for (int k : valid_extensions_201_210(e)) {
        e.push_back(k);
        enumerate_201_210_rec(n, e, yield);
        e.pop_back();
    }
}

}  // namespace

void enumerate_inv_201_210(int n, const std::function<void(const InversionSequence&)>& yield) {
    if (n < 0) throw std::invalid_argument("negative length");
    std::vector<int> e;
    e.reserve(n);
    enumerate_201_210_rec(n, e, yield);
}

std::uint64_t inv_class_size_201_210(int n) {
    std::uint64_t count = 0;
    enumerate_inv_201_210(n, [&](const InversionSequence&) { ++count; });
    return count;
}

namespace {

void enumerate_inv_rec(int n, const std::vector<std::vector<int>>& patterns, std::vector<int>& e,
                       const std::function<void(const InversionSequence&)>& yield) {
    if (static_cast<int>(e.size()) == n) {
        yield(InversionSequence(std::vector<int>(e)));
        return;
    }
    for (int k = 0; k <= static_cast<int>(e.size()); ++k) {
        bool ok = true;
        for (const auto& p : patterns)
            if (seq_extension_creates_match(e, k, p)) { ok = false; break; }
        if (!ok) continue;
        e.push_back(k);
        enumerate_inv_rec(n, patterns, e, yield);
        e.pop_back();
    }
}

}  // namespace

void enumerate_inv_class(int n, const std::vector<std::vector<int>>& patterns,
                         const std::function<void(const InversionSequence&)>& yield) {
    if (n < 0) throw std::invalid_argument("negative length");
    for (const auto& p : patterns) check_seq_pattern(p);
    std::vector<int> e;
    e.reserve(n);
    enumerate_inv_rec(n, patterns, e, yield);
}

}  // namespace perm5
