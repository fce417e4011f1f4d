#include "perm5/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace perm5 {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    std::unordered_set<int> seen;
    for (int c : letters_) {
        if (c < 0) throw std::invalid_argument("word letters must be non-negative");
        if (!seen.insert(c).second)
            throw std::invalid_argument("word letters must be pairwise distinct");
    }
}

Word Word::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> letters;
    long long v;
    while (in >> v) {
        if (v < 0 || v > 1'000'000'000)
            throw std::invalid_argument("letter out of range: " + std::to_string(v));
        letters.push_back(static_cast<int>(v));
    }
    if (!in.eof()) throw std::invalid_argument("malformed word: " + text);
    return Word(std::move(letters));
}

bool Word::is_permutation() const {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int c : letters_) {
        if (c < 1 || c > n) return false;
        seen[c] = true;
    }
    return true;  // distinct letters in [1,n] cover {1,...,n}
}

Word Word::standardized() const {
    std::vector<int> sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(letters_.size());
    for (size_t i = 0; i < letters_.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), letters_[i]);
        out[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    Word w;
    w.letters_ = std::move(out);
    return w;
}

std::string Word::str() const {
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::vector<int> lrmax_positions(const std::vector<int>& w) {
    std::vector<int> pos;
    int best = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] > best) {
            pos.push_back(i);
            best = w[i];
        }
    }
    return pos;
}

std::vector<int> rlmax_positions(const std::vector<int>& w) {
    std::vector<int> pos;
    int best = -1;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        if (w[i] > best) {
            pos.push_back(i);
            best = w[i];
        }
    }
    std::reverse(pos.begin(), pos.end());
    return pos;
}

namespace {

std::vector<int> values_at(const std::vector<int>& w, const std::vector<int>& pos) {
    std::vector<int> vals;
    vals.reserve(pos.size());
    for (int i : pos) vals.push_back(w[i]);
    std::sort(vals.begin(), vals.end());
    return vals;
}

}  // namespace

StatRecord statistics(const Word& word) {
    if (word.empty()) throw std::invalid_argument("statistics: empty word");
    const std::vector<int>& w = word.letters();
    const int n = static_cast<int>(w.size());
    StatRecord r;

    for (int i = 0; i + 1 < n; ++i)
        if (w[i] > w[i + 1]) r.des.push_back(i + 1);  // 1-based positions
    r.asc = n - 1 - static_cast<int>(r.des.size());

    r.lrmax = values_at(w, lrmax_positions(w));
    r.rlmax = values_at(w, rlmax_positions(w));
    {
        std::vector<int> pos;
        int best;
        best = w[0] + 1;
        for (int i = 0; i < n; ++i)
            if (w[i] < best) { pos.push_back(i); best = w[i]; }
        r.lrmin = values_at(w, pos);
        pos.clear();
        best = w[n - 1] + 1;
        for (int i = n - 1; i >= 0; --i)
            if (w[i] < best) { pos.push_back(i); best = w[i]; }
        r.rlmin = values_at(w, pos);
    }

    for (int i = 0; i < n; ++i) {
        if (i > 0 && w[i] < w[i - 1]) break;
        r.iar.push_back(w[i]);
    }
    std::sort(r.iar.begin(), r.iar.end());

    // Peaks with boundary sentinels strictly below every letter, so a
    // boundary letter equal to 0 still qualifies.
    for (int i = 0; i < n; ++i) {
        bool left = (i == 0) || w[i - 1] < w[i];
        bool right = (i == n - 1) || w[i] > w[i + 1];
        if (left && right) r.pk.push_back(w[i]);
    }
    std::sort(r.pk.begin(), r.pk.end());
    std::set_intersection(r.lrmax.begin(), r.lrmax.end(), r.pk.begin(), r.pk.end(),
                          std::back_inserter(r.br));

    // Inverse-descent data on the standardization: position_of[v] for values
    // 1..n, then v is an inverse descent when v+1 occurs before v.
    const Word std_w = word.standardized();
    std::vector<int> pos_of(n + 2, 0);
    for (int i = 0; i < n; ++i) pos_of[std_w[i]] = i;
    for (int v = 1; v + 1 <= n; ++v)
        if (pos_of[v] > pos_of[v + 1]) r.ides.push_back(v);
    r.iasc = n - 1 - static_cast<int>(r.ides.size());

    for (int i = 0; i + 1 <= n - 1; ++i)
        if (std_w[i] > i + 1) ++r.exc;  // excedances at positions 1..n-1

    // lmaxz: one plus the number of left-to-right maxima before the smallest
    // letter (the letter 1 after standardization).
    const int min_pos = pos_of[1];
    int before = 0;
    for (int i : lrmax_positions(w))
        if (i < min_pos) ++before;
    r.lmaxz = 1 + before;

    return r;
}

int stat_value(const StatRecord& r, const std::string& name) {
    auto sz = [](const std::vector<int>& v) { return static_cast<int>(v.size()); };
    if (name == "des") return sz(r.des);
    if (name == "ides") return sz(r.ides);
    if (name == "asc") return r.asc;
    if (name == "iasc") return r.iasc;
    if (name == "exc") return r.exc;
    if (name == "lmaxz") return r.lmaxz;
    if (name == "lrmax") return sz(r.lrmax);
    if (name == "lrmin") return sz(r.lrmin);
    if (name == "rlmax") return sz(r.rlmax);
    if (name == "rlmin") return sz(r.rlmin);
    if (name == "iar") return sz(r.iar);
    if (name == "pk") return sz(r.pk);
    if (name == "br") return sz(r.br);
    throw std::invalid_argument("unknown statistic: " + name);
}

Word inverse(const Word& p) {
    if (!p.is_permutation())
        throw std::invalid_argument("inverse requires a permutation of [n]");
    const int n = p.size();
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[p[i] - 1] = i + 1;
    return Word(std::move(out));
}

Word reverse(const Word& w) {
    std::vector<int> out(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(out));
}

Word complement(const Word& p) {
    if (!p.is_permutation())
        throw std::invalid_argument("complement requires a permutation of [n]");
    const int n = p.size();
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = n + 1 - p[i];
    return Word(std::move(out));
}

std::string format_set(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    out += '}';
    return out;
}

}  // namespace perm5
