#include "perm5/patterns.hpp"

#include <atomic>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace perm5 {

namespace {

void check_pattern(const Word& p) {
    if (p.empty() || !p.is_permutation())
        throw std::invalid_argument("invalid pattern (not a permutation of [k]): " + p.str());
}

// Depth-first subsequence search. Letters of w are scanned left to right;
// a candidate for pattern slot j must relate to every already-matched letter
// exactly as p[j] relates to the corresponding pattern letter.
bool match_from(const std::vector<int>& w, int start, const Word& p, int j,
                std::vector<int>& chosen) {
    const int k = p.size();
    const int n = static_cast<int>(w.size());
    if (j == k) return true;
    for (int i = start; i <= n - (k - j); ++i) {
        bool ok = true;
        for (int j2 = 0; j2 < j && ok; ++j2)
            ok = (p[j2] < p[j]) == (chosen[j2] < w[i]);
        if (!ok) continue;
        chosen[j] = w[i];
        if (match_from(w, i + 1, p, j + 1, chosen)) return true;
    }
    return false;
}

}  // namespace

bool contains_pattern(const Word& w, const Word& p) {
    check_pattern(p);
    if (p.size() > w.size()) return false;
    std::vector<int> chosen(p.size());
    return match_from(w.letters(), 0, p, 0, chosen);
}

bool extension_creates_match(const std::vector<int>& prefix, int next, const Word& p) {
    const int k = p.size();
    if (static_cast<int>(prefix.size()) + 1 < k) return false;
    if (k == 1) return true;
    // Pin the last pattern slot on `next` and search the first k-1 slots in
    // the prefix, keeping each candidate consistent with `next` as well.
    const int last = p[k - 1];
    std::vector<int> chosen(k);
    std::function<bool(int, int)> rec = [&](int start, int j) -> bool {
        if (j == k - 1) return true;
        for (int i = start; i <= static_cast<int>(prefix.size()) - (k - 1 - j); ++i) {
            if ((p[j] < last) != (prefix[i] < next)) continue;
            bool ok = true;
            for (int j2 = 0; j2 < j && ok; ++j2)
                ok = (p[j2] < p[j]) == (chosen[j2] < prefix[i]);
            if (!ok) continue;
            chosen[j] = prefix[i];
            if (rec(i + 1, j + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

PatternSet::PatternSet(std::vector<Word> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw std::invalid_argument("empty pattern set");
    for (const Word& p : patterns_) check_pattern(p);
}

PatternSet PatternSet::parse(const std::string& text) {
    std::vector<Word> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
            token.erase(token.begin());
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
            token.pop_back();
        if (token.empty()) continue;
        if (token.find(' ') != std::string::npos) {
            out.push_back(Word::parse(token));
        } else {
            std::vector<int> letters;
            for (char c : token) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("malformed pattern: " + token);
                letters.push_back(c - '0');
            }
            out.push_back(Word(std::move(letters)));
        }
    }
    return PatternSet(std::move(out));
}

std::string PatternSet::str() const {
    std::string out;
    for (size_t i = 0; i < patterns_.size(); ++i) {
        if (i) out += ',';
        for (int c : patterns_[i].letters()) out += std::to_string(c);
    }
    return out;
}

bool avoids(const Word& w, const PatternSet& ps) {
    for (const Word& p : ps.patterns())
        if (contains_pattern(w, p)) return false;
    return true;
}

std::string first_violation(const Word& w, const PatternSet& ps) {
    for (const Word& p : ps.patterns())
        if (contains_pattern(w, p)) {
            std::string name;
            for (int c : p.letters()) name += std::to_string(c);
            return name;
        }
    return "";
}

namespace {

void enumerate_rec(int n, const PatternSet& ps, std::vector<int>& prefix,
                   std::vector<bool>& used,
                   const std::function<void(const Word&)>& yield) {
    if (static_cast<int>(prefix.size()) == n) {
        yield(Word(prefix));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (const Word& p : ps.patterns())
            if (extension_creates_match(prefix, v, p)) { ok = false; break; }
        if (!ok) continue;
        used[v] = true;
        prefix.push_back(v);
        enumerate_rec(n, ps, prefix, used, yield);
        prefix.pop_back();
        used[v] = false;
    }
}

}  // namespace

void enumerate_class(int n, const PatternSet& ps,
                     const std::function<void(const Word&)>& yield) {
    if (n < 1) throw std::invalid_argument("enumerate_class requires n >= 1");
    std::vector<int> prefix;
    prefix.reserve(n);
    std::vector<bool> used(n + 1, false);
    enumerate_rec(n, ps, prefix, used, yield);
}

void enumerate_class_with_first(int n, int first, const PatternSet& ps,
                                const std::function<void(const Word&)>& yield) {
    if (n < 1) throw std::invalid_argument("enumerate_class requires n >= 1");
    if (first < 1 || first > n) throw std::invalid_argument("first letter out of range");
    std::vector<int> prefix{first};
    prefix.reserve(n);
    std::vector<bool> used(n + 1, false);
    used[first] = true;
    enumerate_rec(n, ps, prefix, used, yield);
}

void for_each_in_class(int n, const PatternSet& ps, int threads,
                       const std::function<void(const Word&)>& fn) {
    if (threads <= 1 || n <= 2) {
        enumerate_class(n, ps, fn);
        return;
    }
    std::atomic<int> next_first{1};
    auto worker = [&]() {
        for (;;) {
            int first = next_first.fetch_add(1);
            if (first > n) return;
            enumerate_class_with_first(n, first, ps, fn);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(threads, n); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::uint64_t class_size(int n, const PatternSet& ps, int threads) {
    std::atomic<std::uint64_t> count{0};
    for_each_in_class(n, ps, threads, [&](const Word&) { count.fetch_add(1, std::memory_order_relaxed); });
    return count.load();
}

}  // namespace perm5
