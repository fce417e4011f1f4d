#include "perm5/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace perm5 {

namespace {

using Letters = std::vector<int>;

void require_avoids(const Word& w, const PatternSet& ps, const char* op) {
    std::string bad = first_violation(w, ps);
    if (!bad.empty())
        throw std::invalid_argument(std::string(op) + ": input contains forbidden pattern " + bad);
}

int argmax(const Letters& w) {
    return static_cast<int>(std::max_element(w.begin(), w.end()) - w.begin());
}

bool increasing_up_to(const Letters& w, int x) {
    for (int i = 0; i < x; ++i)
        if (w[i] > w[i + 1]) return false;
    return true;
}

Letters erase_at(const Letters& w, int pos) {
    Letters out = w;
    out.erase(out.begin() + pos);
    return out;
}

// ---------------------------------------------------------------------------
// Type I parse: 0-based descent positions i_1..i_k in the prefix before the
// maximum, plus the tail split into value blocks b, b_k, ..., b_1.
struct ParsedTypeI {
    int x = 0;                    // 0-based position of max(w)
    std::vector<int> descents;    // 0-based i with w[i] > w[i+1], i < x
    Letters top;                  // b
    std::vector<Letters> floors;  // floors[j] = b_{j+1}
};

ParsedTypeI parse_type_I(const Letters& w) {
    ParsedTypeI d;
    d.x = argmax(w);
    for (int i = 0; i < d.x; ++i)
        if (w[i] > w[i + 1]) d.descents.push_back(i);
    const int k = static_cast<int>(d.descents.size());
    d.floors.assign(k, {});

    // Every tail letter falls strictly between two run-end values; the blocks
    // must appear in the order b, b_k, ..., b_1.
    int current = k;  // block id: k = top, j-1 = floor b_j
    for (int i = d.x + 1; i < static_cast<int>(w.size()); ++i) {
        int id = k;
        while (id > 0 && w[i] < w[d.descents[id - 1]]) --id;
        if (id > current)
            throw std::logic_error("type I structure violated (blocks out of order)");
        current = id;
        if (id == k)
            d.top.push_back(w[i]);
        else
            d.floors[id].push_back(w[i]);
    }
    return d;
}

// Type II parse: maximal runs of consecutive left-to-right-maxima positions
// with the blocks between them.
struct ParsedTypeII {
    std::vector<std::pair<int, int>> runs;  // (0-based start, length)
    std::vector<Letters> gaps;              // d_1..d_{k+1}
};

ParsedTypeII parse_type_II(const Letters& v) {
    ParsedTypeII d;
    std::vector<int> lp = lrmax_positions(v);
    size_t i = 0;
    while (i < lp.size()) {
        size_t j = i;
        while (j + 1 < lp.size() && lp[j + 1] == lp[j] + 1) ++j;
        d.runs.emplace_back(lp[i], static_cast<int>(j - i + 1));
        i = j + 1;
    }
    for (size_t s = 0; s < d.runs.size(); ++s) {
        int from = d.runs[s].first + d.runs[s].second;
        int to = s + 1 < d.runs.size() ? d.runs[s + 1].first : static_cast<int>(v.size());
        d.gaps.emplace_back(v.begin() + from, v.begin() + to);
    }
    return d;
}

// ---------------------------------------------------------------------------
// phi / psi on raw letters; avoidance of the recursive arguments is
// guaranteed by construction, so only the public entry points validate.

Letters phi_rec(const Letters& w) {
    const int n = static_cast<int>(w.size());
    if (n <= 1) return w;
    const int x = argmax(w);
    if (increasing_up_to(w, x)) {
        Letters u = phi_rec(erase_at(w, x));
        u.insert(u.begin() + x, w[x]);
        return u;
    }
    ParsedTypeI d = parse_type_I(w);
    const int k = static_cast<int>(d.descents.size());
    Letters out;
    out.reserve(n);
    for (int j = 0; j < k; ++j) {
        // floor j+1: its ascending run, the dip letter w_{i_j+1}, then b_{j+1}
        int from = j == 0 ? 0 : d.descents[j - 1] + 2;
        Letters chunk(w.begin() + from, w.begin() + d.descents[j] + 1);
        chunk.push_back(w[d.descents[j] + 1]);
        chunk.insert(chunk.end(), d.floors[j].begin(), d.floors[j].end());
        Letters mapped = phi_rec(chunk);
        out.insert(out.end(), mapped.begin(), mapped.end());
    }
    Letters top(w.begin() + d.descents[k - 1] + 2, w.begin() + d.x + 1);
    top.insert(top.end(), d.top.begin(), d.top.end());
    Letters mapped = phi_rec(top);
    out.insert(out.end(), mapped.begin(), mapped.end());
    return out;
}

Letters psi_rec(const Letters& v) {
    const int n = static_cast<int>(v.size());
    if (n <= 1) return v;
    const int x = argmax(v);
    if (increasing_up_to(v, x)) {
        Letters u = psi_rec(erase_at(v, x));
        u.insert(u.begin() + x, v[x]);
        return u;
    }
    ParsedTypeII d = parse_type_II(v);
    std::vector<Letters> firsts, lasts;
    for (size_t s = 0; s < d.runs.size(); ++s) {
        int from = d.runs[s].first;
        int to = s + 1 < d.runs.size() ? d.runs[s + 1].first : n;
        Letters chunk(v.begin() + from, v.begin() + to);
        Letters mapped = psi_rec(chunk);
        // F_s takes the first l_s + 2 letters of the image, L_s the rest.
        int cut = std::min<int>(d.runs[s].second + 1, static_cast<int>(mapped.size()));
        firsts.emplace_back(mapped.begin(), mapped.begin() + cut);
        lasts.emplace_back(mapped.begin() + cut, mapped.end());
    }
    Letters out;
    out.reserve(n);
    for (const Letters& f : firsts) out.insert(out.end(), f.begin(), f.end());
    for (auto it = lasts.rbegin(); it != lasts.rend(); ++it)
        out.insert(out.end(), it->begin(), it->end());
    return out;
}

// ---------------------------------------------------------------------------
// alpha / beta.

Letters alpha_rec(const Letters& w);
Letters beta_rec(const Letters& v);

void insert_at(Letters& u, int index, int letter) {
    if (index < 0 || index > static_cast<int>(u.size()))
        throw std::logic_error("insertion landmark missing (structure violated)");
    u.insert(u.begin() + index, letter);
}

Letters alpha_rec(const Letters& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return w;
    std::vector<int> lp = lrmax_positions(w);
    const int s = static_cast<int>(lp.size());
    if (s == 1) {  // w_1 = max(w)
        Letters u = alpha_rec(Letters(w.begin() + 1, w.end()));
        u.insert(u.begin(), w[0]);
        return u;
    }
    std::vector<int> rp = rlmax_positions(w);
    if (rp.size() == 1) {  // w_n = max(w)
        Letters u = phi_rec(Letters(w.begin(), w.end() - 1));
        u.push_back(w[n - 1]);
        return u;
    }
    const int ls = lp[s - 1];  // 0-based position of max(w)
    const int r2 = rp[1];
    if (ls == s - 1) {  // l_s = s: initial ascending run ends at the maximum
        Letters u = alpha_rec(erase_at(w, ls));
        insert_at(u, ls, w[ls]);
        return u;
    }
    const int ls1 = lp[s - 2];
    if (w[ls1] < w[r2]) {  // case (b1): remove the maximum
        Letters u = alpha_rec(erase_at(w, ls));
        std::vector<int> ulp = lrmax_positions(u);
        if (ls1 + 1 == ls)
            insert_at(u, ulp.at(s - 2) + 1, w[ls]);  // just after the (s-1)-th lrmax
        else
            insert_at(u, ulp.at(s - 1), w[ls]);  // just before the s-th lrmax
        return u;
    }
    if (s > 2) {  // case (b2): remove the second-to-last lrmax
        const int ls2 = lp[s - 3];
        Letters u = alpha_rec(erase_at(w, ls1));
        std::vector<int> ulp = lrmax_positions(u);
        if (ls2 + 1 == ls1)
            insert_at(u, ulp.at(s - 3) + 1, w[ls1]);  // just after the (s-2)-th lrmax
        else
            insert_at(u, ulp.at(s - 2), w[ls1]);  // just before the (s-1)-th lrmax
        return u;
    }
    // case (b3): s = 2 with w_{l_1} > w_{r_2}
    Letters u = alpha_rec(Letters(w.begin() + 1, w.end()));
    u.insert(u.begin(), w[0]);
    return u;
}

Letters beta_rec(const Letters& v) {
    const int n = static_cast<int>(v.size());
    if (n == 0) return v;
    std::vector<int> lp = lrmax_positions(v);
    const int h = static_cast<int>(lp.size());
    if (h == 1) {
        Letters u = beta_rec(Letters(v.begin() + 1, v.end()));
        u.insert(u.begin(), v[0]);
        return u;
    }
    std::vector<int> rp = rlmax_positions(v);
    if (rp.size() == 1) {
        Letters u = psi_rec(Letters(v.begin(), v.end() - 1));
        u.push_back(v[n - 1]);
        return u;
    }
    const int ah = lp[h - 1];
    const int b2 = rp[1];
    if (ah == h - 1) {
        Letters u = beta_rec(erase_at(v, ah));
        insert_at(u, ah, v[ah]);
        return u;
    }
    const int ah1 = lp[h - 2];
    if (v[ah1] < v[b2]) {  // case (b1)
        Letters u = beta_rec(erase_at(v, ah));
        std::vector<int> ulp = lrmax_positions(u);
        if (ah1 + 1 == ah)
            insert_at(u, ulp.at(h - 2) + 1, v[ah]);
        else
            insert_at(u, ulp.at(h - 2) + 2, v[ah]);  // after the element closely following
        return u;
    }
    if (h > 2) {  // case (b2)
        const int ah2 = lp[h - 3];
        Letters u = beta_rec(erase_at(v, ah1));
        std::vector<int> ulp = lrmax_positions(u);
        if (ah2 + 1 == ah1)
            insert_at(u, ulp.at(h - 3) + 1, v[ah1]);
        else
            insert_at(u, ulp.at(h - 3) + 2, v[ah1]);
        return u;
    }
    // case (b3)
    Letters u = beta_rec(Letters(v.begin() + 1, v.end()));
    u.insert(u.begin(), v[0]);
    return u;
}

Word as_word(Letters letters) { return Word(std::move(letters)); }

}  // namespace

const PatternSet& phi_domain_patterns() {
    static const PatternSet ps = PatternSet::parse("3124,3214");
    return ps;
}

const PatternSet& phi_image_patterns() {
    static const PatternSet ps = PatternSet::parse("3142,3241");
    return ps;
}

const PatternSet& source_class_patterns() {
    static const PatternSet ps = PatternSet::parse("31245,32145,31254,32154");
    return ps;
}

const PatternSet& target_class_patterns() {
    static const PatternSet ps = PatternSet::parse("31425,32415,31524,32514");
    return ps;
}

TypeIDecomposition decompose_type_I(const Word& w) {
    require_avoids(w, phi_domain_patterns(), "decompose_type_I");
    TypeIDecomposition out;
    if (w.empty()) return out;
    ParsedTypeI d = parse_type_I(w.letters());
    out.prefix = as_word(Letters(w.letters().begin(), w.letters().begin() + d.x + 1));
    for (int i : d.descents) out.run_ends.push_back(i + 1);
    out.max_position = d.x + 1;
    out.top_block = as_word(d.top);
    for (const Letters& f : d.floors) out.floor_blocks.push_back(as_word(f));
    return out;
}

Word TypeIDecomposition::reassemble() const {
    Letters out = prefix.letters();
    out.insert(out.end(), top_block.letters().begin(), top_block.letters().end());
    for (auto it = floor_blocks.rbegin(); it != floor_blocks.rend(); ++it)
        out.insert(out.end(), it->letters().begin(), it->letters().end());
    return as_word(std::move(out));
}

TypeIIDecomposition decompose_type_II(const Word& v) {
    require_avoids(v, phi_image_patterns(), "decompose_type_II");
    TypeIIDecomposition out;
    if (v.empty()) return out;
    ParsedTypeII d = parse_type_II(v.letters());
    for (size_t s = 0; s < d.runs.size(); ++s) {
        out.runs.push_back({d.runs[s].first + 1, d.runs[s].second});
        auto from = v.letters().begin() + d.runs[s].first;
        out.run_letters.push_back(as_word(Letters(from, from + d.runs[s].second)));
        out.gap_blocks.push_back(as_word(d.gaps[s]));
    }
    // gap letters sit strictly between the tops of the adjacent runs
    for (size_t s = 0; s < d.runs.size(); ++s) {
        int top = v[d.runs[s].first + d.runs[s].second - 1];
        int lower = s == 0 ? -1 : v[d.runs[s - 1].first + d.runs[s - 1].second - 1];
        for (int c : d.gaps[s])
            if (c >= top || c <= lower)
                throw std::logic_error("type II structure violated (gap letter out of band)");
    }
    return out;
}

Word TypeIIDecomposition::reassemble() const {
    Letters out;
    for (size_t s = 0; s < runs.size(); ++s) {
        out.insert(out.end(), run_letters[s].letters().begin(), run_letters[s].letters().end());
        out.insert(out.end(), gap_blocks[s].letters().begin(), gap_blocks[s].letters().end());
    }
    return as_word(std::move(out));
}

Word phi(const Word& w) {
    require_avoids(w, phi_domain_patterns(), "phi");
    return as_word(phi_rec(w.letters()));
}

Word psi(const Word& v) {
    require_avoids(v, phi_image_patterns(), "psi");
    return as_word(psi_rec(v.letters()));
}

Word alpha(const Word& w) {
    require_avoids(w, source_class_patterns(), "alpha");
    return as_word(alpha_rec(w.letters()));
}

Word beta(const Word& v) {
    require_avoids(v, target_class_patterns(), "beta");
    return as_word(beta_rec(v.letters()));
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::trivial_lrmax1: return "trivial-lrmax1";
        case CaseTag::trivial_rlmax1: return "trivial-rlmax1";
        case CaseTag::trivial_ls_eq_s: return "trivial-ls-eq-s";
        case CaseTag::trivial_s2: return "trivial-s2";
        case CaseTag::trivial_h2: return "trivial-h2";
        case CaseTag::I1: return "I-1";
        case CaseTag::I2: return "I-2";
        case CaseTag::I3: return "I-3";
        case CaseTag::II1: return "II-1";
        case CaseTag::II2: return "II-2";
        case CaseTag::II3: return "II-3";
        case CaseTag::II4: return "II-4";
        case CaseTag::A1: return "A-1";
        case CaseTag::A2: return "A-2";
        case CaseTag::A3: return "A-3";
        case CaseTag::B1: return "B-1";
        case CaseTag::B2: return "B-2";
        case CaseTag::B3: return "B-3";
    }
    return "?";
}

namespace {

[[noreturn]] void lemma_violated(const char* what, const Letters& w) {
    throw std::logic_error(std::string("structure lemma violated (") + what + ") on " +
                           as_word(w).str());
}

// Source-class structure when w_{l_{s-1}} < w_{r_2}.
CaseTag classify_I(const Letters& w, int ls1, int ls, int r2) {
    if (ls == ls1 + 1) return CaseTag::I1;
    if (ls != ls1 + 2) lemma_violated("I: l_s > l_{s-1}+2", w);
    // Letters between l_s and r_2: either all below w_{l_{s-1}} (I-2), or an
    // initial stretch above it followed only by letters below it (I-3).
    int j = ls + 1;
    int k = ls;
    while (j < r2 && w[j] > w[ls1]) k = j++;
    for (; j < r2; ++j)
        if (w[j] > w[ls1]) lemma_violated("I-3: high letter after the cut", w);
    return k == ls ? CaseTag::I2 : CaseTag::I3;
}

// Source-class structure when w_{l_{s-1}} > w_{r_2}, s > 2.
CaseTag classify_II(const Letters& w, int ls1, int ls, int r2) {
    int x = -1;  // 0-based; -1 plays the lemma's x = 0
    for (int j = 0; j + 1 <= ls1 - 1; ++j)
        if (w[j] > w[j + 1]) x = j;
    if (x == -1) return CaseTag::II1;
    if (ls == ls1 + 1) return CaseTag::II2;
    bool all_below_x = true;
    for (int j = ls1 + 1; j < ls; ++j)
        if (w[j] > w[x]) all_below_x = false;
    if (all_below_x) {
        if (!(w[x] > w[r2])) lemma_violated("II-4: w_x <= w_{r_2}", w);
        return CaseTag::II4;
    }
    // II-3: a stretch in (w_x, w_{l_{s-1}}) directly after l_{s-1}, then only
    // letters below w_x until l_s.
    int k = -1;
    for (int j = ls1 + 1; j < ls; ++j)
        if (w[x] < w[j] && w[j] < w[ls1]) k = j;
    if (k < 0) lemma_violated("II-3: no middle letter", w);
    for (int j = ls1 + 1; j <= k; ++j)
        if (!(w[ls1] > w[j] && w[j] > w[x])) lemma_violated("II-3: low letter before the cut", w);
    for (int j = k + 1; j < ls; ++j)
        if (!(w[j] < w[x])) lemma_violated("II-3: high letter after the cut", w);
    if (k < ls - 1 && !(w[x] > w[r2])) lemma_violated("II-3: w_x <= w_{r_2}", w);
    return CaseTag::II3;
}

// Target-class structure when v_{a_{h-1}} < v_{b_2}.
CaseTag classify_A(const Letters& v, int ah1, int ah, int b2) {
    if (ah == ah1 + 1) return CaseTag::A1;
    if (b2 == ah + 1) return CaseTag::A2;
    for (int j = ah + 1; j < b2; ++j)
        if (!(v[j] > v[ah1])) lemma_violated("A-3: low letter between a_h and b_2", v);
    return CaseTag::A3;
}

// Target-class structure when v_{a_{h-1}} > v_{b_2}, h > 2.
CaseTag classify_B(const Letters& v, int ah1, int ah, int b2) {
    int x = -1;
    for (int j = 0; j + 1 <= ah1 - 1; ++j)
        if (v[j] > v[j + 1]) x = j;
    if (x == -1) return CaseTag::B1;
    auto check_tail = [&]() {
        if (v[b2] > v[x])
            for (int j = ah + 1; j < b2; ++j)
                if (!(v[x] < v[j] && v[j] < v[b2]))
                    lemma_violated("B: tail letter outside (v_x, v_{b_2})", v);
    };
    if (ah == ah1 + 1) {
        check_tail();
        return CaseTag::B2;
    }
    for (int j = ah1 + 1; j < ah; ++j)
        if (!(v[x] < v[j] && v[j] < v[ah1]))
            lemma_violated("B-3: letter outside (v_x, v_{a_{h-1}})", v);
    check_tail();
    return CaseTag::B3;
}

}  // namespace

CaseTag classify(const Word& word, Side side) {
    if (word.empty()) throw std::invalid_argument("classify: empty word");
    const PatternSet& ps = side == Side::source ? source_class_patterns() : target_class_patterns();
    require_avoids(word, ps, "classify");
    const Letters& w = word.letters();
    std::vector<int> lp = lrmax_positions(w);
    const int s = static_cast<int>(lp.size());
    if (s == 1) return CaseTag::trivial_lrmax1;
    const int ls = lp[s - 1];
    if (ls == s - 1) return CaseTag::trivial_ls_eq_s;
    std::vector<int> rp = rlmax_positions(w);
    if (rp.size() == 1) return CaseTag::trivial_rlmax1;
    const int r2 = rp[1];
    const int ls1 = lp[s - 2];
    if (side == Side::source) {
        if (w[ls1] < w[r2]) return classify_I(w, ls1, ls, r2);
        if (s == 2) return CaseTag::trivial_s2;
        return classify_II(w, ls1, ls, r2);
    }
    if (w[ls1] < w[r2]) return classify_A(w, ls1, ls, r2);
    if (s == 2) return CaseTag::trivial_h2;
    return classify_B(w, ls1, ls, r2);
}

}  // namespace perm5
