// Command-line surface for counting, mapping, verifying and exporting the
// pattern-avoidance engines.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "perm5/bijections.hpp"
#include "perm5/classes.hpp"
#include "perm5/genfun.hpp"
#include "perm5/invseq.hpp"
#include "perm5/verify.hpp"

namespace {

using namespace perm5;

int default_threads() {
    if (const char* env = std::getenv("PERM5_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

PatternSet resolve_class(const std::string& cls, const std::string& patterns) {
    if (!cls.empty()) {
        auto ps = lookup_class(cls);
        if (!ps) throw CLI::ValidationError("--class", "unknown class alias: " + cls);
        return *ps;
    }
    if (patterns.empty())
        throw CLI::ValidationError("--class", "need --class or --patterns");
    return PatternSet::parse(patterns);
}

void enforce_limit(int n, int limit) {
    if (n > limit)
        throw CLI::ValidationError(
            "--n", "n = " + std::to_string(n) + " exceeds the enumeration safety limit " +
                       std::to_string(limit) + " (override with --limit)");
}

std::string stat_line(const Word& w) {
    if (w.empty()) return "  (empty word)\n";
    StatRecord r = statistics(w);
    std::string out;
    out += "  des=" + format_set(r.des) + " ides=" + format_set(r.ides) + "\n";
    out += "  lrmax=" + format_set(r.lrmax) + " lrmin=" + format_set(r.lrmin) +
           " rlmax=" + format_set(r.rlmax) + " rlmin=" + format_set(r.rlmin) + "\n";
    out += "  iar=" + format_set(r.iar) + " pk=" + format_set(r.pk) + " br=" + format_set(r.br) +
           "\n";
    out += "  exc=" + std::to_string(r.exc) + " lmaxz=" + std::to_string(r.lmaxz) +
           " asc=" + std::to_string(r.asc) + " iasc=" + std::to_string(r.iasc) + "\n";
    return out;
}

std::string inv_stat_line(const InversionSequence& e) {
    InvStatRecord r = inv_statistics(e);
    return "  dist=" + std::to_string(r.dist) + " rep=" + std::to_string(r.rep) +
           " rlmin=" + std::to_string(r.rlmin) + " zero=" + std::to_string(r.zero) +
           " satu=" + std::to_string(r.satu) + "\n";
}

std::vector<mpz_class> collect_series(const std::string& what, const std::string& cls,
                                      const std::string& patterns, int n_max, int threads,
                                      int limit) {
    std::vector<mpz_class> coeffs;
    if (what == "closedform") {
        return closed_form_series(n_max);
    }
    if (what == "succession") {
        for (int n = 1; n <= n_max; ++n) coeffs.push_back(count_by_succession(n));
        return coeffs;
    }
    if (what == "fpoly") {
        for (int n = 1; n <= n_max; ++n) coeffs.push_back(f_poly(n).eval_ones());
        return coeffs;
    }
    if (what == "class") {
        enforce_limit(n_max, limit);
        if (is_inversion_class_alias(cls)) {
            for (int n = 1; n <= n_max; ++n)
                coeffs.push_back(mpz_class(static_cast<unsigned long>(inv_class_size_201_210(n))));
        } else {
            PatternSet ps = resolve_class(cls, patterns);
            for (int n = 1; n <= n_max; ++n)
                coeffs.push_back(mpz_class(static_cast<unsigned long>(class_size(n, ps, threads))));
        }
        return coeffs;
    }
    throw CLI::ValidationError("--what", "unknown series: " + what);
}

void print_series(const std::vector<mpz_class>& coeffs, const std::string& format,
                  std::ostream& out) {
    if (format == "bfile") {
        out << series_to_bfile(coeffs);
    } else if (format == "json") {
        out << series_to_json("t", coeffs) << "\n";
    } else if (format == "csv") {
        out << "n,a\n";
        for (size_t i = 0; i < coeffs.size(); ++i)
            out << (i + 1) << "," << coeffs[i].get_str() << "\n";
    } else {
        for (size_t i = 0; i < coeffs.size(); ++i)
            out << "a(" << (i + 1) << ") = " << coeffs[i].get_str() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and bijections for four quadruples of length-5 patterns"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads (or env PERM5_THREADS)");

    std::string cls, patterns, input, bijection, format = "text", suite, what = "class", out_path;
    std::string stats = "ides,lrmax,lrmin,rlmax,iar";
    int n = 0, n_max = 0, limit = 12;

    auto* count = app.add_subcommand("count", "count a pattern-avoidance class per length");
    count->add_option("--class", cls, "named class alias");
    count->add_option("--patterns", patterns, "explicit comma-separated patterns");
    count->add_option("--n", n, "single length");
    count->add_option("--n-max", n_max, "lengths 1..n-max");
    count->add_option("--limit", limit, "enumeration safety limit");
    count->add_option("--format", format, "text|json|csv|bfile");

    auto* dist = app.add_subcommand("distribution", "joint statistic distribution over a class");
    dist->add_option("--class", cls, "named class alias");
    dist->add_option("--patterns", patterns, "explicit comma-separated patterns");
    dist->add_option("--stats", stats, "comma-separated statistic names");
    dist->add_option("--n", n, "length")->required();
    dist->add_option("--limit", limit, "enumeration safety limit");
    dist->add_option("--format", format, "text|csv");

    auto* map_cmd = app.add_subcommand("map", "apply a bijection to one permutation");
    map_cmd->add_option("--bijection", bijection, "phi|psi|alpha|beta|lehmer|ms")->required();
    map_cmd->add_option("--input", input, "space-separated letters")->required();

    auto* verify = app.add_subcommand("verify", "run a named invariant suite");
    verify->add_option("--suite", suite, "suite name (see --list)")->required();
    verify->add_option("--n", n, "sweep bound");
    verify->add_option("--limit", limit, "enumeration safety limit");

    auto* series = app.add_subcommand("series", "print series coefficients");
    series->add_option("--what", what, "closedform|succession|fpoly|class");
    series->add_option("--class", cls, "class alias for --what class");
    series->add_option("--patterns", patterns, "explicit patterns for --what class");
    series->add_option("--n-max", n_max, "truncation order")->required();
    series->add_option("--limit", limit, "enumeration safety limit");
    series->add_option("--format", format, "text|json|csv|bfile");

    auto* exp = app.add_subcommand("export", "write a series as an OEIS b-file");
    exp->add_option("--what", what, "closedform|succession|fpoly|class");
    exp->add_option("--class", cls, "class alias for --what class");
    exp->add_option("--patterns", patterns, "explicit patterns for --what class");
    exp->add_option("--n-max", n_max, "truncation order")->required();
    exp->add_option("--limit", limit, "enumeration safety limit");
    exp->add_option("--out", out_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*count) {
            int from = n_max > 0 ? 1 : n, to = n_max > 0 ? n_max : n;
            if (to <= 0) throw CLI::ValidationError("--n", "need --n or --n-max");
            std::vector<mpz_class> coeffs;
            enforce_limit(to, limit);
            for (int m = from; m <= to; ++m) {
                if (is_inversion_class_alias(cls))
                    coeffs.push_back(mpz_class(static_cast<unsigned long>(inv_class_size_201_210(m))));
                else
                    coeffs.push_back(
                        mpz_class(static_cast<unsigned long>(class_size(m, resolve_class(cls, patterns), threads))));
            }
            if (from == to && format == "text")
                std::cout << coeffs[0].get_str() << "\n";
            else
                print_series(coeffs, format, std::cout);
        } else if (*dist) {
            enforce_limit(n, limit);
            std::vector<std::string> names;
            {
                std::istringstream in(stats);
                std::string tok;
                while (std::getline(in, tok, ',')) names.push_back(tok);
            }
            std::map<std::vector<int>, long> table;
            if (is_inversion_class_alias(cls)) {
                enumerate_inv_201_210(n, [&](const InversionSequence& e) {
                    InvStatRecord r = inv_statistics(e);
                    std::vector<int> key;
                    for (const auto& s : names) key.push_back(inv_stat_value(r, s));
                    ++table[key];
                });
            } else {
                PatternSet ps = resolve_class(cls, patterns);
                enumerate_class(n, ps, [&](const Word& w) {
                    StatRecord r = statistics(w);
                    std::vector<int> key;
                    for (const auto& s : names) key.push_back(stat_value(r, s));
                    ++table[key];
                });
            }
            if (format == "csv") {
                for (size_t i = 0; i < names.size(); ++i) std::cout << names[i] << ",";
                std::cout << "count\n";
                for (const auto& [key, c] : table) {
                    for (int v : key) std::cout << v << ",";
                    std::cout << c << "\n";
                }
            } else if (format == "json") {
                std::cout << "[";
                bool first = true;
                for (const auto& [key, c] : table) {
                    std::cout << (first ? "" : ",") << "{";
                    for (size_t i = 0; i < key.size(); ++i)
                        std::cout << "\"" << names[i] << "\":" << key[i] << ",";
                    std::cout << "\"count\":" << c << "}";
                    first = false;
                }
                std::cout << "]\n";
            } else {
                for (const auto& [key, c] : table) {
                    for (size_t i = 0; i < key.size(); ++i)
                        std::cout << names[i] << "=" << key[i] << " ";
                    std::cout << "count=" << c << "\n";
                }
            }
        } else if (*map_cmd) {
            Word w = Word::parse(input);
            if (bijection == "lehmer" || bijection == "ms") {
                InversionSequence e = bijection == "ms" ? ms_code(w) : lehmer_code(w);
                std::cout << e.str() << "\n";
                std::cout << "input statistics:\n" << stat_line(w);
                std::cout << "image statistics:\n" << inv_stat_line(e);
            } else {
                Word img;
                if (bijection == "phi") img = phi(w);
                else if (bijection == "psi") img = psi(w);
                else if (bijection == "alpha") img = alpha(w);
                else if (bijection == "beta") img = beta(w);
                else throw CLI::ValidationError("--bijection", "unknown bijection: " + bijection);
                std::cout << img.str() << "\n";
                std::cout << "input statistics:\n" << stat_line(w);
                std::cout << "image statistics:\n" << stat_line(img);
            }
        } else if (*verify) {
            if (n == 0) n = 6;
            // succession and series suites bound their own enumeration
            // internally; the safety limit only guards full-class sweeps
            if (suite != "algebraic-equation" && suite != "succession-vs-bruteforce")
                enforce_limit(n, limit);
            SuiteReport rep = run_suite(suite, n, threads);
            std::cout << "suite " << rep.suite << " (n <= " << n << ")\n" << rep.summary();
            std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
            return rep.pass() ? 0 : 1;
        } else if (*series) {
            print_series(collect_series(what, cls, patterns, n_max, threads, limit), format,
                         std::cout);
        } else if (*exp) {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot open " + out_path);
            f << series_to_bfile(collect_series(what, cls, patterns, n_max, threads, limit));
            std::cout << "wrote " << out_path << "\n";
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
