// Command-line front end for the U(alpha,lambda) toolkit. Talks to the core
// exclusively through the C API in ulog/ulog.h.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulog/ulog.h"

using ordered_json = nlohmann::ordered_json;

namespace {

// Exit codes are a stable contract: 0 ok, 1 usage/precondition,
// 2 dominance violation, 3 uncovered regime.
constexpr int kExitUsage = 1;
constexpr int kExitDominance = 2;
constexpr int kExitUncovered = 3;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Manifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    long long seed = 0;
};

ordered_json manifest_json(const Manifest &m) {
    ordered_json params = ordered_json::object();
    for (const auto &[k, v] : m.parameters)
        params[k] = v;
    return ordered_json{{"command", m.command},
                       {"parameters", params},
                       {"seed", m.seed},
                       {"tool_version", ULOG_VERSION}};
}

std::string manifest_comment(const Manifest &m) {
    std::ostringstream os;
    os << "# command=" << m.command;
    for (const auto &[k, v] : m.parameters)
        os << " " << k << "=" << v;
    os << " seed=" << m.seed << " tool_version=" << ULOG_VERSION << "\n";
    return os.str();
}

int emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return kExitUsage;
    }
    f << text;
    if (!f) {
        std::cerr << "error: write failed: " << out_path << "\n";
        return kExitUsage;
    }
    return 0;
}

bool parse_complex(const std::string &raw, double &re, double &im) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        return false;
    re = 0.0;
    im = 0.0;
    bool imag = false;
    if (s.back() == 'i' || s.back() == 'I') {
        imag = true;
        s.pop_back();
        if (s.empty() || s == "+" || s == "-")
            s += "1";
    }
    // split a trailing signed term off "a+b" (sign not part of an exponent)
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    try {
        if (imag && split != std::string::npos) {
            re = std::stod(s.substr(0, split));
            std::string tail = s.substr(split);
            im = (tail == "+" || tail == "-") ? std::stod(tail + "1") : std::stod(tail);
        } else if (imag) {
            im = std::stod(s);
        } else {
            re = std::stod(s);
        }
    } catch (...) {
        return false;
    }
    return true;
}

bool parse_complex_list(const std::string &raw, double (&re)[3], double (&im)[3],
                        std::string &err) {
    for (int i = 0; i < 3; ++i)
        re[i] = im[i] = 0.0;
    std::stringstream ss(raw);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n >= 3) {
            err = "at most 3 coefficients are supported";
            return false;
        }
        if (!parse_complex(item, re[n], im[n])) {
            err = "cannot parse coefficient '" + item + "'";
            return false;
        }
        ++n;
    }
    if (n == 0) {
        err = "empty coefficient list";
        return false;
    }
    return true;
}

ordered_json bound_json(const ulog_bound &b) {
    if (!b.covered)
        return ordered_json{{"covered", false}};
    return ordered_json{{"covered", true},
                       {"value", b.value},
                       {"regime", ulog_regime_name(b.regime)},
                       {"extremal", b.extremal}};
}

int run_roots(bool json, const std::string &out_path) {
    ulog_threshold_report r;
    if (ulog_solve_thresholds(&r) != ULOG_OK) {
        std::cerr << "error: " << ulog_last_error() << "\n";
        return kExitUsage;
    }
    Manifest m{"roots", {}, 0};
    std::ostringstream os;
    if (json) {
        ordered_json j{{"schema_version", 1},
                      {"manifest", manifest_json(m)},
                      {"alpha1", r.alpha1},
                      {"alpha_half", r.alpha_half},
                      {"alpha_nu", r.alpha_nu},
                      {"alpha2", r.alpha2},
                      {"residuals", {r.residuals[0], r.residuals[1], r.residuals[2],
                                     r.residuals[3]}}};
        os << j.dump(2) << "\n";
    } else {
        if (!out_path.empty())
            os << manifest_comment(m);
        os << "alpha_half = " << fmt12(r.alpha_half) << "  (residual " << fmt12(r.residuals[1])
           << ")\n";
        os << "alpha1     = " << fmt12(r.alpha1) << "  (residual " << fmt12(r.residuals[0])
           << ")\n";
        os << "alpha_nu   = " << fmt12(r.alpha_nu) << "  (residual " << fmt12(r.residuals[2])
           << ")\n";
        os << "alpha2     = " << fmt12(r.alpha2) << "  (residual " << fmt12(r.residuals[3])
           << ")\n";
    }
    return emit(os.str(), out_path);
}

int run_bounds(double alpha, double lambda, bool json, const std::string &out_path) {
    ulog_bound g1, g2, g3;
    ulog_status st = ulog_eval_bounds(alpha, lambda, &g1, &g2, &g3);
    if (st != ULOG_OK) {
        std::cerr << "error: " << ulog_last_error() << "\n";
        return kExitUsage;
    }
    Manifest m{"bounds",
               {{"alpha", fmt12(alpha)}, {"lambda", fmt12(lambda)}},
               0};
    std::ostringstream os;
    if (json) {
        ordered_json j{{"schema_version", 1},
                      {"manifest", manifest_json(m)},
                      {"alpha", alpha},
                      {"lambda", lambda},
                      {"gamma1", bound_json(g1)},
                      {"gamma2", bound_json(g2)},
                      {"gamma3", bound_json(g3)}};
        os << j.dump(2) << "\n";
    } else {
        if (!out_path.empty())
            os << manifest_comment(m);
        const ulog_bound *bs[3] = {&g1, &g2, &g3};
        for (int i = 0; i < 3; ++i) {
            os << "gamma" << (i + 1) << ": ";
            if (bs[i]->covered)
                os << fmt12(bs[i]->value) << " [" << ulog_regime_name(bs[i]->regime)
                   << "] extremal " << bs[i]->extremal << "\n";
            else
                os << "NOT-COVERED\n";
        }
    }
    return emit(os.str(), out_path);
}

int run_regimes(int alpha_steps, int lambda_steps, bool linear, const std::string &out_path) {
    char *csv = nullptr;
    if (ulog_regimes_csv(alpha_steps, lambda_steps, linear ? 1 : 0, &csv) != ULOG_OK) {
        std::cerr << "error: " << ulog_last_error() << "\n";
        return kExitUsage;
    }
    Manifest m{"regimes",
               {{"alpha_steps", std::to_string(alpha_steps)},
                {"lambda_steps", std::to_string(lambda_steps)},
                {"spacing", linear ? "linear" : "geometric"}},
               0};
    std::string text = manifest_comment(m) + csv;
    ulog_string_free(csv);
    return emit(text, out_path);
}

int run_verify(double alpha, double lambda, int k, int density, int refine, long long seed,
               bool full_phase, bool json, const std::string &out_path) {
    ulog_verify_report r;
    ulog_status st =
        ulog_verify(alpha, lambda, k, density, refine, full_phase ? 1 : 0, &r);
    if (st != ULOG_OK && st != ULOG_ERR_UNCOVERED_REGIME) {
        std::cerr << "error: " << ulog_last_error() << "\n";
        return kExitUsage;
    }
    Manifest m{"verify",
               {{"alpha", fmt12(alpha)},
                {"lambda", fmt12(lambda)},
                {"k", std::to_string(k)},
                {"density", std::to_string(density)},
                {"refine", std::to_string(refine)},
                {"full_phase", full_phase ? "1" : "0"}},
               seed};
    std::ostringstream os;
    if (json) {
        ordered_json j{{"schema_version", 1},
                      {"manifest", manifest_json(m)},
                      {"k", r.k},
                      {"empirical_max", r.empirical_max},
                      {"bound", r.bound_covered ? bound_json(r.bound)
                                                : ordered_json{{"covered", false}}}};
        if (r.bound_covered)
            j["gap"] = r.gap;
        ordered_json at = ordered_json::array();
        for (int i = 0; i < 3; ++i)
            at.push_back({{"re", r.attained_c_re[i]}, {"im", r.attained_c_im[i]}});
        j["attained_at"] = at;
        os << j.dump(2) << "\n";
    } else {
        if (!out_path.empty())
            os << manifest_comment(m);
        os << "k            = " << k << "\n";
        os << "empirical    = " << fmt12(r.empirical_max) << "\n";
        if (r.bound_covered) {
            os << "bound        = " << fmt12(r.bound.value) << " ["
               << ulog_regime_name(r.bound.regime) << "]\n";
            os << "gap          = " << fmt12(r.gap) << "\n";
        } else {
            os << "bound        = NOT-COVERED (empirical value only)\n";
        }
        os << "attained at c = (";
        for (int i = 0; i < 3; ++i) {
            if (i) os << ", ";
            os << fmt12(r.attained_c_re[i]);
            if (r.attained_c_im[i] != 0.0)
                os << (r.attained_c_im[i] > 0 ? "+" : "") << fmt12(r.attained_c_im[i]) << "i";
        }
        os << ")\n";
    }
    int rc = emit(os.str(), out_path);
    if (rc != 0)
        return rc;
    if (st == ULOG_ERR_UNCOVERED_REGIME)
        return kExitUncovered;
    if (r.bound_covered && r.gap < -1e-9) {
        std::cerr << "error: dominance violated (gap " << fmt12(r.gap) << ")\n";
        return kExitDominance;
    }
    return 0;
}

int run_expand(double alpha, double lambda, const std::string &clist, int order, bool json,
               const std::string &out_path) {
    double re[3], im[3];
    std::string err;
    if (!parse_complex_list(clist, re, im, err)) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
    }
    ulog_expand_report r;
    if (ulog_expand(alpha, lambda, re, im, order, &r) != ULOG_OK) {
        std::cerr << "error: " << ulog_last_error() << "\n";
        return kExitUsage;
    }
    Manifest m{"expand",
               {{"alpha", fmt12(alpha)},
                {"lambda", fmt12(lambda)},
                {"c", clist},
                {"order", std::to_string(order)}},
               0};
    std::ostringstream os;
    auto cpx = [](double cre, double cim) {
        std::string s = fmt12(cre);
        if (cim != 0.0)
            s += (cim > 0 ? "+" : "") + fmt12(cim) + "i";
        return s;
    };
    if (json) {
        auto arr = [&](const double *ar, const double *ai) {
            ordered_json a = ordered_json::array();
            for (int i = 0; i < 3; ++i)
                a.push_back({{"re", ar[i]}, {"im", ai[i]}});
            return a;
        };
        ordered_json j{{"schema_version", 1},
                      {"manifest", manifest_json(m)},
                      {"a_closed", arr(r.a_closed_re, r.a_closed_im)},
                      {"a_series", arr(r.a_series_re, r.a_series_im)},
                      {"gamma_closed", arr(r.g_closed_re, r.g_closed_im)},
                      {"gamma_series", arr(r.g_series_re, r.g_series_im)},
                      {"max_discrepancy", r.max_discrepancy}};
        os << j.dump(2) << "\n";
    } else {
        if (!out_path.empty())
            os << manifest_comment(m);
        const char *anames[3] = {"a2", "a3", "a4"};
        const char *gnames[3] = {"gamma1", "gamma2", "gamma3"};
        os << "coefficient   closed-form          series-pipeline\n";
        for (int i = 0; i < 3; ++i)
            os << anames[i] << "            " << cpx(r.a_closed_re[i], r.a_closed_im[i])
               << "   " << cpx(r.a_series_re[i], r.a_series_im[i]) << "\n";
        for (int i = 0; i < 3; ++i)
            os << gnames[i] << "        " << cpx(r.g_closed_re[i], r.g_closed_im[i]) << "   "
               << cpx(r.g_series_re[i], r.g_series_im[i]) << "\n";
        os << "max discrepancy = " << fmt12(r.max_discrepancy) << "\n";
    }
    return emit(os.str(), out_path);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sharp logarithmic-coefficient bounds for U(alpha,lambda)"};
    app.require_subcommand(1);

    bool json = false;
    std::string out_path;

    std::string format;
    auto *roots = app.add_subcommand("roots", "threshold polynomial roots");
    roots->add_flag("--json", json, "machine-readable output");
    roots->add_option("--out", out_path, "write output to file");
    roots->add_option("--format", format, "'json' or 'text'")
        ->check(CLI::IsMember({"json", "text"}));

    double alpha = 0.0, lambda = 0.0;
    auto *bounds = app.add_subcommand("bounds", "Theorem bounds at (alpha, lambda)");
    bounds->add_option("--alpha", alpha, "alpha in (0,1)")->required();
    bounds->add_option("--lambda", lambda, "lambda in (0,1)")->required();
    bounds->add_flag("--json", json);
    bounds->add_option("--out", out_path);

    int alpha_steps = 100, lambda_steps = 100;
    bool linear = false;
    auto *regimes = app.add_subcommand("regimes", "regime-map CSV over the (alpha,lambda) rectangle");
    regimes->add_option("--alpha-steps", alpha_steps)->check(CLI::Range(2, 100000));
    regimes->add_option("--lambda-steps", lambda_steps)->check(CLI::Range(2, 100000));
    regimes->add_flag("--linear", linear, "linear lambda spacing (default geometric)");
    regimes->add_option("--out", out_path);

    int k = 1, density = 9, refine = 3;
    long long seed = 0;
    bool full_phase = false;
    auto *verify = app.add_subcommand("verify", "brute-force check of one bound");
    verify->add_option("--alpha", alpha)->required();
    verify->add_option("--lambda", lambda)->required();
    verify->add_option("--k", k, "coefficient index 1..3")->required()->check(CLI::Range(1, 3));
    verify->add_option("--density", density)->check(CLI::Range(5, 200));
    verify->add_option("--refine", refine)->check(CLI::Range(0, 20));
    verify->add_option("--seed", seed, "recorded in the manifest");
    verify->add_flag("--full-phase", full_phase, "search all Schur-parameter phases");
    verify->add_flag("--json", json);
    verify->add_option("--out", out_path);

    std::string clist;
    int order = 12;
    auto *expand = app.add_subcommand("expand", "a2..a4 and gamma_1..3 from both pipelines");
    expand->add_option("--alpha", alpha)->required();
    expand->add_option("--lambda", lambda)->required();
    expand->add_option("--c", clist, "comma-separated c1[,c2[,c3]]")->required();
    expand->add_option("--order", order)->check(CLI::Range(4, 64));
    expand->add_flag("--json", json);
    expand->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (roots->parsed())
        return run_roots(json || format == "json", out_path);
    if (bounds->parsed())
        return run_bounds(alpha, lambda, json, out_path);
    if (regimes->parsed())
        return run_regimes(alpha_steps, lambda_steps, linear, out_path);
    if (verify->parsed())
        return run_verify(alpha, lambda, k, density, refine, seed, full_phase, json, out_path);
    if (expand->parsed())
        return run_expand(alpha, lambda, clist, order, json, out_path);
    return kExitUsage;
}
