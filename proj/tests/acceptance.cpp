// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must point at the CLI binary (used by criteria 1 and 10).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "schwarz.hpp"
#include "uclass.hpp"
#include "verify.hpp"

using namespace ulog;
using nlohmann::json;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int n, const std::string &name, bool ok, const std::string &detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok)
        ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_cli(const std::string &args, const std::string &stdout_file) {
    std::string cmd = "\"" + g_cli + "\" " + args;
    if (!stdout_file.empty())
        cmd += " > " + stdout_file;
    return std::system(cmd.c_str());
}

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// deterministic admissible sample: parameters in the open disk via the chart
struct Sampler {
    std::mt19937 rng{20240815};
    std::uniform_real_distribution<double> u{0.0, 1.0};
    std::uniform_real_distribution<double> ph{0.0, 2 * 3.141592653589793};

    ClassParams class_params() {
        while (true) {
            double alpha = 0.05 + 0.9 * u(rng);
            double lambda = lambda_star(alpha) * u(rng);
            if (lambda > 1e-6)
                return {alpha, lambda};
        }
    }

    SchwarzCoeffs schwarz() {
        SchurParams t;
        for (int i = 0; i < 3; ++i)
            t.t.push_back(std::polar(u(rng), ph(rng)));
        return schur_to_coeffs(t);
    }
};

void criterion1_roots() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = run_cli("roots --format json", "acc_roots.json") == 0;
    double dt = seconds_since(t0);
    json j;
    if (ok) {
        try {
            j = json::parse(slurp("acc_roots.json"));
        } catch (...) {
            ok = false;
        }
    }
    if (ok) {
        ok = std::abs(j["alpha1"].get<double>() - 0.4825) < 5e-5 &&
             std::abs(j["alpha_half"].get<double>() - 0.2512) < 5e-5 &&
             std::abs(j["alpha_nu"].get<double>() - 0.5337) < 5e-5 &&
             std::abs(j["alpha2"].get<double>() - 0.9555) < 5e-5;
        for (const auto &res : j["residuals"])
            ok = ok && std::abs(res.get<double>()) < 1e-12;
        ok = ok && dt < 1.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2fs", dt);
    report(1, "roots reproduction", ok, buf);
}

void criterion2_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    Sampler s;
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        ClassParams p = s.class_params();
        SchwarzCoeffs w = s.schwarz();
        double d = cross_check_pipeline(p, w);
        worst = std::max(worst, d);
        if (d > 1e-10)
            ok = false;
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 10.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max discrepancy %.3g, %.2fs", worst, dt);
    report(2, "series vs closed-form equivalence", ok, buf);
}

std::vector<ClassParams> acceptance_grid() {
    std::vector<ClassParams> grid;
    for (int i = 0; i < 20; ++i) {
        double alpha = 0.05 + 0.9 * i / 19.0;
        double ls = lambda_star(alpha);
        for (int j = 1; j <= 20; ++j)
            grid.emplace_back(alpha, std::min(ls, ls * j / 20.0));
    }
    return grid;
}

void criterion3_dominance() {
    auto t0 = std::chrono::steady_clock::now();
    SearchConfig cfg;  // density 9, 3 refinement rounds
    bool ok = true;
    double worst_gap = 1e300;
    int checked = 0;
    for (const ClassParams &p : acceptance_grid()) {
        for (int k = 1; k <= 3; ++k) {
            auto rep = brute_force_gamma_max(p, k, cfg);
            if (!rep.bound)
                continue;  // gamma3 gap: no theorem bound to dominate
            ++checked;
            worst_gap = std::min(worst_gap, rep.gap);
            if (rep.gap < -1e-9)
                ok = false;
        }
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 300.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d checks, min gap %.3g, %.1fs", checked, worst_gap, dt);
    report(3, "dominance suite", ok, buf);
}

void criterion4_sharpness() {
    bool ok = true;
    int checked = 0;
    for (const ClassParams &p : acceptance_grid()) {
        for (int k = 1; k <= 3; ++k) {
            if (k == 3 && !bound_gamma3(p).covered)
                continue;
            try {
                verify_sharpness(p, k);  // throws beyond 1e-10 / 1e-8
                ++checked;
            } catch (const std::exception &e) {
                ok = false;
            }
        }
    }
    report(4, "sharpness suite", ok, std::to_string(checked) + " extremals");
}

void criterion5_continuity() {
    auto th = solve_thresholds();
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
        double a2 = th.alpha1 + (1.0 - 1e-6 - th.alpha1) * i / 199;
        double l1 = lambda1(a2);
        double u = 1.0 - a2;
        if (std::abs(l1 / (2 * (2 - a2)) - a2 * l1 * l1 / (4 * u * u)) >= 1e-12)
            ok = false;

        double a3 = th.alpha_nu + (1.0 - 1e-6 - th.alpha_nu) * i / 199;
        double ln = lambda_nu(a3);
        double v = 1.0 - a3;
        if (std::abs(ln / (2 * (3 - a3)) - a3 * a3 * ln * ln * ln / (6 * v * v * v)) >= 1e-12)
            ok = false;
    }
    report(5, "regime continuity at lambda1 and lambda_nu", ok);
}

void criterion6_sign_tests() {
    auto q1 = [](double a) { return 7 * a * a * a * a - 20 * a * a * a + 24 * a * a - 16 * a + 4; };
    auto q2 = [](double a) { return 4 - 12 * a - 19 * a * a + 14 * a * a * a - 2 * a * a * a * a; };
    auto q3 = [](double a) { return 3 - 9 * a + 9 * a * a - 5 * a * a * a; };
    auto q4 = [](double a) { return 11 * a * a - 44 * a + 32; };
    auto th = solve_thresholds();
    const double roots[] = {th.alpha1, th.alpha_half, th.alpha_nu, th.alpha2};
    bool ok = true;
    for (int i = 1; i < 500; ++i) {
        double a = static_cast<double>(i) / 500;
        bool near = false;
        for (double r : roots)
            near = near || std::abs(a - r) < 1e-9;
        if (near)
            continue;
        if ((lambda1(a) <= lambda_star(a)) != (q1(a) <= 0)) ok = false;
        if ((lambda_half(a) <= lambda_star(a)) != (q2(a) <= 0)) ok = false;
        if ((lambda_nu(a) <= lambda_star(a)) != (q3(a) <= 0)) ok = false;
        if ((lambda_half(a) <= lambda_nu(a)) != (q4(a) >= 0)) ok = false;
    }
    report(6, "threshold-equivalence sign tests", ok);
}

void criterion7_lemma2() {
    bool ok = true;
    // 100 (mu,nu) points across the covered regions, plus (2,1)
    std::vector<PSPoint> points;
    points.push_back(classify_ps(2.0, 1.0));
    for (int i = 0; i < 11 && points.size() < 100; ++i)
        for (int j = 0; j < 11 && points.size() < 100; ++j) {
            PSPoint p = classify_ps(2.0 * i / 10, 2.0 * j / 10);
            if (p.region != Region::Uncovered)
                points.push_back(p);
        }
    // 500 sampled Schwarz functions
    auto samples = sample_body(3, 3, true);
    std::vector<SchwarzCoeffs> subset;
    size_t stride = samples.size() / 500;
    for (size_t i = 0; i < samples.size() && subset.size() < 500; i += stride)
        subset.push_back(samples[i]);

    for (const PSPoint &pt : points) {
        double phi = ps_phi(pt);
        for (const SchwarzCoeffs &w : subset) {
            double psi =
                std::abs(w.c[2] + pt.mu * w.c[0] * w.c[1] + pt.nu * w.c[0] * w.c[0] * w.c[0]);
            if (psi > phi + 1e-9)
                ok = false;
        }
    }
    // on D3 the c1-extremal gives Psi = nu exactly
    SchwarzCoeffs e1;
    e1.c[0] = 1.0;
    for (const PSPoint &pt : points) {
        if (pt.region != Region::D3)
            continue;
        double psi = std::abs(e1.c[2] + pt.mu * e1.c[0] * e1.c[1] +
                              pt.nu * e1.c[0] * e1.c[0] * e1.c[0]);
        if (psi != pt.nu)
            ok = false;
    }
    report(7, "coefficient-body ceiling consistency", ok,
           std::to_string(points.size()) + " (mu,nu) points");
}

void criterion8_membership() {
    Sampler s;
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        ClassParams p = s.class_params();
        SchwarzCoeffs w = s.schwarz();
        auto f = build_function(p, w, 24);
        double residual = membership_residual(f, p, 0.9, 256);
        double ceiling = p.lambda * max_modulus(w, 0.9, 256) + 5e-3;
        if (residual > ceiling)
            ok = false;
    }
    report(8, "membership consistency at radius 0.9", ok);
}

void criterion9_proof_constants() {
    auto th = solve_thresholds();
    double best = 0.0;
    double at_alpha = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        double a = th.alpha_nu + (th.alpha2 - th.alpha_nu) * i / 2000;
        double v = std::sqrt(3 * (1 - a) * (3 - a)) / (2 - a);
        if (v > best) {
            best = v;
            at_alpha = a;
        }
    }
    bool ok = std::abs(best - 1.2667) < 5e-5;
    ok = ok && std::abs(at_alpha - th.alpha_nu) < 1e-9;  // attained at the left endpoint
    double phi = 4.0 / 27.0 * std::pow(1 + best, 3) - (1 + best);
    ok = ok && std::abs(phi - (-0.541)) < 5e-4;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max %.6f, phi %.6f", best, phi);
    report(9, "proof-constant check", ok, buf);
}

void criterion10_determinism() {
    bool ok = true;
    ok = ok && run_cli("verify --alpha 0.6 --lambda 0.5 --k 2 --seed 7 --json --out acc_v1.json",
                       "") == 0;
    ok = ok && run_cli("verify --alpha 0.6 --lambda 0.5 --k 2 --seed 7 --json --out acc_v2.json",
                       "") == 0;
    ok = ok && !slurp("acc_v1.json").empty() && slurp("acc_v1.json") == slurp("acc_v2.json");
    ok = ok && run_cli("regimes --alpha-steps 20 --lambda-steps 20 --out acc_r1.csv", "") == 0;
    ok = ok && run_cli("regimes --alpha-steps 20 --lambda-steps 20 --out acc_r2.csv", "") == 0;
    ok = ok && !slurp("acc_r1.csv").empty() && slurp("acc_r1.csv") == slurp("acc_r2.csv");
    report(10, "CLI determinism", ok);
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>" << std::endl;
        return 2;
    }
    g_cli = argv[1];

    criterion1_roots();
    criterion2_equivalence();
    criterion3_dominance();
    criterion4_sharpness();
    criterion5_continuity();
    criterion6_sign_tests();
    criterion7_lemma2();
    criterion8_membership();
    criterion9_proof_constants();
    criterion10_determinism();

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed" << std::endl;
    return 1;
}
