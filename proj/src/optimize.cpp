#include "zetabounds/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <thread>

namespace zetabounds::optimize {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

regions::BoundParams with_point(const regions::BoundParams& base, double c,
                                double r, double eta) {
    regions::BoundParams p = base;
    p.c = c;
    p.r = r;
    p.eta = eta;
    return p;
}

double objective_value(const Weights& w, const constants::ConstantSet& cs) {
    return w.C1 * cs.C1 + w.C2 * cs.C2 + w.C2p * cs.C2p + w.C3 * cs.C3 +
           w.C3p * cs.C3p;
}

struct Evaluator {
    const Objective& obj;
    const regions::BoundParams& base;
    constants::QuadratureSpec quad;
    long evals = 0;

    double operator()(const std::vector<double>& x) {
        ++evals;
        auto [c, r, eta] = expand(x);
        auto p = with_point(base, c, r, eta);
        if (!regions::check_params(p).empty()) return kInf;
        try {
            const auto ri = constants::integrate_regions(p, quad, false);
            return objective_value(obj.weights, constants::assemble(p, ri));
        } catch (const std::exception&) {
            return kInf;
        }
    }

    // pack only the coordinates not pinned by the objective
    std::vector<double> pack(double c, double r, double eta) const {
        std::vector<double> x;
        if (!obj.fixed_c) x.push_back(c);
        if (!obj.fixed_r) x.push_back(r);
        if (!obj.fixed_eta) x.push_back(eta);
        return x;
    }
    std::tuple<double, double, double> expand(const std::vector<double>& x) const {
        std::size_t i = 0;
        const double c = obj.fixed_c ? *obj.fixed_c : x[i++];
        const double r = obj.fixed_r ? *obj.fixed_r : x[i++];
        const double eta = obj.fixed_eta ? *obj.fixed_eta : x[i++];
        return {c, r, eta};
    }
};

// Deterministic feasible start: low-discrepancy point in a chart that bakes
// in delta in [1/4, 1/2) and eta < c-1.
bool sample_start(std::uint64_t seed, int k, const Objective& obj,
                  const regions::BoundParams& base, double* c, double* r,
                  double* eta) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + (std::uint64_t)k);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    constexpr double kGolden = 0.6180339887498949;
    for (int tries = 0; tries < 64; ++tries) {
        const double u1 = std::fmod(kGolden * (k + 1) + U(rng), 1.0);
        const double u2 = std::fmod(kGolden * (2 * k + 3) + U(rng), 1.0);
        const double u3 = std::fmod(kGolden * (3 * k + 7) + U(rng), 1.0);
        double cc = obj.fixed_c ? *obj.fixed_c
                                : 1.0 + std::pow(10.0, -5.2 + 4.9 * u1);
        double ee = obj.fixed_eta
                        ? *obj.fixed_eta
                        : (cc - 1.0) * (1.0 - std::pow(10.0, -4.0 + 3.98 * u2));
        // delta = (c - 1/2)(1 - (c - 1/2)/r) chosen in (1/4, 1/2)
        const double d = 0.25 + 0.2499 * std::pow(10.0, -3.5 + 3.5 * u3);
        double rr = obj.fixed_r
                        ? *obj.fixed_r
                        : (cc - 0.5) * (cc - 0.5) / (cc - 0.5 - d);
        if (check_constraints(cc, rr, ee, base.n).ok &&
            regions::check_params(with_point(base, cc, rr, ee)).empty()) {
            *c = cc;
            *r = rr;
            *eta = ee;
            return true;
        }
    }
    return false;
}

struct NmResult {
    std::vector<double> x;
    double fx = kInf;
    long evals = 0;
};

NmResult nelder_mead(Evaluator& ev, std::vector<double> x0, long budget) {
    const std::size_t d = x0.size();
    struct Vertex {
        std::vector<double> x;
        double f;
    };
    std::vector<Vertex> simp(d + 1);
    simp[0] = {x0, ev(x0)};
    for (std::size_t i = 0; i < d; ++i) {
        double off = 1e-2 * x0[i];
        auto x = x0;
        for (int tries = 0; tries < 8; ++tries) {
            x[i] = x0[i] + off;
            simp[i + 1] = {x, ev(x)};
            if (std::isfinite(simp[i + 1].f)) break;
            off *= -0.25;  // flip and shrink away from the boundary
        }
    }
    auto order = [&] {
        std::stable_sort(simp.begin(), simp.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    };
    order();
    while (ev.evals < budget) {
        // shrink-to-1e-7 termination on the simplex diameter
        double diam = 0.0;
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                diam = std::max(diam, std::abs(simp[i].x[j] - simp[0].x[j]));
        if (diam < 1e-7) break;

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) centroid[j] += simp[i].x[j];
        }
        for (auto& v : centroid) v /= (double)d;

        auto mix = [&](double t) {
            std::vector<double> x(d);
            for (std::size_t j = 0; j < d; ++j)
                x[j] = centroid[j] + t * (simp[d].x[j] - centroid[j]);
            return x;
        };
        const auto xr = mix(-1.0);
        const double fr = ev(xr);
        if (fr < simp[0].f) {
            const auto xe = mix(-2.0);
            const double fe = ev(xe);
            if (fe < fr)
                simp[d] = {xe, fe};
            else
                simp[d] = {xr, fr};
        } else if (fr < simp[d - 1].f) {
            simp[d] = {xr, fr};
        } else {
            const bool outside = fr < simp[d].f;
            const auto xc = mix(outside ? -0.5 : 0.5);
            const double fc = ev(xc);
            if (fc < std::min(fr, simp[d].f)) {
                simp[d] = {xc, fc};
            } else {
                for (std::size_t i = 1; i <= d; ++i) {
                    for (std::size_t j = 0; j < d; ++j)
                        simp[i].x[j] = 0.5 * (simp[i].x[j] + simp[0].x[j]);
                    simp[i].f = ev(simp[i].x);
                }
            }
        }
        order();
    }
    return {simp[0].x, simp[0].f, ev.evals};
}

} // namespace

ConstraintReport check_constraints(double c, double r, double eta, int n) {
    regions::BoundParams p;
    p.c = c;
    p.r = r;
    p.eta = eta;
    p.n = n;
    ConstraintReport rep;
    rep.violations = regions::check_params(p);
    rep.ok = rep.violations.empty();
    return rep;
}

SearchResult run(const Objective& obj, const regions::BoundParams& base,
                 std::uint64_t seed, long budget, const OptimizeOptions& opt) {
    if (!obj.weights.any())
        throw std::invalid_argument("optimize: at least one positive weight required");
    if (budget < 100) throw std::invalid_argument("optimize: budget >= 100 required");
    const int restarts = std::max(8, opt.restarts);

    struct Restart {
        bool feasible = false;
        NmResult nm;
    };
    std::vector<Restart> results(restarts);
    const long per = std::max<long>(100, budget / restarts);

    auto run_one = [&](int k) {
        Restart out;
        double c, r, eta;
        if (!sample_start(seed, k, obj, base, &c, &r, &eta)) return out;
        Evaluator ev{obj, base, {opt.quad_tol, 4000}, 0};
        // re-seed the simplex at the incumbent until the budget is spent;
        // a fresh simplex lets the search keep creeping along constraint
        // boundaries after the previous one has collapsed
        out.nm = nelder_mead(ev, ev.pack(c, r, eta), per);
        int stale = 0;
        while (ev.evals < per && stale < 2) {
            const auto next = nelder_mead(ev, out.nm.x, per);
            if (next.fx < out.nm.fx - 1e-12)
                stale = 0;
            else
                ++stale;
            if (next.fx < out.nm.fx) out.nm = next;
            out.nm.evals = ev.evals;
        }
        out.feasible = std::isfinite(out.nm.fx);
        return out;
    };

    unsigned hw = opt.threads > 0 ? (unsigned)opt.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
    if (hw <= 1) {
        for (int k = 0; k < restarts; ++k) results[k] = run_one(k);
    } else {
        for (int k0 = 0; k0 < restarts; k0 += (int)hw) {
            std::vector<std::future<Restart>> fut;
            for (int k = k0; k < std::min(restarts, k0 + (int)hw); ++k)
                fut.push_back(std::async(std::launch::async, run_one, k));
            for (int k = k0; k < std::min(restarts, k0 + (int)hw); ++k)
                results[k] = fut[k - k0].get();
        }
    }

    // merge deterministically by (objective, restart index)
    int best = -1;
    long total_evals = 0;
    for (int k = 0; k < restarts; ++k) {
        total_evals += results[k].nm.evals;
        if (!results[k].feasible) continue;
        if (best < 0 || results[k].nm.fx < results[best].nm.fx) best = k;
    }
    if (best < 0) throw infeasible_error("optimize: no feasible start found");

    Evaluator ev{obj, base, {opt.quad_tol, 4000}, 0};
    auto [c, r, eta] = ev.expand(results[best].nm.x);
    SearchResult sr;
    sr.params = with_point(base, c, r, eta);
    regions::require_valid(sr.params);
    const auto ri = constants::integrate_regions(sr.params, {opt.quad_tol, 4000}, false);
    sr.constants = constants::assemble(sr.params, ri);
    sr.objective_value = objective_value(obj.weights, sr.constants);
    sr.evaluations = total_evals;
    return sr;
}

} // namespace zetabounds::optimize
