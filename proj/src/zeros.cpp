#include "zetabounds/zeros.hpp"

#include "zetabounds/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>
#include <thread>

namespace zetabounds::zeros {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double main_term(double t) { return t / kTwoPi * std::log(t / (kTwoPi * std::numbers::e)); }

double scan_step(double t) {
    const double lg = std::max(1.0, std::log(t / kTwoPi));
    return kTwoPi / lg / 8.0;
}

double bisect_zero(double a, double b, double fa, double tol) {
    // fa = sign of Z at a; invariant: sign change on [a, b]
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double fm = specfun::rs_Z(m);
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// sign changes of Z on [a, b] at the given scan refinement
std::vector<double> scan_segment(double a, double b, int refine, double tol) {
    std::vector<double> out;
    double t0 = a, f0 = specfun::rs_Z(a);
    while (t0 < b) {
        double t1 = std::min(b, t0 + scan_step(t0) / (double)refine);
        if (t1 <= t0) break;
        const double f1 = specfun::rs_Z(t1);
        if ((f1 < 0.0) != (f0 < 0.0)) out.push_back(bisect_zero(t0, t1, f0, tol));
        t0 = t1;
        f0 = f1;
    }
    return out;
}

void run_indexed(int jobs, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= jobs) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

// continuous phase change of zeta along the horizontal leg sigma: 2 -> 1/2
double horizontal_arg(double t) {
    const specfun::EvalAccuracy acc{1e-10, 20'000'000};
    auto phase = [&](double sg) {
        return std::arg(specfun::zeta_complex({sg, t}, acc));
    };
    struct Walker {
        std::function<double(double)> phase;
        double total = 0.0;
        void walk(double s0, double p0, double s1, double p1, int depth) {
            double d = p1 - p0;
            while (d > kPi) d -= kTwoPi;
            while (d <= -kPi) d += kTwoPi;
            if (std::abs(d) <= 0.5 * kPi || depth >= 26) {
                if (depth >= 26)
                    throw completeness_error("argument tracking: refinement exhausted");
                total += d;
                return;
            }
            const double sm = 0.5 * (s0 + s1);
            const double pm = phase(sm);
            walk(s0, p0, sm, pm, depth + 1);
            walk(sm, pm, s1, p1, depth + 1);
        }
    } w{phase, 0.0};
    const int K = 12;
    double s_prev = 2.0, p_prev = w.phase(2.0);
    for (int i = 1; i <= K; ++i) {
        const double s = 2.0 - 1.5 * (double)i / K;
        const double p = w.phase(s);
        w.walk(s_prev, p_prev, s, p, 0);
        s_prev = s;
        p_prev = p;
    }
    return w.total;
}

} // namespace

parse_error::parse_error(long line_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

monotonicity_error::monotonicity_error(long index_)
    : std::runtime_error("ordinates not strictly increasing at index " +
                         std::to_string(index_)),
      index(index_) {}

double s_tracked(double t) {
    // the vertical leg keeps Re zeta(2+iu) >= 1 - (zeta(2)-1) > 0, so its
    // total argument change is the principal argument at the top corner
    const specfun::EvalAccuracy acc{1e-10, 20'000'000};
    const double vert = std::arg(specfun::zeta_complex({2.0, t}, acc));
    return (vert + horizontal_arg(t)) / kPi;
}

ZeroList find_zeros(double t_max, const ScanOptions& opt) {
    if (!(t_max >= 15.0)) throw std::invalid_argument("find_zeros: t_max >= 15 required");
    if (t_max > 1e6) throw std::range_error("find_zeros: t_max above 1e6");
    const double t_lo = 10.0;  // no ordinates below; verified by the count check
    const int threads = opt.threads > 0
                            ? opt.threads
                            : (int)std::max(1u, std::thread::hardware_concurrency());

    const int nseg = std::max(1, (int)std::ceil((t_max - t_lo) / opt.block));
    std::vector<double> edge(nseg + 1);
    for (int i = 0; i <= nseg; ++i)
        edge[i] = t_lo + (t_max - t_lo) * (double)i / nseg;

    std::vector<std::vector<double>> found(nseg);
    run_indexed(nseg, threads, [&](int i) {
        found[i] = scan_segment(edge[i], edge[i + 1], 1, opt.bisect_tol);
    });

    auto merged = [&] {
        std::vector<double> all;
        for (const auto& v : found) all.insert(all.end(), v.begin(), v.end());
        return all;
    };

    // completeness-check boundaries: nominal edges moved to midpoints of the
    // surrounding zeros so the tracking path stays away from |zeta| ~ 0
    std::vector<double> zs = merged();
    auto checkpoint = [&](double g) {
        auto it = std::lower_bound(zs.begin(), zs.end(), g);
        if (it == zs.begin() || it == zs.end()) return g;
        return 0.5 * (*(it - 1) + *it);
    };
    std::vector<double> bpt(nseg);
    for (int i = 0; i < nseg; ++i) bpt[i] = checkpoint(edge[i + 1]);
    // keep the final verification height clear of the last found zero
    if (!zs.empty() && t_max - zs.back() < 0.02) bpt[nseg - 1] = zs.back() - 0.02;

    std::vector<double> expected(nseg);
    run_indexed(nseg, threads, [&](int i) {
        const double b = bpt[i];
        expected[i] = specfun::rs_theta(b) / kPi + 1.0 + s_tracked(b);
    });

    for (int i = 0; i < nseg; ++i) {
        const long want = std::lround(expected[i]);
        if (std::abs(expected[i] - (double)want) > 0.3)
            throw completeness_error("count check unstable near t = " +
                                     std::to_string(bpt[i]));
        for (int refine = 4; ; refine *= 4) {
            const long have =
                std::upper_bound(zs.begin(), zs.end(), bpt[i]) - zs.begin();
            if (have == want) break;
            if (refine > 16)
                throw completeness_error("zero count mismatch on block ending at t = " +
                                         std::to_string(bpt[i]));
            const double lo = (i == 0) ? t_lo : bpt[i - 1];
            auto extra = scan_segment(lo, bpt[i], refine, opt.bisect_tol);
            for (double g : extra) {
                auto it = std::lower_bound(zs.begin(), zs.end(), g);
                const bool dup = (it != zs.end() && *it - g < 1e-8) ||
                                 (it != zs.begin() && g - *(it - 1) < 1e-8);
                if (!dup) zs.insert(it, g);
            }
        }
    }

    ZeroList z;
    z.t_max_verified = bpt[nseg - 1];
    for (double g : zs)
        if (g <= z.t_max_verified) z.ordinates.push_back(g);
    z.source = Source::computed;
    return z;
}

ZeroList ingest_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open " + path);
    ZeroList z;
    z.source = Source::ingested;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(line.substr(first), &pos);
        } catch (const std::exception&) {
            throw parse_error(lineno, "not a number: '" + line + "'");
        }
        const auto rest = line.find_first_not_of(" \t\r", first + pos);
        if (rest != std::string::npos)
            throw parse_error(lineno, "trailing content: '" + line + "'");
        if (!(v > 0.0) || !std::isfinite(v))
            throw parse_error(lineno, "ordinate must be positive and finite");
        z.ordinates.push_back(v);
        if (z.ordinates.size() >= 2 &&
            z.ordinates[z.ordinates.size() - 2] >= z.ordinates.back())
            throw monotonicity_error((long)z.ordinates.size());
    }
    z.t_max_verified = z.ordinates.empty() ? 0.0 : z.ordinates.back();
    return z;
}

void write_zeros(const std::string& path, const ZeroList& z) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.precision(19);
    for (double g : z.ordinates) out << g << '\n';
}

long N_exact(double t, const ZeroList& z) {
    if (t > z.t_max_verified)
        throw coverage_error("N(t) requested beyond covered height " +
                             std::to_string(z.t_max_verified));
    return std::upper_bound(z.ordinates.begin(), z.ordinates.end(), t) -
           z.ordinates.begin();
}

double S_exact(double t, const ZeroList& z) {
    return (double)N_exact(t, z) - main_term(t) - 7.0 / 8.0 -
           0.5 * specfun::g_of_T(t);
}

bool bound_sandwich(double t, const constants::ConstantSet& cs, const ZeroList& z) {
    if (!(t >= std::numbers::e)) throw std::domain_error("bound_sandwich: t >= e");
    const double dev = std::abs((double)N_exact(t, z) - main_term(t));
    const double bound = (t <= constants::kPrimedTmin)
                             ? constants::small_T_bound()
                             : constants::eval_bound(t, cs, constants::BoundMode::NT);
    return dev <= bound + 1e-9;
}

} // namespace zetabounds::zeros
