#include "zetabounds/study.hpp"

#include <cmath>
#include <numbers>

namespace zetabounds::study {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kE = std::numbers::e;

double main_term(double t) { return t / kTwoPi * std::log(t / (kTwoPi * kE)); }

double sqrt_term(double t) {
    return std::sqrt(std::log(t) * std::log(std::log(t))) / (std::sqrt(2.0) * kPi);
}

double eps_of(double N, double t, Sign s) {
    const double base = N - main_term(t) - 11.0 / 8.0;
    return s == Sign::plus ? base - sqrt_term(t) : base + sqrt_term(t);
}

} // namespace

double eps_at(long n, const zeros::ZeroList& z, Sign s) {
    if (n < 1 || n > (long)z.ordinates.size())
        throw std::out_of_range("eps_at: zero index out of range");
    const double t = z.ordinates[n - 1];
    if (!(t > kE)) throw std::domain_error("eps_at: needs t_n > e");
    return eps_of((double)n, t, s);
}

std::vector<StudyRecord> scan_extremes(const zeros::ZeroList& z) {
    std::vector<StudyRecord> out;
    for (long n = 1; n <= (long)z.ordinates.size(); ++n) {
        const double t = z.ordinates[n - 1];
        if (t <= 3.0) continue;
        const double ep = eps_of((double)n, t, Sign::plus);
        const double em = eps_of((double)n, t, Sign::minus);
        if (ep > 0.0 || em < 0.0) out.push_back({n, t, ep, em});
    }
    return out;
}

ExtremesSummary extremes_summary(const zeros::ZeroList& z) {
    ExtremesSummary s;
    bool first = true;
    for (long n = 1; n <= (long)z.ordinates.size(); ++n) {
        const double t = z.ordinates[n - 1];
        if (t <= 3.0) continue;
        const double ep = eps_of((double)n, t, Sign::plus);
        const double em = eps_of((double)n, t, Sign::minus);
        if (first || ep > s.max_eps_plus) {
            s.max_eps_plus = ep;
            s.argmax_plus = n;
        }
        if (first || em < s.min_eps_minus) {
            s.min_eps_minus = em;
            s.argmin_minus = n;
        }
        if (n >= 2) {
            const double inf = em - 1.0;  // infimum over [t_{n-1}, t_n)
            if (n == 2 || inf < s.min_eps_minus_inf) {
                s.min_eps_minus_inf = inf;
                s.argmin_minus_inf = n - 1;
            }
        }
        first = false;
    }
    return s;
}

std::vector<std::pair<long, double>> interval_averages(const zeros::ZeroList& z,
                                                       long chunks) {
    if (chunks < 1) throw std::invalid_argument("interval_averages: chunks >= 1");
    const long total = (long)z.ordinates.size();
    std::vector<std::pair<long, double>> out;
    for (long ci = 0; ci < chunks; ++ci) {
        const long lo = total * ci / chunks;
        const long hi = total * (ci + 1) / chunks;
        if (hi <= lo) continue;
        double sum = 0.0;
        long used = 0;
        for (long i = lo; i < hi; ++i) {
            const double t = z.ordinates[i];
            if (t <= 3.0) continue;  // below the log log domain
            sum += (double)(i + 1) - main_term(t);
            ++used;
        }
        if (used > 0) out.emplace_back(ci, sum / (double)used);
    }
    return out;
}

ClusterScan cluster_first(int n_max, const zeros::ZeroList& z, double t_cap) {
    if (n_max < 1) throw std::invalid_argument("cluster_first: n_max >= 1");
    ClusterScan scan;
    scan.rows.assign(n_max, ClusterRow{});
    int found = 0;
    const auto& g = z.ordinates;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double t = g[k] - 1.0;  // a zero enters the window from the right
        if (t <= 1.0) continue;
        // N(t+1) = k+1; N(t-1) = count of ordinates <= gamma_k - 2
        const long below =
            std::upper_bound(g.begin(), g.end(), g[k] - 2.0) - g.begin();
        const int w = (int)((long)(k + 1) - below);
        if (w >= 1 && w <= n_max && scan.rows[w - 1].n == 0) {
            scan.rows[w - 1] = {w, t};
            ++found;
        }
        if (t <= t_cap && t <= z.t_max_verified - 1.0) {
            const double ratio = (double)w / std::log(t);
            if (ratio > scan.max_ratio) {
                scan.max_ratio = ratio;
                scan.max_ratio_t = t;
                scan.max_ratio_n = w;
            }
        }
        if (found == n_max && t > t_cap) break;
    }
    if (found != n_max)
        throw zeros::coverage_error(
            "cluster_first: some window counts never attained in covered range");
    return scan;
}

bool deviation_band_check(const zeros::ZeroList& z) {
    const double up = 0.092094, down = 0.082707;
    auto ok = [&](double N, double t) {
        if (!(t > kE)) return true;
        const double dev = N - main_term(t) - 11.0 / 8.0;
        const double s = sqrt_term(t);
        return dev < s + up && dev > -s - 1.0 - down;
    };
    // just above e, where no ordinate has occurred yet
    if (!ok(0.0, kE * 1.000001)) return false;
    const auto& g = z.ordinates;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!ok((double)(k + 1), g[k])) return false;       // right limit at t_k
        if (!ok((double)k, g[k] - 1e-9)) return false;      // left limit
        const double next = (k + 1 < g.size()) ? g[k + 1] : z.t_max_verified;
        if (next > g[k] && !ok((double)(k + 1), 0.5 * (g[k] + next))) return false;
    }
    return true;
}

} // namespace zetabounds::study
