#include "zetabounds/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace zetabounds::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// B_2, B_4, ..., B_26
constexpr std::array<double, 13> kBernoulli = {
    1.0 / 6.0,        -1.0 / 30.0,          1.0 / 42.0,
    -1.0 / 30.0,      5.0 / 66.0,           -691.0 / 2730.0,
    7.0 / 6.0,        -3617.0 / 510.0,      43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0,    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};

// B_{2j} / (2j)! for the Euler-Maclaurin correction terms.
const std::array<double, 13>& bern_over_fact() {
    static const std::array<double, 13> tbl = [] {
        std::array<double, 13> t{};
        double fact = 1.0;
        for (int j = 0; j < 13; ++j) {
            fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
            t[j] = kBernoulli[j] / fact;
        }
        return t;
    }();
    return tbl;
}

// Euler-Maclaurin for zeta(s): direct sum to N-1, midpoint and integral
// terms at N, then J Bernoulli corrections.  The remainder after J terms is
//   |R| <= |B_{2J+2}/(2J+2)!| * |prod_{i=0}^{2J+1}(s+i)| * N^{-sigma-2J-1} / (sigma+2J+1).
// Returns the correction series and a certified remainder bound via *rem.
cplx em_tail(cplx s, double N, int J, double* rem) {
    const auto& bf = bern_over_fact();
    cplx poch = s;              // s (s+1) ... (s+2j-2)
    cplx npow = std::pow(N, 1.0 - s) / N;  // N^{-s}
    cplx sum = 0.0;
    const double invN = 1.0 / N;
    const double invN2 = invN * invN;
    for (int j = 1; j <= J; ++j) {
        // term_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}
        sum += bf[j - 1] * poch * npow * invN;
        if (j < J) {
            poch *= (s + cplx(2.0 * j - 1.0)) * (s + cplx(2.0 * j));
            npow *= invN2;
        }
    }
    // remainder bound
    poch *= (s + cplx(2.0 * J - 1.0)) * (s + cplx(2.0 * J));
    poch *= (s + cplx(2.0 * J + 1.0));
    const double sigma = s.real();
    *rem = std::abs(bf[J]) * std::abs(poch) *
           std::pow(N, -sigma - 2.0 * J - 1.0) / (sigma + 2.0 * J + 1.0);
    return sum;
}

cplx zeta_em(cplx s, const EvalAccuracy& acc) {
    const double t = std::abs(s.imag());
    std::int64_t N = std::max<std::int64_t>(20, (std::int64_t)std::ceil(2.0 * t / kPi));
    for (;;) {
        if (N > acc.max_terms)
            throw accuracy_error("zeta: max_terms insufficient for requested tolerance");
        // pick the smallest J <= 12 whose certified remainder meets the target
        double rem = 0.0;
        cplx tail;
        int J = 4;
        for (;; ++J) {
            tail = em_tail(s, (double)N, J, &rem);
            if (rem <= 0.5 * acc.abs_tol || J >= 12) break;
        }
        if (rem > 0.5 * acc.abs_tol) {
            N *= 2;
            continue;
        }
        cplx sum = 0.0;
        const double sigma = s.real();
        const double ti = s.imag();
        if (ti == 0.0) {
            double acc_r = 0.0;
            for (std::int64_t k = N - 1; k >= 1; --k)  // ascending magnitude
                acc_r += std::pow((double)k, -sigma);
            sum = acc_r;
        } else {
            double acc_re = 0.0, acc_im = 0.0;
            for (std::int64_t k = N - 1; k >= 1; --k) {
                const double lk = std::log((double)k);
                const double mag = std::exp(-sigma * lk);
                const double ph = ti * lk;
                acc_re += mag * std::cos(ph);
                acc_im -= mag * std::sin(ph);
            }
            sum = cplx(acc_re, acc_im);
        }
        const cplx Npow = std::pow((double)N, -s);
        sum += 0.5 * Npow;                         // boundary term
        sum += Npow * ((double)N / (s - 1.0));     // N^{1-s}/(s-1)
        sum += tail;
        return sum;
    }
}

} // namespace

double zeta_real(double sigma, const EvalAccuracy& acc) {
    if (!(sigma > 1.0))
        throw std::domain_error("zeta_real: requires sigma > 1");
    return zeta_em(cplx(sigma, 0.0), acc).real();
}

cplx zeta_complex(cplx s, const EvalAccuracy& acc) {
    if (s == cplx(1.0, 0.0))
        throw std::domain_error("zeta_complex: pole at s = 1");
    if (std::abs(s.imag()) > 1e7)
        throw std::range_error("zeta_complex: |Im s| above validity window 1e7");
    return zeta_em(s, acc);
}

double im_log_gamma(cplx z) {
    if (!(z.real() > 0.0))
        throw std::domain_error("im_log_gamma: requires Re z > 0");
    if (z.imag() == 0.0) return 0.0;
    // shift right until Stirling with 6 Bernoulli terms is below 1e-13
    double shift_arg = 0.0;
    while (std::abs(z) < 10.0) {
        shift_arg += std::arg(z);  // principal, in (-pi/2, pi/2) since Re z > 0
        z += 1.0;
    }
    const cplx lz = std::log(z);
    cplx st = (z - 0.5) * lz - z;
    const cplx zinv2 = 1.0 / (z * z);
    cplx zp = 1.0 / z;
    for (int j = 1; j <= 6; ++j) {
        st += kBernoulli[j - 1] / (2.0 * j * (2.0 * j - 1.0)) * zp;
        zp *= zinv2;
    }
    return st.imag() - shift_arg;
}

double g_of_T(double T) {
    if (!(T >= 5.0 / 7.0))
        throw std::domain_error("g_of_T: requires T >= 5/7");
    return 2.0 / kPi * im_log_gamma(cplx(0.25, 0.5 * T)) -
           T / kPi * std::log(T / (2.0 * std::numbers::e)) + 0.25;
}

double rs_theta(double t) {
    if (!(t > 0.0))
        throw std::domain_error("rs_theta: requires t > 0");
    return im_log_gamma(cplx(0.25, 0.5 * t)) - 0.5 * t * std::log(kPi);
}

// ---------------------------------------------------------------------------
// Riemann-Siegel tail.  With z = 2p - 1 the kernel becomes
//   Psi(p) = -cos(pi z^2 / 2 - 5 pi / 8) / cos(pi z),
// an entire function; its Taylor coefficients about z = 0 come from one
// power-series division and stay valid across p = 1/4, 3/4 where the naive
// quotient degenerates.
// ---------------------------------------------------------------------------

namespace {

constexpr int kPsiDeg = 72;

const std::array<double, kPsiDeg + 1>& psi_series() {
    static const std::array<double, kPsiDeg + 1> coef = [] {
        constexpr int D = kPsiDeg;
        std::array<long double, D + 8> num{}, den{}, qn{}, qd{};
        std::array<double, D + 1> c{};
        const long double cb = std::cos(5.0L * kPi / 8.0L);
        const long double sb = std::sin(5.0L * kPi / 8.0L);
        // numerator: -[cos(5pi/8) cos(pi z^2/2) + sin(5pi/8) sin(pi z^2/2)]
        long double term = 1.0L;  // (pi/2)^(2k) / (2k)!
        for (int k = 0; 4 * k <= D; ++k) {
            const long double sgn = (k % 2 == 0) ? 1.0L : -1.0L;
            num[4 * k] += -cb * sgn * term;
            if (4 * k + 2 <= D)
                num[4 * k + 2] += -sb * sgn * term * ((long double)kPi / 2.0L) /
                                  (2.0L * k + 1.0L);
            term *= (long double)(kPi / 2.0) * (long double)(kPi / 2.0) /
                    ((2.0L * k + 1.0L) * (2.0L * k + 2.0L));
        }
        // denominator: cos(pi z)
        term = 1.0L;
        for (int k = 0; 2 * k <= D; ++k) {
            den[2 * k] = ((k % 2 == 0) ? 1.0L : -1.0L) * term;
            term *= (long double)kPi * (long double)kPi /
                    ((2.0L * k + 1.0L) * (2.0L * k + 2.0L));
        }
        // Both numerator and denominator vanish at z = +-1/2.  Deflate the
        // factor (1 - 4 z^2) from each by the backward recurrence
        // q[n-2] = (q[n] - a[n]) / 4, which damps roundoff, then divide by
        // the remaining zero-free factor (its nearest zeros sit at |z|=3/2,
        // so the forward division recurrence is stable).
        for (int n = D + 4; n >= 2; --n) {
            qn[n - 2] = (qn[n] - num[n]) * 0.25L;
            qd[n - 2] = (qd[n] - den[n]) * 0.25L;
        }
        for (int n = 0; n <= D; ++n) {
            long double s = qn[n];
            for (int k = 1; k <= n; ++k) s -= qd[k] * (long double)c[n - k];
            c[n] = (double)(s / qd[0]);
        }
        return c;
    }();
    return coef;
}

double psi_deriv_z(double z, int k) {
    const auto& c = psi_series();
    double s = 0.0;  // Horner with term-wise differentiated coefficients
    for (int n = kPsiDeg; n >= k; --n) {
        double f = c[n];
        for (int i = 0; i < k; ++i) f *= (double)(n - i);
        s = s * z + f;
    }
    return s;
}

} // namespace

double rs_psi(double p) { return psi_deriv_z(2.0 * p - 1.0, 0); }

double rs_psi_deriv(double p, int k) {
    if (k < 0 || k > 12)
        throw std::domain_error("rs_psi_deriv: order out of range");
    return std::ldexp(psi_deriv_z(2.0 * p - 1.0, k), k);  // d/dp = 2 d/dz
}

double rs_Z(double t) {
    if (!(t >= 10.0))
        throw std::range_error("rs_Z: requires t >= 10");
    if (t < 3000.0) {
        // rotated zeta path; certified to ~1e-9
        EvalAccuracy acc{1e-10, 20'000'000};
        const cplx z = zeta_complex(cplx(0.5, t), acc);
        const double th = rs_theta(t);
        return (z * std::exp(cplx(0.0, th))).real();
    }
    // main sum + C0, C1, C2 corrections; error O(t^{-7/4})
    const double tau = std::sqrt(t / (2.0 * kPi));
    const std::int64_t m = (std::int64_t)std::floor(tau);
    const double p = tau - (double)m;
    const double th = rs_theta(t);
    double sum = 0.0;
    for (std::int64_t n = m; n >= 1; --n)
        sum += std::cos(th - t * std::log((double)n)) / std::sqrt((double)n);
    sum *= 2.0;

    const double pi2 = kPi * kPi;
    const double c0 = rs_psi(p);
    const double c1 = -rs_psi_deriv(p, 3) / (96.0 * pi2);
    const double c2 = rs_psi_deriv(p, 2) / (64.0 * pi2) +
                      rs_psi_deriv(p, 6) / (18432.0 * pi2 * pi2);
    const double corr = (c0 + (c1 + c2 / tau) / tau) / std::sqrt(tau);
    return sum + ((m % 2 == 0) ? -corr : corr);
}

} // namespace zetabounds::specfun
