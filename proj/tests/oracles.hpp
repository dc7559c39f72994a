#pragma once

// Test-side oracles, kept independent of the library implementation paths:
// a long-double Euler-Maclaurin zeta with its own term policy, an
// accelerated alternating-series zeta for complex arguments, and
// Im log Gamma by quadrature of the digamma function.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracles {

using cplxl = std::complex<long double>;

inline constexpr long double kBern[] = {
    1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730,
    7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330,
    854513.0L / 138, -236364091.0L / 2730};

// zeta(sigma), sigma > 1, via Euler-Maclaurin at N=400, 8 corrections.
inline long double zeta_real(long double sigma) {
    const int N = 400;
    long double s = 0.0L;
    for (int k = N - 1; k >= 1; --k) s += std::pow((long double)k, -sigma);
    s += 0.5L * std::pow((long double)N, -sigma);
    s += std::pow((long double)N, 1.0L - sigma) / (sigma - 1.0L);
    long double poch = sigma, npow = std::pow((long double)N, -sigma) / N;
    long double fact = 2.0L;
    for (int j = 1; j <= 8; ++j) {
        s += kBern[j - 1] / fact * poch * npow;
        poch *= (sigma + 2 * j - 1) * (sigma + 2 * j);
        npow /= (long double)N * N;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return s;
}

// zeta(s) via the eta function with Cohen-Rodriguez Villegas-Zagier
// acceleration; good to ~1e-15 for moderate |Im s|.
inline cplxl zeta_cplx(cplxl z, int n = 80) {
    long double d = std::pow(3.0L + std::sqrt(8.0L), (long double)n);
    d = (d + 1.0L / d) / 2.0L;
    long double b = -1.0L, c = -d;
    cplxl s = 0.0L;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * std::exp(-z * std::log((long double)(k + 1)));
        b *= (long double)(k + n) * (k - n) /
             (((long double)k + 0.5L) * (k + 1));
    }
    const cplxl eta = s / d;
    return eta / (1.0L - std::exp((1.0L - z) * std::log(2.0L)));
}

// digamma for Re z > 0 (shift + asymptotic series)
inline cplxl digamma(cplxl z) {
    cplxl acc = 0.0L;
    while (std::abs(z) < 16.0L) {
        acc -= 1.0L / z;
        z += 1.0L;
    }
    cplxl s = std::log(z) - 0.5L / z;
    const cplxl z2 = 1.0L / (z * z);
    cplxl zp = z2;
    for (int j = 1; j <= 8; ++j) {
        s -= kBern[j - 1] / (2.0L * j) * zp;
        zp *= z2;
    }
    return s + acc;
}

// Im log Gamma(x+iy) = integral_0^y Re digamma(x+iu) du (adaptive Simpson)
inline long double im_log_gamma(long double x, long double y) {
    std::function<long double(long double)> f = [&](long double u) {
        return digamma(cplxl(x, u)).real();
    };
    std::function<long double(long double, long double, long double,
                              long double, long double, long double, int)>
        simp = [&](long double a, long double b, long double fa, long double fm,
                   long double fb, long double tol, int depth) -> long double {
        const long double m = 0.5L * (a + b);
        const long double lm = 0.5L * (a + m), rm = 0.5L * (m + b);
        const long double flm = f(lm), frm = f(rm);
        const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
        const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
        const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
        if (std::abs(left + right - whole) < 15.0L * tol || depth > 30)
            return left + right + (left + right - whole) / 15.0L;
        return simp(a, m, fa, flm, fm, tol / 2, depth + 1) +
               simp(m, b, fm, frm, fb, tol / 2, depth + 1);
    };
    if (y == 0.0L) return 0.0L;
    return simp(0.0L, y, f(0.0L), f(0.5L * y), f(y), 1e-14L, 0);
}

} // namespace oracles
