#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

// Special-function kernel: real/complex zeta via Euler-Maclaurin with a
// certified tail bound, Im log Gamma via recurrence + Stirling, the
// Riemann-Siegel theta and Z functions, and the Stirling remainder g(T).

namespace zetabounds::specfun {

using cplx = std::complex<double>;

struct EvalAccuracy {
    double abs_tol = 1e-12;
    std::int64_t max_terms = 20'000'000;
};

struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// zeta(sigma) for sigma > 1, absolute error <= acc.abs_tol.
double zeta_real(double sigma, const EvalAccuracy& acc = {});

// zeta(s) for s != 1, |Im s| <= 1e7, error <= acc.abs_tol per component.
cplx zeta_complex(cplx s, const EvalAccuracy& acc = {});

// Im log Gamma(z) for Re z > 0, principal branch, abs error <= 1e-12.
double im_log_gamma(cplx z);

// g(T) = (2/pi) Im log Gamma(1/4 + iT/2) - (T/pi) log(T/2e) + 1/4, T >= 5/7.
// Satisfies |g(T)| <= 1/(25 T).
double g_of_T(double T);

// Riemann-Siegel theta, t > 0.
double rs_theta(double t);

// Hardy's Z(t), t >= 10.  |Z(t)| = |zeta(1/2+it)| and the zeros of Z are
// the ordinates of the critical-line zeros.
double rs_Z(double t);

// Riemann-Siegel phase kernel Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
// evaluated from its Taylor series (stable across the removable points), and
// its k-th derivative with respect to p (k <= 12).
double rs_psi(double p);
double rs_psi_deriv(double p, int k);

} // namespace zetabounds::specfun
