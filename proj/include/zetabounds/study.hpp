#pragma once

#include "zetabounds/zeros.hpp"

#include <vector>

// Deviation statistics of N(T) around its main term: the eps+/- functions,
// extreme-value scans, interval averages, and first occurrences of window
// clusters N(t+1) - N(t-1) = n.

namespace zetabounds::study {

enum class Sign { plus, minus };

struct StudyRecord {
    long n = 0;
    double t_n = 0;
    double eps_plus = 0;
    double eps_minus = 0;
};

struct ClusterRow {
    int n = 0;
    double t_first = 0;
};

// eps+/- at the n-th ordinate (1-based), with N(t_n) = n.
double eps_at(long n, const zeros::ZeroList& z, Sign s);

// Ordinates where eps+ > 0 or eps- < 0 (the rare exceptions).
std::vector<StudyRecord> scan_extremes(const zeros::ZeroList& z);

struct ExtremesSummary {
    double max_eps_plus = 0;
    long argmax_plus = 0;
    double min_eps_minus = 0;
    long argmin_minus = 0;
    // inf over [t_n, t_{n+1}) equals eps-(t_{n+1}) - 1; its minimum over n
    double min_eps_minus_inf = 0;
    long argmin_minus_inf = 0;
};
ExtremesSummary extremes_summary(const zeros::ZeroList& z);

// Equal-count chunks; per-chunk mean of N(t_n) - (t_n/2pi) log(t_n/2pi e).
std::vector<std::pair<long, double>> interval_averages(const zeros::ZeroList& z,
                                                       long chunks);

struct ClusterScan {
    std::vector<ClusterRow> rows;    // minimal t with window count n, n = 1..n_max
    double max_ratio = 0;            // max (N(t+1)-N(t-1)) / log t
    double max_ratio_t = 0;
    int max_ratio_n = 0;
};

// Window-count first occurrences; candidates are t = gamma_k - 1.  The ratio
// maximum is taken over candidates with t <= t_cap.
ClusterScan cluster_first(int n_max, const zeros::ZeroList& z,
                          double t_cap = 1e300);

// Two-sided square-root deviation bound checked at ordinates (both limits)
// and midpoints over the covered range.
bool deviation_band_check(const zeros::ZeroList& z);

} // namespace zetabounds::study
