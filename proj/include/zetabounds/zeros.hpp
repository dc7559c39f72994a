#pragma once

#include "zetabounds/constants.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Zero-ordinate acquisition (scan + bisection of Z with a blockwise
// argument-principle completeness check) and exact N(T), S(T) evaluation.

namespace zetabounds::zeros {

enum class Source { computed, ingested };

struct ZeroList {
    std::vector<double> ordinates;  // strictly increasing, > 0
    Source source = Source::computed;
    double t_max_verified = 0.0;
};

struct completeness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct coverage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    long line;
    parse_error(long line_, const std::string& msg);
};

struct monotonicity_error : std::runtime_error {
    long index;
    explicit monotonicity_error(long index_);
};

struct ScanOptions {
    double block = 1000.0;   // nominal completeness-check spacing in t
    int threads = 0;          // 0 = hardware concurrency
    double bisect_tol = 1e-10;
};

// All critical-line zero ordinates on (0, t_max], 15 <= t_max <= 1e6.
ZeroList find_zeros(double t_max, const ScanOptions& opt = {});

// Plain-text format: one ascending ordinate per line, '#' comments allowed.
ZeroList ingest_zeros(const std::string& path);
void write_zeros(const std::string& path, const ZeroList& z);

long N_exact(double t, const ZeroList& z);
double S_exact(double t, const ZeroList& z);

// S(t) by continuous argument variation along 2 -> 2+it -> 1/2+it.
// Independent of any zero list; t must not be a zero ordinate.
double s_tracked(double t);

// |N(t) - (t/2pi) log(t/2pi e)| against the explicit counting bound,
// using the fixed small-T value below the primed-validity height.
bool bound_sandwich(double t, const constants::ConstantSet& cs, const ZeroList& z);

} // namespace zetabounds::zeros
