// Command-line surface: constants, optimize, zeros, study, bound.
#include "zetabounds/config.hpp"
#include "zetabounds/constants.hpp"
#include "zetabounds/optimize.hpp"
#include "zetabounds/regions.hpp"
#include "zetabounds/study.hpp"
#include "zetabounds/zeros.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

using namespace zetabounds;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kValidation = 2, kComputation = 3 };

struct Output {
    std::string format = "text";  // text | tsv | json
    bool full_precision = false;

    std::string num(double v) const {
        char buf[40];
        std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.10g", v);
        return buf;
    }
};

struct CommonOpts {
    std::string profile = "row1";
    std::string config_path;
    double quad_tol = 1e-9;
    bool quad_tol_set = false;

    config::Settings settings() const {
        auto s = config::profile(profile);
        if (!config_path.empty()) s = config::load_file(config_path, s);
        if (quad_tol_set) s.quad_tol = quad_tol;
        return s;
    }
};

void add_common(CLI::App* cmd, CommonOpts* c, Output* o) {
    cmd->add_option("--profile", c->profile, "parameter profile (row1..row5)")
        ->check(CLI::IsMember(config::profile_names()));
    cmd->add_option("--config", c->config_path, "key = value config overlay");
    cmd->add_option("--quad-tol", c->quad_tol, "quadrature absolute tolerance")
        ->each([c](const std::string&) { c->quad_tol_set = true; });
    cmd->add_option("--format", o->format, "text, tsv or json")
        ->check(CLI::IsMember({"text", "tsv", "json"}));
    cmd->add_flag("--full-precision", o->full_precision, "print 17 significant digits");
}

int cmd_constants(const CommonOpts& com, const Output& out) {
    const auto s = com.settings();
    regions::require_valid(s.params);
    const auto ri = constants::integrate_regions(s.params, {s.quad_tol, 4000}, true);
    const auto cs = constants::assemble(s.params, ri);

    const std::pair<const char*, double> consts[] = {
        {"C1", cs.C1},     {"C2", cs.C2},         {"C2p", cs.C2p},
        {"C3", cs.C3},     {"C3p", cs.C3p},       {"C3tilde", cs.C3tilde},
        {"C3ptilde", cs.C3ptilde}};
    const std::pair<const char*, double> parts[] = {
        {"cbar1", ri.cbar1},   {"cbar2", ri.cbar2},   {"D3", ri.d3},
        {"kappa1", ri.kappa1}, {"kappa2", ri.kappa2}, {"kappa3", ri.kappa3},
        {"M1", ri.m1},         {"M2", ri.m2}};

    if (out.format == "json") {
        json j;
        j["params"] = {{"c", s.params.c}, {"r", s.params.r}, {"eta", s.params.eta},
                       {"n", s.params.n}, {"J1", s.params.J1}, {"J2", s.params.J2},
                       {"T0", s.params.T0}};
        for (const auto& [k, v] : parts) j["integrals"][k] = v;
        for (const auto& [k, v] : ri.per_region) j["integrals"]["F_" + k] = v;
        for (const auto& [k, v] : consts)
            j["constants"][k] = {{"raw", v}, {"rounded_up", constants::round_up5(v)}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    const char sep = '\t';
    std::cout << "name" << sep << "raw" << sep << "rounded_up\n";
    for (const auto& [k, v] : parts)
        std::cout << k << sep << out.num(v) << sep << "\n";
    for (const auto& [k, v] : ri.per_region)
        std::cout << "F_" << k << sep << out.num(v) << sep << "\n";
    for (const auto& [k, v] : consts) {
        char r[16];
        std::snprintf(r, sizeof r, "%.5f", constants::round_up5(v));
        std::cout << k << sep << out.num(v) << sep << r << "\n";
    }
    return kOk;
}

int cmd_optimize(const CommonOpts& com, const Output& out,
                 const std::vector<std::string>& minimize,
                 const std::vector<std::string>& weights, std::uint64_t seed,
                 long budget, int restarts, int threads,
                 std::optional<double> fix_c, std::optional<double> fix_r,
                 std::optional<double> fix_eta) {
    const auto s = com.settings();
    optimize::Objective obj;
    auto set_weight = [&obj](const std::string& name, double w) {
        if (name == "C1") obj.weights.C1 = w;
        else if (name == "C2") obj.weights.C2 = w;
        else if (name == "C2p") obj.weights.C2p = w;
        else if (name == "C3") obj.weights.C3 = w;
        else if (name == "C3p") obj.weights.C3p = w;
        else throw config::config_error("unknown constant '" + name + "'");
    };
    for (const auto& m : minimize) set_weight(m, 1.0);
    for (const auto& w : weights) {
        const auto eq = w.find('=');
        if (eq == std::string::npos)
            throw config::config_error("--weight expects NAME=W");
        set_weight(w.substr(0, eq), std::stod(w.substr(eq + 1)));
    }
    obj.fixed_c = fix_c;
    obj.fixed_r = fix_r;
    obj.fixed_eta = fix_eta;

    optimize::OptimizeOptions opt;
    opt.restarts = restarts;
    opt.threads = threads;
    opt.quad_tol = s.quad_tol;
    const auto res = optimize::run(obj, s.params, seed, budget, opt);

    if (out.format == "json") {
        json j;
        j["params"] = {{"c", res.params.c}, {"r", res.params.r}, {"eta", res.params.eta}};
        j["objective_value"] = res.objective_value;
        j["evaluations"] = res.evaluations;
        j["constants"] = {{"C1", res.constants.C1}, {"C2", res.constants.C2},
                          {"C2p", res.constants.C2p}, {"C3", res.constants.C3},
                          {"C3p", res.constants.C3p}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "name\tvalue\n";
    std::cout << "c\t" << out.num(res.params.c) << "\n";
    std::cout << "r\t" << out.num(res.params.r) << "\n";
    std::cout << "eta\t" << out.num(res.params.eta) << "\n";
    std::cout << "objective\t" << out.num(res.objective_value) << "\n";
    std::cout << "evaluations\t" << res.evaluations << "\n";
    std::cout << "C1\t" << out.num(res.constants.C1) << "\n";
    std::cout << "C2\t" << out.num(res.constants.C2) << "\n";
    std::cout << "C2p\t" << out.num(res.constants.C2p) << "\n";
    std::cout << "C3\t" << out.num(res.constants.C3) << "\n";
    std::cout << "C3p\t" << out.num(res.constants.C3p) << "\n";
    return kOk;
}

int cmd_zeros_compute(const Output& out, double t_max, const std::string& cache,
                      int threads, double block) {
    zeros::ScanOptions opt;
    opt.threads = threads;
    opt.block = block;
    const auto z = zeros::find_zeros(t_max, opt);
    zeros::write_zeros(cache, z);
    if (out.format == "json") {
        json j;
        j["count"] = z.ordinates.size();
        j["t_max_verified"] = z.t_max_verified;
        j["file"] = cache;
        if (!z.ordinates.empty()) {
            j["first"] = z.ordinates.front();
            j["last"] = z.ordinates.back();
        }
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "count\t" << z.ordinates.size() << "\n";
    std::cout << "t_max_verified\t" << out.num(z.t_max_verified) << "\n";
    if (!z.ordinates.empty()) {
        std::cout << "first\t" << out.num(z.ordinates.front()) << "\n";
        std::cout << "last\t" << out.num(z.ordinates.back()) << "\n";
    }
    std::cout << "file\t" << cache << "\n";
    return kOk;
}

int cmd_zeros_ingest(const Output& out, const std::string& path,
                     const std::string& cache) {
    const auto z = zeros::ingest_zeros(path);
    if (!cache.empty()) zeros::write_zeros(cache, z);
    std::cout << "count\t" << z.ordinates.size() << "\n";
    if (!z.ordinates.empty()) {
        std::cout << "first\t" << out.num(z.ordinates.front()) << "\n";
        std::cout << "last\t" << out.num(z.ordinates.back()) << "\n";
    }
    return kOk;
}

int cmd_study_clusters(const Output& out, const std::string& zpath, int n_max,
                       double t_cap) {
    const auto z = zeros::ingest_zeros(zpath);
    const auto scan = study::cluster_first(n_max, z, t_cap);
    std::cout << "n\tt_first\n";
    for (const auto& row : scan.rows)
        std::cout << row.n << "\t" << out.num(row.t_first) << "\n";
    std::cout << "# max_ratio\t" << out.num(scan.max_ratio) << "\tat_t\t"
              << out.num(scan.max_ratio_t) << "\twindow\t" << scan.max_ratio_n
              << "\n";
    return kOk;
}

int cmd_study_extremes(const Output& out, const std::string& zpath) {
    const auto z = zeros::ingest_zeros(zpath);
    const auto exc = study::scan_extremes(z);
    std::cout << "n\tt_n\teps_plus\teps_minus\n";
    for (const auto& e : exc)
        std::cout << e.n << "\t" << out.num(e.t_n) << "\t" << out.num(e.eps_plus)
                  << "\t" << out.num(e.eps_minus) << "\n";
    if (exc.empty()) std::cout << "# no exceptions found\n";
    const auto sum = study::extremes_summary(z);
    std::cout << "# max_eps_plus\t" << out.num(sum.max_eps_plus) << "\tn\t"
              << sum.argmax_plus << "\n";
    std::cout << "# min_eps_minus\t" << out.num(sum.min_eps_minus) << "\tn\t"
              << sum.argmin_minus << "\n";
    std::cout << "# min_eps_minus_inf\t" << out.num(sum.min_eps_minus_inf)
              << "\tinterval_after_n\t" << sum.argmin_minus_inf << "\n";
    return kOk;
}

int cmd_study_averages(const Output& out, const std::string& zpath, long chunks) {
    const auto z = zeros::ingest_zeros(zpath);
    if (!z.ordinates.empty() && z.ordinates.front() <= 3.0)
        std::cerr << "notice: ordinates at t <= 3 are outside the log log domain "
                     "and are skipped\n";
    std::cout << "chunk\tmean_dev\n";
    for (const auto& [ci, mean] : study::interval_averages(z, chunks))
        std::cout << ci << "\t" << out.num(mean) << "\n";
    return kOk;
}

int cmd_study_theorem(const std::string& zpath) {
    const auto z = zeros::ingest_zeros(zpath);
    const bool ok = study::deviation_band_check(z);
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kComputation;
}

int cmd_bound_eval(const CommonOpts& com, const Output& out, double T,
                   const std::string& mode, bool dump, double from, double to,
                   int points) {
    const auto s = com.settings();
    const auto ri = constants::integrate_regions(s.params, {s.quad_tol, 4000}, false);
    const auto cs = constants::assemble(s.params, ri);
    const auto m = mode == "NT" ? constants::BoundMode::NT
                 : mode == "ST" ? constants::BoundMode::ST
                                : constants::BoundMode::SmallT;
    if (dump) {
        std::cout << "T\tbound\n";
        for (int i = 0; i < points; ++i) {
            const double t = from * std::pow(to / from, (double)i / (points - 1));
            std::cout << out.num(t) << "\t" << out.num(constants::eval_bound(t, cs, m))
                      << "\n";
        }
        return kOk;
    }
    std::cout << out.num(constants::eval_bound(T, cs, m)) << "\n";
    return kOk;
}

int cmd_bound_crossover(const Output& out, const std::vector<double>& b1,
                        const std::vector<double>& b2) {
    if (b1.size() != 3 || b2.size() != 3)
        throw config::config_error("--b1/--b2 expect three comma-separated values");
    const double T = constants::crossover({b1[0], b1[1], b1[2]}, {b2[0], b2[1], b2[2]});
    std::cout << "T\t" << out.num(T) << "\nlogT\t" << out.num(std::log(T)) << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit zero-counting bounds for the Riemann zeta function"};
    app.require_subcommand(1);
    Output out;

    // constants
    CommonOpts com_c;
    auto* c_const = app.add_subcommand("constants", "region integrals and the constant set");
    add_common(c_const, &com_c, &out);

    // optimize
    CommonOpts com_o;
    std::vector<std::string> minimize, weights;
    std::uint64_t seed = 7;
    long budget = 20000;
    int restarts = 12, threads = 0;
    std::optional<double> fix_c, fix_r, fix_eta;
    auto* c_opt = app.add_subcommand("optimize", "search (c, r, eta) minimizing weighted constants");
    add_common(c_opt, &com_o, &out);
    c_opt->add_option("--minimize", minimize, "constant name to minimize (repeatable)");
    c_opt->add_option("--weight", weights, "NAME=W weighted objective term (repeatable)");
    c_opt->add_option("--seed", seed, "deterministic seed");
    c_opt->add_option("--budget", budget, "total objective evaluations");
    c_opt->add_option("--restarts", restarts, "restart count (>= 8)");
    c_opt->add_option("--threads", threads, "worker cap (0 = auto)");
    double fc = 0, fr = 0, fe = 0;
    c_opt->add_option("--fix-c", fc, "hold c fixed")->each([&](const std::string&) { fix_c = fc; });
    c_opt->add_option("--fix-r", fr, "hold r fixed")->each([&](const std::string&) { fix_r = fr; });
    c_opt->add_option("--fix-eta", fe, "hold eta fixed")->each([&](const std::string&) { fix_eta = fe; });

    // zeros
    auto* c_zeros = app.add_subcommand("zeros", "zero-ordinate acquisition");
    c_zeros->require_subcommand(1);
    double t_max = 2500;
    std::string cache = "zeros.txt";
    int zthreads = 0;
    double block = 1000;
    auto* c_zc = c_zeros->add_subcommand("compute", "scan and bisect Z(t)");
    c_zc->add_option("--t-max", t_max, "upper height")->required();
    c_zc->add_option("--out", cache, "cache file (zero-list format)");
    c_zc->add_option("--threads", zthreads, "worker cap (0 = auto)");
    c_zc->add_option("--block", block, "completeness-check spacing");
    c_zc->add_option("--format", out.format)->check(CLI::IsMember({"text", "tsv", "json"}));
    c_zc->add_flag("--full-precision", out.full_precision);
    std::string ingest_path, ingest_out;
    auto* c_zi = c_zeros->add_subcommand("ingest", "validate and cache a zero file");
    c_zi->add_option("path", ingest_path, "input file")->required();
    c_zi->add_option("--out", ingest_out, "rewrite to this cache file");
    c_zi->add_flag("--full-precision", out.full_precision);

    // study
    auto* c_study = app.add_subcommand("study", "deviation statistics of N(T)");
    c_study->require_subcommand(1);
    std::string zpath = "zeros.txt";
    int n_max = 4;
    double t_cap = 1e300;
    long chunks = 1;
    auto* c_sc = c_study->add_subcommand("clusters", "first window-count occurrences");
    c_sc->add_option("--n-max", n_max);
    c_sc->add_option("--zeros", zpath, "zero-list file");
    c_sc->add_option("--t-cap", t_cap, "ratio maximum restricted to t <= cap");
    c_sc->add_flag("--full-precision", out.full_precision);
    auto* c_se = c_study->add_subcommand("extremes", "eps+/- exceptions");
    c_se->add_option("--zeros", zpath);
    c_se->add_flag("--full-precision", out.full_precision);
    auto* c_sa = c_study->add_subcommand("averages", "per-chunk means of N - main term");
    c_sa->add_option("--chunks", chunks);
    c_sa->add_option("--zeros", zpath);
    c_sa->add_flag("--full-precision", out.full_precision);
    auto* c_st = c_study->add_subcommand("theorem-check", "two-sided deviation bound");
    c_st->add_option("--zeros", zpath);

    // bound
    auto* c_bound = app.add_subcommand("bound", "evaluate or compare counting bounds");
    c_bound->require_subcommand(1);
    CommonOpts com_b;
    double T = 1e12, from = 10, to = 1e10;
    int points = 50;
    bool dump = false;
    std::string mode = "NT";
    auto* c_be = c_bound->add_subcommand("eval", "bound value at T");
    add_common(c_be, &com_b, &out);
    c_be->add_option("--T", T);
    c_be->add_option("--mode", mode)->check(CLI::IsMember({"NT", "ST", "small_T"}));
    c_be->add_flag("--dump-curve", dump, "emit (T, bound) pairs");
    c_be->add_option("--from", from);
    c_be->add_option("--to", to);
    c_be->add_option("--points", points);
    std::vector<double> b1, b2;
    auto* c_bx = c_bound->add_subcommand("crossover", "crossing T of two bounds");
    c_bx->add_option("--b1", b1, "c1,c2,c3")->delimiter(',')->required();
    c_bx->add_option("--b2", b2, "c1,c2,c3")->delimiter(',')->required();
    c_bx->add_flag("--full-precision", out.full_precision);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }

    try {
        if (*c_const) return cmd_constants(com_c, out);
        if (*c_opt)
            return cmd_optimize(com_o, out, minimize, weights, seed, budget,
                                restarts, threads, fix_c, fix_r, fix_eta);
        if (*c_zc) return cmd_zeros_compute(out, t_max, cache, zthreads, block);
        if (*c_zi) return cmd_zeros_ingest(out, ingest_path, ingest_out);
        if (*c_sc) return cmd_study_clusters(out, zpath, n_max, t_cap);
        if (*c_se) return cmd_study_extremes(out, zpath);
        if (*c_sa) return cmd_study_averages(out, zpath, chunks);
        if (*c_st) return cmd_study_theorem(zpath);
        if (*c_be) return cmd_bound_eval(com_b, out, T, mode, dump, from, to, points);
        if (*c_bx) return cmd_bound_crossover(out, b1, b2);
    } catch (const regions::constraint_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const config::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const zeros::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const zeros::monotonicity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    }
    return kOk;
}
