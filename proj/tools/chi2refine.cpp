// chi2refine: command-line front end for the refined chi-square survival
// approximations, the exact oracle, and the analysis routines.
//
// Subcommands: survival, scan, constants, median, detect, llt, metrics,
// moments. Each emits a table (default), RFC-4180 CSV, or JSON; numeric
// fields carry 12 significant digits. Exit codes: 0 success, 1 usage error,
// 2 domain error, 3 convergence error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "chi2refine/analysis.hpp"
#include "chi2refine/approx.hpp"
#include "chi2refine/chisq.hpp"
#include "chi2refine/errors.hpp"
#include "chi2refine/gridspec.hpp"
#include "chi2refine/llt.hpp"
#include "chi2refine/special.hpp"

namespace {

using chi2refine::format_sig;
using chi2refine::GridSpacing;
using chi2refine::parse_grid;
using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kGridCap = 1'000'000;  // hard cap on evaluation points

struct Output {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    ordered_json metadata = ordered_json::object();
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void emit(const Output& out, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        for (std::size_t i = 0; i < out.columns.size(); ++i)
            os << (i ? "," : "") << csv_field(out.columns[i]);
        os << "\n";
        for (const auto& row : out.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_field(row[i]);
            os << "\n";
        }
        return;
    }
    if (format == "json") {
        ordered_json j;
        j["command"] = out.command;
        j["metadata"] = out.metadata;
        j["columns"] = out.columns;
        j["rows"] = ordered_json::array();
        for (const auto& row : out.rows) j["rows"].push_back(row);
        os << j.dump(2) << "\n";
        return;
    }
    // table
    std::vector<std::size_t> width(out.columns.size());
    for (std::size_t i = 0; i < out.columns.size(); ++i)
        width[i] = out.columns[i].size();
    for (const auto& row : out.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << "  ";
            os << std::string(width[i] - cells[i].size(), ' ') << cells[i];
        }
        os << "\n";
    };
    line(out.columns);
    for (const auto& row : out.rows) line(row);
}

std::string fmt(double v) { return format_sig(v, 12); }

unsigned thread_count() {
    if (const char* env = std::getenv("CHI2REFINE_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1 && n <= 1024)
            return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// index-striped parallel map; results land in-order, so output is identical
// for any thread count
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const unsigned threads =
        static_cast<unsigned>(std::min<std::size_t>(thread_count(), n ? n : 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (std::size_t i = t; i < n; i += threads) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

void check_cap(std::size_t points) {
    if (points > kGridCap)
        throw std::invalid_argument(
            "grid expands to " + std::to_string(points) +
            " evaluation points; the cap is 1000000");
}

void warn_validity(const std::vector<double>& rs, const std::vector<double>& ls) {
    for (double r : rs)
        for (double l : ls)
            if (l > std::sqrt(r)) {
                std::cerr << "warning: lambda > sqrt(r) for (r=" << r
                          << ", lambda=" << l
                          << "); the refined approximations degrade there\n";
                return;
            }
}

// fixed-algorithm sampler so seeded runs are bit-reproducible
class SeededNormal {
public:
    explicit SeededNormal(std::uint64_t seed) : state_(seed) {}
    double next() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925287 * u2;
        spare_ = radius * std::sin(angle);
        have_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_ = false;
};

struct CommonOpts {
    std::string format = "table";
    std::string out_path;
    double rel_tol = 1e-14;
    long max_terms = 10000;

    chi2refine::SeriesControl ctrl() const { return {rel_tol, max_terms}; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write output to a file");
        cmd->add_option("--rel-tol", rel_tol,
                        "series truncation tolerance, (0, 1e-6)")
            ->capture_default_str();
        cmd->add_option("--max-terms", max_terms, "series term cap, >= 100")
            ->capture_default_str();
    }
};

void deliver(const Output& out, const CommonOpts& common) {
    if (!common.out_path.empty()) {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file)
            throw std::invalid_argument("cannot open output file: " +
                                        common.out_path);
        emit(out, common.format, file);
    } else {
        emit(out, common.format, std::cout);
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace chi2refine;

    CLI::App app{
        "chi2refine: refined normal approximations for the chi-square "
        "survival function, an exact oracle, and analysis tools"};
    app.require_subcommand(1);

    std::function<void()> runner;

    // ---- survival -----------------------------------------------------
    auto* survival_cmd = app.add_subcommand(
        "survival", "exact vs approximate survival over a threshold grid");
    {
        static CommonOpts common;
        static std::string r_spec, lambda_spec, a_spec, delta_spec;
        common.attach(survival_cmd);
        survival_cmd->add_option("--r", r_spec, "degrees of freedom")->required();
        survival_cmd->add_option("--lambda", lambda_spec, "noncentrality");
        auto* a_opt =
            survival_cmd->add_option("--a", a_spec, "threshold grid on the x scale: number or lo:hi:steps[:log|:lin]");
        auto* d_opt = survival_cmd->add_option("--delta", delta_spec,
                                               "threshold grid on the delta scale: number or lo:hi:steps[:log|:lin]");
        a_opt->excludes(d_opt);
        survival_cmd->callback([&, a_opt]() {
            runner = [&, a_opt]() {
                const double r = parse_grid(r_spec).at(0);
                const double lambda =
                    lambda_spec.empty() ? 0.0 : parse_grid(lambda_spec).at(0);
                const Chi2Params p(r, lambda);
                std::vector<double> as;
                if (a_opt->count()) {
                    as = parse_grid(a_spec);
                } else if (!delta_spec.empty()) {
                    for (double d : parse_grid(delta_spec))
                        as.push_back(x_of(p, d));
                } else {
                    throw std::invalid_argument(
                        "survival: one of --a or --delta is required");
                }
                check_cap(as.size());
                warn_validity({r}, {lambda});

                Output out;
                out.command = "survival";
                out.metadata = {{"r", r}, {"lambda", lambda}};
                out.columns = {"a",        "delta",    "exact",    "approx0",
                               "approx1",  "approx2",  "approx3",  "abs_err0",
                               "abs_err1", "abs_err2", "abs_err3"};
                out.rows.resize(as.size());
                const SeriesControl ctrl = common.ctrl();
                parallel_for(as.size(), [&](std::size_t i) {
                    const double a = as[i];
                    const double exact = survival(p, a, ctrl);
                    std::vector<std::string> row = {fmt(a), fmt(delta_of(p, a)),
                                                    fmt(exact)};
                    double approx[4];
                    for (int k = 0; k < 4; ++k)
                        approx[k] =
                            survival_approx(p, a, static_cast<ApproxOrder>(k));
                    for (int k = 0; k < 4; ++k) row.push_back(fmt(approx[k]));
                    for (int k = 0; k < 4; ++k)
                        row.push_back(fmt(std::fabs(exact - approx[k])));
                    out.rows[i] = std::move(row);
                });
                deliver(out, common);
            };
        });
    }

    // ---- scan ----------------------------------------------------------
    auto* scan_cmd = app.add_subcommand(
        "scan",
        "maximal |exact - approx| over thresholds, per (r, lambda, order)");
    {
        static CommonOpts common;
        static std::string r_spec, lambda_spec;
        static int order = -1;
        common.attach(scan_cmd);
        scan_cmd->add_option("--r", r_spec, "degrees-of-freedom grid: number or lo:hi:steps[:log|:lin], log default")->required();
        scan_cmd->add_option("--lambda", lambda_spec, "noncentrality grid: number or lo:hi:steps[:log|:lin]");
        scan_cmd->add_option("--order", order, "approximation order (default: all)")
            ->check(CLI::Range(0, 3));
        scan_cmd->callback([&]() {
            runner = [&]() {
                const std::vector<double> rs =
                    parse_grid(r_spec, GridSpacing::log);
                const std::vector<double> ls =
                    lambda_spec.empty() ? std::vector<double>{0.0}
                                        : parse_grid(lambda_spec);
                std::vector<int> orders;
                if (order < 0)
                    orders = {0, 1, 2, 3};
                else
                    orders = {order};
                check_cap(rs.size() * ls.size() * orders.size() * 4001);
                warn_validity(rs, ls);

                Output out;
                out.command = "scan";
                out.metadata = {{"grid_lo_delta", -8.0},
                                {"grid_hi_delta", 8.0},
                                {"grid_points", 4001}};
                out.columns = {"r",         "lambda",       "order",
                               "max_error", "argmax_delta", "scaled_error"};
                const std::size_t combos = rs.size() * ls.size();
                std::vector<std::vector<std::vector<std::string>>> chunks(combos);
                const SeriesControl ctrl = common.ctrl();
                parallel_for(combos, [&](std::size_t i) {
                    const double r = rs[i / ls.size()];
                    const double l = ls[i % ls.size()];
                    const Chi2Params p(r, l);
                    std::array<ErrorScan, 4> all = {
                        ErrorScan{p, ApproxOrder::order0, 0, 0, 0, {}},
                        ErrorScan{p, ApproxOrder::order1, 0, 0, 0, {}},
                        ErrorScan{p, ApproxOrder::order2, 0, 0, 0, {}},
                        ErrorScan{p, ApproxOrder::order3, 0, 0, 0, {}}};
                    if (orders.size() == 4) {
                        all = scan_all_orders(p, {}, ctrl);
                    } else {
                        all[orders[0]] = scan_max_error(
                            p, static_cast<ApproxOrder>(orders[0]), {}, ctrl);
                    }
                    for (int k : orders) {
                        const ErrorScan& s = all[static_cast<std::size_t>(k)];
                        const double scaled =
                            std::pow(r, 0.5 * (k + 1)) * s.max_error;
                        chunks[i].push_back({fmt(r), fmt(l), std::to_string(k),
                                             fmt(s.max_error),
                                             fmt(s.argmax_delta), fmt(scaled)});
                    }
                });
                for (auto& chunk : chunks)
                    for (auto& row : chunk) out.rows.push_back(std::move(row));
                deliver(out, common);
            };
        });
    }

    // ---- constants -------------------------------------------------------
    auto* constants_cmd = app.add_subcommand(
        "constants",
        "asymptotic error constants; with --r, the scaled-error recovery");
    {
        static CommonOpts common;
        static std::string r_spec, lambda_spec;
        static int order = 0;
        common.attach(constants_cmd);
        constants_cmd->add_option("--order", order, "order in {0,1,2}")
            ->required()
            ->check(CLI::Range(0, 2));
        constants_cmd->add_option("--lambda", lambda_spec, "noncentrality");
        constants_cmd->add_option("--r", r_spec,
                                  "optional r grid for scaled-error recovery (lo:hi:steps[:log|:lin])");
        constants_cmd->callback([&]() {
            runner = [&]() {
                const double lambda =
                    lambda_spec.empty() ? 0.0 : parse_grid(lambda_spec).at(0);
                Output out;
                out.command = "constants";
                out.metadata = {{"order", order}, {"lambda", lambda}};
                if (r_spec.empty()) {
                    out.columns = {"order", "lambda", "m_constant"};
                    out.rows.push_back({std::to_string(order), fmt(lambda),
                                        fmt(m_constant(order, lambda))});
                } else {
                    const std::vector<double> rs =
                    parse_grid(r_spec, GridSpacing::log);
                    check_cap(rs.size() * 4001);
                    out.columns = {"order", "lambda", "r", "scaled_error",
                                   "m_constant"};
                    const double m = m_constant(order, lambda);
                    out.rows.resize(rs.size());
                    const SeriesControl ctrl = common.ctrl();
                    parallel_for(rs.size(), [&](std::size_t i) {
                        const auto rec =
                            constant_recovery(order, lambda, {rs[i]}, ctrl);
                        out.rows[i] = {std::to_string(order), fmt(lambda),
                                       fmt(rs[i]), fmt(rec.at(0).second), fmt(m)};
                    });
                }
                deliver(out, common);
            };
        });
    }

    // ---- median ---------------------------------------------------------
    auto* median_cmd = app.add_subcommand(
        "median", "exact median against the r + lambda - 2/3 asymptote");
    {
        static CommonOpts common;
        static std::string r_spec, lambda_spec;
        common.attach(median_cmd);
        median_cmd->add_option("--r", r_spec, "degrees-of-freedom grid: number or lo:hi:steps[:log|:lin], log default")
            ->required();
        median_cmd->add_option("--lambda", lambda_spec, "noncentrality grid: number or lo:hi:steps[:log|:lin]");
        median_cmd->callback([&]() {
            runner = [&]() {
                const std::vector<double> rs =
                    parse_grid(r_spec, GridSpacing::log);
                const std::vector<double> ls =
                    lambda_spec.empty() ? std::vector<double>{0.0}
                                        : parse_grid(lambda_spec);
                check_cap(rs.size() * ls.size());
                Output out;
                out.command = "median";
                out.columns = {"r", "lambda", "exact_median",
                               "asymptotic_median", "residual"};
                out.rows.resize(rs.size() * ls.size());
                const SeriesControl ctrl = common.ctrl();
                parallel_for(out.rows.size(), [&](std::size_t i) {
                    const double r = rs[i / ls.size()];
                    const double l = ls[i % ls.size()];
                    const MedianStudy m = median_study(Chi2Params(r, l), ctrl);
                    out.rows[i] = {fmt(r), fmt(l), fmt(m.exact_median),
                                   fmt(m.asymptotic_median), fmt(m.residual)};
                });
                deliver(out, common);
            };
        });
    }

    // ---- detect ----------------------------------------------------------
    auto* detect_cmd = app.add_subcommand(
        "detect", "smallest r whose maximal error meets a target");
    {
        static CommonOpts common;
        static std::string lambda_spec, mode = "leading";
        static double target = 0.0;
        static int order = 1;
        common.attach(detect_cmd);
        detect_cmd->add_option("--target", target, "target maximal error")
            ->required();
        detect_cmd->add_option("--order", order, "approximation order")
            ->required()
            ->check(CLI::Range(0, 3));
        detect_cmd->add_option("--mode", mode, "leading | scan")
            ->check(CLI::IsMember({"leading", "scan"}))
            ->capture_default_str();
        detect_cmd->add_option("--lambda", lambda_spec, "noncentrality");
        detect_cmd->callback([&]() {
            runner = [&]() {
                const double lambda =
                    lambda_spec.empty() ? 0.0 : parse_grid(lambda_spec).at(0);
                const DetectMode m = mode == "leading"
                                         ? DetectMode::leading_bound
                                         : DetectMode::exact_scan;
                const double r =
                    min_r_for_error(target, lambda, approx_order_from_int(order),
                                    m, common.ctrl());
                Output out;
                out.command = "detect";
                out.metadata = {{"mode", mode}};
                out.columns = {"target", "lambda", "order", "mode", "r"};
                out.rows.push_back({fmt(target), fmt(lambda),
                                    std::to_string(order), mode, fmt(r)});
                deliver(out, common);
            };
        });
    }

    // ---- llt --------------------------------------------------------------
    auto* llt_cmd = app.add_subcommand(
        "llt", "local density-ratio expansion against the exact log ratio");
    {
        static CommonOpts common;
        static std::string r_spec, lambda_spec, a_spec, delta_spec;
        common.attach(llt_cmd);
        llt_cmd->add_option("--r", r_spec, "degrees of freedom")->required();
        llt_cmd->add_option("--lambda", lambda_spec, "noncentrality");
        auto* a_opt = llt_cmd->add_option("--a", a_spec, "x grid");
        auto* d_opt = llt_cmd->add_option("--delta", delta_spec, "delta grid");
        a_opt->excludes(d_opt);
        llt_cmd->callback([&, a_opt]() {
            runner = [&, a_opt]() {
                const double r = parse_grid(r_spec).at(0);
                const double lambda =
                    lambda_spec.empty() ? 0.0 : parse_grid(lambda_spec).at(0);
                const Chi2Params p(r, lambda);
                std::vector<double> xs;
                if (a_opt->count()) {
                    xs = parse_grid(a_spec);
                } else if (!delta_spec.empty()) {
                    for (double d : parse_grid(delta_spec))
                        xs.push_back(x_of(p, d));
                } else {
                    throw std::invalid_argument(
                        "llt: one of --a or --delta is required");
                }
                check_cap(xs.size());
                Output out;
                out.command = "llt";
                out.metadata = {{"r", r}, {"lambda", lambda}};
                out.columns = {"r",     "lambda",          "x",
                               "delta", "exact_log_ratio", "log_expansion",
                               "ratio_expansion", "abs_residual"};
                out.rows.resize(xs.size());
                const SeriesControl ctrl = common.ctrl();
                parallel_for(xs.size(), [&](std::size_t i) {
                    const double x = xs[i];
                    const double exact = exact_log_density_ratio(p, x, ctrl);
                    const double expansion = log_ratio_expansion(p, x);
                    out.rows[i] = {fmt(r),
                                   fmt(lambda),
                                   fmt(x),
                                   fmt(delta_of(p, x)),
                                   fmt(exact),
                                   fmt(expansion),
                                   fmt(ratio_expansion(p, x)),
                                   fmt(std::fabs(exact - expansion))};
                });
                deliver(out, common);
            };
        });
    }

    // ---- metrics ----------------------------------------------------------
    auto* metrics_cmd = app.add_subcommand(
        "metrics",
        "Kolmogorov, total-variation and Hellinger distances to the "
        "moment-matched normal law");
    {
        static CommonOpts common;
        static std::string r_spec, lambda_spec;
        common.attach(metrics_cmd);
        metrics_cmd->add_option("--r", r_spec, "degrees-of-freedom grid: number or lo:hi:steps[:log|:lin], log default")
            ->required();
        metrics_cmd->add_option("--lambda", lambda_spec, "noncentrality grid: number or lo:hi:steps[:log|:lin]");
        metrics_cmd->callback([&]() {
            runner = [&]() {
                const std::vector<double> rs =
                    parse_grid(r_spec, GridSpacing::log);
                const std::vector<double> ls =
                    lambda_spec.empty() ? std::vector<double>{0.0}
                                        : parse_grid(lambda_spec);
                check_cap(rs.size() * ls.size());
                Output out;
                out.command = "metrics";
                out.columns = {"r", "lambda", "kolmogorov", "total_variation",
                               "hellinger"};
                out.rows.resize(rs.size() * ls.size());
                const SeriesControl ctrl = common.ctrl();
                parallel_for(out.rows.size(), [&](std::size_t i) {
                    const double r = rs[i / ls.size()];
                    const double l = ls[i % ls.size()];
                    const MetricEstimates m =
                        metric_estimates(Chi2Params(r, l), ctrl);
                    out.rows[i] = {fmt(r), fmt(l), fmt(m.kolmogorov),
                                   fmt(m.total_variation), fmt(m.hellinger)};
                });
                deliver(out, common);
            };
        });
    }

    // ---- moments ------------------------------------------------------------
    auto* moments_cmd = app.add_subcommand(
        "moments", "closed-form central moments, optionally Monte Carlo checked");
    {
        static CommonOpts common;
        static std::string r_spec, lambda_spec;
        static std::uint64_t seed = 0;
        static long samples = 1'000'000;
        common.attach(moments_cmd);
        moments_cmd->add_option("--r", r_spec, "degrees of freedom")->required();
        moments_cmd->add_option("--lambda", lambda_spec, "noncentrality");
        auto* seed_opt = moments_cmd->add_option(
            "--seed", seed, "enable the Monte Carlo check with this seed");
        moments_cmd->add_option("--samples", samples, "Monte Carlo sample count")
            ->check(CLI::Range(10000L, 100'000'000L))
            ->capture_default_str();
        moments_cmd->callback([&, seed_opt]() {
            runner = [&, seed_opt]() {
                const double r = parse_grid(r_spec).at(0);
                const double lambda =
                    lambda_spec.empty() ? 0.0 : parse_grid(lambda_spec).at(0);
                const Chi2Params p(r, lambda);
                const bool mc = seed_opt->count() > 0;

                Output out;
                out.command = "moments";
                out.metadata = {{"r", r}, {"lambda", lambda}};
                if (mc) {
                    out.metadata["seed"] = seed;
                    out.metadata["samples"] = samples;
                    if (r != std::floor(r) || r < 1.0)
                        throw std::domain_error(
                            "moments --seed: the Monte Carlo check needs "
                            "integer r >= 1");
                }
                out.columns = {"r", "lambda", "n", "value"};
                if (mc) {
                    out.columns.push_back("mc_estimate");
                    out.columns.push_back("mc_se");
                }

                const int orders[] = {1, 2, 3, 4, 6};
                std::vector<double> xs;
                if (mc) {
                    SeededNormal rng(seed);
                    const int ri = static_cast<int>(r);
                    const double shift = std::sqrt(lambda);
                    xs.resize(static_cast<std::size_t>(samples));
                    for (long i = 0; i < samples; ++i) {
                        double x = 0.0;
                        for (int j = 0; j < ri; ++j) {
                            const double z = rng.next() + (j == 0 ? shift : 0.0);
                            x += z * z;
                        }
                        xs[static_cast<std::size_t>(i)] = x - p.mean();
                    }
                }
                for (int n : orders) {
                    std::vector<std::string> row = {fmt(r), fmt(lambda),
                                                    std::to_string(n),
                                                    fmt(central_moment(p, n))};
                    if (mc) {
                        double mean = 0.0;
                        for (double y : xs) mean += std::pow(y, n);
                        mean /= static_cast<double>(xs.size());
                        double var = 0.0;
                        for (double y : xs) {
                            const double dev = std::pow(y, n) - mean;
                            var += dev * dev;
                        }
                        var /= static_cast<double>(xs.size() - 1);
                        row.push_back(fmt(mean));
                        row.push_back(
                            fmt(std::sqrt(var / static_cast<double>(xs.size()))));
                    }
                    out.rows.push_back(std::move(row));
                }
                deliver(out, common);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        runner();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const chi2refine::convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
