// concave_lab: exact counting, random sampling, law verification, and
// limit-shape export for concave compositions.
//
// Exit codes: 0 ok, 2 resource limit, 3 rejection budget exhausted,
// 4 verification failure, 5 invalid input.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cclab/counts.hpp"
#include "cclab/enumerate.hpp"
#include "cclab/errors.hpp"
#include "cclab/io.hpp"
#include "cclab/limit_laws.hpp"
#include "cclab/qpochhammer.hpp"
#include "cclab/sampler.hpp"
#include "cclab/shape.hpp"
#include "cclab/stats.hpp"
#include "cclab/version.hpp"

#include "batch.hpp"

using nlohmann::ordered_json;
using namespace cclab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResource = 2;
constexpr int kExitBudget = 3;
constexpr int kExitTestFail = 4;
constexpr int kExitInvalid = 5;

constexpr std::int64_t kUniformCap = 10000;

struct RunContext {
    std::string command;
    ordered_json config = ordered_json::object();
    std::vector<GoFReport> reports;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool warn_only = false;

    int finish() {
        bool all_pass = true;
        for (const auto& r : reports) all_pass = all_pass && r.pass;
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const int status = all_pass || warn_only ? kExitOk : kExitTestFail;
        ordered_json manifest;
        manifest["command"] = command;
        manifest["config"] = config;
        manifest["version"] = kVersion;
        manifest["reports"] = ordered_json::array();
        for (const auto& r : reports) manifest["reports"].push_back(gof_to_json(r));
        manifest["exit_status"] = status;
        manifest["wall_clock_s"] = wall;
        std::cout << manifest.dump(2) << "\n";
        return status;
    }
};

// Flat key=value experiment files. The file's entries are spliced into the
// argument list right after the subcommand name, so unknown keys fail
// option validation and explicit command-line flags override the file
// (every option takes the last occurrence).
std::vector<std::string> expand_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw InvalidInputError("--config needs a path");
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot read config file: " + path);
    std::vector<std::string> extra;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidInputError("config line " + std::to_string(line_no) +
                                    ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw InvalidInputError("config line " + std::to_string(line_no) +
                                                 ": empty key");
        extra.push_back("--" + key + "=" + value);
    }

    static const std::vector<std::string> kSubcommands = {"count", "enumerate", "sample",
                                                          "verify", "shape"};
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (std::find(kSubcommands.begin(), kSubcommands.end(), args[i]) !=
            kSubcommands.end()) {
            // after the subcommand and its positional law, before user flags
            std::size_t at = i + 1;
            if (args[i] == "verify" && at < args.size() && args[at].rfind("-", 0) != 0) ++at;
            args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(),
                        extra.end());
            return args;
        }
    }
    throw InvalidInputError("--config requires a subcommand");
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open output file: " + path);
    out << content;
    if (content.empty() || content.back() != '\n') out << "\n";
}

std::int64_t env_budget(std::int64_t fallback) {
    if (const char* s = std::getenv("CONCAVE_LAB_BUDGET")) {
        try {
            return std::stoll(s);
        } catch (...) {
            throw InvalidInputError("CONCAVE_LAB_BUDGET is not an integer");
        }
    }
    return fallback;
}

// ---------------------------------------------------------------- count --

struct CountOptions {
    std::int64_t n = -1;
    std::int64_t n_max = -1;
    bool check_asymptotic = false;
    std::string out;
};

int run_count(const CountOptions& opt, RunContext& ctx) {
    const std::int64_t n_max = std::max(opt.n_max, std::max(opt.n, std::int64_t{0}));
    ctx.config = {{"n", opt.n}, {"n_max", n_max}, {"check_asymptotic", opt.check_asymptotic}};
    auto table = make_count_table(n_max);
    if (opt.n >= 0) {
        std::cout << "V(" << opt.n << ") = " << to_decimal(table.v[opt.n]) << "\n";
        std::cout << "p(" << opt.n << ") = " << to_decimal(table.p[opt.n])
                  << ", p2(" << opt.n << ") = " << to_decimal(table.p2[opt.n]) << "\n";
        if (opt.n >= 1) {
            std::cout << "P(c = 0 | total = " << opt.n
                      << ") = " << format_double(central_part_zero_probability(table, opt.n))
                      << "\n";
        }
    }
    if (opt.check_asymptotic) {
        if (opt.n < 1) throw InvalidInputError("--check-asymptotic requires --n >= 1");
        const double ratio = std::exp(log_big(table.v[opt.n]) - vn_asymptotic_log(opt.n));
        std::cout << "V(" << opt.n << ") / leading-order = " << format_double(ratio) << "\n";
    }
    if (!opt.out.empty()) write_text(opt.out, count_table_to_json(table).dump(2));
    return ctx.finish();
}

// ------------------------------------------------------------ enumerate --

struct EnumerateOptions {
    std::int64_t n = 0;
    std::int64_t bound = kDefaultEnumerateBound;
    std::string out;
};

int run_enumerate(const EnumerateOptions& opt, RunContext& ctx) {
    ctx.config = {{"n", opt.n}, {"bound", opt.bound}};
    auto listed = enumerate_concave(opt.n, opt.bound);
    std::ostringstream body;
    for (const auto& comp : listed) body << composition_to_json(comp).dump() << "\n";
    if (!opt.out.empty())
        write_text(opt.out, body.str());
    else
        std::cout << body.str();
    std::cout << "count = " << listed.size() << "\n";
    return ctx.finish();
}

// --------------------------------------------------------------- sample --

struct SampleOptions {
    std::int64_t n = 0;
    std::int64_t m = 1;
    std::uint64_t seed = 0;
    double tail_eps = 1e-12;
    bool uniform = false;
    bool boltzmann = false;
    bool stats = false;
    bool compact = false;
    int workers = 1;
    std::string format = "json";
    std::string out;
};

struct DrawnSample {
    Partition minus;
    Partition plus;
    std::int64_t trials = 0; // 0 for direct Boltzmann draws
};

ordered_json sample_record(const DrawnSample& s, bool compact, bool with_stats) {
    ordered_json j;
    j["n"] = s.minus.size() + s.plus.size();
    if (s.trials > 0) j["trials"] = s.trials;
    if (compact) {
        ordered_json freq = ordered_json::object();
        for (const auto& e : FrequencyVector::from_partitions(s.minus, s.plus).entries)
            freq[std::to_string(e.k)] = {e.x_plus, e.x_minus};
        j["freq"] = freq;
    } else {
        j["minus"] = s.minus.parts();
        j["plus"] = s.plus.parts();
    }
    if (with_stats) {
        ConcaveComposition comp;
        comp.minus = s.minus;
        comp.plus = s.plus;
        j["stats"] = summary_to_json(summarize(comp));
    }
    return j;
}

std::string summary_csv_line(const DrawnSample& s) {
    ConcaveComposition comp;
    comp.minus = s.minus;
    comp.plus = s.plus;
    auto st = summarize(comp);
    std::ostringstream line;
    line << st.len_minus << ',' << st.len_plus << ',' << st.length << ',' << st.tilt << ','
         << st.largest_part << ',' << st.half_perimeter << ',' << st.size_minus << ','
         << st.size_plus << ',' << s.trials;
    return line.str();
}

int run_sample(const SampleOptions& opt, RunContext& ctx) {
    if (opt.uniform == opt.boltzmann)
        throw InvalidInputError("pass exactly one of --uniform / --boltzmann");
    if (opt.uniform && opt.n > kUniformCap)
        throw InvalidInputError(
            "--uniform is limited to n <= " + std::to_string(kUniformCap) +
            " by the rejection budget; sampling at larger n requires --boltzmann "
            "(the conditioned and product measures merge as n grows)");
    if (opt.format != "json" && opt.format != "csv")
        throw InvalidInputError("--format must be json or csv");
    if (opt.format == "csv" && !opt.stats)
        throw InvalidInputError("--format csv emits the stats table; pass --stats too");

    ctx.config = {{"n", opt.n},         {"samples", opt.m},     {"seed", opt.seed},
                  {"tail_eps", opt.tail_eps}, {"mode", opt.uniform ? "uniform" : "boltzmann"},
                  {"stats", opt.stats}, {"compact", opt.compact}, {"workers", opt.workers},
                  {"format", opt.format}};

    auto params = make_params(opt.n, opt.tail_eps);
    const std::int64_t budget = env_budget(default_rejection_budget(opt.n));
    auto draw = [&](std::int64_t index) {
        Pcg64 rng(opt.seed, static_cast<std::uint64_t>(index));
        DrawnSample s;
        if (opt.uniform) {
            auto u = sample_uniform_pair(opt.n, rng, params, budget);
            s.minus = std::move(u.minus);
            s.plus = std::move(u.plus);
            s.trials = u.trials;
        } else {
            auto [minus, plus] = frequencies_to_partitions(sample_boltzmann(params, rng));
            s.minus = std::move(minus);
            s.plus = std::move(plus);
        }
        return s;
    };
    auto samples = cclab_cli::run_batch<DrawnSample>(opt.m, opt.workers, draw);

    std::ostringstream body;
    if (opt.format == "csv") {
        body << "len_minus,len_plus,length,tilt,largest_part,half_perimeter,size_minus,"
                "size_plus,trials\n";
        for (const auto& s : samples) body << summary_csv_line(s) << "\n";
    } else {
        for (const auto& s : samples)
            body << sample_record(s, opt.compact, opt.stats).dump() << "\n";
    }
    if (!opt.out.empty())
        write_text(opt.out, body.str());
    else
        std::cout << body.str();
    return ctx.finish();
}

// --------------------------------------------------------------- verify --

struct VerifyOptions {
    std::string law;
    std::int64_t n = 1000000;
    std::int64_t m = 10000;
    std::uint64_t seed = 0;
    double tail_eps = 1e-12;
    std::optional<double> threshold;
    std::int64_t trials = 1000;
    std::int64_t mc = 0;
    int workers = 1;
    std::string out;
};

std::vector<StatSummary> boltzmann_summaries(std::int64_t n, std::int64_t m,
                                             std::uint64_t seed, double tail_eps,
                                             int workers) {
    auto params = make_params(n, tail_eps);
    return cclab_cli::run_batch<StatSummary>(m, workers, [&](std::int64_t index) {
        Pcg64 rng(seed, static_cast<std::uint64_t>(index));
        auto [minus, plus] = frequencies_to_partitions(sample_boltzmann(params, rng));
        ConcaveComposition comp;
        comp.minus = std::move(minus);
        comp.plus = std::move(plus);
        return summarize(comp);
    });
}

int run_verify(const VerifyOptions& opt, RunContext& ctx) {
    ctx.config = {{"law", opt.law}, {"n", opt.n},           {"samples", opt.m},
                  {"seed", opt.seed}, {"tail_eps", opt.tail_eps}, {"workers", opt.workers}};
    if (opt.threshold) ctx.config["threshold"] = *opt.threshold;

    if (opt.law == "perimeter" || opt.law == "joint-perimeter" || opt.law == "tilt" ||
        opt.law == "length") {
        const double threshold = opt.threshold.value_or(0.05);
        auto summaries =
            boltzmann_summaries(opt.n, opt.m, opt.seed, opt.tail_eps, opt.workers);
        if (opt.law == "perimeter") {
            std::vector<double> plus, minus;
            plus.reserve(summaries.size());
            minus.reserve(summaries.size());
            for (const auto& s : summaries) {
                plus.push_back(normalize_perimeter(s.len_plus, opt.n));
                minus.push_back(normalize_perimeter(s.len_minus, opt.n));
            }
            ctx.reports.push_back(
                ks_distance(EmpiricalCDF(std::move(plus)), gumbel_cdf, threshold,
                            "perimeter-plus-gumbel"));
            ctx.reports.push_back(
                ks_distance(EmpiricalCDF(std::move(minus)), gumbel_cdf, threshold,
                            "perimeter-minus-gumbel"));
        } else if (opt.law == "joint-perimeter") {
            const double grid[] = {-1.0, 0.0, 1.0, 2.0, 3.0};
            double max_dev = 0.0;
            for (double x : grid) {
                for (double y : grid) {
                    std::int64_t hits = 0;
                    for (const auto& s : summaries) {
                        if (normalize_perimeter(s.len_minus, opt.n) <= x &&
                            normalize_perimeter(s.len_plus, opt.n) <= y)
                            ++hits;
                    }
                    const double emp =
                        static_cast<double>(hits) / static_cast<double>(summaries.size());
                    max_dev = std::max(max_dev, std::fabs(emp - joint_perimeter_cdf(x, y)));
                }
            }
            GoFReport r;
            r.test = "joint-perimeter-grid";
            r.statistic = max_dev;
            r.n_samples = opt.m;
            r.threshold = threshold;
            r.pass = max_dev <= threshold;
            ctx.reports.push_back(r);
        } else if (opt.law == "tilt") {
            std::vector<double> xs;
            xs.reserve(summaries.size());
            for (const auto& s : summaries)
                xs.push_back(normalize_tilt(s.len_minus - s.len_plus, opt.n));
            ctx.reports.push_back(ks_distance(EmpiricalCDF(std::move(xs)), logistic_cdf,
                                              threshold, "tilt-logistic"));
        } else {
            std::vector<double> xs;
            xs.reserve(summaries.size());
            for (const auto& s : summaries)
                xs.push_back(normalize_length_sum(s.len_minus + s.len_plus, opt.n));
            ctx.reports.push_back(ks_distance(EmpiricalCDF(std::move(xs)), length_sum_cdf,
                                              threshold, "length-two-gumbel"));
        }
    } else if (opt.law == "local-limit") {
        const double threshold = opt.threshold.value_or(0.15);
        auto table = partition_counts(opt.n);
        pair_counts(table);
        const double exact = local_limit_exact(opt.n, table);
        const double n3 = std::pow(static_cast<double>(opt.n), 3.0);
        const double cand48 = 1.0 / std::pow(48.0 * n3, 0.25);
        const double cand96 = 1.0 / std::pow(96.0 * n3, 0.25);
        std::cout << "Q(N=n) exact     = " << format_double(exact) << "\n";
        std::cout << "ratio to (48n^3)^{-1/4} = " << format_double(exact / cand48) << "\n";
        std::cout << "ratio to (96n^3)^{-1/4} = " << format_double(exact / cand96) << "\n";
        const bool in48 = std::fabs(exact / cand48 - 1.0) <= threshold;
        const bool in96 = std::fabs(exact / cand96 - 1.0) <= threshold;
        GoFReport r;
        r.test = "local-limit-constant";
        r.statistic = std::min(std::fabs(exact / cand48 - 1.0), std::fabs(exact / cand96 - 1.0));
        r.n_samples = opt.n;
        r.threshold = threshold;
        r.pass = in48 != in96; // exactly one candidate survives
        ctx.reports.push_back(r);
        if (opt.mc > 0) {
            auto params = make_params(opt.n, opt.tail_eps);
            auto hits = cclab_cli::run_batch<std::int8_t>(
                opt.mc, opt.workers, [&](std::int64_t index) {
                    Pcg64 rng(opt.seed, static_cast<std::uint64_t>(index));
                    return static_cast<std::int8_t>(
                        sample_boltzmann(params, rng, opt.n).total_size() == opt.n ? 1 : 0);
                });
            std::int64_t total = 0;
            for (auto h : hits) total += h;
            const double freq = static_cast<double>(total) / static_cast<double>(opt.mc);
            const double se =
                std::sqrt(exact * (1.0 - exact) / static_cast<double>(opt.mc));
            GoFReport mc;
            mc.test = "local-limit-monte-carlo";
            mc.statistic = std::fabs(freq - exact) / se;
            mc.n_samples = opt.mc;
            mc.threshold = 4.0;
            mc.pass = mc.statistic <= 4.0;
            ctx.reports.push_back(mc);
        }
    } else if (opt.law == "weights") {
        const double threshold = opt.threshold.value_or(0.15);
        auto table = make_count_table(opt.n);
        auto w = mixture_weights(opt.n, table);
        mpq_class total(0);
        for (const auto& q : w.weights) total += q;
        GoFReport sum_r;
        sum_r.test = "weights-sum-exact";
        sum_r.statistic = total == 1 ? 0.0 : 1.0;
        sum_r.n_samples = opt.n;
        sum_r.threshold = 0.0;
        sum_r.pass = total == 1;
        ctx.reports.push_back(sum_r);

        const double zmax = std::pow(static_cast<double>(opt.n), 0.75);
        double worst = 0.0;
        for (std::int64_t z = -static_cast<std::int64_t>(zmax);
             z <= static_cast<std::int64_t>(zmax); ++z) {
            const double gauss =
                std::exp(-static_cast<double>(z) * static_cast<double>(z) /
                         (2.0 * w.sigma_hat * w.sigma_hat)) /
                (std::sqrt(2.0 * M_PI) * w.sigma_hat);
            worst = std::max(
                worst, std::fabs(w.weight_as_double(opt.n / 2 + z) / gauss - 1.0));
        }
        GoFReport gauss_r;
        gauss_r.test = "weights-gaussian-form";
        gauss_r.statistic = worst;
        gauss_r.n_samples = opt.n;
        gauss_r.threshold = threshold;
        gauss_r.pass = worst <= threshold;
        ctx.reports.push_back(gauss_r);

        const double tail = w.tail_mass(std::pow(static_cast<double>(opt.n), 0.8));
        GoFReport tail_r;
        tail_r.test = "weights-tail-mass";
        tail_r.statistic = tail;
        tail_r.n_samples = opt.n;
        tail_r.threshold = 1e-6;
        tail_r.pass = tail <= 1e-6;
        ctx.reports.push_back(tail_r);
        std::cout << "exact tail mass beyond n^0.8 = " << format_double(tail) << "\n";

        if (!opt.out.empty()) {
            std::ostringstream csv;
            csv << "k,w\n";
            for (std::int64_t k = 0; k <= opt.n; ++k)
                csv << k << ',' << format_double(w.weight_as_double(k)) << "\n";
            write_text(opt.out, csv.str());
        }
    } else if (opt.law == "pochhammer") {
        ctx.config["trials"] = opt.trials;
        Pcg64 rng(opt.seed, 0);
        PochhammerBoundsDetail detail;
        auto r = check_pochhammer_bounds(opt.trials, rng, opt.threshold.value_or(5.0),
                                         &detail);
        std::cout << "bound (1) violations: " << detail.bound1_violations << "\n";
        std::cout << "bound (2) violations: " << detail.bound2_violations << "\n";
        std::cout << "fitted ratio constant: " << format_double(detail.max_ratio_constant)
                  << "\n";
        ctx.reports.push_back(r);
    } else {
        throw InvalidInputError("unknown law: " + opt.law);
    }
    return ctx.finish();
}

// ---------------------------------------------------------------- shape --

struct ShapeOptions {
    std::int64_t n = 0;
    std::int64_t m = 1;
    std::uint64_t seed = 0;
    double tail_eps = 1e-12;
    double y_min = 0.5;
    double y_max = 3.0;
    int y_points = 26;
    std::string from_parts;
    bool partition_mode = false;
    std::string aggregate = "first";
    int workers = 1;
    std::string out;
};

ConcaveComposition parse_composition(const std::string& csv) {
    std::vector<std::int64_t> values;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            values.push_back(std::stoll(tok));
        } catch (...) {
            throw InvalidInputError("--from-parts: '" + tok + "' is not an integer");
        }
    }
    if (values.empty()) throw InvalidInputError("--from-parts: empty list");
    std::size_t min_at = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[min_at]) min_at = i;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (i != min_at && values[i] == values[min_at])
            throw InvalidInputError("--from-parts: central part must be a unique minimum");
    std::vector<std::int64_t> minus(values.begin(),
                                    values.begin() + static_cast<std::ptrdiff_t>(min_at));
    std::vector<std::int64_t> plus(values.begin() + static_cast<std::ptrdiff_t>(min_at) + 1,
                                   values.end());
    std::reverse(plus.begin(), plus.end()); // listed ascending away from the center
    Partition pm, pp;
    try {
        pm = Partition::from_parts(std::move(minus));
        pp = Partition::from_parts(std::move(plus));
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(std::string("--from-parts: sides must slope away from the "
                                            "central part (") +
                                e.what() + ")");
    }
    return ConcaveComposition::make(std::move(pm), values[min_at], std::move(pp));
}

void append_series_csv(std::ostringstream& csv,
                       const std::vector<std::pair<double, double>>& pts,
                       const char* series) {
    for (const auto& [x, y] : pts)
        csv << format_double(x) << ',' << format_double(y) << ',' << series << "\n";
}

void append_profile_csv(std::ostringstream& csv, const Profile& prof) {
    for (const auto& s : prof.steps) {
        csv << format_double(s.x_lo) << ',' << format_double(s.y) << ",profile\n";
        csv << format_double(s.x_hi) << ',' << format_double(s.y) << ",profile\n";
    }
}

int run_shape(const ShapeOptions& opt, RunContext& ctx) {
    if (opt.y_points < 2 || !(opt.y_min > 0.0) || !(opt.y_max > opt.y_min))
        throw InvalidInputError("shape: need 0 < y-min < y-max and y-points >= 2");
    std::vector<double> grid(static_cast<std::size_t>(opt.y_points));
    for (int i = 0; i < opt.y_points; ++i)
        grid[static_cast<std::size_t>(i)] =
            opt.y_min + (opt.y_max - opt.y_min) * static_cast<double>(i) /
                            static_cast<double>(opt.y_points - 1);

    std::ostringstream csv;
    csv << "x,y,series\n";

    if (!opt.from_parts.empty()) {
        auto comp = parse_composition(opt.from_parts);
        if (opt.n > 0 && opt.n != comp.total())
            throw InvalidInputError("--from-parts sums to " + std::to_string(comp.total()) +
                                    ", not the requested --n " + std::to_string(opt.n));
        ctx.config = {{"from_parts", opt.from_parts}, {"n", comp.total()}};
        auto prof = build_profile(comp);
        auto fc = fit_constants(summarize(comp), comp.total());
        prof.limit_plus = limit_curve_plus(comp.total(), fc, grid);
        prof.limit_minus = limit_curve_minus(comp.total(), fc, grid);
        append_profile_csv(csv, prof);
        append_series_csv(csv, prof.limit_plus, "limit_plus");
        append_series_csv(csv, prof.limit_minus, "limit_minus");
    } else if (opt.partition_mode) {
        if (opt.n < 1) throw InvalidInputError("shape: --n must be >= 1");
        ctx.config = {{"n", opt.n},       {"samples", opt.m}, {"seed", opt.seed},
                      {"partition_mode", true}, {"workers", opt.workers}};
        Pcg64 rng(opt.seed, 0);
        auto lambda = sample_partition(opt.n, rng, opt.tail_eps);
        const double rt = std::sqrt(static_cast<double>(opt.n));
        std::vector<std::pair<double, double>> boundary, curve;
        for (double y : grid) {
            boundary.emplace_back(
                static_cast<double>(lambda.parts_greater_than(y * rt)) / rt, y);
            curve.emplace_back(temperley_x(y), y);
        }
        append_series_csv(csv, boundary, "profile");
        append_series_csv(csv, curve, "limit_plus");
    } else {
        if (opt.n < 1) throw InvalidInputError("shape: --n must be >= 1");
        if (opt.aggregate != "first" && opt.aggregate != "median")
            throw InvalidInputError("shape: --aggregate must be first or median");
        ctx.config = {{"n", opt.n},   {"samples", opt.m},     {"seed", opt.seed},
                      {"y_min", opt.y_min}, {"y_max", opt.y_max}, {"y_points", opt.y_points},
                      {"aggregate", opt.aggregate}, {"workers", opt.workers}};
        auto params = make_params(opt.n, opt.tail_eps);
        struct ShapeDraw {
            Partition minus, plus;
            double dev = 0.0;
        };
        auto draws = cclab_cli::run_batch<ShapeDraw>(
            opt.m, opt.workers, [&](std::int64_t index) {
                Pcg64 rng(opt.seed, static_cast<std::uint64_t>(index));
                auto [minus, plus] = frequencies_to_partitions(sample_boltzmann(params, rng));
                ShapeDraw d;
                d.dev = shape_sup_deviation(minus, plus, opt.n, grid);
                d.minus = std::move(minus);
                d.plus = std::move(plus);
                return d;
            });
        std::vector<double> devs;
        devs.reserve(draws.size());
        for (const auto& d : draws) devs.push_back(d.dev);
        std::sort(devs.begin(), devs.end());
        const double median = devs[devs.size() / 2];

        if (opt.aggregate == "median") {
            // pointwise median boundary per side, with curves from the
            // median fitted constants
            auto med = [](std::vector<double> v) {
                std::sort(v.begin(), v.end());
                return v[v.size() / 2];
            };
            std::vector<std::pair<double, double>> med_plus, med_minus;
            for (double y : grid) {
                std::vector<double> bp, bm;
                bp.reserve(draws.size());
                bm.reserve(draws.size());
                for (const auto& d : draws) {
                    bp.push_back(boundary_x_plus(d.plus, opt.n, y));
                    bm.push_back(boundary_x_minus(d.minus, opt.n, y));
                }
                med_plus.emplace_back(med(std::move(bp)), y);
                med_minus.emplace_back(med(std::move(bm)), y);
            }
            std::vector<double> ap, am;
            ap.reserve(draws.size());
            am.reserve(draws.size());
            for (const auto& d : draws) {
                ap.push_back(normalize_perimeter(d.plus.length(), opt.n));
                am.push_back(normalize_perimeter(d.minus.length(), opt.n));
            }
            FittingConstants fc;
            fc.a_plus = med(std::move(ap));
            fc.a_minus = med(std::move(am));
            fc.c_plus = std::exp(-fc.a_plus);
            fc.c_minus = std::exp(-fc.a_minus);
            append_series_csv(csv, med_minus, "profile");
            append_series_csv(csv, med_plus, "profile");
            append_series_csv(csv, limit_curve_plus(opt.n, fc, grid), "limit_plus");
            append_series_csv(csv, limit_curve_minus(opt.n, fc, grid), "limit_minus");
        } else {
            ConcaveComposition first;
            first.minus = draws.front().minus;
            first.plus = draws.front().plus;
            auto fc = fit_constants(summarize(first), opt.n);
            auto prof = build_profile(first);
            prof.limit_plus = limit_curve_plus(opt.n, fc, grid);
            prof.limit_minus = limit_curve_minus(opt.n, fc, grid);
            append_profile_csv(csv, prof);
            append_series_csv(csv, prof.limit_plus, "limit_plus");
            append_series_csv(csv, prof.limit_minus, "limit_minus");
        }

        GoFReport r;
        r.test = "shape-median-sup-deviation";
        r.statistic = median;
        r.n_samples = opt.m;
        r.threshold = 0.1;
        r.pass = median <= 0.1;
        ctx.reports.push_back(r);
        std::cout << "median sup deviation over y grid = " << format_double(median) << "\n";
    }

    if (!opt.out.empty())
        write_text(opt.out, csv.str());
    else
        std::cout << csv.str();
    return ctx.finish();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"concave composition laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "exact counting tables and asymptotic checks");
    count->add_option("--n", count_opt.n, "print V(n), p(n), p2(n) for this n");
    std::string config_path_unused;
    count->add_option("--n-max", count_opt.n_max, "fill tables up to this size");
    count->add_flag("--check-asymptotic", count_opt.check_asymptotic,
                    "print the ratio of V(n) to its leading-order approximation");
    count->add_option("--out", count_opt.out, "write the table as JSON");

    EnumerateOptions enum_opt;
    auto* enumerate =
        app.add_subcommand("enumerate", "list every concave composition of n (JSON lines)");
    enumerate->add_option("--n", enum_opt.n, "target integer")->required();
    enumerate->add_option("--bound", enum_opt.bound, "enumeration ceiling");
    enumerate->add_option("--out", enum_opt.out, "output path");

    SampleOptions sample_opt;
    auto* sample = app.add_subcommand("sample", "draw random partition pairs (JSON lines)");
    sample->add_option("--n", sample_opt.n, "target size")->required();
    sample->add_option("-m,--samples", sample_opt.m, "number of samples")
        ->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_opt.seed, "master seed");
    sample->add_option("--tail-eps", sample_opt.tail_eps, "truncation TV budget");
    sample->add_flag("--uniform", sample_opt.uniform,
                     "exact uniform over pairs summing to n (rejection)");
    sample->add_flag("--boltzmann", sample_opt.boltzmann, "tuned product measure");
    sample->add_flag("--stats", sample_opt.stats, "attach per-sample statistics");
    sample->add_flag("--compact", sample_opt.compact, "emit frequency maps, not part lists");
    sample->add_option("--workers", sample_opt.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    sample->add_option("--format", sample_opt.format, "json | csv (csv needs --stats)");
    sample->add_option("--out", sample_opt.out, "output path");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run a limit-law experiment");
    verify
        ->add_option("law", verify_opt.law,
                     "perimeter | joint-perimeter | tilt | length | local-limit | weights | "
                     "pochhammer")
        ->required();
    verify->add_option("--n", verify_opt.n, "target size");
    verify->add_option("-m,--samples", verify_opt.m, "number of samples")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_opt.seed, "master seed");
    verify->add_option("--tail-eps", verify_opt.tail_eps, "truncation TV budget");
    double threshold_val = 0.0;
    auto* thr = verify->add_option("--threshold", threshold_val, "pass/fail threshold");
    verify->add_option("--trials", verify_opt.trials, "draws for the pochhammer law")
        ->check(CLI::PositiveNumber);
    verify->add_option("--mc", verify_opt.mc, "Monte Carlo draws for local-limit")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--workers", verify_opt.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_opt.out, "law-specific data output (CSV for weights)");
    bool warn_only = false;
    verify->add_flag("--warn-only", warn_only, "report failures without exit code 4");

    ShapeOptions shape_opt;
    auto* shape = app.add_subcommand("shape", "profile and limit-curve export (CSV)");
    shape->add_option("--n", shape_opt.n, "target size");
    shape->add_option("-m,--samples", shape_opt.m, "number of samples")
        ->check(CLI::PositiveNumber);
    shape->add_option("--seed", shape_opt.seed, "master seed");
    shape->add_option("--tail-eps", shape_opt.tail_eps, "truncation TV budget");
    shape->add_option("--y-min", shape_opt.y_min, "lowest height on the y grid");
    shape->add_option("--y-max", shape_opt.y_max, "highest height on the y grid");
    shape->add_option("--y-points", shape_opt.y_points, "number of y grid points")
        ->check(CLI::PositiveNumber);
    shape->add_option("--from-parts", shape_opt.from_parts,
                      "explicit composition, comma separated, central part included");
    shape->add_flag("--partition-mode", shape_opt.partition_mode,
                    "single random partition with its classical limit curve");
    shape->add_option("--aggregate", shape_opt.aggregate,
                      "first | median: emit one sample's steps or the pointwise median boundary");
    shape->add_option("--workers", shape_opt.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    shape->add_option("--out", shape_opt.out, "output path");

    // Flat key=value experiment files; handled by expand_config_args before
    // parsing. Registered here so the flag is documented, and every option
    // takes its last occurrence so command-line flags override the file.
    for (auto* sub : {count, enumerate, sample, verify, shape}) {
        sub->add_option("--config", config_path_unused,
                        "flat key=value experiment file (flags override it)");
        for (auto* o : sub->get_options())
            if (o->get_expected_max() == 1) o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    std::vector<std::string> args;
    try {
        args = expand_config_args(argc, argv);
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    RunContext ctx;
    ctx.warn_only = warn_only;
    if (thr->count() > 0) verify_opt.threshold = threshold_val;

    try {
        if (count->parsed()) {
            ctx.command = "count";
            return run_count(count_opt, ctx);
        }
        if (enumerate->parsed()) {
            ctx.command = "enumerate";
            return run_enumerate(enum_opt, ctx);
        }
        if (sample->parsed()) {
            ctx.command = "sample";
            return run_sample(sample_opt, ctx);
        }
        if (verify->parsed()) {
            ctx.command = "verify";
            return run_verify(verify_opt, ctx);
        }
        if (shape->parsed()) {
            ctx.command = "shape";
            return run_shape(shape_opt, ctx);
        }
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
