#include "divsum/cli.hpp"

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divsum/driver.hpp"
#include "divsum/oracles.hpp"
#include "divsum/t3.hpp"

namespace divsum {

namespace {

bool parse_natural(const std::string& text, Natural& out) {
    if (text.empty()) return false;
    for (char c : text)
        if (c < '0' || c > '9') return false;
    out.set_str(text, 10);
    return true;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void print_result(const SumResult& res, double elapsed_ms, bool json,
                  std::ostream& out) {
    if (!json) {
        out << res.value.get_str() << "\n";
        return;
    }
    nlohmann::json j;
    j["value"] = res.value.get_str();
    j["regions_processed"] = res.stats.regions_processed;
    j["max_stack_depth"] = res.stats.max_stack_depth;
    j["div_calls"] = res.stats.div_calls;
    j["sqrt_calls"] = res.stats.sqrt_calls;
    j["manual_columns"] = res.stats.manual_columns;
    j["elapsed_ms"] = elapsed_ms;
    out << j.dump() << "\n";
}

struct CommonOpts {
    std::string n_text;
    std::string method = "cbrt";
    std::string c1 = "10";
    std::string c2 = "10";
    bool divfree = false;
    bool json = false;
};

void add_config_flags(CLI::App* cmd, CommonOpts& opts, bool with_method) {
    cmd->add_option("--n", opts.n_text, "value of n (decimal)")->required();
    if (with_method)
        cmd->add_option("--method", opts.method, "naive|sqrt|cbrt");
    cmd->add_option("--c1", opts.c1, "region-start constant");
    cmd->add_option("--c2", opts.c2, "small-region cutoff");
    cmd->add_flag("--divfree", opts.divfree,
                  "use the division-free counter for the prefix sum");
    cmd->add_flag("--json", opts.json, "emit a JSON object with counters");
}

// Returns false (and sets rc) when an option fails to parse.
bool build_config(const CommonOpts& opts, Natural& n, Config& config,
                  std::ostream& err, int& rc) {
    rc = 0;
    if (!parse_natural(opts.n_text, n)) {
        err << "error: --n must be a nonnegative decimal integer\n";
        rc = 2;
        return false;
    }
    if (!parse_natural(opts.c1, config.c1) || config.c1 == 0 ||
        !parse_natural(opts.c2, config.c2) || config.c2 == 0) {
        err << "error: --c1/--c2 must be positive decimal integers\n";
        rc = 2;
        return false;
    }
    config.use_divfree = opts.divfree;
    if (opts.method == "naive") {
        config.method = Method::Naive;
    } else if (opts.method == "sqrt") {
        config.method = Method::Sqrt;
    } else if (opts.method == "cbrt") {
        config.method = Method::Cbrt;
    } else {
        err << "error: unknown method '" << opts.method << "'\n";
        rc = 2;
        return false;
    }
    return true;
}

int cmd_compute(const CommonOpts& opts, bool third_order, std::ostream& out,
                std::ostream& err) {
    Natural n;
    Config config;
    int rc;
    if (!build_config(opts, n, config, err, rc)) return rc;
    auto start = std::chrono::steady_clock::now();
    SumResult res = third_order ? t3(n, config) : t_dispatch(n, config);
    print_result(res, ms_since(start), opts.json, out);
    return 0;
}

int cmd_verify(const std::string& max_n_text, const std::string& random_text,
               std::uint64_t seed, std::ostream& out, std::ostream& err) {
    Natural max_n, random_count;
    if (!parse_natural(max_n_text, max_n) ||
        !parse_natural(random_text, random_count)) {
        err << "error: --max-n/--random must be nonnegative decimal integers\n";
        return 2;
    }
    Config config;
    for (Natural n = 0; n <= max_n; ++n) {
        Natural fast = t_cbrt(n, config).value;
        Natural ref = t_naive(n);
        if (fast != ref) {
            out << "mismatch at n=" << n.get_str() << ": got "
                << fast.get_str() << " expected " << ref.get_str() << "\n";
            return 1;
        }
    }
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> dist(1000000000ULL,
                                                          1000000000000ULL);
        for (Natural i = 0; i < random_count; ++i) {
            Natural n = from_u64(dist(rng));
            Natural fast = t_cbrt(n, config).value;
            Natural ref = t_sqrt(n);
            if (fast != ref) {
                out << "mismatch at n=" << n.get_str() << ": got "
                    << fast.get_str() << " expected " << ref.get_str() << "\n";
                return 1;
            }
        }
    }
    out << "ok " << max_n.get_str() << "\n";
    return 0;
}

int cmd_bench(std::ostream& out) {
    out << "n,method,elapsed_ms,regions_processed,div_calls\n";
    const Natural ladder[] = {Natural(1000000), Natural(100000000),
                              Natural(10000000000), Natural(1000000000000)};
    for (const Natural& n : ladder) {
        for (Method method : {Method::Naive, Method::Sqrt, Method::Cbrt}) {
            // The slow reference methods stop scaling long before the ladder
            // does; skip the pairings that would dominate the run.
            if (method == Method::Naive && n > 1000000) continue;
            if (method == Method::Sqrt && n > 10000000000) continue;
            Config config;
            config.method = method;
            auto start = std::chrono::steady_clock::now();
            SumResult res = t_dispatch(n, config);
            double elapsed = ms_since(start);
            const char* name = method == Method::Naive  ? "naive"
                               : method == Method::Sqrt ? "sqrt"
                                                        : "cbrt";
            out << n.get_str() << "," << name << "," << elapsed << ","
                << res.stats.regions_processed << "," << res.stats.div_calls
                << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"divisor summatory function toolkit"};
    app.require_subcommand(1);

    CommonOpts compute_opts;
    CLI::App* compute = app.add_subcommand("compute", "compute T(n)");
    add_config_flags(compute, compute_opts, true);

    CommonOpts compute3_opts;
    CLI::App* compute3 = app.add_subcommand("compute3", "compute T3(n)");
    add_config_flags(compute3, compute3_opts, false);

    std::string max_n_text = "1000";
    std::string random_text = "0";
    std::uint64_t seed = 1;
    CLI::App* verify =
        app.add_subcommand("verify", "check the fast method against oracles");
    verify->add_option("--max-n", max_n_text, "exhaustive check bound");
    verify->add_option("--random", random_text,
                       "additional random n in [1e9, 1e12]");
    verify->add_option("--seed", seed, "random verification seed");

    CLI::App* bench =
        app.add_subcommand("bench", "CSV timings over a fixed n ladder");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (compute->parsed()) return cmd_compute(compute_opts, false, out, err);
    if (compute3->parsed()) return cmd_compute(compute3_opts, true, out, err);
    if (verify->parsed())
        return cmd_verify(max_n_text, random_text, seed, out, err);
    if (bench->parsed()) return cmd_bench(out);
    return 0;
}

}  // namespace divsum
