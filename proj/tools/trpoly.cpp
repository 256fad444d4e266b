// Command-line front end: sharp |a_2| bounds, extremal polynomials,
// kernel samples, and per-degree verification reports for typically real
// polynomials.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trpoly/output.hpp"
#include "trpoly/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("EXTREMAL_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp second-coefficient bounds and extremal typically real polynomials"};
    app.require_subcommand(1);

    int n = 0;
    int from = 0, to = 0;
    int points = 200;
    std::string format = "text";
    std::string which = "max";
    std::uint64_t seed = trpoly::kDefaultSeed;

    auto* cmd_bound = app.add_subcommand("bound", "Sharp bound on |a_2| for degree n");
    cmd_bound->add_option("--n", n, "degree (>= 2)")->required();
    cmd_bound->add_option("--format", format, "text|json|csv");

    auto* cmd_ext = app.add_subcommand("extremizer", "Coefficients of the extremal polynomial");
    cmd_ext->add_option("--n", n, "degree (>= 2)")->required();
    cmd_ext->add_option("--which", which, "max|min");
    cmd_ext->add_option("--format", format, "text|json|csv");

    auto* cmd_table = app.add_subcommand("table", "Bounds and coefficients for a degree range");
    cmd_table->add_option("--from", from, "first degree (>= 2)")->required();
    cmd_table->add_option("--to", to, "last degree (<= 500)")->required();
    cmd_table->add_option("--format", format, "text|json|csv");

    auto* cmd_verify = app.add_subcommand("verify", "Certification reports; exit 0 iff all pass");
    cmd_verify->add_option("--n", n, "single degree");
    cmd_verify->add_option("--from", from, "first degree");
    cmd_verify->add_option("--to", to, "last degree");
    cmd_verify->add_option("--seed", seed, "seed for the determinant sampling (EXTREMAL_SEED overrides)");
    cmd_verify->add_option("--format", format, "text|json|csv");

    auto* cmd_kernel = app.add_subcommand("kernel", "Samples of Im P_max(e^{it}) on (0, pi)");
    cmd_kernel->add_option("--n", n, "degree (>= 2)")->required();
    cmd_kernel->add_option("--points", points, "sample count (>= 2)");
    cmd_kernel->add_option("--format", format, "text|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const trpoly::OutputFormat fmt = trpoly::parse_format(format);

        if (cmd_bound->parsed()) {
            std::cout << trpoly::emit(trpoly::bound_record(n), fmt);
            return kExitOk;
        }
        if (cmd_ext->parsed()) {
            if (which != "max" && which != "min")
                throw std::invalid_argument("--which must be max or min");
            std::cout << trpoly::emit(trpoly::extremizer_record(n, which == "max"), fmt);
            return kExitOk;
        }
        if (cmd_table->parsed()) {
            if (from < 2 || to < from || to > 500)
                throw std::invalid_argument("table: requires 2 <= from <= to <= 500");
            std::cout << trpoly::emit_table(from, to, fmt);
            return kExitOk;
        }
        if (cmd_kernel->parsed()) {
            std::cout << trpoly::emit(trpoly::kernel_record(n, points), fmt);
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            int lo = from, hi = to;
            if (cmd_verify->count("--n")) {
                if (cmd_verify->count("--from") || cmd_verify->count("--to"))
                    throw std::invalid_argument("verify: use either --n or --from/--to");
                lo = hi = n;
            }
            if (lo < 2 || hi < lo || hi > 500)
                throw std::invalid_argument("verify: requires 2 <= from <= to <= 500");
            const std::uint64_t s = resolve_seed(seed);
            std::vector<trpoly::CertificationReport> reports;
            reports.reserve(hi - lo + 1);
            bool all_passed = true;
            for (int k = lo; k <= hi; ++k) {
                reports.push_back(trpoly::certify(k, s));
                all_passed = all_passed && reports.back().passed;
            }
            std::cout << trpoly::emit_verify(reports, fmt);
            return all_passed ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
