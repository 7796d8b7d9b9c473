// dcm: verification, recursion, histogram and table commands.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcm/cli/commands.hpp"
#include "dcm/cli/suites.hpp"
#include "dcm/error.hpp"

namespace {

std::uint32_t parse_hex(const std::string& s) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos, 16);
    if (pos != s.size() || v > 0xFFFFFFFFul) throw std::invalid_argument("bad modulus " + s);
    return static_cast<std::uint32_t>(v);
}

int emit(const dcm::cli::Report& rep) {
    std::cout << rep.dump() << '\n';
    const auto j = rep.to_json();
    if (j.contains("error")) std::cerr << "dcm: " << j["error"].get<std::string>() << '\n';
    return rep.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kloosterman moments and double-coset codes over GF(2^r)"};
    app.require_subcommand(1);
    // --h is the moment order, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");

    dcm::cli::RunOptions opts;
    opts.argv.assign(argv, argv + argc);
    std::string modulus, cache_dir;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", opts.budget, "Maximum number of enumerated group elements")->capture_default_str();
        sub->add_option("--workers", opts.workers, "Enumeration worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--modulus", modulus, "Irreducible modulus override in hex, e.g. 0x19");
    };

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", suite, "field|kloosterman|groups|expsum|codes|pless|thma|all")->required();
    add_common(verify);

    int n = 3;
    std::uint64_t q = 2;
    unsigned h = 1;
    bool compare = false;
    auto* recursion = app.add_subcommand("recursion", "Trace-one moment T1K^h from the code recursion");
    recursion->add_option("--n", n)->capture_default_str();
    recursion->add_option("--q", q)->capture_default_str();
    recursion->add_option("--h", h, "Odd moment order")->capture_default_str();
    recursion->add_flag("--compare", compare, "Also sum K^h directly and report the verdict");
    add_common(recursion);

    dcm::cli::HistogramRequest hreq;
    std::string family = "orthogonal";
    unsigned jmax = 0;
    auto* histogram = app.add_subcommand("histogram", "Trace histogram of a Bruhat double coset");
    histogram->add_option("--n", hreq.n)->capture_default_str();
    histogram->add_option("--r-coset", hreq.r_coset)->capture_default_str();
    histogram->add_option("--q", hreq.q)->capture_default_str();
    histogram->add_option("--family", family, "orthogonal or symplectic")->capture_default_str();
    histogram->add_flag("--closed-form", hreq.closed_form, "Use the closed-form distribution");
    auto* jmax_opt = histogram->add_option("--jmax", jmax, "Also emit weight counts C_0..C_jmax");
    histogram->add_option("--cache-dir", cache_dir, "Directory for cached histograms");
    add_common(histogram);

    unsigned hmax = 4;
    bool csv = false;
    auto* tables = app.add_subcommand("tables", "Kloosterman values and moments");
    tables->add_option("--q", q)->capture_default_str();
    tables->add_option("--h", hmax, "Largest moment order")->capture_default_str();
    auto* csv_flag = tables->add_flag("--csv", csv, "CSV rows a,trace,K");
    tables->add_flag("--json", "Structured report (default)")->excludes(csv_flag);
    add_common(tables);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dcm::cli::kUsage;
    }

    try {
        if (!modulus.empty()) opts.modulus = parse_hex(modulus);
    } catch (const std::exception& e) {
        std::cerr << "dcm: --modulus expects a hex bit pattern: " << e.what() << '\n';
        return dcm::cli::kUsage;
    }
    if (!cache_dir.empty()) opts.cache_dir = cache_dir;

    if (*verify) {
        const int status = emit(dcm::cli::cmd_verify(suite, opts));
        if (!dcm::cli::is_suite(suite)) std::cerr << verify->help();
        return status;
    }
    if (*recursion) return emit(dcm::cli::cmd_recursion(n, q, h, compare, opts));
    if (*histogram) {
        const auto fam = dcm::parse_family(family);
        if (!fam) {
            std::cerr << "dcm: unknown family '" << family << "'\n" << histogram->help();
            return dcm::cli::kUsage;
        }
        hreq.family = *fam;
        if (*jmax_opt) hreq.jmax = jmax;
        return emit(dcm::cli::cmd_histogram(hreq, opts));
    }
    if (csv) {
        try {
            std::cout << dcm::cli::tables_csv(q, opts);
            return dcm::cli::kPass;
        } catch (const dcm::Error& e) {
            std::cerr << "dcm: " << e.what() << '\n';
            return dcm::cli::kUsage;
        }
    }
    return emit(dcm::cli::cmd_tables(q, hmax, opts));
}
