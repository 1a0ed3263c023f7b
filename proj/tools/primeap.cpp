// Command-line front end: exact prime counting in arithmetic progressions,
// explicit bound evaluation, and the numerical verification suites.
//
// Exit codes: 0 success (or all checks passed), 1 verification failure,
// 2 usage or domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "primeap/bounds.hpp"
#include "primeap/constants.hpp"
#include "primeap/empirical.hpp"
#include "primeap/report_io.hpp"
#include "primeap/sieve.hpp"
#include "primeap/specialfn.hpp"
#include "primeap/verifier.hpp"

namespace {

using nlohmann::json;
using namespace primeap;

enum class output_format { json_lines, csv, human };

struct cli_config {
    unsigned threads = 0;  // 0 = auto
    output_format format = output_format::human;
    u64 segment_size = sieve_options{}.segment_size;
    double quadrature_tol = 1e-10;
    std::string constants_path;
    std::string out_path;
};

std::ostream* g_out = &std::cout;
std::ofstream g_out_file;

std::string fmt(double v, const cli_config& cfg) {
    char buf[64];
    std::snprintf(buf, sizeof buf, cfg.format == output_format::human ? "%.6g" : "%.17g", v);
    return buf;
}

json wrap(const std::string& command, json inputs, json outputs) {
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"outputs", std::move(outputs)},
            {"version", std::string(version_string)}};
}

void emit_record(const json& record, const cli_config& cfg) {
    *g_out << record.dump() << '\n';
    (void)cfg;
}

sieve_options make_sieve_options(const cli_config& cfg) {
    sieve_options opt;
    opt.segment_size = cfg.segment_size;
    opt.threads = cfg.threads;
    return opt;
}

int startup_constants_check(const cli_config& cfg) {
    std::string path = cfg.constants_path;
    if (path.empty()) {
        if (const char* env = std::getenv("PRIMEAP_CONSTANTS")) path = env;
    }
    if (path.empty()) {
        std::ifstream probe("data/constants.csv");
        if (probe) path = "data/constants.csv";
    }
    if (path.empty()) return 0;  // no catalogue file around; compiled table rules
    const auto bad = check_catalogue_file(path);
    if (bad.empty()) return 0;
    std::cerr << "constants catalogue mismatch in " << path << ":";
    for (const auto& label : bad) std::cerr << ' ' << label;
    std::cerr << '\n';
    return 2;
}

// ---------------------------------------------------------------- count --

int run_count(double x, u64 q, u64 a, bool counts_only, const cli_config& cfg) {
    if (q < 1 || a >= q) {
        std::cerr << "count: need q >= 1 and 0 <= a < q\n";
        return 2;
    }
    if (!counts_only && std::gcd(a == 0 ? q : a, q) != 1) {
        std::cerr << "count: gcd(a, q) != 1, so the density comparison is undefined; "
                     "pass --counts-only for the raw counts\n";
        return 2;
    }
    const auto table = prime_power_table::build(static_cast<u64>(std::floor(x)),
                                                make_sieve_options(cfg));
    const auto counts = table.counts_ap({x, q, a});
    json outputs = counts;
    if (!counts_only) {
        const double expected = li(x) / static_cast<double>(euler_phi(q));
        outputs["li_over_phi"] = expected;
        outputs["pi_error"] = static_cast<double>(counts.pi) - expected;
    }
    if (cfg.format == output_format::json_lines) {
        emit_record(wrap("count", {{"x", x}, {"q", q}, {"a", a}}, outputs), cfg);
    } else if (cfg.format == output_format::csv) {
        *g_out << "command,x,q,a,pi,theta,psi,psi0,li_over_phi,pi_error\n";
        *g_out << "count," << fmt(x, cfg) << ',' << q << ',' << a << ',' << counts.pi << ','
               << fmt(counts.theta, cfg) << ',' << fmt(counts.psi, cfg) << ','
               << fmt(counts.psi0, cfg) << ','
               << (counts_only ? "" : fmt(outputs["li_over_phi"].get<double>(), cfg)) << ','
               << (counts_only ? "" : fmt(outputs["pi_error"].get<double>(), cfg)) << '\n';
    } else {
        *g_out << "x = " << fmt(x, cfg) << ", q = " << q << ", a = " << a << '\n'
               << "  pi    = " << counts.pi << '\n'
               << "  theta = " << fmt(counts.theta, cfg) << '\n'
               << "  psi   = " << fmt(counts.psi, cfg) << '\n'
               << "  psi0  = " << fmt(counts.psi0, cfg) << '\n';
        if (!counts_only)
            *g_out << "  li(x)/phi(q) = " << fmt(outputs["li_over_phi"].get<double>(), cfg)
                   << "  (pi error " << fmt(outputs["pi_error"].get<double>(), cfg) << ")\n";
    }
    return 0;
}

// ---------------------------------------------------------------- bound --

void print_breakdown(const std::string& which, const bound_breakdown& b, json inputs,
                     const cli_config& cfg) {
    if (cfg.format == output_format::json_lines) {
        emit_record(wrap("bound", std::move(inputs), json(b)), cfg);
    } else if (cfg.format == output_format::csv) {
        *g_out << "which,label,coefficient,value\n";
        for (const auto& t : b.terms)
            *g_out << which << ',' << t.label << ',' << fmt(t.coefficient, cfg) << ','
                   << fmt(t.value, cfg) << '\n';
        *g_out << which << ",total,," << fmt(b.total, cfg) << '\n';
    } else {
        *g_out << which << " breakdown:\n";
        for (const auto& t : b.terms)
            *g_out << "  " << t.label << " : coeff " << fmt(t.coefficient, cfg) << ", value "
                   << fmt(t.value, cfg) << '\n';
        *g_out << "  total = " << fmt(b.total, cfg) << '\n';
    }
}

void print_scalar(const std::string& which, double v, json inputs, const cli_config& cfg) {
    if (cfg.format == output_format::json_lines) {
        emit_record(wrap("bound", std::move(inputs), {{"value", v}}), cfg);
    } else if (cfg.format == output_format::csv) {
        *g_out << "which,value\n" << which << ',' << fmt(v, cfg) << '\n';
    } else {
        *g_out << which << " = " << fmt(v, cfg) << '\n';
    }
}

int run_bound(const std::string& which, double x, double q, double T, double y, double cpar,
              int parity, const std::string& variant, const cli_config& cfg) {
    json inputs{{"which", which}};
    auto put = [&inputs](const char* k, double v) { inputs[k] = v; };

    if (which == "r1") {
        put("q", q);
        print_scalar(which, r1(q), inputs, cfg);
    } else if (which == "psi" || which == "pi-full" || which == "pi-simple" ||
               which == "large-rho" || which == "small-rho") {
        put("x", x);
        put("q", q);
        const auto in = make_bound_input(x, static_cast<u64>(q));
        bound_breakdown b;
        if (which == "psi") b = bound_psi(in);
        else if (which == "pi-full") b = bound_pi_full(in);
        else if (which == "pi-simple") b = bound_pi_simple(in);
        else if (which == "large-rho") b = bound_large_rho(in);
        else b = bound_small_rho(in);
        print_breakdown(which, b, inputs, cfg);
    } else if (which == "jest") {
        if (T <= 0.0) T = truncation_height(x);
        put("x", x);
        put("T", T);
        print_breakdown(which, jest_bound(x, T), inputs, cfg);
    } else if (which == "iest") {
        put("y", y);
        put("c", cpar);
        put("T", T);
        print_scalar(which, iest_bound(y, cpar, T), inputs, cfg);
    } else if (which == "nzeros") {
        put("T", T);
        put("q", q);
        const auto nz = n_zeros_window(T, q);
        json outputs{{"main", nz.main},
                     {"err", nz.err},
                     {"err_sharp", nz.err_sharp},
                     {"vanishes", nz.vanishes}};
        if (cfg.format == output_format::json_lines) {
            emit_record(wrap("bound", inputs, outputs), cfg);
        } else if (cfg.format == output_format::csv) {
            *g_out << "which,main,err,err_sharp,vanishes\n"
                   << which << ',' << fmt(nz.main, cfg) << ',' << fmt(nz.err, cfg) << ','
                   << fmt(nz.err_sharp, cfg) << ',' << (nz.vanishes ? "true" : "false")
                   << '\n';
        } else {
            *g_out << "main = " << fmt(nz.main, cfg) << ", err = " << fmt(nz.err, cfg)
                   << ", err_sharp = " << fmt(nz.err_sharp, cfg)
                   << ", vanishes = " << (nz.vanishes ? "true" : "false") << '\n';
        }
    } else if (which == "zero-gap") {
        put("T", T);
        put("q", q);
        print_scalar(which, zero_gap_denominator(T, q), inputs, cfg);
    } else if (which == "bchi") {
        put("q", q);
        print_scalar(which, bchi_bound(q), inputs, cfg);
    } else if (which == "l0") {
        put("q", q);
        inputs["variant"] = variant;
        l0_variant v = l0_variant::exact_q;
        if (variant == "induced") v = l0_variant::induced;
        else if (variant == "sharp") v = l0_variant::sharp;
        else if (variant != "exact") {
            std::cerr << "bound: unknown l0 variant '" << variant
                      << "' (expected exact|induced|sharp)\n";
            return 2;
        }
        print_scalar(which, l0_logderiv_bound(q, v), inputs, cfg);
    } else if (which == "l2t") {
        put("y", y);
        print_scalar(which, l2t_bound(y), inputs, cfg);
    } else if (which == "trivial-sums") {
        put("x", x);
        inputs["parity"] = parity;
        print_scalar(which, trivial_zero_sums(x, parity), inputs, cfg);
    } else if (which == "sum-small-diff") {
        put("q", q);
        put("T", T);
        print_scalar(which, sum_small_diff_bound(q, T), inputs, cfg);
    } else if (which == "sum-large-diff") {
        put("q", q);
        put("T", T);
        print_scalar(which, sum_large_diff_bound(q, T), inputs, cfg);
    } else {
        std::cerr << "bound: unknown --which '" << which << "'\n";
        return 2;
    }
    return 0;
}

// --------------------------------------------------------------- verify --

void human_report_line(const verification_report& r) {
    std::fprintf(stderr, "%-4s %-28s min_margin=%.6g evals=%llu argmin=[",
                 r.pass ? "PASS" : "FAIL", r.lemma_id.c_str(), r.min_margin,
                 static_cast<unsigned long long>(r.evaluations));
    for (std::size_t i = 0; i < r.argmin.size(); ++i)
        std::fprintf(stderr, "%s%.6g", i ? ", " : "", r.argmin[i]);
    std::fprintf(stderr, "]\n");
}

int run_verify(const std::string& suite, const std::string& only, u64 qmax, double xmax,
               int samples, const cli_config& cfg) {
    std::vector<verification_report> reports;
    std::vector<reference_record> refs;

    if (suite == "lemmas") {
        reports = verify_all_lemmas(only);
    } else if (suite == "empirical") {
        reports = verify_empirical_bounds(qmax, xmax, samples, make_sieve_options(cfg));
    } else if (suite == "characters") {
        reports = verify_character_identities(std::min<u64>(qmax, 50),
                                              std::min(xmax, 1e5));
    } else if (suite == "small-x") {
        reports = verify_small_x_psi();
    } else if (suite == "constants") {
        refs = reproduce_reference_constants(cfg.quadrature_tol);
    } else {
        std::cerr << "verify: unknown suite '" << suite
                  << "' (expected lemmas|empirical|constants|characters|small-x)\n";
        return 2;
    }

    bool all_pass = true;
    for (const auto& r : reports) {
        emit_record(wrap("verify", {{"suite", suite}}, json(r)), cfg);
        human_report_line(r);
        all_pass = all_pass && r.pass;
    }
    for (const auto& r : refs) {
        emit_record(wrap("verify", {{"suite", suite}}, json(r)), cfg);
        std::fprintf(stderr, "%-4s %-28s computed=%.17g reference=%.17g |diff|=%.3g\n",
                     r.pass ? "PASS" : "FAIL", r.label.c_str(), r.computed, r.reference,
                     r.abs_diff);
        all_pass = all_pass && r.pass;
    }
    std::fprintf(stderr, "%s: %zu checks, %s\n", suite.c_str(), reports.size() + refs.size(),
                 all_pass ? "all passed" : "FAILURES PRESENT");
    return all_pass ? 0 : 1;
}

int run_constants_dump(const cli_config& cfg) {
    if (cfg.format == output_format::json_lines) {
        for (const auto& r : constants_catalogue)
            emit_record(wrap("constants-dump", json::object(),
                             {{"label", r.label}, {"value", r.value}, {"anchor", r.anchor}}),
                        cfg);
    } else {
        write_catalogue(*g_out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime counting in arithmetic progressions with explicit error bounds"};
    app.require_subcommand(1);

    cli_config cfg;
    std::string format_name = "human";
    app.add_option("--threads", cfg.threads, "worker threads (0 = logical CPUs)");
    app.add_option("--segment-size", cfg.segment_size, "sieve segment length");
    app.add_option("--quadrature-tol", cfg.quadrature_tol,
                   "tolerance of the reference quadrature cross-check");
    app.add_option("--constants", cfg.constants_path, "constants catalogue file to check");
    app.add_option("--format", format_name, "output format: json|csv|human");
    app.add_option("--out", cfg.out_path, "write records to this file instead of stdout");

    double x = 0, q = 3, T = 0, y = 0, cpar = 1, xmax = 1e6;
    u64 qi = 3, a = 0, qmax = 10;
    int parity = 0, samples = 50;
    bool counts_only = false;
    std::string which, suite, only, variant = "exact";

    auto* c_count = app.add_subcommand("count", "exact pi/theta/psi over a progression");
    c_count->add_option("--x", x, "upper limit")->required();
    c_count->add_option("--q", qi, "modulus")->required();
    c_count->add_option("--a", a, "residue class")->required();
    c_count->add_flag("--counts-only", counts_only, "skip the li(x)/phi(q) comparison");

    auto* c_bound = app.add_subcommand("bound", "evaluate an explicit bound");
    c_bound->add_option("--which", which, "pi-full|pi-simple|psi|large-rho|small-rho|r1|jest|"
                                          "iest|nzeros|zero-gap|bchi|l0|l2t|trivial-sums|"
                                          "sum-small-diff|sum-large-diff")
        ->required();
    c_bound->add_option("--x", x, "x value");
    c_bound->add_option("--q", q, "modulus (real for the large formula-only branches)");
    c_bound->add_option("--T", T, "height parameter");
    c_bound->add_option("--y", y, "y parameter");
    c_bound->add_option("--c", cpar, "c parameter");
    c_bound->add_option("--parity", parity, "character parity (0 or 1)");
    c_bound->add_option("--variant", variant, "l0 variant: exact|induced|sharp");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite, "lemmas|empirical|constants|characters|small-x")
        ->required();
    c_verify->add_option("--only", only, "restrict lemmas to ids with this prefix");
    c_verify->add_option("--qmax", qmax, "largest modulus");
    c_verify->add_option("--xmax", xmax, "largest x");
    c_verify->add_option("--samples", samples, "x samples per modulus");

    auto* c_dump = app.add_subcommand("constants-dump", "print the constants catalogue");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (format_name == "json") cfg.format = output_format::json_lines;
    else if (format_name == "csv") cfg.format = output_format::csv;
    else if (format_name == "human") cfg.format = output_format::human;
    else {
        std::cerr << "unknown --format '" << format_name << "'\n";
        return 2;
    }
    // verify always emits machine-readable records on stdout
    if (app.got_subcommand(c_verify)) cfg.format = output_format::json_lines;

    if (!cfg.out_path.empty()) {
        g_out_file.open(cfg.out_path);
        if (!g_out_file) {
            std::cerr << "cannot open --out file " << cfg.out_path << '\n';
            return 2;
        }
        g_out = &g_out_file;
    }

    // constants-dump regenerates the catalogue, so it skips the self-check
    if (!app.got_subcommand(c_dump)) {
        if (const int rc = startup_constants_check(cfg); rc != 0) return rc;
    }

    try {
        if (app.got_subcommand(c_count)) return run_count(x, qi, a, counts_only, cfg);
        if (app.got_subcommand(c_bound))
            return run_bound(which, x, q, T, y, cpar, parity, variant, cfg);
        if (app.got_subcommand(c_verify))
            return run_verify(suite, only, qmax, xmax, samples, cfg);
        if (app.got_subcommand(c_dump)) return run_constants_dump(cfg);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
