// Command-line front end; talks to the library exclusively through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "expsum/expsum.h"

namespace {

struct Common {
    long p = 3;
    int a = 1;
    std::string modulus;  // csv, optional
    std::string poly;
    int n = 1;
    int i_max = 0;
    int r_bound = 0;
    int cutoff_D = 0;
    int precision_N = 0;
    long long budget = 100000000;
    double tol = 1e-9;
    std::string format = "json";
    int threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool needs_poly) {
    cmd->configurable();
    cmd->add_option("--p", c.p, "characteristic (prime)");
    cmd->add_option("--a", c.a, "extension degree of the base field");
    cmd->add_option("--modulus", c.modulus,
                    "defining polynomial of F_{p^a}, ascending csv (e.g. 1,0,1)");
    if (needs_poly) {
        cmd->add_option("--poly", c.poly, "polynomial in x1..xn")->required();
        cmd->add_option("--n", c.n, "number of variables")->required();
    }
    cmd->add_option("--i-max", c.i_max, "number of extension steps / sums");
    cmd->add_option("--r-bound", c.r_bound, "weight bound for spectral scans");
    cmd->add_option("--cutoff-D", c.cutoff_D, "Dwork basis degree cutoff");
    cmd->add_option("--precision-N", c.precision_N, "p-adic working precision");
    cmd->add_option("--budget", c.budget, "point-enumeration budget");
    cmd->add_option("--tol", c.tol, "tolerance for the Weil modulus check");
    cmd->add_option("--format", c.format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--threads", c.threads, "worker threads for enumeration");
}

struct FieldHandle {
    expsum_field* f = nullptr;
    ~FieldHandle() { expsum_field_free(f); }
};
struct PolyHandle {
    expsum_poly* f = nullptr;
    ~PolyHandle() { expsum_poly_free(f); }
};
struct ReportHandle {
    expsum_report* r = nullptr;
    ~ReportHandle() { expsum_report_free(r); }
};

[[noreturn]] void die(expsum_status st) {
    std::fprintf(stderr, "error (%d): %s\n", (int)st, expsum_last_error());
    std::exit(2);
}

void make_poly(const Common& c, FieldHandle& fh, PolyHandle& ph) {
    expsum_status st = expsum_field_create(
        c.p, c.a, c.modulus.empty() ? nullptr : c.modulus.c_str(), &fh.f);
    if (st != EXPSUM_OK) die(st);
    st = expsum_poly_parse(fh.f, c.n, c.poly.c_str(), &ph.f);
    if (st != EXPSUM_OK) die(st);
}

int emit(const Common& c, ReportHandle& rh) {
    if (c.format == "text")
        std::fputs(expsum_report_text(rh.r), stdout);
    else
        std::printf("%s\n", expsum_report_json(rh.r));
    return expsum_report_passed(rh.r) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exponential sums, L-functions, and degeneration checks over F_q"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI file ([subcommand] sections)");

    Common c;

    auto* analyze = app.add_subcommand("analyze", "full pipeline on one polynomial");
    add_common(analyze, c, true);
    std::string run_list = "default";
    analyze->add_option("--run", run_list,
                        "comma list of analyses: decomposition,milnor,spectral,sums,"
                        "lfunction,dwork (default: all but dwork)");

    auto* sum = app.add_subcommand("sum", "exponential sums S_1..S_imax");
    add_common(sum, c, true);

    auto* lfun = app.add_subcommand("lfunction", "L-series and rational reconstruction");
    add_common(lfun, c, true);

    auto* spectral = app.add_subcommand("spectral", "page table and vanishing scan");
    add_common(spectral, c, true);
    int page = 1, scan_m = -1;
    spectral->add_option("--e", page, "page index");
    spectral->add_option("--m", scan_m, "restrict the scan to r+s = m (-1: all != n)");

    auto* check = app.add_subcommand("check-1-18", "smooth-complete-intersection checks");
    add_common(check, c, true);
    std::vector<std::string> factor_args;
    check->add_option("--factor", factor_args,
                      "factor of f^(delta) as 'poly' or 'poly:multiplicity' (repeat)")
        ->required();

    auto* dwork = app.add_subcommand("dwork-verify", "trace-formula congruence check");
    add_common(dwork, c, true);

    auto* brange = app.add_subcommand("b-range", "admissible b-interval arithmetic");
    brange->configurable();
    brange->add_option("--p", c.p, "characteristic (prime)");
    int delta = 2, bre = 1;
    brange->add_option("--delta", delta, "total degree")->required();
    brange->add_option("--e", bre, "page index")->required();
    brange->add_option("--format", c.format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    ReportHandle rh;
    expsum_status st = EXPSUM_OK;

    if (brange->parsed()) {
        st = expsum_b_range(c.p, delta, bre, &rh.r);
        if (st != EXPSUM_OK) die(st);
        return emit(c, rh);
    }

    FieldHandle fh;
    PolyHandle ph;
    make_poly(c, fh, ph);

    if (analyze->parsed()) {
        std::ostringstream opts;
        opts << "{";
        if (run_list != "default") {
            opts << "\"analyses\":[";
            std::stringstream ss(run_list);
            std::string item;
            bool first = true;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) {
                    opts << (first ? "" : ",") << "\"" << item << "\"";
                    first = false;
                }
            }
            opts << "],";
        }
        opts << "\"i_max\":" << c.i_max << ",\"r_bound\":" << c.r_bound
             << ",\"cutoff_D\":" << c.cutoff_D << ",\"precision_N\":" << c.precision_N
             << ",\"budget\":" << c.budget << ",\"tol\":" << c.tol
             << ",\"threads\":" << c.threads << "}";
        st = expsum_analyze(ph.f, opts.str().c_str(), &rh.r);
    } else if (sum->parsed()) {
        st = expsum_sum(ph.f, c.i_max > 0 ? c.i_max : 2, c.budget, c.threads, &rh.r);
    } else if (lfun->parsed()) {
        st = expsum_lfunction(ph.f, c.i_max, c.budget, c.threads, c.tol, &rh.r);
    } else if (spectral->parsed()) {
        st = expsum_spectral(ph.f, page, c.r_bound, scan_m, &rh.r);
    } else if (check->parsed()) {
        std::vector<std::string> texts;
        std::vector<int> mults;
        for (auto& f : factor_args) {
            size_t colon = f.rfind(':');
            if (colon != std::string::npos) {
                texts.push_back(f.substr(0, colon));
                mults.push_back(std::stoi(f.substr(colon + 1)));
            } else {
                texts.push_back(f);
                mults.push_back(1);
            }
        }
        std::vector<const char*> ptrs;
        for (auto& t : texts) ptrs.push_back(t.c_str());
        st = expsum_check_1_18(ph.f, ptrs.data(), mults.data(), ptrs.size(), &rh.r);
    } else if (dwork->parsed()) {
        st = expsum_dwork_verify(ph.f, c.i_max, c.cutoff_D, c.precision_N, c.budget,
                                 &rh.r);
    }

    if (st != EXPSUM_OK) die(st);
    return emit(c, rh);
}
