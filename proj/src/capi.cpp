#include "expsum/expsum.h"

#include <cctype>
#include <cstring>
#include <sstream>
#include <string>

#include "analyze.hpp"

using namespace expsum;

struct expsum_field {
    FieldRef ref;
};

struct expsum_poly {
    FieldRef field;
    MultiPoly poly;
    std::string canonical;
};

struct expsum_report {
    std::string json;
    std::string text;
    bool pass = false;
};

namespace {

thread_local std::string g_last_error;

expsum_status to_status(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Argument: return EXPSUM_ERR_ARGUMENT;
        case ErrorCode::Parse: return EXPSUM_ERR_PARSE;
        case ErrorCode::Budget: return EXPSUM_ERR_BUDGET;
        case ErrorCode::Mismatch: return EXPSUM_ERR_MISMATCH;
        case ErrorCode::Unsupported: return EXPSUM_ERR_UNSUPPORTED;
        case ErrorCode::Internal: return EXPSUM_ERR_INTERNAL;
    }
    return EXPSUM_ERR_INTERNAL;
}

template <class Fn>
expsum_status guarded(Fn&& fn) {
    try {
        fn();
        return EXPSUM_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return EXPSUM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return EXPSUM_ERR_INTERNAL;
    }
}

expsum_report* wrap(const RunResult& res) {
    auto* rep = new expsum_report;
    rep->json = res.report.dump(2);
    rep->text = render_text(res.report);
    rep->pass = res.pass;
    return rep;
}

std::vector<int64_t> parse_csv(const char* csv) {
    std::vector<int64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace((unsigned char)item[pos])) pos++;
        if (pos != item.size()) throw ParseError("bad modulus entry '" + item + "'");
        out.push_back((int64_t)v);
    }
    if (out.empty()) throw ParseError("empty modulus list");
    return out;
}

}  // namespace

extern "C" {

const char* expsum_version(void) { return kToolVersion; }

const char* expsum_last_error(void) { return g_last_error.c_str(); }

expsum_status expsum_field_create(long p, int a, const char* modulus_csv,
                                  expsum_field** out) {
    if (!out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] {
        std::vector<int64_t> mod;
        FieldRef ref;
        if (modulus_csv) {
            mod = parse_csv(modulus_csv);
            ref = FieldSpec::make(p, a, &mod);
        } else {
            ref = FieldSpec::make(p, a);
        }
        *out = new expsum_field{std::move(ref)};
    });
}

void expsum_field_free(expsum_field* field) { delete field; }

long expsum_field_p(const expsum_field* field) { return (long)field->ref->p(); }

int expsum_field_a(const expsum_field* field) { return field->ref->a(); }

expsum_status expsum_poly_parse(const expsum_field* field, int nvars, const char* text,
                                expsum_poly** out) {
    if (!field || !text || !out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] {
        MultiPoly f = MultiPoly::parse(text, nvars, field->ref);
        std::string canon = f.str();
        *out = new expsum_poly{field->ref, std::move(f), std::move(canon)};
    });
}

void expsum_poly_free(expsum_poly* poly) { delete poly; }

int expsum_poly_degree(const expsum_poly* poly) { return poly->poly.degree(); }

const char* expsum_poly_str(const expsum_poly* poly) { return poly->canonical.c_str(); }

expsum_status expsum_sum(const expsum_poly* poly, int i_max, long long budget,
                         int threads, expsum_report** out) {
    if (!poly || !out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] {
        *out = wrap(run_sum(poly->poly, i_max, budget > 0 ? budget : kDefaultBudget,
                            threads > 0 ? threads : 1));
    });
}

expsum_status expsum_lfunction(const expsum_poly* poly, int order, long long budget,
                               int threads, double tol, expsum_report** out) {
    if (!poly || !out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] {
        *out = wrap(run_lfunction(poly->poly, order, budget > 0 ? budget : kDefaultBudget,
                                  threads > 0 ? threads : 1, tol > 0 ? tol : 1e-9));
    });
}

expsum_status expsum_spectral(const expsum_poly* poly, int page, int r_bound, int m,
                              expsum_report** out) {
    if (!poly || !out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] { *out = wrap(run_spectral(poly->poly, page, r_bound, m)); });
}

expsum_status expsum_check_1_18(const expsum_poly* poly, const char* const* factor_texts,
                                const int* mults, size_t nfactors, expsum_report** out) {
    if (!poly || !factor_texts || !mults || !out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] {
        std::vector<std::pair<std::string, int>> factors;
        for (size_t i = 0; i < nfactors; i++)
            factors.emplace_back(factor_texts[i], mults[i]);
        *out = wrap(run_check_1_18(poly->poly, factors));
    });
}

expsum_status expsum_dwork_verify(const expsum_poly* poly, int i_max, int cutoff_D,
                                  int precision_N, long long budget,
                                  expsum_report** out) {
    if (!poly || !out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] {
        *out = wrap(run_dwork_verify(poly->poly, i_max, cutoff_D, precision_N,
                                     budget > 0 ? budget : kDefaultBudget));
    });
}

expsum_status expsum_b_range(long p, int delta, int page, expsum_report** out) {
    if (!out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] { *out = wrap(run_b_range(p, delta, page)); });
}

expsum_status expsum_analyze(const expsum_poly* poly, const char* options_json,
                             expsum_report** out) {
    if (!poly || !out) return EXPSUM_ERR_ARGUMENT;
    return guarded([&] {
        AnalysisConfig cfg;
        cfg.p = poly->field->p();
        cfg.a = poly->field->a();
        if (poly->field->a() > 1) cfg.modulus = poly->field->modulus();
        cfg.poly_text = poly->canonical;
        cfg.nvars = poly->poly.nvars();
        if (options_json && std::strlen(options_json) > 0) {
            Json opts;
            try {
                opts = Json::parse(options_json);
            } catch (const std::exception& e) {
                throw ParseError(std::string("bad options JSON: ") + e.what());
            }
            if (opts.contains("analyses")) {
                std::set<std::string> sel;
                for (auto& a : opts["analyses"]) sel.insert(a.get<std::string>());
                cfg.analyses = std::move(sel);
            }
            if (opts.contains("i_max")) cfg.i_max = opts["i_max"].get<int>();
            if (opts.contains("r_bound")) cfg.r_bound = opts["r_bound"].get<int>();
            if (opts.contains("cutoff_D")) cfg.cutoff_D = opts["cutoff_D"].get<int>();
            if (opts.contains("precision_N"))
                cfg.precision_N = opts["precision_N"].get<int>();
            if (opts.contains("budget")) cfg.budget = opts["budget"].get<long long>();
            if (opts.contains("tol")) cfg.tol = opts["tol"].get<double>();
            if (opts.contains("threads")) cfg.threads = opts["threads"].get<int>();
        }
        *out = wrap(run_analyze(cfg));
    });
}

const char* expsum_report_json(const expsum_report* report) { return report->json.c_str(); }

const char* expsum_report_text(const expsum_report* report) { return report->text.c_str(); }

int expsum_report_passed(const expsum_report* report) { return report->pass ? 1 : 0; }

void expsum_report_free(expsum_report* report) { delete report; }

}  // extern "C"
