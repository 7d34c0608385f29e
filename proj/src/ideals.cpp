#include "ideals.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace expsum {

namespace {

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const TermOrder& o) {
    auto& lf = f.leading_term(o);
    auto& lg = g.leading_term(o);
    Monomial l = mono_lcm(lf.first, lg.first);
    MultiPoly a = MultiPoly::monomial(f.field(), f.nvars(), mono_div(l, lf.first),
                                      lf.second.inv());
    MultiPoly b = MultiPoly::monomial(f.field(), f.nvars(), mono_div(l, lg.first),
                                      lg.second.inv());
    return a * f - b * g;
}

MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const TermOrder& o) {
    MultiPoly h = f, r = MultiPoly::zero(f.field(), f.nvars());
    while (!h.is_zero()) {
        auto lt = h.leading_term(o);  // copy: h changes below
        bool reduced = false;
        for (auto& g : basis) {
            auto& lg = g.leading_term(o);
            if (mono_divides(lg.first, lt.first)) {
                FieldElement c = lt.second * lg.second.inv();
                MultiPoly mult = MultiPoly::monomial(f.field(), f.nvars(),
                                                     mono_div(lt.first, lg.first), c);
                h = h - mult * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(lt.first, lt.second);
            h = h - MultiPoly::monomial(f.field(), f.nvars(), lt.first, lt.second);
        }
    }
    return r;
}

MultiPoly make_monic(const MultiPoly& f, const TermOrder& o) {
    return f.scaled(f.leading_term(o).second.inv());
}

}  // namespace

GroebnerBasis buchberger(std::vector<MultiPoly> gens, const TermOrder& order) {
    std::vector<MultiPoly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(make_monic(g, order));

    struct Pair {
        size_t i, j;
        uint32_t lcm_deg;
        Monomial lcm;
    };
    auto make_pair = [&](size_t i, size_t j) {
        Monomial l = mono_lcm(G[i].leading_term(order).first, G[j].leading_term(order).first);
        return Pair{i, j, total_degree(l), l};
    };
    std::vector<Pair> pairs;
    for (size_t i = 0; i < G.size(); i++)
        for (size_t j = i + 1; j < G.size(); j++) pairs.push_back(make_pair(i, j));

    std::vector<std::pair<size_t, size_t>> done;
    auto processed = [&](size_t i, size_t j) {
        if (i > j) std::swap(i, j);
        return std::find(done.begin(), done.end(), std::make_pair(i, j)) != done.end();
    };

    while (!pairs.empty()) {
        // normal selection: minimal lcm degree first (ties: smallest indices)
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); k++) {
            auto &a = pairs[k], &b = pairs[best];
            if (a.lcm_deg < b.lcm_deg ||
                (a.lcm_deg == b.lcm_deg && std::tie(a.i, a.j) < std::tie(b.i, b.j)))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + (long)best);
        done.emplace_back(pr.i, pr.j);

        auto& li = G[pr.i].leading_term(order).first;
        auto& lj = G[pr.j].leading_term(order).first;
        // coprime-lead criterion
        if (pr.lcm == mono_mul(li, lj)) continue;
        // chain criterion: some k with lead_k | lcm and both pairs handled
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; k++) {
            if (k == pr.i || k == pr.j) continue;
            if (mono_divides(G[k].leading_term(order).first, pr.lcm) &&
                processed(pr.i, k) && processed(pr.j, k))
                skip = true;
        }
        if (skip) continue;

        MultiPoly s = reduce_full(spoly(G[pr.i], G[pr.j], order), G, order);
        if (s.is_zero()) continue;
        G.push_back(make_monic(s, order));
        for (size_t i = 0; i + 1 < G.size(); i++) pairs.push_back(make_pair(i, G.size() - 1));
    }

    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < G.size(); i++) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; j++) {
            if (i == j) continue;
            auto& li = G[i].leading_term(order).first;
            auto& lj = G[j].leading_term(order).first;
            if (mono_divides(lj, li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // reduce each generator against the others
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); i++) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); j++)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = reduce_full(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(make_monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });
    return GroebnerBasis{order, std::move(reduced)};
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
    return reduce_full(f, gb.generators, gb.order);
}

QuotientDim quotient_dim(const GroebnerBasis& gb) {
    QuotientDim out;
    if (gb.generators.empty()) return out;  // zero ideal: infinite for n >= 1
    int n = gb.generators[0].nvars();
    std::vector<Monomial> leads;
    for (auto& g : gb.generators) leads.push_back(g.leading_term(gb.order).first);

    // constant generator: unit ideal
    for (auto& l : leads)
        if (total_degree(l) == 0) {
            out.finite = true;
            out.dim = 0;
            return out;
        }

    // pure-power cap per variable
    std::vector<uint32_t> cap((size_t)n, 0);
    for (auto& l : leads) {
        int nz = -1;
        bool pure = true;
        for (int j = 0; j < n; j++) {
            if (l[(size_t)j] != 0) {
                if (nz >= 0) { pure = false; break; }
                nz = j;
            }
        }
        if (pure && nz >= 0)
            cap[(size_t)nz] = cap[(size_t)nz] == 0 ? l[(size_t)nz]
                                                   : std::min(cap[(size_t)nz], l[(size_t)nz]);
    }
    for (int j = 0; j < n; j++)
        if (cap[(size_t)j] == 0) return out;  // no pure power: infinite

    // count standard monomials inside the box
    mpz_class count = 0;
    Monomial e((size_t)n, 0);
    for (;;) {
        bool divisible = false;
        for (auto& l : leads)
            if (mono_divides(l, e)) { divisible = true; break; }
        if (!divisible) count++;
        int j = 0;
        while (j < n) {
            if (++e[(size_t)j] < cap[(size_t)j]) break;
            e[(size_t)j] = 0;
            j++;
        }
        if (j == n) break;
    }
    out.finite = true;
    out.dim = count;
    return out;
}

QuotientDim milnor_sum(const MultiPoly& f) {
    std::vector<MultiPoly> jac;
    for (int i = 0; i < f.nvars(); i++) jac.push_back(f.derivative(i));
    GroebnerBasis gb = buchberger(std::move(jac), TermOrder{});
    return quotient_dim(gb);
}

bool origin_supported(const GroebnerBasis& gb) {
    QuotientDim qd = quotient_dim(gb);
    if (!qd.finite) throw ArgumentError("origin_supported requires a finite quotient");
    if (qd.dim == 0) return true;  // empty scheme
    if (!qd.dim.fits_uint_p()) throw ArgumentError("quotient dimension too large");
    uint32_t D = (uint32_t)qd.dim.get_ui();
    int n = gb.generators[0].nvars();
    const FieldRef& F = gb.generators[0].field();
    for (int j = 0; j < n; j++) {
        Monomial m((size_t)n, 0);
        m[(size_t)j] = D;
        if (!normal_form(MultiPoly::monomial(F, n, m, F->one()), gb).is_zero())
            return false;
    }
    return true;
}

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> leads, int n) {
    // minimalize
    std::vector<Monomial> mins;
    for (size_t i = 0; i < leads.size(); i++) {
        bool redundant = false;
        for (size_t j = 0; j < leads.size() && !redundant; j++) {
            if (i == j) continue;
            if (mono_divides(leads[j], leads[i]) && (leads[i] != leads[j] || j < i))
                redundant = true;
        }
        if (!redundant) mins.push_back(leads[i]);
    }
    if (mins.empty()) return {1};
    for (auto& m : mins)
        if (total_degree(m) == 0) return {0};

    /* N(I) = N(I') - t^{deg m} N(I' : m) with m the last minimal generator. */
    Monomial m = mins.back();
    mins.pop_back();
    std::vector<mpz_class> left = hilbert_numerator(mins, n);
    std::vector<Monomial> colon;
    for (auto& g : mins) {
        Monomial q(g.size());
        for (size_t j = 0; j < g.size(); j++) q[j] = g[j] > m[j] ? g[j] - m[j] : 0;
        colon.push_back(std::move(q));
    }
    std::vector<mpz_class> right = hilbert_numerator(colon, n);
    size_t shift = total_degree(m);
    std::vector<mpz_class> out(std::max(left.size(), right.size() + shift), 0);
    for (size_t k = 0; k < left.size(); k++) out[k] += left[k];
    for (size_t k = 0; k < right.size(); k++) out[k + shift] -= right[k];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

namespace {

MultiPoly det_expand(const std::vector<std::vector<MultiPoly>>& M, std::vector<int> cols,
                     int row) {
    const MultiPoly& probe = M[0][0];
    if (cols.empty()) return MultiPoly::constant(probe.field(), probe.nvars(), probe.field()->one());
    MultiPoly acc = MultiPoly::zero(probe.field(), probe.nvars());
    for (size_t t = 0; t < cols.size(); t++) {
        std::vector<int> rest;
        for (size_t s = 0; s < cols.size(); s++)
            if (s != t) rest.push_back(cols[s]);
        MultiPoly minor = det_expand(M, rest, row + 1);
        MultiPoly term = M[(size_t)row][(size_t)cols[t]] * minor;
        acc = (t % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::string> ideal_strings(const std::vector<MultiPoly>& gens) {
    std::vector<std::string> out;
    for (auto& g : gens) out.push_back(g.str());
    return out;
}

}  // namespace

CICheckResult smooth_ci_check(const std::vector<MultiPoly>& forms) {
    CICheckResult res;
    if (forms.empty()) throw ArgumentError("smooth_ci_check: no forms");
    int n = forms[0].nvars();
    for (auto& f : forms) {
        if (f.is_zero() || !f.is_homogeneous())
            throw ArgumentError("smooth_ci_check requires nonzero homogeneous forms");
        if (f.degree() == 0) throw ArgumentError("smooth_ci_check: constant form");
    }
    int k = (int)forms.size();
    TermOrder order{};

    if (k >= n) {
        // empty projective scheme: common affine zero locus must be {0}
        GroebnerBasis gb = buchberger(forms, order);
        QuotientDim qd = quotient_dim(gb);
        if (!qd.finite || !origin_supported(gb)) {
            res.pass = false;
            res.reason = "projective zero locus is nonempty";
            res.witness_ideal = ideal_strings(forms);
            return res;
        }
        res.pass = true;
        return res;
    }

    // (a) complete intersection of codimension k via Hilbert series
    GroebnerBasis gb = buchberger(forms, order);
    std::vector<Monomial> leads;
    for (auto& g : gb.generators) leads.push_back(g.leading_term(order).first);
    std::vector<mpz_class> N = hilbert_numerator(leads, n);
    std::vector<mpz_class> expect = {1};
    for (auto& f : forms) {
        size_t d = (size_t)f.degree();
        std::vector<mpz_class> next(expect.size() + d, 0);
        for (size_t i = 0; i < expect.size(); i++) {
            next[i] += expect[i];
            next[i + d] -= expect[i];
        }
        expect = std::move(next);
    }
    while (expect.size() > 1 && expect.back() == 0) expect.pop_back();
    if (N != expect) {
        res.pass = false;
        res.reason = "Hilbert series differs from a codimension-" + std::to_string(k) +
                     " complete intersection";
        res.witness_ideal = ideal_strings(forms);
        return res;
    }

    // (b) singular locus: forms + all k x k Jacobian minors supported at origin
    std::vector<std::vector<MultiPoly>> jac((size_t)k);
    for (int i = 0; i < k; i++)
        for (int j = 0; j < n; j++) jac[(size_t)i].push_back(forms[(size_t)i].derivative(j));
    std::vector<MultiPoly> aug = forms;
    std::vector<int> cols((size_t)k);
    // iterate k-subsets of the n columns
    std::iota(cols.begin(), cols.end(), 0);
    for (;;) {
        aug.push_back(det_expand(jac, cols, 0));
        int t = k - 1;
        while (t >= 0 && cols[(size_t)t] == n - k + t) t--;
        if (t < 0) break;
        cols[(size_t)t]++;
        for (int s = t + 1; s < k; s++) cols[(size_t)s] = cols[(size_t)(s - 1)] + 1;
    }
    GroebnerBasis gba = buchberger(aug, order);
    QuotientDim qda = quotient_dim(gba);
    if (!qda.finite || !origin_supported(gba)) {
        res.pass = false;
        res.reason = "singular locus meets the projective scheme";
        res.witness_ideal = ideal_strings(aug);
        return res;
    }
    res.pass = true;
    return res;
}

CIReport smooth_factorization_check(const std::vector<std::pair<MultiPoly, int>>& factors,
                            const MultiPoly& fdelta_prime, const MultiPoly& f) {
    CIReport rep;
    if (factors.empty()) throw ArgumentError("no factors supplied");
    if (f.is_zero()) throw ArgumentError("zero polynomial");
    auto decomp = homogeneous_parts(f);
    rep.delta = decomp.delta;
    if (!decomp.delta_prime.has_value())
        throw ArgumentError("f is homogeneous: delta' is absent, hypothesis does not apply");
    rep.delta_prime = *decomp.delta_prime;

    // supplied second-highest part must match the decomposition
    if (!(fdelta_prime == decomp.parts[(size_t)rep.delta_prime]))
        throw MismatchError("supplied f^(delta') differs from the decomposition");

    // factorization must multiply back to f^(delta)
    const FieldRef& F = f.field();
    MultiPoly prod = MultiPoly::constant(F, f.nvars(), F->one());
    for (auto& [fi, ai] : factors) {
        if (ai < 1) throw ArgumentError("multiplicities must be >= 1");
        if (fi.is_zero() || !fi.is_homogeneous())
            throw ArgumentError("factors must be nonzero homogeneous");
        for (int t = 0; t < ai; t++) prod = prod * fi;
    }
    if (!(prod == decomp.parts[(size_t)rep.delta]))
        throw MismatchError("factor product differs from f^(delta)");

    // coprimality (p prime: p must divide none of delta, delta', a_i)
    int64_t p = F->p();
    rep.coprime = rep.delta % p != 0 && rep.delta_prime % p != 0;
    for (auto& [fi, ai] : factors)
        if (ai % p == 0) rep.coprime = false;

    int r = (int)factors.size();
    bool all_pass = true;
    for (int mask = 1; mask < (1 << r); mask++) {
        std::vector<MultiPoly> sub;
        std::vector<int> idx;
        for (int t = 0; t < r; t++)
            if (mask & (1 << t)) {
                sub.push_back(factors[(size_t)t].first);
                idx.push_back(t + 1);
            }
        int k = (int)sub.size();

        CISubsetResult sr;
        sr.subset = idx;
        sr.with_delta_prime = false;
        sr.codim = k;
        CICheckResult c = smooth_ci_check(sub);
        sr.pass = c.pass;
        sr.reason = c.reason;
        sr.witness_ideal = c.witness_ideal;
        all_pass = all_pass && sr.pass;
        rep.subsets.push_back(std::move(sr));

        bool need_aug = k >= 2 || (k == 1 && factors[(size_t)(idx[0] - 1)].second > 1);
        if (need_aug) {
            std::vector<MultiPoly> aug = {fdelta_prime};
            aug.insert(aug.end(), sub.begin(), sub.end());
            CISubsetResult sa;
            sa.subset = idx;
            sa.with_delta_prime = true;
            sa.codim = k + 1;
            CICheckResult ca = smooth_ci_check(aug);
            sa.pass = ca.pass;
            sa.reason = ca.reason;
            sa.witness_ideal = ca.witness_ideal;
            all_pass = all_pass && sa.pass;
            rep.subsets.push_back(std::move(sa));
        }
    }
    rep.pass = all_pass && rep.coprime;
    if (rep.pass) rep.e = rep.delta - rep.delta_prime + 1;
    return rep;
}

}  // namespace expsum
