#include "koszul.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace expsum {

namespace {
const TermOrder kGrevlex{};
}

bool FormKey::operator<(const FormKey& o) const {
    if (subset != o.subset) return subset < o.subset;
    if (mono == o.mono) return false;
    return kGrevlex.less(mono, o.mono);
}

int form_degree(const FormKey& k) { return std::popcount(k.subset); }

int form_weight(const FormKey& k, int n, int delta) {
    return (int)total_degree(k.mono) + (n - form_degree(k)) * (delta - 1);
}

Form phi_f(const MultiPoly& f, const Form& omega) {
    int n = f.nvars();
    Form out;
    std::vector<MultiPoly> df;
    for (int i = 0; i < n; i++) df.push_back(f.derivative(i));
    for (auto& [key, coeff] : omega) {
        for (int i = 0; i < n; i++) {
            if (key.subset & (1u << i)) continue;
            if (df[(size_t)i].is_zero()) continue;
            // dx_i ^ dx_S picks up a sign per transposition past smaller indices
            int below = std::popcount(key.subset & ((1u << i) - 1));
            bool negate = below % 2 == 1;
            for (auto& t : df[(size_t)i].terms()) {
                FormKey nk{key.subset | (1u << i), mono_mul(key.mono, t.first)};
                FieldElement c = coeff * t.second;
                if (negate) c = -c;
                auto it = out.find(nk);
                if (it == out.end())
                    out.emplace(std::move(nk), c);
                else {
                    it->second = it->second + c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    }
    return out;
}

std::string form_str(const Form& omega) {
    if (omega.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [key, coeff] : omega) {
        if (!first) os << " + ";
        first = false;
        os << coeff.str();
        for (size_t j = 0; j < key.mono.size(); j++) {
            if (key.mono[j] == 0) continue;
            os << "*x" << (j + 1);
            if (key.mono[j] > 1) os << "^" << key.mono[j];
        }
        bool wrote_dx = false;
        for (size_t j = 0; j < key.mono.size(); j++) {
            if (!(key.subset & (1u << j))) continue;
            os << (wrote_dx ? "^" : " ") << "dx" << (j + 1);
            wrote_dx = true;
        }
    }
    return os.str();
}

namespace {

void enum_monomials(int n, int deg, Monomial& cur, int pos, std::vector<Monomial>& out) {
    if (pos == n - 1) {
        cur[(size_t)pos] = (uint32_t)deg;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= deg; e++) {
        cur[(size_t)pos] = (uint32_t)e;
        enum_monomials(n, deg - e, cur, pos + 1, out);
    }
}

std::vector<Monomial> monomials_of_degree(int n, int deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    Monomial cur((size_t)n, 0);
    enum_monomials(n, deg, cur, 0, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return kGrevlex.less(a, b); });
    return out;
}

std::vector<uint32_t> subsets_of_size(int n, int k) {
    std::vector<uint32_t> out;
    for (uint32_t s = 0; s < (1u << n); s++)
        if (std::popcount(s) == k) out.push_back(s);
    return out;
}

/* Ordered basis of the weight slices wlo..whi of Omega^k (weights below the
 * minimum (n-k)(delta-1) are empty). */
struct FormBasis {
    std::vector<FormKey> items;
    std::map<FormKey, int> pos;

    static FormBasis weight_range(int n, int k, int delta, int wlo, int whi) {
        FormBasis b;
        if (k < 0 || k > n) return b;
        int base = (n - k) * (delta - 1);
        for (int w = std::max(wlo, base); w <= whi; w++) {
            int c = w - base;
            for (uint32_t s : subsets_of_size(n, k))
                for (auto& m : monomials_of_degree(n, c))
                    b.items.push_back(FormKey{s, m});
        }
        for (size_t i = 0; i < b.items.size(); i++) b.pos[b.items[i]] = (int)i;
        return b;
    }

    int size() const { return (int)items.size(); }
};

using Matrix = std::vector<std::vector<FieldElement>>;

/* Columns of phi_f restricted to dom, with rows projected onto cod (keys
 * outside cod are dropped: that is the quotient by lower filtration). */
Matrix phi_matrix(const MultiPoly& f, const FormBasis& dom, const FormBasis& cod) {
    Matrix M((size_t)cod.size(), std::vector<FieldElement>((size_t)dom.size(), f.field()->zero()));
    for (int j = 0; j < dom.size(); j++) {
        Form unit;
        unit.emplace(dom.items[(size_t)j], f.field()->one());
        Form img = phi_f(f, unit);
        for (auto& [key, c] : img) {
            auto it = cod.pos.find(key);
            if (it != cod.pos.end()) M[(size_t)it->second][(size_t)j] = c;
        }
    }
    return M;
}

struct Echelon {
    int rank = 0;
    std::vector<std::vector<FieldElement>> kernel;  // basis of the null space
};

Echelon eliminate(Matrix M, size_t cols, const FieldSpec& F, bool want_kernel) {
    Echelon out;
    size_t rows = M.size();
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; col++) {
        size_t sel = rank;
        while (sel < rows && M[sel][col].is_zero()) sel++;
        if (sel == rows) continue;
        std::swap(M[sel], M[rank]);
        FieldElement inv = M[rank][col].inv();
        for (size_t j = col; j < cols; j++) M[rank][j] = M[rank][j] * inv;
        for (size_t r = 0; r < rows; r++) {
            if (r == rank || M[r][col].is_zero()) continue;
            FieldElement f = M[r][col];
            for (size_t j = col; j < cols; j++) M[r][j] = M[r][j] - f * M[rank][j];
        }
        pivot_col.push_back((int)col);
        rank++;
    }
    out.rank = (int)rank;
    if (!want_kernel) return out;

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[(size_t)c] = true;
    for (size_t free_col = 0; free_col < cols; free_col++) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(cols, F.zero());
        v[free_col] = F.one();
        for (size_t r = 0; r < rank; r++) {
            // pivot at pivot_col[r]: value = -M[r][free_col]
            v[(size_t)pivot_col[r]] = -M[r][free_col];
        }
        out.kernel.push_back(std::move(v));
    }
    // cols == 0: no kernel vectors (the zero space)
    if (cols == 0) out.kernel.clear();
    return out;
}

/* Row-echelon store for independence tests against an accumulating span. */
struct SpanReducer {
    std::vector<std::vector<FieldElement>> rows;  // echelonized, leading 1s
    std::vector<size_t> lead;

    /* Reduces v against the span; returns the residue (empty if dependent),
     * optionally inserting the residue into the span. */
    bool insert(std::vector<FieldElement> v, bool add) {
        for (size_t i = 0; i < rows.size(); i++) {
            if (v[lead[i]].is_zero()) continue;
            FieldElement f = v[lead[i]];
            for (size_t j = 0; j < v.size(); j++) v[j] = v[j] - f * rows[i][j];
        }
        size_t l = 0;
        while (l < v.size() && v[l].is_zero()) l++;
        if (l == v.size()) return false;  // dependent
        if (add) {
            FieldElement inv = v[l].inv();
            for (auto& x : v) x = x * inv;
            rows.push_back(std::move(v));
            lead.push_back(l);
        }
        return true;
    }
};

}  // namespace

int graded_piece_dims(const MultiPoly& fdelta, int r, int s) {
    if (fdelta.is_zero() || !fdelta.is_homogeneous())
        throw ArgumentError("graded_piece_dims expects a nonzero homogeneous form");
    int n = fdelta.nvars();
    int delta = fdelta.degree();
    int k = r + s;
    if (k < 0 || k > n) return 0;
    FormBasis mid = FormBasis::weight_range(n, k, delta, r, r);
    if (mid.size() == 0) return 0;
    FormBasis up = FormBasis::weight_range(n, k + 1, delta, r, r);
    FormBasis down = FormBasis::weight_range(n, k - 1, delta, r, r);
    const FieldSpec& F = *fdelta.field();
    Echelon out_rk = eliminate(phi_matrix(fdelta, mid, up), (size_t)mid.size(), F, false);
    Echelon in_rk = eliminate(phi_matrix(fdelta, down, mid), (size_t)down.size(), F, false);
    return mid.size() - out_rk.rank - in_rk.rank;
}

RegularSequenceResult regular_sequence_check(const MultiPoly& fdelta) {
    if (fdelta.is_zero() || !fdelta.is_homogeneous())
        throw ArgumentError("regular_sequence_check expects a nonzero homogeneous form");
    int n = fdelta.nvars();
    int delta = fdelta.degree();
    if (delta < 1) throw ArgumentError("degree must be >= 1");
    RegularSequenceResult res;
    std::vector<MultiPoly> jac;
    for (int i = 0; i < n; i++) jac.push_back(fdelta.derivative(i));
    res.quotient = quotient_dim(buchberger(std::move(jac), TermOrder{}));
    res.expected = 1;
    for (int j = 0; j < n; j++) res.expected *= (delta - 1);
    res.regular = res.quotient.finite && res.quotient.dim == res.expected;
    return res;
}

int spectral_page_witness(const MultiPoly& f, int t, int r, int s, Form* witness) {
    if (t < 1) throw ArgumentError("page index must be >= 1");
    if (f.is_zero()) throw ArgumentError("spectral_page of the zero polynomial");
    int n = f.nvars();
    int delta = f.degree();
    if (delta < 1) throw ArgumentError("degree must be >= 1");
    int k = r + s;
    if (k < 0 || k > n) return 0;
    const FieldSpec& F = *f.field();

    FormBasis dom = FormBasis::weight_range(n, k, delta, 0, r);
    if (dom.size() == 0) return 0;
    // Z_t: phi(omega) must vanish in weights (r-t, r] of Omega^{k+1}
    FormBasis rows_up = FormBasis::weight_range(n, k + 1, delta, r - t + 1, r);
    Echelon Z = eliminate(phi_matrix(f, dom, rows_up), (size_t)dom.size(), F, true);

    // Z_t inside F_{r-1}: same condition on the smaller domain
    FormBasis dom1 = FormBasis::weight_range(n, k, delta, 0, r - 1);
    Echelon Z1 = eliminate(phi_matrix(f, dom1, rows_up), (size_t)dom1.size(), F, true);
    int zbar = (int)Z.kernel.size() - (int)Z1.kernel.size();
    if (zbar == 0) return 0;

    // boundaries: phi(Z_{t-1}^{r+t-1}) projected onto the weight-r slice
    FormBasis dom2 = FormBasis::weight_range(n, k - 1, delta, 0, r + t - 1);
    FormBasis rows_mid = FormBasis::weight_range(n, k, delta, r + 1, r + t - 1);
    Echelon Zprev = eliminate(phi_matrix(f, dom2, rows_mid), (size_t)dom2.size(), F, true);

    FormBasis top = FormBasis::weight_range(n, k, delta, r, r);
    SpanReducer span;
    for (auto& ker : Zprev.kernel) {
        // phi of the kernel vector, projected onto weight r
        Form xi;
        for (size_t j = 0; j < ker.size(); j++)
            if (!ker[j].is_zero()) xi.emplace(dom2.items[j], ker[j]);
        Form img = phi_f(f, xi);
        std::vector<FieldElement> proj((size_t)top.size(), F.zero());
        bool nonzero = false;
        for (auto& [key, c] : img) {
            auto it = top.pos.find(key);
            if (it != top.pos.end()) {
                proj[(size_t)it->second] = c;
                nonzero = true;
            }
        }
        if (nonzero) span.insert(std::move(proj), true);
    }
    int bbar = (int)span.rows.size();
    int dim = zbar - bbar;
    if (dim < 0) throw InternalError("subquotient dimension came out negative");

    if (witness && dim > 0) {
        // a Z-kernel vector whose weight-r projection escapes the span
        for (auto& ker : Z.kernel) {
            std::vector<FieldElement> proj((size_t)top.size(), F.zero());
            for (size_t j = 0; j < ker.size(); j++) {
                if (ker[j].is_zero()) continue;
                auto it = top.pos.find(dom.items[j]);
                if (it != top.pos.end()) proj[(size_t)it->second] = ker[j];
            }
            if (span.insert(proj, false)) {
                witness->clear();
                for (size_t j = 0; j < ker.size(); j++)
                    if (!ker[j].is_zero()) witness->emplace(dom.items[j], ker[j]);
                break;
            }
        }
    }
    return dim;
}

int spectral_page(const MultiPoly& f, int t, int r, int s) {
    return spectral_page_witness(f, t, r, s, nullptr);
}

PageTable page_table(const MultiPoly& f, int t, int r_bound) {
    PageTable tab;
    tab.t = t;
    tab.r_max = r_bound;
    int n = f.nvars();
    for (int m = 0; m <= n; m++)
        for (int r = 0; r <= r_bound; r++) {
            int d = spectral_page(f, t, r, m - r);
            if (d != 0) tab.cells[{r, m - r}] = d;
        }
    return tab;
}

VanishingVerdict check_vanishing(const MultiPoly& f, int e, int mode_m, int r_bound) {
    VanishingVerdict v;
    v.e = e;
    v.r_bound = r_bound;
    int n = f.nvars();
    for (int m = 0; m <= n; m++) {
        if (mode_m >= 0 && m != mode_m) continue;
        if (mode_m < 0 && m == n) continue;
        for (int r = 0; r <= r_bound; r++) {
            Form w;
            int d = spectral_page_witness(f, e, r, m - r, &w);
            if (d > 0) {
                v.verified = false;
                v.counterexample = {r, m - r};
                v.witness = form_str(w);
                return v;
            }
        }
    }
    v.verified = true;
    return v;
}

mpz_class h_top_dimension(const MultiPoly& f) {
    QuotientDim qd = milnor_sum(f);
    if (!qd.finite)
        throw MismatchError("non-isolated critical locus: the Jacobian quotient is "
                            "infinite-dimensional");
    return qd.dim;
}

}  // namespace expsum
