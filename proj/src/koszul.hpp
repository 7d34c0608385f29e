#ifndef EXPSUM_KOSZUL_HPP
#define EXPSUM_KOSZUL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ideals.hpp"
#include "mpoly.hpp"

namespace expsum {

/* Basis label for the monomial k-form  x^mono dx_{i_1} ^ ... ^ dx_{i_k},
 * where subset is the bitmask {i_1 < ... < i_k} (bit j = dx_{j+1}). */
struct FormKey {
    uint32_t subset = 0;
    Monomial mono;

    bool operator==(const FormKey& o) const { return subset == o.subset && mono == o.mono; }
    bool operator<(const FormKey& o) const;
};

using Form = std::map<FormKey, FieldElement>;

int form_degree(const FormKey& k);  // popcount of subset

/* Weight of a homogeneous form: coeff degree + (n - k)(delta - 1). */
int form_weight(const FormKey& k, int n, int delta);

/* phi_f(omega) = df ^ omega with standard sign rules. */
Form phi_f(const MultiPoly& f, const Form& omega);

std::string form_str(const Form& omega);

/* dim E_1^{r,s} of the weight-graded Koszul complex of {d fdelta/dx_i}:
 * kernel/image corank of the weight-r slice at form degree r+s. */
int graded_piece_dims(const MultiPoly& fdelta, int r, int s);

/* True iff dim F_q[x]/(d fdelta/dx_i) = (delta-1)^n; also returns the
 * quotient dimension (finite part). */
struct RegularSequenceResult {
    bool regular = false;
    QuotientDim quotient;
    mpz_class expected;  // (delta-1)^n
};
RegularSequenceResult regular_sequence_check(const MultiPoly& fdelta);

/* dim E_t^{r,s} of the filtered complex (Omega^., phi_f), computed as
 * (Z_t^r + F_{r-1}) / (phi_f(Z_{t-1}^{r+t-1}) + F_{r-1}) with
 * Z_t^r = { omega in F_r Omega^{r+s} : phi_f(omega) in F_{r-t} }. */
int spectral_page(const MultiPoly& f, int t, int r, int s);

/* Same, optionally extracting a witness form whose class spans a nonzero
 * quotient element. */
int spectral_page_witness(const MultiPoly& f, int t, int r, int s, Form* witness);

struct PageTable {
    int t = 1;
    int r_max = 0;
    std::map<std::pair<int, int>, int> cells;  // (r, s) -> dimension
};

/* All cells with 0 <= r <= r_bound and form degree 0..n. */
PageTable page_table(const MultiPoly& f, int t, int r_bound);

struct VanishingVerdict {
    bool verified = false;  // true: no nonzero cell found up to the bound
    int e = 1;
    int r_bound = 0;
    std::optional<std::pair<int, int>> counterexample;  // (r, s)
    std::string witness;                                // nonzero class
};

/* Scans E_e^{r,s} for r <= r_bound and r+s = m (mode_m >= 0) or all
 * r+s != n (mode_m = -1).  "verified" is explicitly only up to the bound. */
VanishingVerdict check_vanishing(const MultiPoly& f, int e, int mode_m, int r_bound);

/* dim H^n = M_f through the Jacobian quotient; throws MismatchError when the
 * critical locus is not isolated. */
mpz_class h_top_dimension(const MultiPoly& f);

}  // namespace expsum

#endif
