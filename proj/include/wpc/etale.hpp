#pragma once
#include "wpc/intpoly.hpp"
#include "wpc/lattice.hpp"

namespace wpc {

/* Q[x]/(g) for monic squarefree g, with its decomposition into fields.
 * Elements are coordinate row vectors in the power basis 1, x, .., x^(n-1).
 * When qc != 0 the algebra carries the involution x -> qc/x, which is
 * required to permute the roots of g. */
struct etale_alg {
  int_poly g;
  Int qc = 0;
  int n = 0;
  std::vector<int_poly> comps;        /* monic irreducible factors, sorted */
  std::vector<std::vector<Rat>> idem; /* matching orthogonal idempotents */
  std::vector<Int> trpow;             /* Tr(x^k) for k = 0 .. 2n-2 */
  std::vector<Rat> xinv;              /* coordinates of x^(-1), if g(0) != 0 */
};

using alg_elt = std::vector<Rat>;

etale_alg etale_make(const int_poly& g);
/* also installs the involution x -> q/x; q > 0 */
etale_alg etale_make_weil(const int_poly& g, const Int& q);

alg_elt el_zero(const etale_alg& a);
alg_elt el_one(const etale_alg& a);
alg_elt el_gen(const etale_alg& a);
alg_elt el_scalar(const etale_alg& a, const Rat& c);
alg_elt el_from_poly(const etale_alg& a, const rat_poly& f);
alg_elt el_from_poly(const etale_alg& a, const int_poly& f);
rat_poly el_poly(const alg_elt& x);

bool el_is_zero(const alg_elt& x);
alg_elt el_add(const alg_elt& x, const alg_elt& y);
alg_elt el_sub(const alg_elt& x, const alg_elt& y);
alg_elt el_neg(const alg_elt& x);
alg_elt el_scale(const alg_elt& x, const Rat& c);
alg_elt el_mul(const etale_alg& a, const alg_elt& x, const alg_elt& y);
alg_elt el_pow(const etale_alg& a, const alg_elt& x, long e); /* e < 0 needs a unit */

bool el_is_unit(const etale_alg& a, const alg_elt& x);
alg_elt el_inv(const etale_alg& a, const alg_elt& x); /* throws on zero divisors */
alg_elt el_conj(const etale_alg& a, const alg_elt& x); /* needs qc != 0 */

Rat el_trace(const etale_alg& a, const alg_elt& x);
Rat el_norm(const etale_alg& a, const alg_elt& x);

/* row i holds the coordinates of x^i * u, so v -> v M_u is multiplication */
rat_mat mult_matrix(const etale_alg& a, const alg_elt& u);
/* Gram matrix Tr(x^(i+j)) of the trace pairing on the power basis */
int_mat trace_form(const etale_alg& a);

/* reduction of an element into the i-th component Q[x]/(comps[i]) */
rat_poly el_project(const etale_alg& a, int i, const alg_elt& x);
/* image in K of an element of the i-th component, supported on e_i */
alg_elt el_lift_component(const etale_alg& a, int i, const rat_poly& f);

}
