#pragma once
#include "wpc/etale.hpp"
#include "wpc/roots.hpp"

namespace wpc {

/* closed rational interval */
struct ivl {
  Rat lo, hi;
  ivl() : lo(0), hi(0) {}
  explicit ivl(const Rat& x) : lo(x), hi(x) {}
  ivl(const Rat& a, const Rat& b) : lo(a), hi(b) {}
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

ivl iv_add(const ivl& x, const ivl& y);
ivl iv_sub(const ivl& x, const ivl& y);
ivl iv_neg(const ivl& x);
ivl iv_mul(const ivl& x, const ivl& y);
ivl iv_scale(const Rat& c, const ivl& x);

/* axis-aligned rectangle enclosing a complex value */
struct cbox {
  ivl re, im;
};

cbox cb_from_ball(const root_ball& b);
cbox cb_scalar(const Rat& c);
cbox cb_add(const cbox& x, const cbox& y);
cbox cb_sub(const cbox& x, const cbox& y);
cbox cb_neg(const cbox& x);
cbox cb_mul(const cbox& x, const cbox& y);
cbox cb_conj(const cbox& x);
cbox cb_mul_i(const cbox& x); /* multiply by the imaginary unit */
cbox cb_scale(const Rat& c, const cbox& x);

/* one complex embedding of K, given by a certified root of one component */
struct cm_embedding {
  int comp;       /* index into alg.comps */
  root_ball z;    /* the root defining the embedding */
  root_ball zbar; /* its complex conjugate */
};

/* half of the complex embeddings, one per conjugate pair: the half on
 * which the Frobenius root has positive p-adic valuation. The residual
 * freedom in identifying p-adic and complex roots is pinned by always
 * selecting the (re, im)-smaller root of each pair; conjugated flips
 * every selection to the mirror type. */
struct cm_type {
  Int p, q;
  bool conjugated = false;
  long prec = 0; /* stored ball radii are at most 2^-prec */
  std::vector<cm_embedding> phi; /* component-major order */
};

/* requires the Weil involution on a, an ordinary defining polynomial and
 * no real embeddings; components must be quadratic (the unit/positive
 * split of a higher-degree component is not identifiable from complex
 * conjugation alone, and is not supported) */
cm_type cm_type_padic(const etale_alg& a, bool conjugated = false, long prec = 128);

/* re-certify all stored balls so radii are at most 2^-prec */
void cm_refine(const etale_alg& a, cm_type& t, long prec);

/* certified rectangle containing phi(x) */
cbox embed(const etale_alg& a, const cm_embedding& phi, const alg_elt& x);

}
