#pragma once
#include "wpc/etale.hpp"

namespace wpc {

/* an order: a full-rank lattice in the algebra that is a subring with 1 */
struct ring_order {
  zlattice l;
  bool operator==(const ring_order&) const = default;
};

/* fractional ideals and more general full-rank lattices are plain zlattice
 * values in power-basis coordinates */

std::vector<alg_elt> lattice_elements(const zlattice& l);
alg_elt lattice_element(const zlattice& l, int i);

/* Z-span of the given elements; must have full rank */
zlattice span_of(const etale_alg& a, const std::vector<alg_elt>& gens);

bool lattice_is_order(const etale_alg& a, const zlattice& l);
ring_order order_from_lattice(const etale_alg& a, const zlattice& l);

/* deterministic total order on canonical forms, for stable sorting */
bool lattice_less(const zlattice& x, const zlattice& y);

/* Z[x, q/x], needs the involution parameter */
ring_order equation_order_weil(const etale_alg& a);

/* componentwise round-2 maximal order of the whole algebra */
ring_order maximal_order(const etale_alg& a);

/* det Tr(b_i b_j) over a lattice basis */
Rat lattice_disc(const etale_alg& a, const zlattice& l);
Int order_disc(const etale_alg& a, const ring_order& s);

zlattice ideal_mul(const etale_alg& a, const zlattice& i, const zlattice& j);
zlattice ideal_pow(const etale_alg& a, const zlattice& i, long e); /* e >= 1 */
/* (i : j) = {x : x j subset i} */
zlattice ideal_colon(const etale_alg& a, const zlattice& i, const zlattice& j);
/* {x : Tr(x i) subset Z} */
zlattice trace_dual(const etale_alg& a, const zlattice& i);
/* image under the involution */
zlattice conj_lattice(const etale_alg& a, const zlattice& i);

zlattice principal_ideal(const etale_alg& a, const ring_order& s, const alg_elt& x);
zlattice ideal_from_gens(const etale_alg& a, const ring_order& s,
                         const std::vector<alg_elt>& gens);

ring_order multiplicator_ring(const etale_alg& a, const zlattice& i);

/* i (s : i) == s */
bool ideal_is_invertible(const etale_alg& a, const ring_order& s, const zlattice& i);
/* the trace dual of s is an invertible s-ideal */
bool order_is_gorenstein(const etale_alg& a, const ring_order& s);
/* every order between s and the maximal order is Gorenstein */
bool order_is_bass(const etale_alg& a, const ring_order& s, const ring_order& maximal);

/* all orders s' with s subset s' subset maximal, sorted by decreasing
 * index [maximal : s'], so s comes first and maximal last */
std::vector<ring_order> over_orders(const etale_alg& a, const ring_order& s,
                                    const ring_order& maximal);

/* maximal ideals of s above the prime p */
struct prime_ideal {
  zlattice l;
  int res_deg; /* [s/m : F_p] */
  bool operator==(const prime_ideal&) const = default;
};
std::vector<prime_ideal> primes_above(const etale_alg& a, const ring_order& s, const Int& p);

}
