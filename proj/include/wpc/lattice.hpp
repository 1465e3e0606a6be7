#pragma once
#include "wpc/intmat.hpp"

namespace wpc {

/* Full-rank lattice in Q^n. Rows of b divided by den form the basis.
 * Canonical: b is in row HNF with positive pivots and den > 0 with
 * gcd(den, all entries of b) = 1, so equal lattices compare equal. */
struct zlattice {
  int n = 0;
  int_mat b;
  Int den = 1;

  bool operator==(const zlattice&) const = default;
};

/* build from a generating set of rows (may have more than n rows);
 * throws bad_input if the rows do not span Q^n */
zlattice lattice_make(int n, const int_mat& rows, const Int& den);
zlattice lattice_make(const rat_mat& rows);

/* standard lattices */
zlattice lattice_zn(int n);

rat_mat lattice_basis_q(const zlattice& l);     /* b / den */
rat_mat lattice_inv_q(const zlattice& l);       /* (b / den)^(-1) */
Rat lattice_covolume(const zlattice& l);        /* det(b)/den^n, positive */

zlattice lattice_sum(const zlattice& a, const zlattice& b);
zlattice lattice_intersect(const zlattice& a, const zlattice& b);

/* dual under the standard dot product: {x : x . y in Z for all y} */
zlattice lattice_dual(const zlattice& l);

/* {x in Q^n : x N in Z^m} for a rational n x m matrix N of rank n */
zlattice lattice_preimage(const rat_mat& n_map);

/* generalized index [a : b] = covol(b)/covol(a); integer iff b subset a */
Rat lattice_index(const zlattice& a, const zlattice& b);

bool lattice_contains(const zlattice& l, const std::vector<Rat>& v);
bool lattice_contains(const zlattice& l, const zlattice& sub);

zlattice lattice_scale(const zlattice& l, const Rat& c); /* c != 0 */

/* coordinates of v in the basis rows of l (entries rational) */
std::vector<Rat> lattice_coords(const zlattice& l, const std::vector<Rat>& v);

}
