#pragma once
#include "wpc/order.hpp"
#include <optional>
#include <string>

namespace wpc {

/* Units of an order in a totally imaginary algebra with involution.
 * fund spans a full-rank subgroup of the free part when certified; its
 * index in the full unit group is not verified, which is recorded by
 * possibly_nonmaximal. Principality decisions stay definitive either
 * way: any full-rank subgroup bounds the search region. */
struct unit_group {
  ring_order s;
  std::vector<alg_elt> torsion; /* all roots of unity in s */
  std::vector<alg_elt> fund;    /* multiplicatively independent units */
  int rank = 0;                 /* free rank of the unit group */
  bool certified = false;       /* fund reaches the free rank */
  bool possibly_nonmaximal = false;
  std::vector<Rat> rho; /* covering radius of the unit logs per conjugate place */
};

unit_group find_units(const etale_alg& a, const ring_order& s, int effort = 1);

/* Tr(b_i conj(b_j)) over the basis of l; positive definite */
rat_mat t2_gram(const etale_alg& a, const zlattice& l);

/* x with x j == i, or nullopt; nullopt is definitive when u.certified
 * and u is the unit group of the multiplicator ring of j */
std::optional<alg_elt> ideal_quotient_gen(const etale_alg& a, const unit_group& u,
                                          const zlattice& i, const zlattice& j,
                                          int effort = 1);

/* generator of i over its own multiplicator ring, or a definitive nullopt */
std::optional<alg_elt> is_principal(const etale_alg& a, const zlattice& i,
                                    int effort = 1);

/* x with x j == i; nullopt when the multiplicator rings differ or no
 * generator exists */
std::optional<alg_elt> is_isomorphic_ideals(const etale_alg& a, const zlattice& i,
                                            const zlattice& j, int effort = 1);

/* primitive integral representative of the class of i, reduced by the
 * shortest vectors found; deterministic for a given input */
zlattice class_representative(const etale_alg& a, const zlattice& i);
std::string ideal_class_token(const etale_alg& a, const zlattice& i);

struct picard_group {
  ring_order s;
  unit_group units;
  std::vector<Int> invariants;        /* cyclic orders > 1, d1 | d2 | .. */
  std::vector<zlattice> generators;   /* ideal generating each cyclic factor */
  std::vector<zlattice> elements;     /* reduced representative per class */
  std::vector<std::vector<Int>> dlog; /* exponents of each class over generators */
  Int size() const;
};

picard_group picard(const etale_alg& a, const ring_order& s, int effort = 1);

/* position of the class of i in pic.elements */
int class_index(const etale_alg& a, const picard_group& pic, const zlattice& i,
                int effort = 1);

/* |Pic(O)| |(O/f)^x| / |(S/f)^x| for the conductor f = (S : O); equals
 * |Pic(S)| [O^x : S^x], so it is an integer multiple of |Pic(S)| */
Int conductor_class_ratio(const etale_alg& a, const ring_order& s, int effort = 1);

/* ideal class monoid of a Bass order: one Picard group per over-order */
struct icm_entry {
  ring_order s;
  picard_group pic;
};
std::vector<icm_entry> icm(const etale_alg& a, const ring_order& r, int effort = 1);

}
