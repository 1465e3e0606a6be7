#pragma once
#include "wpc/intpoly.hpp"

namespace wpc {

struct poly_factor {
  int_poly f; /* primitive, positive leading coefficient, irreducible over Q */
  int mult;
  bool operator==(const poly_factor&) const = default;
};

/* f = unit * prod f_i^(m_i); factors sorted by (degree, coefficients) */
struct poly_factorization {
  Rat unit;
  std::vector<poly_factor> factors;
};

poly_factorization factor_over_q(const int_poly& f);

}
