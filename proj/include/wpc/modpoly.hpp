#pragma once
#include "wpc/intpoly.hpp"

namespace wpc {

/* polynomials over F_p for word-sized p, coefficients low degree first in
 * [0, p); the zero polynomial is the empty vector */
struct fp_poly {
  unsigned long p = 0;
  std::vector<unsigned long> c;
  int deg() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize() { while (!c.empty() && c.back() == 0) c.pop_back(); }
  bool operator==(const fp_poly&) const = default;
};

unsigned long fp_inv(unsigned long a, unsigned long p);
fp_poly fp_reduce(const int_poly& f, unsigned long p);
fp_poly fp_make(unsigned long p, std::vector<unsigned long> c);
fp_poly fp_add(const fp_poly& a, const fp_poly& b);
fp_poly fp_sub(const fp_poly& a, const fp_poly& b);
fp_poly fp_mul(const fp_poly& a, const fp_poly& b);
fp_poly fp_monic(const fp_poly& a);
void fp_divmod(const fp_poly& a, const fp_poly& b, fp_poly& q, fp_poly& r);
fp_poly fp_mod(const fp_poly& a, const fp_poly& m);
fp_poly fp_gcd(fp_poly a, fp_poly b); /* monic */
fp_poly fp_powmod(const fp_poly& base, const Int& e, const fp_poly& m);
fp_poly fp_derivative(const fp_poly& f);
bool fp_is_squarefree(const fp_poly& f);

/* monic irreducible factors of a monic squarefree f, sorted by (degree,
 * lexicographic coefficients); deterministic */
std::vector<fp_poly> fp_factor_squarefree(const fp_poly& f);

bool fp_is_irreducible(const fp_poly& f);

}
