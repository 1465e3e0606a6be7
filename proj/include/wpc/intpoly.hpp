#pragma once
#include "wpc/intmat.hpp"
#include <vector>
#include <string>

namespace wpc {

/* dense polynomials, coefficients stored low degree first; the zero
 * polynomial has an empty coefficient vector */
struct int_poly {
  std::vector<Int> c;
  int_poly() = default;
  int_poly(std::initializer_list<long> v) : c(v.begin(), v.end()) { normalize(); }
  explicit int_poly(std::vector<Int> v) : c(std::move(v)) { normalize(); }
  int deg() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  const Int& lc() const { return c.back(); }
  Int coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : Int(0); }
  void normalize() { while (!c.empty() && c.back() == 0) c.pop_back(); }
  bool operator==(const int_poly&) const = default;
};

struct rat_poly {
  std::vector<Rat> c;
  rat_poly() = default;
  explicit rat_poly(std::vector<Rat> v) : c(std::move(v)) { normalize(); }
  int deg() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  const Rat& lc() const { return c.back(); }
  Rat coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : Rat(0); }
  void normalize() { while (!c.empty() && c.back() == 0) c.pop_back(); }
  bool operator==(const rat_poly&) const = default;
};

int_poly add(const int_poly& a, const int_poly& b);
int_poly sub(const int_poly& a, const int_poly& b);
int_poly mul(const int_poly& a, const int_poly& b);
int_poly derivative(const int_poly& f);
Int eval(const int_poly& f, const Int& x);
Rat eval(const int_poly& f, const Rat& x);
Int content(const int_poly& f);            /* gcd of coefficients, >= 0 */
int_poly primitive_part(const int_poly& f); /* positive leading coefficient */

rat_poly to_rat(const int_poly& f);
int_poly to_int(const rat_poly& f); /* throws if any denominator != 1 */
rat_poly add(const rat_poly& a, const rat_poly& b);
rat_poly sub(const rat_poly& a, const rat_poly& b);
rat_poly mul(const rat_poly& a, const rat_poly& b);
rat_poly scale(const rat_poly& a, const Rat& s);
/* division with remainder, b != 0 */
void divmod(const rat_poly& a, const rat_poly& b, rat_poly& q, rat_poly& r);
rat_poly gcd_monic(rat_poly a, rat_poly b); /* monic gcd over Q */
Rat eval(const rat_poly& f, const Rat& x);

/* gcd over Z of primitive parts, positive leading coefficient */
int_poly gcd_z(const int_poly& a, const int_poly& b);

bool is_squarefree(const int_poly& f); /* deg gcd(f, f') == 0 */

Int resultant(const int_poly& a, const int_poly& b);
Int discriminant(const int_poly& f);

/* text form: comma separated coefficients, constant term first */
int_poly parse_int_poly(const std::string& s);
std::string format_int_poly(const int_poly& f);

}
