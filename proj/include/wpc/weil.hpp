#pragma once
#include "wpc/etale.hpp"
#include "wpc/order.hpp"

namespace wpc {

/* the two regimes the module category covers: ordinary varieties over
 * F_q, and varieties over a prime field whose Frobenius has no real
 * eigenvalue (the functor is contravariant in the second case) */
enum class regime { ordinary, cs_prime };

/* everything derived from (g, q, r) that later stages share */
struct class_spec {
  int_poly g;
  Int q, p;
  int a = 1; /* q = p^a */
  long r = 1;
  regime reg = regime::ordinary;
  etale_alg alg;   /* with involution x -> q/x */
  ring_order rr;   /* Z[x, q/x] */
  ring_order omax; /* maximal order */
  bool bass = false;
};

/* true iff g is monic of even degree, satisfies the q-symmetry
 * a_(n-k) q^(n-k) = g(0) a_k, and every complex root z has z zbar = q
 * (certified by root enclosures). g need not be squarefree. */
bool validate_weil(const int_poly& g, const Int& q);

/* true iff exactly half of the roots of g are p-adic units, read off the
 * Newton polygon. Requires validate_weil(g, q) and q = p^a. */
bool is_ordinary(const int_poly& g, const Int& q);

/* true iff x^2 - p does not divide g; p must be prime */
bool cs_eligible(const int_poly& g, const Int& p);

/* validate g, pick the regime (ordinary preferred), and assemble the
 * algebra, the order Z[x, q/x], the maximal order and the Bass flag.
 * g must be squarefree here; inputs fitting neither regime raise
 * not_supported with both diagnostics. */
class_spec make_spec(const int_poly& g, const Int& q, long r);

}
