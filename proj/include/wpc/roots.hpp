#pragma once
#include "wpc/intpoly.hpp"

namespace wpc {

/* certified enclosing disk for one complex root; centers and radii are
 * exact rationals. Real roots have im == 0 exactly and conj == own index;
 * complex roots come in conjugate pairs linked by conj. */
struct root_ball {
  Rat re, im, rad;
  bool is_real = false;
  int conj = -1;
};

/* all roots of a squarefree polynomial, sorted by (re, im); every ball is
 * certified to contain exactly one root and they are pairwise disjoint.
 * Radii are at most 2^-prec_bits. Working precision doubles as needed up
 * to the cap (WPC_PRECISION_CAP env, default 8192 bits); running into the
 * cap raises an indeterminate error. */
std::vector<root_ball> complex_roots(const int_poly& f, long prec_bits);

/* number of real roots of a squarefree polynomial (Sturm) */
int count_real_roots(const int_poly& f);

/* rational u >= sqrt(x) with u - sqrt(x) < 2^-bits, for x >= 0 */
Rat sqrt_upper(const Rat& x, long bits);
/* rational l <= sqrt(x), nonnegative, with sqrt(x) - l < 2^-bits */
Rat sqrt_lower(const Rat& x, long bits);

long precision_cap();

}
