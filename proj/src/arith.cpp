#include "wpc/arith.hpp"
#include "wpc/errors.hpp"
#include <algorithm>
#include <map>

namespace wpc {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime_above(const Int& n) {
  Int p;
  mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
  return p;
}

/* Pollard rho with Brent cycle detection; n odd composite, not a prime power
 * of a tiny prime (trial division already ran) */
static Int rho_factor(const Int& n) {
  for (long c = 1;; c++) {
    Int x(2), y(2), d(1);
    long power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = (y * y + c) % n;
      lam++;
      Int diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

static void factor_rec(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  Int d = rho_factor(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

std::vector<std::pair<Int, int>> factor_int(const Int& n) {
  check(n != 0, "factoring zero");
  Int m = abs(n);
  std::map<Int, int> acc;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), (unsigned long)p)) {
      acc[Int(p)]++;
      m /= p;
    }
  }
  for (long p = 41; p < 100000 && m > 1; p += 2) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), (unsigned long)p)) {
      acc[Int(p)]++;
      m /= p;
    }
  }
  factor_rec(m, acc);
  return std::vector<std::pair<Int, int>>(acc.begin(), acc.end());
}

}
