#include "wpc/rfun.hpp"
#include "wpc/errors.hpp"

namespace wpc {

static Rat pow2(long e) {
  if (e >= 0) return Rat(Int(1) << (unsigned long)e);
  return Rat(Int(1), Int(1) << (unsigned long)(-e));
}

/* 2 atanh(t) for |t| <= 1/3 + ulp, everything scaled by 2^w with floor
 * rounding; per-term error stays under a few ulps, see the rlog margin */
static Int atanh2_fp(const Int& t, long w) {
  Int t2 = t * t >> w;
  Int p = t, s = 0;
  long k = 0;
  while (true) {
    s += p / (2 * k + 1);
    if (abs(p) <= 1) break;
    check(k < w, "atanh series did not converge");
    p = p * t2 >> w;
    k++;
  }
  return 2 * s;
}

ivl rlog(const Rat& x, long bits) {
  check(x > 0, "log of a nonpositive value");
  long w = bits + 64;
  /* x = y 2^e with y in [3/4, 3/2); the bit-length gap lands within two
   * doublings of the target window */
  long e = (long)mpz_sizeinbase(x.get_num().get_mpz_t(), 2) -
           (long)mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
  Rat y = x * pow2(-e);
  while (y >= Rat(3, 2)) { y /= 2; e++; }
  while (y < Rat(3, 4)) { y *= 2; e--; }
  Int one = Int(1) << (unsigned long)w;
  Int yf = (y.get_num() << (unsigned long)w) / y.get_den();
  Int t = ((yf - one) << (unsigned long)w) / (yf + one);
  Int v = atanh2_fp(t, w);
  if (e != 0) v += e * atanh2_fp(one / 3, w);
  /* ulp margin: a few ulps per series term over at most w terms, for the
   * main term and for each copy of log 2 */
  Int m = Int(8 * w + 16) * (abs(Int(e)) + 2);
  Rat lo(v - m, one), hi(v + m, one);
  lo.canonicalize();
  hi.canonicalize();
  return ivl(lo, hi);
}

ivl rlog_iv(const ivl& x, long bits) {
  check(x.lo > 0, "log over an interval touching zero");
  return ivl(rlog(x.lo, bits).lo, rlog(x.hi, bits).hi);
}

Rat rexp_upper(const Rat& x, long bits) {
  check(x >= 0, "exp bound needs x >= 0");
  /* halve into [0, 1], bound the series there, square back up */
  long h = 0;
  Rat y = x;
  while (y > 1) { y /= 2; h++; check(h < 64, "exp bound argument too large"); }
  Rat eps = pow2(-bits);
  Rat term = 1, sum = 0;
  long k = 0;
  while (true) {
    sum += term;
    k++;
    term *= y;
    term /= k;
    if (term <= eps && y < k) break;
    check(k < 100000, "exp series did not converge");
  }
  /* remaining terms are dominated by a geometric series with ratio y/k < 1 */
  sum += term / (1 - y / k);
  for (long i = 0; i < h; i++) sum *= sum;
  return sum;
}

Rat root_upper(const Rat& x, unsigned long k) {
  check(x > 0 && k >= 1, "root bound domain");
  if (k == 1) return x;
  Int num = x.get_num(), den = x.get_den();
  /* x^(1/k) = (num den^(k-1))^(1/k) / den */
  Int m = num;
  for (unsigned long i = 0; i + 1 < k; i++) m *= den;
  Int r;
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
  Rat out(r + 1, den);
  out.canonicalize();
  return out;
}

}
