#include "wpc/weil.hpp"

#include "wpc/arith.hpp"
#include "wpc/errors.hpp"
#include "wpc/padic.hpp"
#include "wpc/roots.hpp"

namespace wpc {

/* q = p^a with p prime */
static void prime_power(const Int& q, Int& p, int& a) {
  if (q < 2) fail(errkind::bad_input, "q must be a prime power");
  auto fs = factor_int(q);
  if (fs.size() != 1) fail(errkind::bad_input, "q must be a prime power");
  p = fs[0].first;
  a = fs[0].second;
}

struct disk {
  Rat re, im, rad;
};

static bool disk_meets(const disk& x, const disk& y) {
  Rat dre = x.re - y.re, dim = x.im - y.im, s = x.rad + y.rad;
  return dre * dre + dim * dim <= s * s;
}

/* squarefree part, monic */
static int_poly squarefree_part(const int_poly& g) {
  int_poly d = gcd_z(g, derivative(g));
  if (d.deg() == 0) return g;
  rat_poly quo, rem;
  divmod(to_rat(g), to_rat(d), quo, rem);
  check(rem.is_zero(), "squarefree part division not exact");
  return to_int(quo);
}

/* 1 yes, 0 no, -1 need sharper balls: does z -> q/z send every root to
 * its complex conjugate? */
static int roots_conjugate_under_inversion(const std::vector<root_ball>& balls,
                                           const Int& q) {
  for (int i = 0; i < (int)balls.size(); i++) {
    const root_ball& b = balls[i];
    /* the image of |z - c| <= r under z -> q/z is the disk with center
     * q cbar / (|c|^2 - r^2) and radius q r / (|c|^2 - r^2) */
    Rat den = b.re * b.re + b.im * b.im - b.rad * b.rad;
    if (den <= 0) return -1;
    disk img{Rat(q) * b.re / den, Rat(q) * (-b.im) / den, Rat(q) * b.rad / den};
    img.re.canonicalize();
    img.im.canonicalize();
    img.rad.canonicalize();
    int hit = -1;
    for (int j = 0; j < (int)balls.size(); j++) {
      if (!disk_meets(img, disk{balls[j].re, balls[j].im, balls[j].rad})) continue;
      if (hit >= 0) return -1; /* ambiguous, refine */
      hit = j;
    }
    /* the image disk holds the root q/z, so some ball must meet it */
    check(hit >= 0, "inverted root ball misses every ball");
    if (hit != b.conj) return 0;
  }
  return 1;
}

bool validate_weil(const int_poly& g, const Int& q) {
  if (g.is_zero() || g.lc() != 1) fail(errkind::bad_input, "g must be monic");
  if (q < 1) fail(errkind::bad_input, "q must be positive");
  int n = g.deg();
  if (n == 0 || n % 2 != 0) return false;
  Int g0 = g.coeff(0);
  if (g0 == 0) return false;
  /* the root multiset must be stable under z -> q/z: equivalently
   * x^n g(q/x) = g(0) g(x) */
  for (int k = 0; k <= n; k++) {
    Int qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), n - k);
    if (g.coeff(n - k) * qp != g0 * g.coeff(k)) return false;
  }
  /* now q/z permutes the roots; |z|^2 = q for all of them iff that
   * permutation is complex conjugation */
  int_poly f = squarefree_part(g);
  for (long prec = 128;; prec *= 2) {
    if (prec > precision_cap())
      fail(errkind::indeterminate, "root certification hit the precision cap");
    int verdict = roots_conjugate_under_inversion(complex_roots(f, prec), q);
    if (verdict >= 0) return verdict == 1;
  }
}

bool is_ordinary(const int_poly& g, const Int& q) {
  Int p;
  int a;
  prime_power(q, p, a);
  if (g.is_zero() || g.coeff(0) == 0) fail(errkind::bad_input, "g(0) must be nonzero");
  np_result np = newton_polygon(g, p);
  for (const auto& [val, cnt] : np.valuations)
    if (val == 0) return cnt == g.deg() / 2;
  return false;
}

bool cs_eligible(const int_poly& g, const Int& p) {
  if (!is_prime(p)) fail(errkind::bad_input, "p must be prime");
  if (g.is_zero()) fail(errkind::bad_input, "g must be nonzero");
  int_poly d(std::vector<Int>{-p, 0, 1});
  rat_poly quo, rem;
  divmod(to_rat(g), to_rat(d), quo, rem);
  return !rem.is_zero();
}

class_spec make_spec(const int_poly& g, const Int& q, long r) {
  if (r < 1) fail(errkind::bad_input, "r must be at least 1");
  if (!validate_weil(g, q)) fail(errkind::bad_input, "g is not a q-Weil polynomial");
  class_spec s;
  s.g = g;
  s.q = q;
  s.r = r;
  prime_power(q, s.p, s.a);
  if (!is_squarefree(g))
    fail(errkind::not_supported, "g must be squarefree (pass repeated factors via r)");
  if (is_ordinary(g, q)) {
    s.reg = regime::ordinary;
  } else {
    std::string why = "not ordinary (slope-0 multiplicity is not half the degree)";
    if (s.a != 1)
      fail(errkind::not_supported, why + "; and q is not prime");
    if (!cs_eligible(g, s.p))
      fail(errkind::not_supported, why + "; and x^2 - p divides g (real Frobenius root)");
    s.reg = regime::cs_prime;
  }
  s.alg = etale_make_weil(g, q);
  s.rr = equation_order_weil(s.alg);
  s.omax = maximal_order(s.alg);
  s.bass = order_is_bass(s.alg, s.rr, s.omax);
  return s;
}

}
