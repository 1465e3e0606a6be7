#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wpc/etale.hpp"
#include "wpc/errors.hpp"

using namespace wpc;

struct lcg {
  unsigned long long s;
  explicit lcg(unsigned long long seed) : s(seed) {}
  long next(long lo, long hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + (long)((s >> 33) % (unsigned long long)(hi - lo + 1));
  }
};

static alg_elt random_elt(lcg& r, const etale_alg& a) {
  alg_elt v(a.n);
  for (auto& c : v) {
    Rat x(r.next(-9, 9), r.next(1, 4));
    x.canonicalize();
    c = x;
  }
  return v;
}

TEST_CASE("imaginary quadratic with involution") {
  etale_alg k = etale_make_weil(int_poly({4, -1, 1}), Int(4));
  alg_elt f = el_gen(k);
  CHECK(el_conj(k, f) == el_sub(el_one(k), f)); /* conj(x) = 1 - x */
  CHECK(el_trace(k, f) == 1);
  CHECK(el_norm(k, f) == 4);
  CHECK(trace_form(k) == int_mat(2, 2, {2, 1, 1, -7}));

  /* y = (2x - 1)/15 is purely imaginary with y^2 = -1/15 */
  alg_elt y = el_scale(el_sub(el_scale(f, Rat(2)), el_one(k)), Rat(1, 15));
  CHECK(el_conj(k, y) == el_neg(y));
  CHECK(el_mul(k, y, y) == el_scalar(k, Rat(-1, 15)));

  CHECK(el_mul(k, f, el_inv(k, f)) == el_one(k));
  CHECK(k.comps.size() == 1);
  CHECK(el_pow(k, f, 3) == el_mul(k, f, el_mul(k, f, f)));
  CHECK(el_pow(k, f, -2) == el_inv(k, el_mul(k, f, f)));
}

TEST_CASE("sextic weil algebra") {
  etale_alg k = etale_make_weil(parse_int_poly("8,-4,4,-2,2,-1,1"), Int(2));
  alg_elt f = el_gen(k);
  CHECK(el_mul(k, el_conj(k, f), f) == el_scalar(k, Rat(2)));
  CHECK(el_trace(k, f) == 1);
  CHECK(el_norm(k, f) == 8);
  CHECK(k.comps.size() == 1);
  lcg r(5);
  for (int it = 0; it < 30; it++) {
    alg_elt u = random_elt(r, k), v = random_elt(r, k);
    CHECK(el_conj(k, el_conj(k, u)) == u);
    CHECK(el_conj(k, el_mul(k, u, v)) == el_mul(k, el_conj(k, u), el_conj(k, v)));
    CHECK(el_conj(k, el_add(u, v)) == el_add(el_conj(k, u), el_conj(k, v)));
    CHECK(el_trace(k, el_add(u, v)) == el_trace(k, u) + el_trace(k, v));
    CHECK(el_norm(k, el_mul(k, u, v)) == el_norm(k, u) * el_norm(k, v));
    /* trace is conjugation invariant */
    CHECK(el_trace(k, el_conj(k, u)) == el_trace(k, u));
  }
}

TEST_CASE("split quartic components") {
  etale_alg k = etale_make_weil(int_poly({169, 39, 8, 3, 1}), Int(13));
  REQUIRE(k.comps.size() == 2);
  CHECK(k.comps[0] == int_poly({13, -3, 1}));
  CHECK(k.comps[1] == int_poly({13, 6, 1}));
  alg_elt e0 = k.idem[0], e1 = k.idem[1];
  CHECK(el_add(e0, e1) == el_one(k));
  CHECK(el_mul(k, e0, e1) == el_zero(k));
  CHECK(el_mul(k, e0, e0) == e0);
  /* projections of the idempotents are 1 and 0 */
  CHECK(el_project(k, 0, e0) == rat_poly{{Rat(1)}});
  CHECK(el_project(k, 1, e0).is_zero());
  /* idempotents are conjugation stable here since each component is */
  CHECK(el_conj(k, e0) == e0);

  lcg r(9);
  for (int it = 0; it < 20; it++) {
    alg_elt u = random_elt(r, k);
    alg_elt back =
        el_add(el_lift_component(k, 0, el_project(k, 0, u)),
               el_lift_component(k, 1, el_project(k, 1, u)));
    CHECK(back == u);
    /* multiplication is componentwise */
    alg_elt v = random_elt(r, k);
    rat_poly p0 = el_project(k, 0, el_mul(k, u, v));
    rat_poly q, r0;
    divmod(mul(el_project(k, 0, u), el_project(k, 0, v)), to_rat(k.comps[0]), q, r0);
    CHECK(p0 == r0);
  }
  /* idempotents are zero divisors */
  CHECK(!el_is_unit(k, e0));
  CHECK_THROWS_AS(el_inv(k, e0), wpc_error);
}

TEST_CASE("mixed real and complex components") {
  /* (x^2 - 2)(x^2 + 2x + 2), all roots of absolute value sqrt(2) */
  int_poly g = mul(int_poly({-2, 0, 1}), int_poly({2, 2, 1}));
  etale_alg k = etale_make_weil(g, Int(2));
  CHECK(k.comps.size() == 2);
  alg_elt f = el_gen(k);
  CHECK(el_mul(k, el_conj(k, f), f) == el_scalar(k, Rat(2)));
  lcg r(13);
  for (int it = 0; it < 10; it++) {
    alg_elt u = random_elt(r, k);
    CHECK(el_conj(k, el_conj(k, u)) == u);
  }
}

TEST_CASE("rejects asymmetric weil input") {
  CHECK_THROWS_AS(etale_make_weil(int_poly({3, -1, 1}), Int(4)), wpc_error);
  CHECK_THROWS_AS(etale_make_weil(int_poly({0, 1, 1}), Int(2)), wpc_error);
  CHECK_THROWS_AS(etale_make(int_poly({1, 2, 1})), wpc_error); /* not squarefree */
  CHECK_THROWS_AS(etale_make(int_poly({1, 0, 2})), wpc_error); /* not monic */
}

TEST_CASE("plain algebra without involution") {
  etale_alg k = etale_make(int_poly({-6, 11, -6, 1})); /* (x-1)(x-2)(x-3) */
  CHECK(k.comps.size() == 3);
  alg_elt f = el_gen(k);
  CHECK(el_trace(k, f) == 6);
  CHECK(el_norm(k, f) == 6);
  CHECK_THROWS_AS(el_conj(k, f), wpc_error);
  /* x - 1 is a zero divisor, x - 4 is a unit */
  CHECK(!el_is_unit(k, el_sub(f, el_one(k))));
  CHECK(el_is_unit(k, el_sub(f, el_scalar(k, Rat(4)))));
  CHECK(el_norm(k, el_sub(f, el_scalar(k, Rat(4)))) == (1 - 4) * (2 - 4) * (3 - 4));
}

TEST_CASE("degree one weil algebra") {
  etale_alg k = etale_make_weil(int_poly({-2, 1}), Int(4));
  CHECK(k.n == 1);
  alg_elt x = el_from_poly(k, int_poly({0, 1}));
  CHECK(x == el_scalar(k, Rat(2)));
  CHECK(el_conj(k, x) == x);
  CHECK(el_norm(k, x) == 2);
}
