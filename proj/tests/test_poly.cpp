#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wpc/factorq.hpp"
#include "wpc/modpoly.hpp"
#include "wpc/padic.hpp"
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

static int_poly random_poly(lcg& r, int maxdeg) {
  std::vector<Int> c;
  int d = (int)r.next(0, maxdeg);
  for (int i = 0; i <= d; i++) c.push_back(r.next(-8, 8));
  return int_poly(std::move(c));
}

TEST_CASE("parse and format round trip") {
  int_poly g = parse_int_poly("8,-4,4,-2,2,-1,1");
  CHECK(g.deg() == 6);
  CHECK(g.coeff(0) == 8);
  CHECK(g.coeff(5) == -1);
  CHECK(format_int_poly(g) == "8,-4,4,-2,2,-1,1");
  CHECK(parse_int_poly(" 1 , 2 ") == int_poly({1, 2}));
  CHECK_THROWS_AS(parse_int_poly("1,,2"), wpc_error);
  CHECK_THROWS_AS(parse_int_poly("x"), wpc_error);
}

TEST_CASE("basic arithmetic") {
  int_poly a{-1, 1}, b{1, 1};
  CHECK(mul(a, b) == int_poly({-1, 0, 1}));
  CHECK(add(a, b) == int_poly({0, 2}));
  CHECK(sub(a, a).is_zero());
  CHECK(derivative(int_poly({4, -1, 0, 2})) == int_poly({-1, 0, 6}));
  CHECK(eval(int_poly({4, -1, 1}), Int(3)) == 10);
  Rat half(1, 2);
  CHECK(eval(int_poly({4, -1, 1}), half) == Rat(15, 4));
}

TEST_CASE("content and primitive part") {
  CHECK(content(int_poly({6, 4})) == 2);
  CHECK(primitive_part(int_poly({6, 4})) == int_poly({3, 2}));
  CHECK(primitive_part(int_poly({0, -2})) == int_poly({0, 1}));
  CHECK(content(int_poly({})) == 0);
}

TEST_CASE("gcd over Z") {
  int_poly f{-1, 0, 1}; /* x^2 - 1 */
  int_poly a = mul(f, int_poly({2, 1}));
  int_poly b = mul(f, int_poly({3, 1}));
  CHECK(gcd_z(a, b) == f);
  CHECK(gcd_z(int_poly({2}), int_poly({0, 4})) == int_poly({1}));
}

TEST_CASE("rational division") {
  lcg r(7);
  for (int it = 0; it < 200; it++) {
    rat_poly a = to_rat(random_poly(r, 6));
    rat_poly b = to_rat(random_poly(r, 4));
    if (b.is_zero()) continue;
    rat_poly q, rem;
    divmod(a, b, q, rem);
    CHECK(rem.deg() < b.deg());
    CHECK(add(mul(q, b), rem) == a);
  }
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(int_poly({-2, 1}), int_poly({1, 0, 1})) == 5);
  CHECK(resultant(int_poly({-1, 0, 1}), int_poly({-4, 0, 1})) == 9);
  CHECK(discriminant(int_poly({4, -1, 1})) == -15);
  CHECK(discriminant(int_poly({-1, 0, 1})) == 4);
  /* shares the factor x - 1 */
  CHECK(resultant(mul(int_poly({-1, 1}), int_poly({5, 1})),
                  mul(int_poly({-1, 1}), int_poly({7, 1}))) == 0);
  lcg r(11);
  for (int it = 0; it < 60; it++) {
    int_poly f = random_poly(r, 3), g1 = random_poly(r, 2), g2 = random_poly(r, 2);
    if (f.is_zero() || g1.is_zero() || g2.is_zero()) continue;
    CHECK(resultant(f, mul(g1, g2)) == resultant(f, g1) * resultant(f, g2));
  }
}

TEST_CASE("squarefree detection") {
  CHECK(!is_squarefree(int_poly({0, 0, 1})));
  CHECK(is_squarefree(int_poly({2, -3, 1})));
  CHECK(is_squarefree(parse_int_poly("8,-4,4,-2,2,-1,1")));
  CHECK(!is_squarefree(mul(int_poly({-1, 1}), int_poly({-1, 1}))));
}

TEST_CASE("arithmetic mod p") {
  fp_poly f = fp_reduce(int_poly({4, -1, 1}), 5); /* x^2 + 4x + 4 mod 5 */
  CHECK(f.c == std::vector<unsigned long>({4, 4, 1}));
  CHECK(fp_inv(3, 7) == 5);
  fp_poly x = fp_make(5, {0, 1});
  fp_poly m = fp_make(5, {1, 0, 1});
  /* x^5 = x on the Frobenius orbit mod x^2 + 1 */
  CHECK(fp_powmod(x, Int(5), m) == x);
  fp_poly q, rem;
  fp_divmod(fp_make(5, {1, 2, 3, 4}), fp_make(5, {2, 1}), q, rem);
  CHECK(fp_add(fp_mul(q, fp_make(5, {2, 1})), rem) == fp_make(5, {1, 2, 3, 4}));
}

TEST_CASE("factoring mod p") {
  fp_poly f = fp_make(5, {1, 0, 1}); /* (x+2)(x+3) mod 5 */
  auto fs = fp_factor_squarefree(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == fp_make(5, {2, 1}));
  CHECK(fs[1] == fp_make(5, {3, 1}));
  CHECK(!fp_is_irreducible(f));
  CHECK(fp_is_irreducible(fp_make(3, {1, 0, 1})));
  CHECK(fp_is_irreducible(fp_make(2, {1, 1, 0, 0, 1})));
  /* x^5 + x^4 + 1 = (x^2+x+1)(x^3+x+1) mod 2 */
  auto g = fp_factor_squarefree(fp_make(2, {1, 0, 0, 0, 1, 1}));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == fp_make(2, {1, 1, 1}));
  CHECK(g[1] == fp_make(2, {1, 1, 0, 1}));
  /* a larger prime exercises the quadratic residue splitting path */
  fp_poly h = fp_mul(fp_make(1009, {3, 1}), fp_make(1009, {10, 1}));
  auto hs = fp_factor_squarefree(h);
  REQUIRE(hs.size() == 2);
  CHECK(hs[0] == fp_make(1009, {3, 1}));
  CHECK(hs[1] == fp_make(1009, {10, 1}));
}

TEST_CASE("random factoring mod p round trips") {
  lcg r(23);
  unsigned long ps[] = {2, 3, 5, 13, 101};
  for (int it = 0; it < 120; it++) {
    unsigned long p = ps[r.next(0, 4)];
    std::vector<unsigned long> c;
    int d = (int)r.next(1, 6);
    for (int i = 0; i < d; i++) c.push_back((unsigned long)r.next(0, (long)p - 1));
    c.push_back(1);
    fp_poly f = fp_make(p, std::move(c));
    if (!fp_is_squarefree(f)) continue;
    auto fs = fp_factor_squarefree(f);
    fp_poly prod = fp_make(p, {1});
    for (auto& g : fs) {
      CHECK(fp_is_irreducible(g));
      prod = fp_mul(prod, g);
    }
    CHECK(prod == f);
  }
}

TEST_CASE("factoring over Q") {
  int_poly f = mul(int_poly({13, -3, 1}), int_poly({13, 6, 1}));
  CHECK(f == int_poly({169, 39, 8, 3, 1}));
  auto fac = factor_over_q(f);
  CHECK(fac.unit == 1);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].f == int_poly({13, -3, 1}));
  CHECK(fac.factors[0].mult == 1);
  CHECK(fac.factors[1].f == int_poly({13, 6, 1}));
  CHECK(fac.factors[1].mult == 1);

  /* -2 (x-1)^2 (x+2) */
  auto fac2 = factor_over_q(int_poly({-4, 6, 0, -2}));
  CHECK(fac2.unit == -2);
  REQUIRE(fac2.factors.size() == 2);
  CHECK(fac2.factors[0].f == int_poly({-1, 1}));
  CHECK(fac2.factors[0].mult == 2);
  CHECK(fac2.factors[1].f == int_poly({2, 1}));
  CHECK(fac2.factors[1].mult == 1);

  auto fac3 = factor_over_q(parse_int_poly("8,-4,4,-2,2,-1,1"));
  REQUIRE(fac3.factors.size() == 1);
  CHECK(fac3.factors[0].mult == 1);

  /* x^4 + 1 is irreducible over Q but reducible mod every prime */
  auto fac4 = factor_over_q(int_poly({1, 0, 0, 0, 1}));
  REQUIRE(fac4.factors.size() == 1);
  CHECK(fac4.factors[0].f == int_poly({1, 0, 0, 0, 1}));
}

TEST_CASE("random factorizations over Q multiply back") {
  lcg r(31);
  for (int it = 0; it < 40; it++) {
    int_poly f{1};
    int parts = (int)r.next(1, 3);
    for (int k = 0; k < parts; k++) {
      int_poly g = random_poly(r, 3);
      if (g.is_zero()) g = int_poly({1, 1});
      int e = (int)r.next(1, 2);
      for (int j = 0; j < e; j++) f = mul(f, g);
    }
    if (f.deg() > 9) continue;
    auto fac = factor_over_q(f);
    rat_poly prod{{fac.unit}};
    for (auto& pf : fac.factors) {
      CHECK(pf.f.lc() > 0);
      CHECK(content(pf.f) == 1);
      for (int j = 0; j < pf.mult; j++) prod = mul(prod, to_rat(pf.f));
    }
    CHECK(prod == to_rat(f));
  }
}

TEST_CASE("integer valuations") {
  CHECK(int_valuation(Int(48), Int(2)) == 4);
  CHECK(int_valuation(Int(48), Int(3)) == 1);
  CHECK(int_valuation(Int(48), Int(5)) == 0);
  CHECK(int_valuation(Int(-8), Int(2)) == 3);
}

TEST_CASE("newton polygon") {
  np_result np = newton_polygon(parse_int_poly("8,-4,4,-2,2,-1,1"), Int(2));
  REQUIRE(np.vertices.size() == 4);
  CHECK(np.vertices[0] == std::pair<int, Int>(0, Int(3)));
  CHECK(np.vertices[1] == std::pair<int, Int>(1, Int(2)));
  CHECK(np.vertices[2] == std::pair<int, Int>(5, Int(0)));
  CHECK(np.vertices[3] == std::pair<int, Int>(6, Int(0)));
  REQUIRE(np.valuations.size() == 3);
  CHECK(np.valuations[0] == std::pair<Rat, int>(Rat(0), 1));
  CHECK(np.valuations[1] == std::pair<Rat, int>(Rat(1, 2), 4));
  CHECK(np.valuations[2] == std::pair<Rat, int>(Rat(1), 1));

  np_result o = newton_polygon(int_poly({4, -1, 1}), Int(2));
  REQUIRE(o.valuations.size() == 2);
  CHECK(o.valuations[0] == std::pair<Rat, int>(Rat(0), 1));
  CHECK(o.valuations[1] == std::pair<Rat, int>(Rat(2), 1));
}

TEST_CASE("hensel splitting by unit and positive valuation roots") {
  int_poly f{4, -1, 1};
  auto hs = hensel_split(f, Int(2), 10);
  CHECK(hs.unit_part.deg() == 1);
  CHECK(hs.positive_part.deg() == 1);
  CHECK(hs.unit_part.lc() == 1);
  CHECK(hs.positive_part.lc() == 1);
  /* the unit root is odd, the other root has valuation 2 */
  CHECK(hs.unit_part.coeff(0) % 2 != 0);
  CHECK(hs.positive_part.coeff(0) % 4 == 0);
  Int mod = Int(1) * 1024;
  int_poly prod = mul(hs.unit_part, hs.positive_part);
  for (int i = 0; i <= f.deg(); i++)
    CHECK((prod.coeff(i) - f.coeff(i)) % mod == 0);

  auto all_unit = hensel_split(int_poly({1, 1, 1}), Int(2), 8);
  CHECK(all_unit.positive_part == int_poly({1}));
  CHECK(all_unit.unit_part == int_poly({1, 1, 1}));
  auto none_unit = hensel_split(int_poly({2, 2, 1}), Int(2), 8);
  CHECK(none_unit.unit_part == int_poly({1}));
  CHECK(none_unit.positive_part == int_poly({2, 2, 1}));
}
