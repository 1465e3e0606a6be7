#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wpc/picard.hpp"
#include "wpc/errors.hpp"
#include <algorithm>
#include <numeric>

using namespace wpc;

struct lcg {
  unsigned long long s;
  explicit lcg(unsigned long long seed) : s(seed) {}
  long next(long lo, long hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + (long)((s >> 33) % (unsigned long long)(hi - lo + 1));
  }
};

static zlattice lat(int n, std::initializer_list<long> rows, long den = 1) {
  return lattice_make(n, int_mat(n, n, rows), Int(den));
}

/* reduced primitive binary quadratic forms of discriminant d < 0 */
static long form_count(long d) {
  long cnt = 0;
  for (long a = 1; 3 * a * a <= -d; a++)
    for (long b = -a; b <= a; b++) {
      if (((b - d) % 2 + 2) % 2 != 0) continue;
      long c4 = b * b - d;
      if (c4 % (4 * a) != 0) continue;
      long c = c4 / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (std::gcd(a, std::gcd(std::abs(b), c)) != 1) continue;
      cnt++;
    }
  return cnt;
}

TEST_CASE("units of small cm algebras") {
  etale_alg k = etale_make_weil(int_poly({4, -1, 1}), Int(4));
  unit_group u = find_units(k, maximal_order(k));
  CHECK(u.rank == 0);
  CHECK(u.certified);
  CHECK(u.fund.empty());
  CHECK(u.torsion.size() == 2); /* just -1 and 1 */

  etale_alg g = etale_make_weil(int_poly({1, 0, 1}), Int(1));
  unit_group ug = find_units(g, maximal_order(g));
  CHECK(ug.rank == 0);
  CHECK(ug.torsion.size() == 4); /* powers of i */
}

TEST_CASE("principality in a quadratic field of class number two") {
  etale_alg k = etale_make_weil(int_poly({4, -1, 1}), Int(4));
  ring_order o = maximal_order(k);
  unit_group u = find_units(k, o);

  zlattice i = lat(2, {2, 0, 0, 1}); /* nontrivial class */
  CHECK(!is_principal(k, i).has_value());
  zlattice i2 = ideal_mul(k, i, i);
  auto gen = is_principal(k, i2);
  REQUIRE(gen.has_value());
  CHECK(principal_ideal(k, o, *gen) == i2);
  CHECK(i2 == principal_ideal(k, o, el_gen(k)));

  auto moved = is_isomorphic_ideals(k, i, ideal_mul(k, i, principal_ideal(k, o, el_gen(k))));
  REQUIRE(moved.has_value());
  CHECK(!is_isomorphic_ideals(k, i, o.l).has_value());
  CHECK(!ideal_quotient_gen(k, u, i, o.l).has_value());

  zlattice r1 = class_representative(k, i);
  zlattice r2 = class_representative(k, ideal_mul(k, i, principal_ideal(k, o, el_gen(k))));
  CHECK(r1 == r2);
  CHECK(ideal_class_token(k, r1) == ideal_class_token(k, r2));
}

TEST_CASE("picard group of the maximal quadratic order") {
  etale_alg k = etale_make_weil(int_poly({4, -1, 1}), Int(4));
  ring_order o = maximal_order(k);
  picard_group pic = picard(k, o);
  REQUIRE(pic.invariants.size() == 1);
  CHECK(pic.invariants[0] == 2);
  CHECK(pic.size() == 2);
  CHECK(pic.elements.size() == 2);
  CHECK(pic.generators.size() == 1);
  CHECK(ideal_class_token(k, pic.elements[0]) != ideal_class_token(k, pic.elements[1]));

  zlattice i = lat(2, {2, 0, 0, 1});
  CHECK(class_index(k, pic, i) == class_index(k, pic, class_representative(k, i)));
  CHECK(class_index(k, pic, i) != 0);
  CHECK(class_index(k, pic, o.l) == 0);
  CHECK(class_index(k, pic, ideal_mul(k, i, i)) == 0);
}

TEST_CASE("picard group of a non maximal quadratic order") {
  etale_alg k = etale_make_weil(int_poly({4, -1, 1}), Int(4));
  /* the suborder spanned by 1 and 2x has discriminant -60 */
  zlattice sl = lat(2, {1, 0, 0, 2});
  REQUIRE(lattice_is_order(k, sl));
  ring_order s = order_from_lattice(k, sl);
  picard_group pic = picard(k, s);
  REQUIRE(pic.invariants.size() == 1);
  CHECK(pic.invariants[0] == 2);
  CHECK(conductor_class_ratio(k, s) == 2);

  /* a suborder ideal with the wrong multiplicator ring has no class */
  ring_order o = maximal_order(k);
  zlattice c = lattice_scale(o.l, Rat(2));
  CHECK(multiplicator_ring(k, c).l == o.l);
  CHECK(!is_isomorphic_ideals(k, c, s.l).has_value());
}

TEST_CASE("random imaginary quadratic orders match reduced form counts") {
  lcg r(20260822);
  int done = 0;
  while (done < 20) {
    long d = -r.next(3, 1999);
    long m = ((d % 4) + 4) % 4;
    if (m != 0 && m != 1) continue;
    long q4 = d * d - d; /* 4 q, with x^2 - d x + q the minimal polynomial */
    etale_alg k = etale_make_weil(int_poly({q4 / 4, -d, 1}), Int(q4 / 4));
    ring_order s = order_from_lattice(k, lattice_zn(2));
    picard_group pic = picard(k, s);
    CHECK(pic.size() == form_count(d));
    done++;
  }
}

TEST_CASE("picard and class monoid of a sextic weil algebra") {
  etale_alg k = etale_make_weil(int_poly({8, -4, 4, -2, 2, -1, 1}), Int(2));
  ring_order r = equation_order_weil(k);
  ring_order o = maximal_order(k);
  REQUIRE(order_is_bass(k, r, o));

  unit_group ur = find_units(k, r);
  CHECK(ur.rank == 2);
  CHECK(ur.certified);
  REQUIRE(ur.fund.size() == 2);
  for (const alg_elt& f : ur.fund) {
    Rat n = el_norm(k, f);
    CHECK((n == 1 || n == -1));
  }

  picard_group pr = picard(k, r);
  REQUIRE(pr.invariants.size() == 1);
  CHECK(pr.invariants[0] == 3);
  picard_group po = picard(k, o);
  CHECK(po.invariants.empty());
  CHECK(po.size() == 1);

  auto entries = icm(k, r);
  REQUIRE(entries.size() == 2);
  Int total = 0;
  for (const icm_entry& e : entries) total += e.pic.size();
  CHECK(total == 4);

  /* an ideal of order three: 8 R + (-32 - 11 x - 3/2 x^2 - 3 x^3 - 3/4 x^4 + 1/4 x^5) R */
  alg_elt b{Rat(-32), Rat(-11), Rat(-3, 2), Rat(-3), Rat(-3, 4), Rat(1, 4)};
  zlattice i = ideal_from_gens(k, r, {el_scalar(k, Rat(8)), b});
  CHECK(multiplicator_ring(k, i).l == r.l);
  CHECK(class_index(k, pr, i) != 0);
  CHECK(!is_principal(k, i).has_value());
  CHECK(!is_principal(k, ideal_pow(k, i, 2)).has_value());
  CHECK(is_principal(k, ideal_pow(k, i, 3)).has_value());
}

TEST_CASE("class monoid of a quartic weil algebra with six over orders") {
  etale_alg k = etale_make_weil(int_poly({169, 39, 8, 3, 1}), Int(13));
  ring_order r = equation_order_weil(k);
  ring_order o = maximal_order(k);
  REQUIRE(order_is_bass(k, r, o));

  auto entries = icm(k, r);
  REQUIRE(entries.size() == 6);
  CHECK(entries.front().s.l == r.l);
  CHECK(entries.back().s.l == o.l);

  std::vector<long> sizes;
  Int total = 0;
  for (const icm_entry& e : entries) {
    sizes.push_back(e.pic.size().get_si());
    total += e.pic.size();
  }
  CHECK(total == 62);
  std::vector<long> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<long>{1, 1, 2, 4, 18, 36});

  REQUIRE(entries.front().pic.invariants.size() == 2);
  CHECK(entries.front().pic.invariants[0] == 3);
  CHECK(entries.front().pic.invariants[1] == 12);
  CHECK(entries.back().pic.invariants.empty());

  for (const icm_entry& e : entries) {
    if (e.pic.invariants.size() != 2) continue;
    if (e.pic.size() != 18) continue;
    CHECK(e.pic.invariants[0] == 3);
    CHECK(e.pic.invariants[1] == 6);
  }

  /* tokens separate the classes of each group */
  for (const icm_entry& e : entries) {
    std::vector<std::string> toks;
    for (const zlattice& c : e.pic.elements) toks.push_back(ideal_class_token(k, c));
    std::sort(toks.begin(), toks.end());
    CHECK(std::adjacent_find(toks.begin(), toks.end()) == toks.end());
  }

  /* generator orders: g^size is principal, no earlier power is */
  const picard_group& pr = entries.front().pic;
  REQUIRE(pr.generators.size() == 2);
  for (size_t j = 0; j < pr.generators.size(); j++) {
    long ord = pr.invariants[j].get_si();
    zlattice p = pr.generators[j];
    CHECK(!is_principal(k, p).has_value());
    for (long e = 2; e < ord; e++)
      if (ord % e == 0) CHECK(!is_principal(k, ideal_pow(k, p, e)).has_value());
    CHECK(is_principal(k, ideal_pow(k, p, ord)).has_value());
  }
}
