#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wpc/cmtype.hpp"
#include "wpc/errors.hpp"
#include "wpc/padic.hpp"
#include "wpc/weil.hpp"

using namespace wpc;

/* x^6 - x^5 + 2x^4 - 2x^3 + 4x^2 - 4x + 8, a 2-Weil sextic of p-rank 1 */
static const int_poly sextic({8, -4, 4, -2, 2, -1, 1});
/* (x^2 - 3x + 13)(x^2 + 6x + 13), an ordinary 13-Weil quartic */
static const int_poly quartic13({169, 39, 8, 3, 1});
/* (x^2 - 2)(x^2 + 2x + 2), a 2-Weil quartic with real roots */
static const int_poly realq({-4, -4, 0, 2, 1});
/* x^4 - x^3 + 3x^2 - 2x + 4, irreducible ordinary 2-Weil */
static const int_poly golden({4, -2, 3, -1, 1});

template <class F>
static bool fails_with(errkind k, F f) {
  try {
    f();
  } catch (const wpc_error& e) {
    return e.kind == k;
  }
  return false;
}

TEST_CASE("weil validation") {
  CHECK(validate_weil(int_poly({4, -1, 1}), 4));
  CHECK_FALSE(validate_weil(int_poly({4, -1, 1}), 5));
  CHECK(validate_weil(sextic, 2));
  CHECK(validate_weil(quartic13, 13));
  CHECK(validate_weil(realq, 2));
  CHECK(validate_weil(golden, 2));
  CHECK(validate_weil(int_poly({-3, 0, 1}), 3)); /* x^2 - 3, supersingular */

  /* (x - 1)(x - 4): the root map z -> 4/z is a swap, not conjugation */
  CHECK_FALSE(validate_weil(int_poly({4, -5, 1}), 4));
  /* (x^2-2x+2)(x^2-4x+8): 4/z permutes the roots but |z|^2 != 4 */
  CHECK_FALSE(validate_weil(int_poly({16, -24, 18, -6, 1}), 4));
  /* odd degree */
  CHECK_FALSE(validate_weil(int_poly({-2, 1}), 4));
  /* root at zero */
  CHECK_FALSE(validate_weil(int_poly({0, 4, -1, 1}), 4));
  /* repeated factors are allowed by the predicate itself */
  CHECK(validate_weil(mul(int_poly({4, -1, 1}), int_poly({4, -1, 1})), 4));

  CHECK(fails_with(errkind::bad_input,
                   [] { validate_weil(int_poly({4, -1, 2}), 4); }));
  CHECK(fails_with(errkind::bad_input,
                   [] { validate_weil(int_poly({4, -1, 1}), 0); }));
}

TEST_CASE("ordinarity from the newton polygon") {
  CHECK(is_ordinary(int_poly({4, -1, 1}), 4));
  CHECK(is_ordinary(quartic13, 13));
  CHECK(is_ordinary(golden, 2));
  CHECK_FALSE(is_ordinary(sextic, 2));
  CHECK_FALSE(is_ordinary(int_poly({-3, 0, 1}), 3));
  CHECK_FALSE(is_ordinary(int_poly({4, -2, 1}), 4)); /* both roots valuation 1 */
  CHECK_FALSE(is_ordinary(realq, 2));

  /* unit middle coefficient is an equivalent reading of the polygon */
  struct row {
    int_poly g;
    long q, p;
  };
  for (const row& r : {row{int_poly({4, -1, 1}), 4, 2}, row{quartic13, 13, 13},
                       row{golden, 2, 2}, row{sextic, 2, 2}, row{realq, 2, 2},
                       row{int_poly({4, -2, 1}), 4, 2}}) {
    bool unit_mid = r.g.coeff(r.g.deg() / 2) % r.p != 0;
    CHECK(is_ordinary(r.g, r.q) == unit_mid);
  }

  /* ordinary slope multisets are symmetric under s -> a - s */
  for (const row& r : {row{int_poly({4, -1, 1}), 4, 2}, row{quartic13, 13, 13},
                       row{golden, 2, 2}}) {
    np_result np = newton_polygon(r.g, r.p);
    Rat a(int_valuation(r.q, r.p));
    for (const auto& [val, cnt] : np.valuations) {
      bool mirrored = false;
      for (const auto& [w, c] : np.valuations)
        if (w == a - val && c == cnt) mirrored = true;
      CHECK(mirrored);
    }
  }
}

TEST_CASE("prime field eligibility") {
  CHECK(cs_eligible(sextic, 2));
  CHECK_FALSE(cs_eligible(realq, 2));
  CHECK(cs_eligible(int_poly({4, -1, 1}), 2));
  CHECK(fails_with(errkind::bad_input,
                   [] { cs_eligible(int_poly({4, -1, 1}), 4); }));

  /* nonzero resultant with x^2 - p says the same thing */
  for (const int_poly& g : {sextic, realq, quartic13, golden}) {
    int_poly d({-2, 0, 1});
    CHECK(cs_eligible(g, 2) == (resultant(g, d) != 0));
  }
}

TEST_CASE("isogeny class assembly") {
  SUBCASE("ordinary quadratic") {
    class_spec s = make_spec(int_poly({4, -1, 1}), 4, 2);
    CHECK(s.reg == regime::ordinary);
    CHECK(s.p == 2);
    CHECK(s.a == 2);
    CHECK(s.r == 2);
    CHECK(s.bass);
    CHECK(s.rr == s.omax);
  }
  SUBCASE("prime field sextic") {
    class_spec s = make_spec(sextic, 2, 3);
    CHECK(s.reg == regime::cs_prime);
    CHECK(s.p == 2);
    CHECK(s.a == 1);
    CHECK(s.bass);
    CHECK(!(s.rr == s.omax));
    CHECK(order_is_gorenstein(s.alg, s.rr));
    CHECK(over_orders(s.alg, s.rr, s.omax).size() == 2);
  }
  SUBCASE("ordinary quartic") {
    class_spec s = make_spec(quartic13, 13, 5);
    CHECK(s.reg == regime::ordinary);
    CHECK(s.p == 13);
    CHECK(s.bass);
    CHECK(lattice_index(s.omax.l, s.rr.l) == Rat(162));
  }
  SUBCASE("neither regime applies") {
    try {
      make_spec(realq, 2, 1);
      CHECK(false);
    } catch (const wpc_error& e) {
      CHECK(e.kind == errkind::not_supported);
      std::string msg = e.what();
      CHECK(msg.find("not ordinary") != std::string::npos);
      CHECK(msg.find("x^2 - p divides") != std::string::npos);
    }
  }
  SUBCASE("rejects repeated factors and bad parameters") {
    int_poly sq = mul(int_poly({4, -1, 1}), int_poly({4, -1, 1}));
    CHECK(fails_with(errkind::not_supported, [&] { make_spec(sq, 4, 1); }));
    CHECK(fails_with(errkind::bad_input,
                     [] { make_spec(int_poly({4, -1, 1}), 4, 0); }));
    CHECK(fails_with(errkind::bad_input,
                     [] { make_spec(int_poly({12, -1, 1}), 12, 1); }));
  }
}

TEST_CASE("cm type selection") {
  etale_alg k = etale_make_weil(int_poly({4, -1, 1}), 4);
  cm_type t = cm_type_padic(k);
  CHECK(t.p == 2);
  CHECK(t.q == 4);
  CHECK(t.phi.size() == 1);
  CHECK(t.phi[0].comp == 0);
  CHECK(t.phi[0].z.im + t.phi[0].z.rad < 0);
  CHECK(t.phi[0].zbar.im - t.phi[0].zbar.rad > 0);

  cm_type tc = cm_type_padic(k, true);
  CHECK(tc.phi[0].z.im - tc.phi[0].z.rad > 0);

  /* embedding the generator returns its own enclosure */
  cbox bz = embed(k, t.phi[0], el_gen(k));
  CHECK(bz.re.lo == t.phi[0].z.re - t.phi[0].z.rad);
  CHECK(bz.re.hi == t.phi[0].z.re + t.phi[0].z.rad);
  CHECK(bz.im.hi == t.phi[0].z.im + t.phi[0].z.rad);

  /* z zbar = q within the enclosure */
  cbox nrm = cb_mul(bz, cb_conj(bz));
  CHECK(nrm.re.contains(Rat(4)));
  CHECK(nrm.im.contains(Rat(0)));

  /* embedding respects the involution */
  cbox bc = embed(k, t.phi[0], el_conj(k, el_gen(k)));
  cbox mirror = cb_conj(bz);
  CHECK(bc.re.lo <= mirror.re.hi);
  CHECK(mirror.re.lo <= bc.re.hi);
  CHECK(bc.im.lo <= mirror.im.hi);
  CHECK(mirror.im.lo <= bc.im.hi);

  /* y = (-1+2F)/15 sits on the positive imaginary axis after the i twist */
  alg_elt y = {Rat(-1, 15), Rat(2, 15)};
  for (Rat& c : y) c.canonicalize();
  cbox ey = embed(k, t.phi[0], y);
  CHECK(ey.im.hi < 0);
  CHECK(ey.re.contains(Rat(0)));
  CHECK(cb_mul_i(ey).re.lo > 0);
  cbox eyc = embed(k, tc.phi[0], y);
  CHECK(cb_mul_i(eyc).re.hi < 0);

  /* refinement keeps the selection and shrinks the radius */
  cm_refine(k, t, 512);
  Rat cap(Int(1), Int(1) << 512);
  cap.canonicalize();
  CHECK(t.phi[0].z.rad <= cap);
  CHECK(t.phi[0].z.im < 0);

  etale_alg k13 = etale_make_weil(quartic13, 13);
  cm_type t13 = cm_type_padic(k13);
  CHECK(t13.phi.size() == 2);
  CHECK(t13.phi[0].comp == 0);
  CHECK(t13.phi[1].comp == 1);
  for (const cm_embedding& e : t13.phi) CHECK(e.z.im + e.z.rad < 0);

  /* trace is the sum over all embeddings */
  for (const etale_alg* a : {&k, &k13}) {
    alg_elt x(a->n);
    for (int i = 0; i < a->n; i++) {
      x[i] = Rat(2 * i - 3, i + 2);
      x[i].canonicalize();
    }
    cm_type tt = cm_type_padic(*a);
    ivl acc(Rat(0));
    for (const cm_embedding& e : tt.phi)
      acc = iv_add(acc, iv_scale(Rat(2), embed(*a, e, x).re));
    CHECK(acc.contains(el_trace(*a, x)));
  }

  /* outside the supported regime */
  CHECK(fails_with(errkind::not_supported,
                   [] { cm_type_padic(etale_make_weil(sextic, 2)); }));
  CHECK(fails_with(errkind::not_supported, [] {
    cm_type_padic(etale_make_weil(int_poly({-3, 0, 1}), 3));
  }));
  /* ordinary but with real embeddings */
  CHECK(fails_with(errkind::not_supported, [] {
    cm_type_padic(etale_make_weil(int_poly({4, -5, 1}), 4));
  }));
  /* ordinary irreducible quartic component */
  CHECK(fails_with(errkind::not_supported,
                   [] { cm_type_padic(etale_make_weil(golden, 2)); }));
  CHECK(fails_with(errkind::bad_input,
                   [] { cm_type_padic(etale_make(int_poly({4, -1, 1}))); }));
}
