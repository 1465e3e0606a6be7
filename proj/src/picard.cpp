#include "wpc/picard.hpp"
#include "wpc/arith.hpp"
#include "wpc/roots.hpp"
#include "wpc/shortvec.hpp"
#include "wpc/errors.hpp"
#include <algorithm>
#include <map>
#include <set>

namespace wpc {

Int picard_group::size() const {
  Int t = 1;
  for (const Int& d : invariants) t *= d;
  return t;
}

static Int to_Z(const Rat& r, const char* what) {
  Rat c = r;
  c.canonicalize();
  check(c.get_den() == 1, what);
  return c.get_num();
}

static int_mat scaled_int(const rat_mat& m, Int& den) {
  den = 1;
  for (const Rat& e : m.e) den = lcm(den, e.get_den());
  int_mat out(m.nr, m.nc);
  for (size_t i = 0; i < m.e.size(); i++) {
    Rat t = m.e[i] * den;
    t.canonicalize();
    out.e[i] = t.get_num();
  }
  return out;
}

/* quotient big/sub of two full lattices with big a ring, presented on an
 * adapted basis: sub = span of d_j b_j over the stored basis b_j */
struct res_ring {
  const etale_alg* a = nullptr;
  zlattice big;
  std::vector<Int> d;
  std::vector<alg_elt> basis;
  rat_mat binv;
  std::vector<std::vector<std::vector<Int>>> tab;
};

static res_ring make_res_ring(const etale_alg& a, const zlattice& big, const zlattice& sub) {
  res_ring r;
  r.a = &a;
  r.big = big;
  int n = big.n;
  rat_mat rel = mul(lattice_basis_q(sub), lattice_inv_q(big));
  Int den;
  int_mat reli = scaled_int(rel, den);
  check(den == 1, "sublattice coordinates are not integral");
  snf_result sr = snf(reli);
  check((int)sr.invariant_factors.size() == n, "degenerate residue ring");
  for (int j = 0; j < n; j++) r.d.push_back(sr.d(j, j));
  rat_mat vinv = inverse(rat_mat::from(sr.v));
  rat_mat adapted = mul(vinv, lattice_basis_q(big));
  for (int j = 0; j < n; j++) {
    alg_elt e(n);
    for (int c = 0; c < n; c++) e[c] = adapted(j, c);
    r.basis.push_back(e);
  }
  r.binv = inverse(adapted);
  r.tab.assign(n, std::vector<std::vector<Int>>(n));
  for (int j = 0; j < n; j++)
    for (int k = 0; k <= j; k++) {
      alg_elt p = el_mul(a, r.basis[j], r.basis[k]);
      std::vector<Rat> co = mul_vec(p, r.binv);
      std::vector<Int> ci(n);
      for (int m = 0; m < n; m++) {
        Int e = to_Z(co[m], "residue product is not integral");
        if (r.d[m] > 1) { e %= r.d[m]; if (e < 0) e += r.d[m]; } else e = 0;
        ci[m] = e;
      }
      r.tab[j][k] = ci;
      r.tab[k][j] = ci;
    }
  return r;
}

static std::vector<Int> rr_coords(const res_ring& r, const alg_elt& x) {
  std::vector<Rat> co = mul_vec(x, r.binv);
  std::vector<Int> out(co.size());
  for (size_t m = 0; m < co.size(); m++) {
    Int e = to_Z(co[m], "residue coordinate is not integral");
    if (r.d[m] > 1) { e %= r.d[m]; if (e < 0) e += r.d[m]; } else e = 0;
    out[m] = e;
  }
  return out;
}

static std::vector<Int> rr_mul(const res_ring& r, const std::vector<Int>& x,
                               const std::vector<Int>& y) {
  int n = r.big.n;
  std::vector<Int> out(n, 0);
  for (int j = 0; j < n; j++) {
    if (x[j] == 0) continue;
    for (int k = 0; k < n; k++) {
      if (y[k] == 0) continue;
      Int c = x[j] * y[k];
      const std::vector<Int>& t = r.tab[j][k];
      for (int m = 0; m < n; m++)
        if (r.d[m] > 1 && t[m] != 0) out[m] += c * t[m];
    }
  }
  for (int m = 0; m < n; m++)
    if (r.d[m] > 1) { out[m] %= r.d[m]; if (out[m] < 0) out[m] += r.d[m]; } else out[m] = 0;
  return out;
}

static std::string rr_key(const std::vector<Int>& c) {
  std::string s;
  for (const Int& e : c) { s += e.get_str(); s += ","; }
  return s;
}

static bool unit_mod(const etale_alg& a, const zlattice& big, const zlattice& sub,
                     const alg_elt& u) {
  int n = big.n;
  auto bb = lattice_elements(big);
  rat_mat bq = lattice_basis_q(sub);
  rat_mat rows(2 * n, n);
  for (int r = 0; r < n; r++) {
    alg_elt p = el_mul(a, u, bb[r]);
    for (int c = 0; c < n; c++) rows(r, c) = p[c];
  }
  for (int r = 0; r < n; r++)
    for (int c = 0; c < n; c++) rows(n + r, c) = bq(r, c);
  return lattice_make(rows) == big;
}

/* extend the subgroup of unit residues by g: ulist becomes ulist . <g> */
static void grow_subgroup(const res_ring& r, std::set<std::string>& uset,
                          std::vector<std::vector<Int>>& ulist, const std::vector<Int>& g) {
  if (uset.count(rr_key(g))) return;
  std::vector<Int> idc = rr_coords(r, el_one(*r.a));
  std::vector<std::vector<Int>> pows;
  std::vector<Int> h = g;
  while (!(h == idc)) {
    pows.push_back(h);
    h = rr_mul(r, h, g);
    check(pows.size() < 4000000, "residue unit order too large");
  }
  std::vector<std::vector<Int>> snapshot = ulist;
  for (const auto& u : snapshot)
    for (const auto& hp : pows) {
      std::vector<Int> w = rr_mul(r, u, hp);
      if (uset.insert(rr_key(w)).second) ulist.push_back(w);
    }
}

/* component count formula for the unit group of ring/f */
static Int quotient_unit_count(const etale_alg& a, const ring_order& s, const zlattice& f) {
  Int idx = to_Z(lattice_index(s.l, f), "conductor index is not integral");
  Rat cnt(idx);
  for (const auto& [p, e] : factor_int(idx)) {
    (void)e;
    for (const prime_ideal& m : primes_above(a, s, p)) {
      if (!lattice_contains(m.l, f)) continue;
      Int nm = 1;
      for (int t = 0; t < m.res_deg; t++) nm *= p;
      cnt *= Rat(nm - 1, nm);
    }
  }
  return to_Z(cnt, "residue unit count is not integral");
}

/* p^(v_p(x)) */
static Int p_part(Int x, const Int& p) {
  Int out = 1;
  while (x % p == 0) { x /= p; out *= p; }
  return out;
}

static int comp_of_prime(const etale_alg& a, const zlattice& p) {
  for (size_t i = 0; i < a.comps.size(); i++) {
    alg_elt ei = el_lift_component(a, (int)i, rat_poly(std::vector<Rat>{Rat(1)}));
    if (!lattice_contains(p, ei)) return (int)i;
  }
  check(false, "prime ideal contains every idempotent");
  return -1;
}

static Rat minkowski_bound(const int_poly& comp) {
  etale_alg ca = etale_make(comp);
  ring_order co = maximal_order(ca);
  Int dc = order_disc(ca, co);
  int ni = comp.deg();
  int r1 = count_real_roots(comp);
  int r2 = (ni - r1) / 2;
  Int fact = 1, npow = 1;
  for (int t = 2; t <= ni; t++) fact *= t;
  for (int t = 0; t < ni; t++) npow *= ni;
  Rat m(fact, npow);
  m.canonicalize();
  for (int t = 0; t < r2; t++) m *= Rat(14, 11); /* 14/11 > 4/pi */
  m *= sqrt_upper(Rat(abs(dc)), 16);
  return m;
}

static alg_elt sv_elt(const std::vector<alg_elt>& bs, const std::vector<Int>& co) {
  alg_elt x(bs[0].size(), Rat(0));
  for (size_t i = 0; i < bs.size(); i++)
    for (size_t j = 0; j < x.size(); j++) x[j] += Rat(co[i]) * bs[i][j];
  return x;
}

/* integral ideal in the class of (p)^-1, coprime to f */
static zlattice coprime_rep(const etale_alg& a, const zlattice& bigO, const zlattice& p,
                            const zlattice& f) {
  zlattice inv = ideal_colon(a, bigO, p);
  auto ib = lattice_elements(inv);
  auto pb = lattice_elements(p);
  rat_mat g = t2_gram(a, p);
  rat_mat gr = lll_reduce(g).g_red;
  Rat bound = gr(0, 0);
  for (int t = 1; t < p.n; t++) bound = std::min(bound, gr(t, t));
  Rat prev = 0;
  for (int step = 0; step < 48; step++) {
    for (const short_vec& v : enumerate_short(g, bound)) {
      if (v.q <= prev) continue;
      alg_elt y = sv_elt(pb, v.x);
      if (!el_is_unit(a, y)) continue;
      rat_mat rows(p.n, p.n);
      for (int r = 0; r < p.n; r++) {
        alg_elt z = el_mul(a, y, ib[r]);
        for (int c = 0; c < p.n; c++) rows(r, c) = z[c];
      }
      zlattice cand = lattice_make(rows);
      if (lattice_sum(cand, f) == bigO) return cand;
    }
    prev = bound;
    bound *= 2;
  }
  fail(errkind::effort_exceeded, "no conductor-coprime class representative found");
}

/* x raised to a nonnegative power in the residue ring */
static std::vector<Int> rr_pow(const res_ring& r, const std::vector<Int>& x, Int e) {
  std::vector<Int> out = rr_coords(r, el_one(*r.a));
  std::vector<Int> b = x;
  while (e > 0) {
    if (e % 2 == 1) out = rr_mul(r, out, b);
    e >>= 1;
    if (e > 0) b = rr_mul(r, b, b);
  }
  return out;
}

static Int rr_order(const res_ring& r, const std::vector<Int>& x) {
  std::vector<Int> idc = rr_coords(r, el_one(*r.a));
  std::vector<Int> h = x;
  Int o = 1;
  while (!(h == idc)) {
    h = rr_mul(r, h, x);
    o += 1;
    check(o < 4000000, "residue unit order too large");
  }
  return o;
}

static alg_elt rr_lift(const res_ring& r, const std::vector<Int>& c) {
  alg_elt x(r.big.n, Rat(0));
  for (int j = 0; j < r.big.n; j++) {
    if (c[j] == 0) continue;
    for (int m = 0; m < r.big.n; m++) x[m] += Rat(c[j]) * r.basis[j][m];
  }
  return x;
}

/* reduced ideal of the kernel class of a unit residue u: the class of
 * (u) o intersected with s, after translating u by conductor elements so
 * it is a unit of the whole algebra */
static zlattice residue_class_ideal(const etale_alg& a, const res_ring& ro,
                                    const ring_order& mo, const ring_order& s,
                                    const std::vector<Int>& resid) {
  alg_elt y = rr_lift(ro, resid);
  /* translating by multiples of [o:s], which lies in f, fixes the residue;
   * each component excludes at most one multiple */
  Int m = to_Z(lattice_index(mo.l, s.l), "order index is not integral");
  int tries = (int)a.comps.size() + 1;
  for (int t = 0; t < tries && !el_is_unit(a, y); t++) y[0] += Rat(m);
  check(el_is_unit(a, y), "residue unit does not lift to a unit");
  return class_representative(a, lattice_intersect(principal_ideal(a, mo, y), s.l));
}

/* generating ideals for the maximal order: primes below the per-component
 * Minkowski bound, moved away from f when they meet it */
static std::vector<zlattice> prime_gens(const etale_alg& a, const ring_order& mo,
                                        const ring_order& s, bool proper,
                                        const zlattice& f) {
  std::vector<zlattice> gens;
  std::vector<Rat> mink;
  Rat maxm = 0;
  for (const int_poly& c : a.comps) {
    Rat m = minkowski_bound(c);
    mink.push_back(m);
    maxm = std::max(maxm, m);
  }
  for (Int p = 2; Rat(p) <= maxm; p = next_prime_above(p)) {
    for (const prime_ideal& pr : primes_above(a, mo, p)) {
      int c = comp_of_prime(a, pr.l);
      Int np = 1;
      for (int t = 0; t < pr.res_deg; t++) np *= p;
      if (Rat(np) > mink[c]) continue;
      zlattice j;
      if (proper && lattice_contains(pr.l, f))
        j = lattice_intersect(coprime_rep(a, mo.l, pr.l, f), s.l);
      else
        j = lattice_intersect(pr.l, s.l);
      gens.push_back(j);
    }
  }
  return gens;
}

/* close the classes of gens under products, then read the group structure
 * off the relation lattice */
static void bfs_group(const etale_alg& a, picard_group& pg,
                      const std::vector<zlattice>& gens, int effort) {
  const zlattice& sl = pg.s.l;
  std::vector<zlattice> kept;
  for (const zlattice& j : gens) {
    if (j == sl) continue;
    bool dup = false;
    for (const zlattice& k : kept) dup = dup || k == j;
    if (dup) continue;
    check(ideal_is_invertible(a, pg.s, j), "class group generator is not invertible");
    if (ideal_quotient_gen(a, pg.units, j, sl, effort)) continue;
    kept.push_back(j);
  }
  int k = (int)kept.size();

  std::vector<zlattice> reps{class_representative(a, sl)};
  std::vector<std::vector<Int>> vexp{std::vector<Int>(k, 0)};
  if (k == 0) {
    pg.elements = reps;
    pg.dlog = {std::vector<Int>()};
    return;
  }

  std::vector<std::vector<Int>> rels;
  long classcap = 5000L * effort;
  for (size_t c = 0; c < reps.size(); c++) {
    for (int t = 0; t < k; t++) {
      zlattice jn = class_representative(a, ideal_mul(a, reps[c], kept[t]));
      std::vector<Int> ve = vexp[c];
      ve[t] += 1;
      int found = -1;
      for (size_t d = 0; d < reps.size() && found < 0; d++)
        if (jn == reps[d]) found = (int)d;
      for (size_t d = 0; d < reps.size() && found < 0; d++)
        if (ideal_quotient_gen(a, pg.units, jn, reps[d], effort)) found = (int)d;
      if (found >= 0) {
        std::vector<Int> rel = ve;
        for (int t2 = 0; t2 < k; t2++) rel[t2] -= vexp[found][t2];
        bool zero = true;
        for (const Int& e : rel) zero = zero && e == 0;
        if (!zero) rels.push_back(rel);
      } else {
        reps.push_back(jn);
        vexp.push_back(ve);
        check((long)reps.size() <= classcap, "class enumeration exceeded the cap");
      }
    }
  }

  int_mat rm((int)rels.size(), k);
  for (size_t r = 0; r < rels.size(); r++)
    for (int t = 0; t < k; t++) rm((int)r, t) = rels[r][t];
  snf_result sr = snf(rm);
  check((int)sr.invariant_factors.size() == k, "class group relations do not close");
  Int total = 1;
  for (const Int& d : sr.invariant_factors) total *= d;
  check(total == Int(reps.size()), "class count disagrees with the relation lattice");

  std::vector<int> keptfac;
  for (int j = 0; j < k; j++)
    if (sr.d(j, j) > 1) {
      keptfac.push_back(j);
      pg.invariants.push_back(sr.d(j, j));
    }
  rat_mat vinv = inverse(rat_mat::from(sr.v));
  for (int j : keptfac) {
    zlattice gj = sl;
    for (int t = 0; t < k; t++) {
      Int e = to_Z(vinv(j, t), "unimodular inverse is not integral");
      if (e > 0) gj = ideal_mul(a, gj, ideal_pow(a, kept[t], e.get_si()));
      else if (e < 0) {
        Int me = -e;
        gj = ideal_mul(a, gj, ideal_pow(a, ideal_colon(a, sl, kept[t]), me.get_si()));
      }
    }
    pg.generators.push_back(class_representative(a, gj));
  }
  pg.elements = reps;
  for (const auto& ve : vexp) {
    std::vector<Int> y;
    for (int j : keptfac) {
      Int acc = 0;
      for (int t = 0; t < k; t++) acc += ve[t] * sr.v(t, j);
      Int d = sr.d(j, j);
      acc %= d;
      if (acc < 0) acc += d;
      y.push_back(acc);
    }
    pg.dlog.push_back(y);
  }
}

picard_group picard(const etale_alg& a, const ring_order& s, int effort) {
  check(effort >= 1, "effort must be at least 1");
  picard_group pg;
  pg.s = s;
  pg.units = find_units(a, s, effort);
  ring_order mo = maximal_order(a);
  bool proper = !(s.l == mo.l);

  if (!proper) {
    bfs_group(a, pg, prime_gens(a, mo, s, false, s.l), effort);
    return pg;
  }

  zlattice f = ideal_colon(a, s.l, mo.l);
  res_ring ro = make_res_ring(a, mo.l, f);
  res_ring rs = make_res_ring(a, s.l, f);
  Int nf = to_Z(lattice_index(mo.l, f), "conductor norm is not integral");
  auto facs = factor_int(nf);
  Int want = quotient_unit_count(a, ring_order{mo.l}, f);
  Rat rescap = Rat(2000000) * effort;
  if (Rat(want) > rescap)
    fail(errkind::effort_exceeded, "conductor residue ring too large");

  std::set<std::string> uset;
  std::vector<std::vector<Int>> ulist;
  std::vector<Int> idc = rr_coords(ro, el_one(a));
  uset.insert(rr_key(idc));
  ulist.push_back(idc);

  /* the seed subgroup: residues of global units and of units of s/f, whose
   * kernel classes are trivial */
  unit_group uo = find_units(a, mo, effort);
  for (const alg_elt& t : uo.torsion) grow_subgroup(ro, uset, ulist, rr_coords(ro, t));
  for (const alg_elt& t : uo.fund) grow_subgroup(ro, uset, ulist, rr_coords(ro, t));
  for (const alg_elt& t : pg.units.torsion) grow_subgroup(ro, uset, ulist, rr_coords(ro, t));
  for (const alg_elt& t : pg.units.fund) grow_subgroup(ro, uset, ulist, rr_coords(ro, t));

  /* p-primary sweeps: pass 0 folds the unit residues of s/f into the seed
   * subgroup, pass 1 collects o/f unit residues that escape it */
  std::vector<std::vector<Int>> kgen;
  size_t seedcnt = 0;
  for (int pass = 0; pass < 2; pass++) {
    if (pass == 1) seedcnt = ulist.size();
    for (const auto& [p, e] : facs) {
      (void)e;
      const res_ring& rr = pass == 0 ? rs : ro;
      const zlattice& big = pass == 0 ? s.l : mo.l;
      int n = a.n;
      std::vector<int> idxs;
      std::vector<Int> radix;
      Rat total = 1;
      for (int j = 0; j < n; j++) {
        Int pe = p_part(rr.d[j], p);
        if (pe > 1) { idxs.push_back(j); radix.push_back(pe); total *= pe; }
      }
      if (idxs.empty()) continue;
      if (total > rescap)
        fail(errkind::effort_exceeded, "conductor residue ring too large");
      /* identity of the p-primary ring factor: c1 = 1 mod p-part of the
       * exponent, 0 mod the rest */
      Int dn = rr.d[n - 1];
      Int pp = p_part(dn, p), rest = dn / pp;
      Int c1;
      if (rest == 1) c1 = 1;
      else {
        Int ri;
        mpz_invert(ri.get_mpz_t(), rest.get_mpz_t(), pp.get_mpz_t());
        c1 = rest * ri % dn;
      }
      std::vector<Int> tup(idxs.size(), 0);
      while (true) {
        alg_elt y = el_scale(el_one(a), Rat(1 - c1));
        for (size_t t = 0; t < idxs.size(); t++) {
          int j = idxs[t];
          Rat c = Rat(tup[t] * (rr.d[j] / radix[t]));
          for (int m = 0; m < n; m++) y[m] += c * rr.basis[j][m];
        }
        std::vector<Int> yk = rr_coords(ro, y);
        if (!uset.count(rr_key(yk)) && unit_mod(a, big, f, y)) {
          if (pass == 1) kgen.push_back(yk);
          grow_subgroup(ro, uset, ulist, yk);
        }
        size_t t = 0;
        while (t < tup.size()) {
          tup[t] += 1;
          if (tup[t] < radix[t]) break;
          tup[t] = 0;
          t++;
        }
        if (t == tup.size()) break;
      }
    }
  }
  check(Int(ulist.size()) == want, "conductor unit sweep is incomplete");
  uset.clear();

  /* cosets of the seed subgroup inside the residue units, by closing the
   * kernel generators: ulist[0..seedcnt) is exactly the seed subgroup */
  int kg = (int)kgen.size();
  std::map<std::string, int> lab;
  for (size_t u = 0; u < seedcnt; u++) lab[rr_key(ulist[u])] = 0;
  std::vector<std::vector<Int>> kreps{idc};
  std::vector<std::vector<Int>> kvexp{std::vector<Int>(kg, 0)};
  std::vector<std::vector<Int>> krels;
  for (size_t c = 0; c < kreps.size(); c++) {
    for (int t = 0; t < kg; t++) {
      std::vector<Int> prod = rr_mul(ro, kreps[c], kgen[t]);
      std::vector<Int> ve = kvexp[c];
      ve[t] += 1;
      auto it = lab.find(rr_key(prod));
      if (it != lab.end()) {
        int d = it->second;
        std::vector<Int> rel = ve;
        for (int t2 = 0; t2 < kg; t2++) rel[t2] -= kvexp[d][t2];
        bool zero = true;
        for (const Int& e : rel) zero = zero && e == 0;
        if (!zero) krels.push_back(rel);
      } else {
        int id = (int)kreps.size();
        for (size_t u = 0; u < seedcnt; u++)
          lab[rr_key(rr_mul(ro, ulist[u], prod))] = id;
        kreps.push_back(prod);
        kvexp.push_back(ve);
      }
    }
  }
  check(Int(kreps.size()) * Int(seedcnt) == want,
        "kernel cosets do not partition the residue units");

  int_mat krm((int)krels.size(), kg);
  for (size_t r = 0; r < krels.size(); r++)
    for (int t = 0; t < kg; t++) krm((int)r, t) = krels[r][t];
  snf_result ksr = snf(krm);
  check((int)ksr.invariant_factors.size() == kg, "kernel relations do not close");
  Int ktotal = 1;
  for (const Int& d : ksr.invariant_factors) ktotal *= d;
  check(ktotal == Int(kreps.size()), "kernel size disagrees with the relation lattice");

  picard_group ho = picard(a, mo, effort);
  Int ratio = ho.size() * quotient_unit_count(a, mo, f);
  Int down = quotient_unit_count(a, s, f);
  check(ratio % down == 0, "conductor unit counts do not divide");
  ratio /= down;

  if (ho.size() == 1) {
    /* the kernel is the whole group: structure and elements come straight
     * from the cosets */
    std::vector<int> keptfac;
    for (int j = 0; j < kg; j++)
      if (ksr.d(j, j) > 1) {
        keptfac.push_back(j);
        pg.invariants.push_back(ksr.d(j, j));
      }
    rat_mat vinv = inverse(rat_mat::from(ksr.v));
    for (int j : keptfac) {
      std::vector<Int> gr = idc;
      for (int t = 0; t < kg; t++) {
        Int e = to_Z(vinv(j, t), "unimodular inverse is not integral");
        Int o = rr_order(ro, kgen[t]);
        e %= o;
        if (e < 0) e += o;
        gr = rr_mul(ro, gr, rr_pow(ro, kgen[t], e));
      }
      pg.generators.push_back(residue_class_ideal(a, ro, mo, s, gr));
    }
    for (size_t c = 0; c < kreps.size(); c++) {
      if (c == 0) pg.elements.push_back(class_representative(a, s.l));
      else pg.elements.push_back(residue_class_ideal(a, ro, mo, s, kreps[c]));
      std::vector<Int> y;
      for (int j : keptfac) {
        Int acc = 0;
        for (int t = 0; t < kg; t++) acc += kvexp[c][t] * ksr.v(t, j);
        Int d = ksr.d(j, j);
        acc %= d;
        if (acc < 0) acc += d;
        y.push_back(acc);
      }
      pg.dlog.push_back(y);
    }
    check(ratio % pg.size() == 0, "class number disagrees with the conductor formula");
    return pg;
  }

  /* the maximal order has classes of its own: fall back to closing ideal
   * products, seeded by the kernel generators and the small primes */
  std::vector<zlattice> gens;
  std::vector<int> keptfac;
  for (int j = 0; j < kg; j++)
    if (ksr.d(j, j) > 1) keptfac.push_back(j);
  rat_mat vinv = inverse(rat_mat::from(ksr.v));
  for (int j : keptfac) {
    std::vector<Int> gr = idc;
    for (int t = 0; t < kg; t++) {
      Int e = to_Z(vinv(j, t), "unimodular inverse is not integral");
      Int o = rr_order(ro, kgen[t]);
      e %= o;
      if (e < 0) e += o;
      gr = rr_mul(ro, gr, rr_pow(ro, kgen[t], e));
    }
    gens.push_back(residue_class_ideal(a, ro, mo, s, gr));
  }
  for (const zlattice& j : prime_gens(a, mo, s, true, f)) gens.push_back(j);
  bfs_group(a, pg, gens, effort);
  check(ratio % pg.size() == 0, "class number disagrees with the conductor formula");
  return pg;
}

int class_index(const etale_alg& a, const picard_group& pic, const zlattice& i, int effort) {
  ring_order si = multiplicator_ring(a, i);
  if (!(si.l == pic.s.l))
    fail(errkind::bad_input, "ideal has a different multiplicator ring");
  zlattice r = class_representative(a, i);
  for (size_t d = 0; d < pic.elements.size(); d++)
    if (r == pic.elements[d]) return (int)d;
  for (size_t d = 0; d < pic.elements.size(); d++)
    if (ideal_quotient_gen(a, pic.units, r, pic.elements[d], effort)) return (int)d;
  check(false, "class not represented in the group");
  return -1;
}

Int conductor_class_ratio(const etale_alg& a, const ring_order& s, int effort) {
  ring_order mo = maximal_order(a);
  Int ho = picard(a, mo, effort).size();
  if (s.l == mo.l) return ho;
  zlattice f = ideal_colon(a, s.l, mo.l);
  Int num = ho * quotient_unit_count(a, mo, f);
  Int den = quotient_unit_count(a, s, f);
  check(num % den == 0, "conductor unit counts do not divide");
  return num / den;
}

std::vector<icm_entry> icm(const etale_alg& a, const ring_order& r, int effort) {
  ring_order mo = maximal_order(a);
  if (!order_is_bass(a, r, mo))
    fail(errkind::non_bass, "the ideal class monoid needs a Bass order");
  std::vector<icm_entry> out;
  for (const ring_order& s : over_orders(a, r, mo))
    out.push_back({s, picard(a, s, effort)});
  return out;
}

}
