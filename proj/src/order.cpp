#include "wpc/order.hpp"
#include "wpc/arith.hpp"
#include "wpc/fpmat.hpp"
#include "wpc/errors.hpp"
#include <algorithm>

namespace wpc {

alg_elt lattice_element(const zlattice& l, int i) {
  alg_elt v(l.n);
  for (int j = 0; j < l.n; j++) {
    Rat c(l.b(i, j), l.den);
    c.canonicalize();
    v[j] = c;
  }
  return v;
}

std::vector<alg_elt> lattice_elements(const zlattice& l) {
  std::vector<alg_elt> out;
  for (int i = 0; i < l.n; i++) out.push_back(lattice_element(l, i));
  return out;
}

zlattice span_of(const etale_alg& a, const std::vector<alg_elt>& gens) {
  check(!gens.empty(), "span of nothing");
  rat_mat m((int)gens.size(), a.n);
  for (size_t i = 0; i < gens.size(); i++) {
    check((int)gens[i].size() == a.n, "generator size mismatch");
    for (int j = 0; j < a.n; j++) m((int)i, j) = gens[i][j];
  }
  return lattice_make(m);
}

bool lattice_is_order(const etale_alg& a, const zlattice& l) {
  if (!lattice_contains(l, el_one(a))) return false;
  auto bs = lattice_elements(l);
  for (size_t i = 0; i < bs.size(); i++)
    for (size_t j = i; j < bs.size(); j++)
      if (!lattice_contains(l, el_mul(a, bs[i], bs[j]))) return false;
  return true;
}

ring_order order_from_lattice(const etale_alg& a, const zlattice& l) {
  if (!lattice_is_order(a, l)) fail(errkind::bad_input, "lattice is not an order");
  return {l};
}

ring_order equation_order_weil(const etale_alg& a) {
  check(a.qc != 0, "equation order needs the involution");
  std::vector<alg_elt> gens;
  alg_elt x = el_from_poly(a, int_poly({0, 1}));
  alg_elt y = el_scale(a.xinv, Rat(a.qc)); /* q/x */
  for (int k = 0; k < a.n; k++) gens.push_back(el_pow(a, x, k));
  for (int k = 1; k < a.n; k++) gens.push_back(el_pow(a, y, k));
  zlattice l = span_of(a, gens);
  check(lattice_is_order(a, l), "equation order is not closed");
  return {l};
}

Rat lattice_disc(const etale_alg& a, const zlattice& l) {
  auto bs = lattice_elements(l);
  rat_mat g(a.n, a.n);
  for (int i = 0; i < a.n; i++)
    for (int j = i; j < a.n; j++) {
      Rat t = el_trace(a, el_mul(a, bs[i], bs[j]));
      g(i, j) = t;
      g(j, i) = t;
    }
  return det(g);
}

Int order_disc(const etale_alg& a, const ring_order& s) {
  Rat d = lattice_disc(a, s.l);
  check(d.get_den() == 1, "order discriminant is not integral");
  return d.get_num();
}

zlattice ideal_mul(const etale_alg& a, const zlattice& i, const zlattice& j) {
  auto bi = lattice_elements(i), bj = lattice_elements(j);
  std::vector<alg_elt> gens;
  for (auto& x : bi)
    for (auto& y : bj) gens.push_back(el_mul(a, x, y));
  return span_of(a, gens);
}

zlattice ideal_pow(const etale_alg& a, const zlattice& i, long e) {
  check(e >= 1, "ideal power needs a positive exponent");
  zlattice acc = i, base = i;
  e--;
  while (e > 0) {
    if (e & 1) acc = ideal_mul(a, acc, base);
    base = ideal_mul(a, base, base);
    e >>= 1;
  }
  return acc;
}

zlattice ideal_colon(const etale_alg& a, const zlattice& i, const zlattice& j) {
  rat_mat inv = lattice_inv_q(i);
  auto bj = lattice_elements(j);
  int n = a.n, m = (int)bj.size();
  rat_mat stack(n, n * m);
  for (int k = 0; k < m; k++) {
    rat_mat nk = mul(mult_matrix(a, bj[k]), inv);
    for (int r = 0; r < n; r++)
      for (int c = 0; c < n; c++) stack(r, k * n + c) = nk(r, c);
  }
  return lattice_preimage(stack);
}

zlattice trace_dual(const etale_alg& a, const zlattice& i) {
  rat_mat t = rat_mat::from(trace_form(a));
  zlattice out = lattice_preimage(mul(t, transpose(lattice_basis_q(i))));
  return out;
}

zlattice conj_lattice(const etale_alg& a, const zlattice& i) {
  std::vector<alg_elt> gens;
  for (auto& x : lattice_elements(i)) gens.push_back(el_conj(a, x));
  return span_of(a, gens);
}

zlattice principal_ideal(const etale_alg& a, const ring_order& s, const alg_elt& x) {
  std::vector<alg_elt> gens;
  for (auto& b : lattice_elements(s.l)) gens.push_back(el_mul(a, x, b));
  return span_of(a, gens); /* throws on zero divisors via the rank check */
}

zlattice ideal_from_gens(const etale_alg& a, const ring_order& s,
                         const std::vector<alg_elt>& gens) {
  std::vector<alg_elt> prods;
  for (auto& g : gens)
    for (auto& b : lattice_elements(s.l)) prods.push_back(el_mul(a, g, b));
  return span_of(a, prods);
}

ring_order multiplicator_ring(const etale_alg& a, const zlattice& i) {
  zlattice m = ideal_colon(a, i, i);
  check(lattice_is_order(a, m), "multiplicator ring is not a ring");
  return {m};
}

bool ideal_is_invertible(const etale_alg& a, const ring_order& s, const zlattice& i) {
  return ideal_mul(a, i, ideal_colon(a, s.l, i)) == s.l;
}

bool order_is_gorenstein(const etale_alg& a, const ring_order& s) {
  return ideal_is_invertible(a, s, trace_dual(a, s.l));
}

/* ---------- maximal order ---------- */

/* radical of s/ps as a lattice between s and (1/1)s */
static zlattice p_radical(const etale_alg& a, const zlattice& s, const Int& p) {
  int n = a.n;
  check(p.fits_ulong_p(), "prime too large");
  unsigned long pu = p.get_ui();
  long m = 0;
  Int pk(1);
  while (pk < n) {
    pk *= p;
    m++;
  }
  if (m == 0) m = 1; /* n == 1 */
  auto bs = lattice_elements(s);
  check(p.fits_slong_p(), "prime too large");
  fp_mat frob(n, std::vector<unsigned long>(n, 0));
  for (int i = 0; i < n; i++) {
    alg_elt pw = el_pow(a, bs[i], p.get_si());
    auto coords = lattice_coords(s, pw);
    for (int j = 0; j < n; j++) {
      check(coords[j].get_den() == 1, "power left the order");
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), coords[j].get_num().get_mpz_t(), p.get_mpz_t());
      frob[i][j] = r.get_ui();
    }
  }
  fp_mat ker = fpm_left_kernel(fpm_pow(frob, m, pu), pu);
  std::vector<alg_elt> gens;
  for (auto& b : bs) gens.push_back(el_scale(b, Rat(p)));
  for (auto& kr : ker) {
    alg_elt v = el_zero(a);
    for (int j = 0; j < n; j++)
      if (kr[j]) v = el_add(v, el_scale(bs[j], Rat(Int(kr[j]))));
    gens.push_back(v);
  }
  return span_of(a, gens);
}

/* round-2 loop for a field component presented by its own algebra */
static zlattice field_maximal(const etale_alg& a) {
  zlattice s = lattice_zn(a.n);
  if (a.n == 1) return s;
  Int disc = discriminant(a.g);
  check(disc != 0, "squarefree defining polynomial expected");
  for (auto& [p, e] : factor_int(disc)) {
    if (e < 2) continue;
    for (;;) {
      zlattice j = p_radical(a, s, p);
      zlattice s2 = ideal_colon(a, j, j);
      if (s2 == s) break;
      check(lattice_contains(s2, s), "multiplier ring shrank");
      s = s2;
    }
  }
  check(lattice_is_order(a, s), "maximal order is not closed");
  return s;
}

ring_order maximal_order(const etale_alg& a) {
  if (a.comps.size() == 1) return {field_maximal(a)};
  std::vector<alg_elt> gens;
  for (size_t i = 0; i < a.comps.size(); i++) {
    etale_alg ai = etale_make(a.comps[i]);
    zlattice oi = field_maximal(ai);
    for (auto& b : lattice_elements(oi))
      gens.push_back(el_lift_component(a, (int)i, el_poly(b)));
  }
  zlattice l = span_of(a, gens);
  check(lattice_is_order(a, l), "assembled maximal order is not closed");
  return {l};
}

/* ---------- over-orders ---------- */

bool lattice_less(const zlattice& x, const zlattice& y) {
  if (x.den != y.den) return x.den < y.den;
  for (size_t k = 0; k < x.b.e.size(); k++)
    if (x.b.e[k] != y.b.e[k]) return x.b.e[k] < y.b.e[k];
  return false;
}

static void divisor_list(const Int& d, std::vector<Int>& out) {
  out.clear();
  out.push_back(1);
  for (auto& [p, e] : factor_int(d)) {
    std::vector<Int> cur = out;
    Int pw = 1;
    for (int k = 1; k <= e; k++) {
      pw *= p;
      for (auto& x : cur) out.push_back(x * pw);
    }
  }
  std::sort(out.begin(), out.end());
}

std::vector<ring_order> over_orders(const etale_alg& a, const ring_order& s,
                                    const ring_order& maximal) {
  check(lattice_contains(maximal.l, s.l), "order not inside the maximal order");
  int n = a.n;
  rat_mat c_rat = mul(lattice_basis_q(s.l), lattice_inv_q(maximal.l));
  int_mat c(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      check(c_rat(i, j).get_den() == 1, "containment matrix not integral");
      c(i, j) = c_rat(i, j).get_num();
    }
  snf_result sr = snf(c);
  /* basis of the maximal order adapted to the quotient: rows of v^-1 B */
  rat_mat vinv = inverse(rat_mat::from(sr.v));
  rat_mat adapted = mul(vinv, lattice_basis_q(maximal.l));
  std::vector<int> t_idx;
  for (int i = 0; i < n; i++)
    if (sr.invariant_factors[i] != 1) t_idx.push_back(i);
  int k = (int)t_idx.size();
  std::vector<alg_elt> adapted_rows(n);
  for (int i = 0; i < n; i++) {
    alg_elt v(n);
    for (int j = 0; j < n; j++) v[j] = adapted(i, j);
    adapted_rows[i] = v;
  }

  std::vector<ring_order> out;
  if (k == 0) {
    out.push_back(s);
    return out;
  }
  std::vector<std::vector<Int>> diag_divs(k);
  for (int j = 0; j < k; j++) divisor_list(sr.invariant_factors[t_idx[j]], diag_divs[j]);

  std::vector<Int> diag(k);
  std::vector<int_mat> subgroups;
  /* enumerate upper triangular matrices h with h_jj | d_j and entries above
   * each pivot reduced mod the pivot, then keep those whose row span
   * contains diag(d) */
  auto emit = [&](const int_mat& h) {
    int_mat stack(2 * k, k);
    for (int i = 0; i < k; i++)
      for (int j = 0; j < k; j++) {
        stack(i, j) = h(i, j);
        stack(k + i, j) = i == j ? sr.invariant_factors[t_idx[i]] : Int(0);
      }
    if (hnf(stack) == h) subgroups.push_back(h);
  };
  std::vector<std::vector<Int>> offdiag; /* per column above-pivot choices */
  auto rec_cols = [&](auto&& self, int col, int_mat& h) -> void {
    if (col == k) {
      emit(h);
      return;
    }
    for (auto& d : diag_divs[col]) {
      h(col, col) = d;
      /* entries h(i, col) for i < col run over [0, d) */
      std::vector<Int> e(col, Int(0));
      auto rec_e = [&](auto&& self2, int i) -> void {
        if (i == col) {
          for (int t = 0; t < col; t++) h(t, col) = e[t];
          self(self, col + 1, h);
          return;
        }
        for (Int v = 0; v < d; v++) {
          e[i] = v;
          self2(self2, i + 1);
        }
      };
      rec_e(rec_e, 0);
    }
  };
  int_mat h(k, k);
  rec_cols(rec_cols, 0, h);

  for (auto& hm : subgroups) {
    std::vector<alg_elt> gens = lattice_elements(s.l);
    for (int i = 0; i < k; i++) {
      alg_elt v = el_zero(a);
      for (int j = 0; j < k; j++)
        if (hm(i, j) != 0) v = el_add(v, el_scale(adapted_rows[t_idx[j]], Rat(hm(i, j))));
      gens.push_back(v);
    }
    zlattice l = span_of(a, gens);
    if (lattice_is_order(a, l)) out.push_back({l});
  }
  std::sort(out.begin(), out.end(), [&](const ring_order& x, const ring_order& y) {
    Rat ix = lattice_index(maximal.l, x.l), iy = lattice_index(maximal.l, y.l);
    if (ix != iy) return ix > iy;
    return lattice_less(x.l, y.l);
  });
  check(out.front() == s && out.back() == maximal, "over-order enumeration broken");
  return out;
}

bool order_is_bass(const etale_alg& a, const ring_order& s, const ring_order& maximal) {
  for (auto& t : over_orders(a, s, maximal))
    if (!order_is_gorenstein(a, t)) return false;
  return true;
}

}
