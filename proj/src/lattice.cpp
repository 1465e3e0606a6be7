#include "wpc/lattice.hpp"
#include <algorithm>

namespace wpc {

static zlattice normalize(int n, int_mat rows, Int den) {
  check(den != 0, "lattice denominator zero");
  if (den < 0) { den = -den; for (auto& x : rows.e) x = -x; }
  int_mat h = hnf(rows);
  if (h.nr != n) fail(errkind::bad_input, "lattice generators do not span full rank");
  Int g = den;
  for (auto& x : h.e) {
    if (g == 1) break;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : h.e) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  zlattice l;
  l.n = n;
  l.b = h;
  l.den = den;
  return l;
}

zlattice lattice_make(int n, const int_mat& rows, const Int& den) {
  check(rows.nc == n, "lattice row width");
  return normalize(n, rows, den);
}

zlattice lattice_make(const rat_mat& rows_in) {
  rat_mat rows = rows_in;
  for (auto& x : rows.e) x.canonicalize();
  int n = rows.nc;
  Int den = 1;
  for (auto& x : rows.e) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  int_mat m(rows.nr, n);
  Rat t;
  for (size_t k = 0; k < rows.e.size(); k++) {
    t = rows.e[k] * den;
    check(t.get_den() == 1, "lattice_make scaling");
    m.e[k] = t.get_num();
  }
  return normalize(n, m, den);
}

zlattice lattice_zn(int n) {
  zlattice l;
  l.n = n;
  l.b = int_mat::identity(n);
  l.den = 1;
  return l;
}

rat_mat lattice_basis_q(const zlattice& l) {
  rat_mat m = rat_mat::from(l.b);
  for (auto& x : m.e) x /= l.den;
  return m;
}

rat_mat lattice_inv_q(const zlattice& l) {
  rat_mat inv = inverse(rat_mat::from(l.b));
  for (auto& x : inv.e) x *= l.den;
  return inv;
}

Rat lattice_covolume(const zlattice& l) {
  Rat d(det(l.b));
  Rat dn(l.den);
  Rat p = 1;
  for (int i = 0; i < l.n; i++) p *= dn;
  d /= p;
  check(d > 0, "covolume sign");
  return d;
}

zlattice lattice_sum(const zlattice& a, const zlattice& b) {
  check(a.n == b.n, "lattice_sum ambient");
  Int den;
  mpz_lcm(den.get_mpz_t(), a.den.get_mpz_t(), b.den.get_mpz_t());
  Int fa = den / a.den, fb = den / b.den;
  int_mat rows(a.n * 2, a.n);
  for (int i = 0; i < a.n; i++)
    for (int j = 0; j < a.n; j++) {
      rows(i, j) = a.b(i, j) * fa;
      rows(a.n + i, j) = b.b(i, j) * fb;
    }
  return normalize(a.n, rows, den);
}

zlattice lattice_dual(const zlattice& l) {
  /* rows of den * (b^-1)^T */
  rat_mat inv = inverse(rat_mat::from(l.b));
  rat_mat dt = transpose(inv);
  for (auto& x : dt.e) x *= l.den;
  return lattice_make(dt);
}

zlattice lattice_intersect(const zlattice& a, const zlattice& b) {
  return lattice_dual(lattice_sum(lattice_dual(a), lattice_dual(b)));
}

zlattice lattice_preimage(const rat_mat& n_map) {
  int n = n_map.nr;
  /* the wanted set is the dot-product dual of the lattice generated by the
   * columns of n_map */
  rat_mat cols = transpose(n_map);
  zlattice collat = lattice_make(cols); /* throws if rank < n */
  check(collat.n == n, "preimage rank");
  return lattice_dual(collat);
}

Rat lattice_index(const zlattice& a, const zlattice& b) {
  check(a.n == b.n, "lattice_index ambient");
  return lattice_covolume(b) / lattice_covolume(a);
}

std::vector<Rat> lattice_coords(const zlattice& l, const std::vector<Rat>& v) {
  check((int)v.size() == l.n, "lattice_coords length");
  std::vector<Rat> c = mul_vec(v, inverse(rat_mat::from(l.b)));
  for (auto& x : c) x *= l.den;
  return c;
}

bool lattice_contains(const zlattice& l, const std::vector<Rat>& v) {
  std::vector<Rat> c = lattice_coords(l, v);
  for (auto& x : c)
    if (x.get_den() != 1) return false;
  return true;
}

bool lattice_contains(const zlattice& l, const zlattice& sub) {
  check(l.n == sub.n, "lattice_contains ambient");
  rat_mat inv = inverse(rat_mat::from(l.b));
  std::vector<Rat> v(l.n), c;
  for (int i = 0; i < sub.n; i++) {
    for (int j = 0; j < l.n; j++) { v[j] = Rat(sub.b(i, j)) / sub.den; }
    c = mul_vec(v, inv);
    for (auto& x : c) {
      x *= l.den;
      if (x.get_den() != 1) return false;
    }
  }
  return true;
}

zlattice lattice_scale(const zlattice& l, const Rat& c) {
  check(c != 0, "lattice_scale zero");
  int_mat m = l.b;
  Int num = c.get_num();
  for (auto& x : m.e) x *= num;
  Int den = l.den * c.get_den();
  return normalize(l.n, m, den);
}

}
