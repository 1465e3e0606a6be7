#include "wpc/intmat.hpp"
#include <sstream>
#include <algorithm>

namespace wpc {

int_mat int_mat::identity(int n) {
  int_mat m(n, n);
  for (int i = 0; i < n; i++) m(i, i) = 1;
  return m;
}

bool int_mat::is_zero() const {
  for (auto& x : e) if (x != 0) return false;
  return true;
}

rat_mat rat_mat::identity(int n) {
  rat_mat m(n, n);
  for (int i = 0; i < n; i++) m(i, i) = 1;
  return m;
}

rat_mat rat_mat::from(const int_mat& m) {
  rat_mat r(m.nr, m.nc);
  for (size_t k = 0; k < m.e.size(); k++) r.e[k] = m.e[k];
  return r;
}

int_mat mul(const int_mat& a, const int_mat& b) {
  check(a.nc == b.nr, "int_mat mul shape");
  int_mat c(a.nr, b.nc);
  Int t;
  for (int i = 0; i < a.nr; i++)
    for (int k = 0; k < a.nc; k++) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.nc; j++) {
        t = aik * b(k, j);
        c(i, j) += t;
      }
    }
  return c;
}

rat_mat mul(const rat_mat& a, const rat_mat& b) {
  check(a.nc == b.nr, "rat_mat mul shape");
  rat_mat c(a.nr, b.nc);
  for (int i = 0; i < a.nr; i++)
    for (int k = 0; k < a.nc; k++) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.nc; j++) c(i, j) += aik * b(k, j);
    }
  return c;
}

int_mat transpose(const int_mat& m) {
  int_mat t(m.nc, m.nr);
  for (int i = 0; i < m.nr; i++)
    for (int j = 0; j < m.nc; j++) t(j, i) = m(i, j);
  return t;
}

rat_mat transpose(const rat_mat& m) {
  rat_mat t(m.nc, m.nr);
  for (int i = 0; i < m.nr; i++)
    for (int j = 0; j < m.nc; j++) t(j, i) = m(i, j);
  return t;
}

int_mat row_stack(const int_mat& a, const int_mat& b) {
  check(a.nc == b.nc || a.nr == 0 || b.nr == 0, "row_stack width");
  if (a.nr == 0) return b;
  if (b.nr == 0) return a;
  int_mat c(a.nr + b.nr, a.nc);
  std::copy(a.e.begin(), a.e.end(), c.e.begin());
  std::copy(b.e.begin(), b.e.end(), c.e.begin() + a.e.size());
  return c;
}

std::string to_string(const int_mat& m) {
  std::ostringstream o;
  o << "[";
  for (int i = 0; i < m.nr; i++) {
    o << (i ? ";" : "") << "[";
    for (int j = 0; j < m.nc; j++) o << (j ? "," : "") << m(i, j);
    o << "]";
  }
  o << "]";
  return o.str();
}

std::string to_string(const rat_mat& m) {
  std::ostringstream o;
  o << "[";
  for (int i = 0; i < m.nr; i++) {
    o << (i ? ";" : "") << "[";
    for (int j = 0; j < m.nc; j++) o << (j ? "," : "") << m(i, j);
    o << "]";
  }
  o << "]";
  return o.str();
}

rat_mat inverse(const rat_mat& m) {
  check(m.nr == m.nc, "inverse needs square");
  int n = m.nr;
  rat_mat a = m, inv = rat_mat::identity(n);
  for (int c = 0; c < n; c++) {
    int p = -1;
    for (int i = c; i < n; i++)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) fail(errkind::internal, "inverse of singular matrix");
    if (p != c)
      for (int j = 0; j < n; j++) { swap(a(p, j), a(c, j)); swap(inv(p, j), inv(c, j)); }
    Rat piv = a(c, c);
    for (int j = 0; j < n; j++) { a(c, j) /= piv; inv(c, j) /= piv; }
    for (int i = 0; i < n; i++) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int j = 0; j < n; j++) { a(i, j) -= f * a(c, j); inv(i, j) -= f * inv(c, j); }
    }
  }
  return inv;
}

std::vector<Rat> mul_vec(const std::vector<Rat>& x, const rat_mat& m) {
  check((int)x.size() == m.nr, "mul_vec shape");
  std::vector<Rat> r(m.nc);
  for (int i = 0; i < m.nr; i++) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.nc; j++) r[j] += x[i] * m(i, j);
  }
  return r;
}

Int det(int_mat m) {
  check(m.nr == m.nc, "det needs square");
  int n = m.nr;
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; k++) {
    int p = -1;
    for (int i = k; i < n; i++)
      if (m(i, k) != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = k; j < n; j++) swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat det(rat_mat m) {
  check(m.nr == m.nc, "det needs square");
  int n = m.nr;
  Rat d = 1;
  for (int c = 0; c < n; c++) {
    int p = -1;
    for (int i = c; i < n; i++)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; j++) swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rat piv = m(c, c);
    for (int i = c + 1; i < n; i++) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / piv;
      for (int j = c; j < n; j++) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

/* one elimination pass for column j over rows [pr, nr): returns true if a
 * pivot remains at row pr */
static bool clear_column_below(int_mat& m, int_mat* u, int pr, int j) {
  int nr = m.nr, nc = m.nc;
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int c = 0; c < nc; c++) swap(m(a, c), m(b, c));
    if (u) for (int c = 0; c < u->nc; c++) swap((*u)(a, c), (*u)(b, c));
  };
  auto submul = [&](int dst, int src, const Int& q) { /* row dst -= q * row src */
    if (q == 0) return;
    Int t;
    for (int c = 0; c < nc; c++) { t = q * m(src, c); m(dst, c) -= t; }
    if (u) for (int c = 0; c < u->nc; c++) { t = q * (*u)(src, c); (*u)(dst, c) -= t; }
  };
  for (;;) {
    int p = -1;
    for (int i = pr; i < nr; i++) {
      if (m(i, j) == 0) continue;
      if (p < 0 || mpz_cmpabs(m(i, j).get_mpz_t(), m(p, j).get_mpz_t()) < 0) p = i;
    }
    if (p < 0) return false;
    swap_rows(p, pr);
    bool others = false;
    Int q;
    for (int i = pr + 1; i < nr; i++) {
      if (m(i, j) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), m(i, j).get_mpz_t(), m(pr, j).get_mpz_t());
      submul(i, pr, q);
      if (m(i, j) != 0) others = true;
    }
    if (!others) {
      if (m(pr, j) < 0) {
        for (int c = 0; c < nc; c++) m(pr, c) = -m(pr, c);
        if (u) for (int c = 0; c < u->nc; c++) (*u)(pr, c) = -(*u)(pr, c);
      }
      return true;
    }
  }
}

int_mat hnf_full(int_mat m, int_mat* u) {
  if (u) *u = int_mat::identity(m.nr);
  int pr = 0;
  Int q;
  for (int j = 0; j < m.nc && pr < m.nr; j++) {
    if (!clear_column_below(m, u, pr, j)) continue;
    /* reduce entries above the pivot into [0, pivot) */
    for (int i = 0; i < pr; i++) {
      mpz_fdiv_q(q.get_mpz_t(), m(i, j).get_mpz_t(), m(pr, j).get_mpz_t());
      if (q == 0) continue;
      Int t;
      for (int c = 0; c < m.nc; c++) { t = q * m(pr, c); m(i, c) -= t; }
      if (u) for (int c = 0; c < u->nc; c++) { t = q * (*u)(pr, c); (*u)(i, c) -= t; }
    }
    pr++;
  }
  return m;
}

int_mat hnf(const int_mat& m) {
  int_mat h = hnf_full(m, nullptr);
  int r = h.nr;
  while (r > 0) {
    bool zero = true;
    for (int j = 0; j < h.nc; j++)
      if (h(r - 1, j) != 0) { zero = false; break; }
    if (!zero) break;
    r--;
  }
  int_mat out(r, h.nc);
  std::copy(h.e.begin(), h.e.begin() + (size_t)r * h.nc, out.e.begin());
  return out;
}

bool is_hnf_basis(const int_mat& m) {
  int prev = -1;
  for (int i = 0; i < m.nr; i++) {
    int p = -1;
    for (int j = 0; j < m.nc; j++)
      if (m(i, j) != 0) { p = j; break; }
    if (p < 0 || p <= prev) return false;
    if (m(i, p) <= 0) return false;
    for (int k = 0; k < i; k++)
      if (m(k, p) < 0 || m(k, p) >= m(i, p)) return false;
    prev = p;
  }
  return true;
}

int_mat left_kernel(const int_mat& m) {
  int_mat u;
  int_mat h = hnf_full(m, &u);
  int r = h.nr;
  while (r > 0) {
    bool zero = true;
    for (int j = 0; j < h.nc; j++)
      if (h(r - 1, j) != 0) { zero = false; break; }
    if (!zero) break;
    r--;
  }
  int_mat k(h.nr - r, m.nr);
  for (int i = r; i < h.nr; i++)
    for (int j = 0; j < m.nr; j++) k(i - r, j) = u(i, j);
  return k;
}

snf_result snf(const int_mat& m) {
  snf_result res;
  res.d = m;
  res.u = int_mat::identity(m.nr);
  res.v = int_mat::identity(m.nc);
  int_mat& d = res.d;
  int nr = m.nr, nc = m.nc;

  auto row_submul = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    Int t;
    for (int c = 0; c < nc; c++) { t = q * d(src, c); d(dst, c) -= t; }
    for (int c = 0; c < nr; c++) { t = q * res.u(src, c); res.u(dst, c) -= t; }
  };
  auto col_submul = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    Int t;
    for (int r = 0; r < nr; r++) { t = q * d(r, src); d(r, dst) -= t; }
    for (int r = 0; r < nc; r++) { t = q * res.v(r, src); res.v(r, dst) -= t; }
  };
  auto row_swap = [&](int a, int b) {
    if (a == b) return;
    for (int c = 0; c < nc; c++) swap(d(a, c), d(b, c));
    for (int c = 0; c < nr; c++) swap(res.u(a, c), res.u(b, c));
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int r = 0; r < nr; r++) swap(d(r, a), d(r, b));
    for (int r = 0; r < nc; r++) swap(res.v(r, a), res.v(r, b));
  };
  auto row_negate = [&](int a) {
    for (int c = 0; c < nc; c++) d(a, c) = -d(a, c);
    for (int c = 0; c < nr; c++) res.u(a, c) = -res.u(a, c);
  };

  int t = 0;
  int nmin = std::min(nr, nc);
  Int q;
  while (t < nmin) {
    /* locate entry of least magnitude in the trailing block */
    int bi = -1, bj = -1;
    for (int i = t; i < nr; i++)
      for (int j = t; j < nc; j++)
        if (d(i, j) != 0 && (bi < 0 || mpz_cmpabs(d(i, j).get_mpz_t(), d(bi, bj).get_mpz_t()) < 0)) { bi = i; bj = j; }
    if (bi < 0) break;
    row_swap(bi, t);
    col_swap(bj, t);
    bool dirty = false;
    for (int i = t + 1; i < nr; i++) {
      if (d(i, t) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
      row_submul(i, t, q);
      if (d(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < nc; j++) {
      if (d(t, j) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
      col_submul(j, t, q);
      if (d(t, j) != 0) dirty = true;
    }
    if (dirty) continue;
    /* pivot now alone in its row and column; enforce divisibility */
    bool fixed = false;
    for (int i = t + 1; i < nr && !fixed; i++)
      for (int j = t + 1; j < nc && !fixed; j++)
        if (d(i, j) % d(t, t) != 0) {
          Int one = 1;
          row_submul(t, i, -one); /* add row i to row t */
          fixed = true;
        }
    if (fixed) continue;
    if (d(t, t) < 0) row_negate(t);
    t++;
  }
  for (int i = 0; i < nmin; i++)
    if (res.d(i, i) != 0) res.invariant_factors.push_back(res.d(i, i));
  return res;
}

std::vector<Rat> solve_left(const rat_mat& m_inv, const std::vector<Rat>& v) {
  return mul_vec(v, m_inv);
}

}
