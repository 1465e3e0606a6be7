#include "wpc/intpoly.hpp"
#include <sstream>

namespace wpc {

int_poly add(const int_poly& a, const int_poly& b) {
  std::vector<Int> c(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < c.size(); i++) {
    if (i < a.c.size()) c[i] += a.c[i];
    if (i < b.c.size()) c[i] += b.c[i];
  }
  return int_poly(std::move(c));
}

int_poly sub(const int_poly& a, const int_poly& b) {
  std::vector<Int> c(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < c.size(); i++) {
    if (i < a.c.size()) c[i] += a.c[i];
    if (i < b.c.size()) c[i] -= b.c[i];
  }
  return int_poly(std::move(c));
}

int_poly mul(const int_poly& a, const int_poly& b) {
  if (a.is_zero() || b.is_zero()) return int_poly();
  std::vector<Int> c(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); i++) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); j++) c[i + j] += a.c[i] * b.c[j];
  }
  return int_poly(std::move(c));
}

int_poly derivative(const int_poly& f) {
  if (f.deg() < 1) return int_poly();
  std::vector<Int> c(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); i++) c[i - 1] = f.c[i] * (long)i;
  return int_poly(std::move(c));
}

Int eval(const int_poly& f, const Int& x) {
  Int r = 0;
  for (int i = f.deg(); i >= 0; i--) r = r * x + f.c[i];
  return r;
}

Rat eval(const int_poly& f, const Rat& x) {
  Rat r = 0;
  for (int i = f.deg(); i >= 0; i--) r = r * x + Rat(f.c[i]);
  return r;
}

Rat eval(const rat_poly& f, const Rat& x) {
  Rat r = 0;
  for (int i = f.deg(); i >= 0; i--) r = r * x + f.c[i];
  return r;
}

Int content(const int_poly& f) {
  Int g = 0;
  for (auto& x : f.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

int_poly primitive_part(const int_poly& f) {
  if (f.is_zero()) return f;
  Int g = content(f);
  if (f.lc() < 0) g = -g;
  std::vector<Int> c = f.c;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return int_poly(std::move(c));
}

rat_poly to_rat(const int_poly& f) {
  std::vector<Rat> c(f.c.size());
  for (size_t i = 0; i < c.size(); i++) c[i] = f.c[i];
  return rat_poly(std::move(c));
}

int_poly to_int(const rat_poly& f) {
  std::vector<Int> c(f.c.size());
  for (size_t i = 0; i < c.size(); i++) {
    check(f.c[i].get_den() == 1, "to_int with non integer coefficient");
    c[i] = f.c[i].get_num();
  }
  return int_poly(std::move(c));
}

rat_poly add(const rat_poly& a, const rat_poly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < c.size(); i++) {
    if (i < a.c.size()) c[i] += a.c[i];
    if (i < b.c.size()) c[i] += b.c[i];
  }
  return rat_poly(std::move(c));
}

rat_poly sub(const rat_poly& a, const rat_poly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < c.size(); i++) {
    if (i < a.c.size()) c[i] += a.c[i];
    if (i < b.c.size()) c[i] -= b.c[i];
  }
  return rat_poly(std::move(c));
}

rat_poly mul(const rat_poly& a, const rat_poly& b) {
  if (a.is_zero() || b.is_zero()) return rat_poly();
  std::vector<Rat> c(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); i++) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); j++) c[i + j] += a.c[i] * b.c[j];
  }
  return rat_poly(std::move(c));
}

rat_poly scale(const rat_poly& a, const Rat& s) {
  std::vector<Rat> c = a.c;
  for (auto& x : c) x *= s;
  return rat_poly(std::move(c));
}

void divmod(const rat_poly& a, const rat_poly& b, rat_poly& q, rat_poly& r) {
  check(!b.is_zero(), "divmod by zero polynomial");
  r = a;
  q = rat_poly();
  int db = b.deg();
  if (a.deg() < db) return;
  q.c.assign(a.deg() - db + 1, Rat(0));
  while (!r.is_zero() && r.deg() >= db) {
    int k = r.deg() - db;
    Rat f = r.lc() / b.lc();
    q.c[k] = f;
    for (int i = 0; i <= db; i++) r.c[k + i] -= f * b.c[i];
    r.normalize();
  }
  q.normalize();
}

rat_poly gcd_monic(rat_poly a, rat_poly b) {
  while (!b.is_zero()) {
    rat_poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return scale(a, Rat(1) / a.lc());
}

int_poly gcd_z(const int_poly& a, const int_poly& b) {
  if (a.is_zero()) return b.is_zero() ? a : primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  rat_poly g = gcd_monic(to_rat(a), to_rat(b));
  /* clear denominators, take primitive part */
  Int den = 1;
  for (auto& x : g.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> c(g.c.size());
  for (size_t i = 0; i < c.size(); i++) {
    Rat t = g.c[i] * den;
    c[i] = t.get_num();
  }
  return primitive_part(int_poly(std::move(c)));
}

bool is_squarefree(const int_poly& f) {
  if (f.deg() <= 0) return !f.is_zero();
  return gcd_z(f, derivative(f)).deg() == 0;
}

Int resultant(const int_poly& a, const int_poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int m = a.deg(), n = b.deg();
  if (m == 0) {
    Int r = 1;
    for (int i = 0; i < n; i++) r *= a.c[0];
    return r;
  }
  if (n == 0) {
    Int r = 1;
    for (int i = 0; i < m; i++) r *= b.c[0];
    return r;
  }
  int_mat s(m + n, m + n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j <= m; j++) s(i, i + j) = a.c[m - j];
  for (int i = 0; i < m; i++)
    for (int j = 0; j <= n; j++) s(n + i, i + j) = b.c[n - j];
  return det(s);
}

Int discriminant(const int_poly& f) {
  int n = f.deg();
  check(n >= 1, "discriminant of constant");
  Int r = resultant(f, derivative(f));
  Int lead = f.lc();
  Int d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t());
  /* sign (-1)^(n(n-1)/2) */
  if ((((long)n * (n - 1)) / 2) % 2) d = -d;
  return d;
}

int_poly parse_int_poly(const std::string& s) {
  std::vector<Int> c;
  std::string cur;
  auto flush = [&]() {
    std::string t;
    for (char ch : cur)
      if (!isspace((unsigned char)ch)) t += ch;
    if (t.empty()) fail(errkind::bad_input, "empty coefficient in polynomial");
    try {
      c.emplace_back(t);
    } catch (const std::invalid_argument&) {
      fail(errkind::bad_input, "bad coefficient '" + t + "' in polynomial");
    }
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') flush();
    else cur += ch;
  }
  flush();
  return int_poly(std::move(c));
}

std::string format_int_poly(const int_poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream o;
  for (size_t i = 0; i < f.c.size(); i++) o << (i ? "," : "") << f.c[i];
  return o.str();
}

}
