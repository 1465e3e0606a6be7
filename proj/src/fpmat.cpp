#include "wpc/fpmat.hpp"
#include "wpc/errors.hpp"

namespace wpc {

static unsigned long mulm(unsigned long a, unsigned long b, unsigned long p) {
  return (unsigned long)((unsigned __int128)a * b % p);
}

fp_mat fpm_identity(int n) {
  fp_mat m(n, std::vector<unsigned long>(n, 0));
  for (int i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

fp_mat fpm_mul(const fp_mat& a, const fp_mat& b, unsigned long p) {
  size_t n = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  fp_mat out(n, std::vector<unsigned long>(c, 0));
  for (size_t i = 0; i < n; i++) {
    check(a[i].size() == k, "fpm_mul shape mismatch");
    for (size_t t = 0; t < k; t++) {
      unsigned long v = a[i][t];
      if (!v) continue;
      for (size_t j = 0; j < c; j++)
        out[i][j] = (out[i][j] + mulm(v, b[t][j], p)) % p;
    }
  }
  return out;
}

fp_mat fpm_pow(const fp_mat& a, long e, unsigned long p) {
  check(e >= 0 && a.size() == (a.empty() ? 0 : a[0].size()), "fpm_pow needs square matrix");
  fp_mat acc = fpm_identity((int)a.size()), base = a;
  while (e > 0) {
    if (e & 1) acc = fpm_mul(acc, base, p);
    base = fpm_mul(base, base, p);
    e >>= 1;
  }
  return acc;
}

static unsigned long invm(unsigned long a, unsigned long p) {
  long t = 0, nt = 1;
  long r = (long)p, nr = (long)(a % p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt; nt = tmp;
    tmp = r - q * nr;
    r = nr; nr = tmp;
  }
  check(r == 1, "inverse of non unit mod p");
  if (t < 0) t += (long)p;
  return (unsigned long)t;
}

std::vector<int> fpm_echelon(fp_mat& m, unsigned long p) {
  std::vector<int> pivots;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; c++) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) sel++;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    unsigned long inv = invm(m[r][c], p);
    for (size_t j = c; j < cols; j++) m[r][j] = mulm(m[r][j], inv, p);
    for (size_t i = 0; i < rows; i++) {
      if (i == r || m[i][c] == 0) continue;
      unsigned long f = m[i][c];
      for (size_t j = c; j < cols; j++)
        m[i][j] = (m[i][j] + p - mulm(f, m[r][j], p)) % p;
    }
    pivots.push_back((int)c);
    r++;
  }
  m.resize(r);
  return pivots;
}

fp_mat fpm_left_kernel(const fp_mat& m, unsigned long p) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  /* reduce [m | I] tracking the transform */
  fp_mat aug(rows, std::vector<unsigned long>(cols + rows, 0));
  for (size_t i = 0; i < rows; i++) {
    for (size_t j = 0; j < cols; j++) aug[i][j] = m[i][j] % p;
    aug[i][cols + i] = 1;
  }
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; c++) {
    size_t sel = r;
    while (sel < rows && aug[sel][c] == 0) sel++;
    if (sel == rows) continue;
    std::swap(aug[r], aug[sel]);
    unsigned long inv = invm(aug[r][c], p);
    for (size_t j = 0; j < cols + rows; j++) aug[r][j] = mulm(aug[r][j], inv, p);
    for (size_t i = 0; i < rows; i++) {
      if (i == r || aug[i][c] == 0) continue;
      unsigned long f = aug[i][c];
      for (size_t j = 0; j < cols + rows; j++)
        aug[i][j] = (aug[i][j] + p - mulm(f, aug[r][j], p)) % p;
    }
    r++;
  }
  fp_mat ker;
  for (size_t i = r; i < rows; i++)
    ker.push_back(std::vector<unsigned long>(aug[i].begin() + cols, aug[i].end()));
  return ker;
}

fp_mat fpm_inverse(const fp_mat& m, unsigned long p) {
  size_t n = m.size();
  fp_mat aug(n, std::vector<unsigned long>(2 * n, 0));
  for (size_t i = 0; i < n; i++) {
    check(m[i].size() == n, "fpm_inverse needs square matrix");
    for (size_t j = 0; j < n; j++) aug[i][j] = m[i][j] % p;
    aug[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; c++) {
    size_t sel = c;
    while (sel < n && aug[sel][c] == 0) sel++;
    check(sel < n, "singular matrix mod p");
    std::swap(aug[c], aug[sel]);
    unsigned long inv = invm(aug[c][c], p);
    for (size_t j = 0; j < 2 * n; j++) aug[c][j] = mulm(aug[c][j], inv, p);
    for (size_t i = 0; i < n; i++) {
      if (i == c || aug[i][c] == 0) continue;
      unsigned long f = aug[i][c];
      for (size_t j = 0; j < 2 * n; j++)
        aug[i][j] = (aug[i][j] + p - mulm(f, aug[c][j], p)) % p;
    }
  }
  fp_mat out(n, std::vector<unsigned long>(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) out[i][j] = aug[i][n + j];
  return out;
}

}
