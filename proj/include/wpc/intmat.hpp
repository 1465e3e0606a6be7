#pragma once
#include <gmpxx.h>
#include <vector>
#include <initializer_list>
#include <string>
#include "wpc/errors.hpp"

namespace wpc {

using Int = mpz_class;
using Rat = mpq_class;

/* dense integer matrix, row major */
struct int_mat {
  int nr = 0, nc = 0;
  std::vector<Int> e;

  int_mat() = default;
  int_mat(int r, int c) : nr(r), nc(c), e((size_t)r * c) {}
  int_mat(int r, int c, std::initializer_list<long> v) : nr(r), nc(c), e(v.begin(), v.end()) {
    check((int)e.size() == r * c, "int_mat literal size");
  }

  Int& operator()(int i, int j) { return e[(size_t)i * nc + j]; }
  const Int& operator()(int i, int j) const { return e[(size_t)i * nc + j]; }
  bool operator==(const int_mat&) const = default;

  static int_mat identity(int n);
  bool is_zero() const;
};

/* dense rational matrix, row major */
struct rat_mat {
  int nr = 0, nc = 0;
  std::vector<Rat> e;

  rat_mat() = default;
  rat_mat(int r, int c) : nr(r), nc(c), e((size_t)r * c) {}

  Rat& operator()(int i, int j) { return e[(size_t)i * nc + j]; }
  const Rat& operator()(int i, int j) const { return e[(size_t)i * nc + j]; }
  bool operator==(const rat_mat&) const = default;

  static rat_mat identity(int n);
  static rat_mat from(const int_mat& m);
};

int_mat mul(const int_mat& a, const int_mat& b);
int_mat transpose(const int_mat& m);
int_mat row_stack(const int_mat& a, const int_mat& b);
std::string to_string(const int_mat& m);

rat_mat mul(const rat_mat& a, const rat_mat& b);
rat_mat transpose(const rat_mat& m);
rat_mat inverse(const rat_mat& m);          /* throws internal if singular */
std::vector<Rat> mul_vec(const std::vector<Rat>& x, const rat_mat& m); /* row vector x times m */
std::string to_string(const rat_mat& m);

/* determinant of a square matrix, fraction-free Bareiss */
Int det(int_mat m);
Rat det(rat_mat m);

/* Row Hermite normal form, upper echelon: pivots positive, pivot columns
 * strictly increasing, entries above each pivot reduced into [0, pivot).
 * hnf() returns only the nonzero rows (a basis of the row span).
 * hnf_full() keeps the row count, zero rows at the bottom, and optionally
 * records a unimodular U with U * m = result. */
int_mat hnf(const int_mat& m);
int_mat hnf_full(int_mat m, int_mat* u);
bool is_hnf_basis(const int_mat& m);

/* basis of the left kernel {x : x m = 0} */
int_mat left_kernel(const int_mat& m);

/* Smith normal form: u * m * v = d with u, v unimodular, d diagonal,
 * diagonal entries nonnegative with d1 | d2 | ... */
struct snf_result {
  int_mat d, u, v;
  std::vector<Int> invariant_factors; /* the nonzero diagonal entries */
};
snf_result snf(const int_mat& m);

/* solve x * m = v over Q for square nonsingular m */
std::vector<Rat> solve_left(const rat_mat& m_inv, const std::vector<Rat>& v);

}
