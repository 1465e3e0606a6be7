#pragma once
#include "wpc/intmat.hpp"
#include <functional>

namespace wpc {

/* symmetric positive definite rational Gram matrix */
struct gram_form {
  rat_mat g;
  gram_form() = default;
  explicit gram_form(rat_mat m); /* validates symmetry and definiteness */
};

bool is_positive_definite(const rat_mat& g);

/* LLL with delta = 3/4 on the quadratic form g.
 * t is unimodular; rows of t are the reduced basis in input coordinates,
 * and g_red = t g t^T. */
struct lll_result {
  int_mat t;
  rat_mat g_red;
};
lll_result lll_reduce(const rat_mat& g);

/* all x != 0 with x g x^T <= bound, one representative per +-pair
 * (first nonzero coordinate positive), sorted by (value, lex) */
struct short_vec {
  std::vector<Int> x;
  Rat q;
};
std::vector<short_vec> enumerate_short(const rat_mat& g, const Rat& bound);

/* same solutions handed to f one by one in tree order, without the sort
 * or the list; f returning false stops the walk */
void enumerate_short_stream(const rat_mat& g, const Rat& bound,
                            const std::function<bool(const short_vec&)>& f);

Rat eval_form(const rat_mat& g, const std::vector<Int>& x);

}
