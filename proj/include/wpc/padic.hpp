#pragma once
#include "wpc/intpoly.hpp"

namespace wpc {

/* p-adic valuation of a nonzero integer */
long int_valuation(const Int& x, const Int& p);

struct np_segment {
  Rat slope;
  int length;
  bool operator==(const np_segment&) const = default;
};

/* lower Newton polygon of f at p; the constant term must be nonzero */
struct np_result {
  std::vector<std::pair<int, Int>> vertices;   /* (i, v_p(coeff_i)) hull points */
  std::vector<np_segment> segments;            /* ascending slope */
  std::vector<std::pair<Rat, int>> valuations; /* root valuation -> count, ascending */
};
np_result newton_polygon(const int_poly& f, const Int& p);

/* split a monic f modulo p^n as unit_part * positive_part where unit_part
 * collects the valuation-zero roots and positive_part the rest; both monic
 * with coefficients in [0, p^n). Degenerate inputs return a factor 1. */
struct hensel_split_result {
  int_poly unit_part, positive_part;
};
hensel_split_result hensel_split(const int_poly& f, const Int& p, int n);

}
