#pragma once
#include <vector>

namespace wpc {

/* dense matrices over F_p for word sized p, rows of values in [0, p) */
using fp_mat = std::vector<std::vector<unsigned long>>;

fp_mat fpm_mul(const fp_mat& a, const fp_mat& b, unsigned long p);
fp_mat fpm_pow(const fp_mat& a, long e, unsigned long p);
/* reduce rows in place to row echelon form, dropping zero rows;
 * returns the pivot column of each remaining row */
std::vector<int> fpm_echelon(fp_mat& m, unsigned long p);
/* basis rows of {x : x m = 0} */
fp_mat fpm_left_kernel(const fp_mat& m, unsigned long p);
fp_mat fpm_identity(int n);
fp_mat fpm_inverse(const fp_mat& m, unsigned long p); /* throws if singular */

}
