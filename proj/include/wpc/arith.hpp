#pragma once
#include "wpc/intmat.hpp"

namespace wpc {

/* Miller-Rabin with 40 rounds */
bool is_prime(const Int& n);

/* prime factorization of n != 0 by trial division and Pollard rho;
 * the sign is dropped, factors are sorted */
std::vector<std::pair<Int, int>> factor_int(const Int& n);

Int next_prime_above(const Int& n);

}
