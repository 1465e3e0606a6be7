#pragma once
#include "wpc/cmtype.hpp"

namespace wpc {

/* certified enclosure of log(x) for rational x > 0; width at most 2^-bits */
ivl rlog(const Rat& x, long bits);

/* enclosure of log over a positive interval */
ivl rlog_iv(const ivl& x, long bits);

/* rational upper bound on exp(x) for x >= 0 */
Rat rexp_upper(const Rat& x, long bits);

/* rational upper bound on x^(1/k) for x > 0, k >= 1 */
Rat root_upper(const Rat& x, unsigned long k);

}
