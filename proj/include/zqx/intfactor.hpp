#ifndef ZQX_INTFACTOR_HPP
#define ZQX_INTFACTOR_HPP

#include <cstdint>
#include <vector>

#include "zqx/rational.hpp"

namespace zqx {

// Prime factorization by trial division (desk-scale inputs).
std::vector<std::pair<Int, long>> factor_int(const Int& n);

// All positive divisors, unsorted.
std::vector<Int> divisors(const Int& n);

// Distinct prime factors that fit in 64 bits; fails otherwise.
std::vector<std::uint64_t> prime_factors_u64(const Int& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

} // namespace zqx

#endif
