#pragma once

#include <cstdint>
#include <vector>

#include "bockmas/modring.hpp"

namespace bockmas {

// Integer binomial coefficient binom(a, k) reduced mod p^s.  Numerator and
// denominator are multiplied with their p-parts stripped so p-divisible factors
// stay exact; the net p-valuation is reattached at the end.
uint32_t binom_mod(const ModRing& R, uint64_t a, uint32_t k);

// prod_i binom(a_i, k_i) mod p^s.
uint32_t binom_mod_multi(const ModRing& R, const std::vector<uint64_t>& a,
                         const std::vector<uint32_t>& k);

}  // namespace bockmas
