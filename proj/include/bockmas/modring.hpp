#pragma once

#include <cstdint>

#include "bockmas/errors.hpp"

namespace bockmas {

// Arithmetic in Z/p^s, canonical residues in [0, p^s).  p prime, s >= 1,
// p^s <= 2^31 so products fit in uint64 before reduction.
struct ModRing {
  uint32_t p = 0;
  uint32_t s = 0;
  uint32_t q = 0;  // p^s

  ModRing() = default;
  ModRing(uint32_t p_, uint32_t s_);

  static bool is_prime(uint32_t n);

  uint32_t reduce(int64_t a) const {
    int64_t r = a % static_cast<int64_t>(q);
    if (r < 0) r += q;
    return static_cast<uint32_t>(r);
  }
  uint32_t reduce_u64(uint64_t a) const { return static_cast<uint32_t>(a % q); }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint64_t t = static_cast<uint64_t>(a) + b;
    return t >= q ? static_cast<uint32_t>(t - q) : static_cast<uint32_t>(t);
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + (q - b); }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % q);
  }
  uint32_t pow(uint32_t a, uint64_t e) const;

  bool is_unit(uint32_t a) const { return a % p != 0; }
  uint32_t inv_unit(uint32_t a) const;

  // p-adic valuation of the residue; val(0) = s.
  uint32_t val(uint32_t a) const;
  // a / p^val(a); returns 1 for a = 0.
  uint32_t unit_part(uint32_t a) const;
  // p^k for 0 <= k <= s.
  uint32_t ppow(uint32_t k) const;

  bool operator==(const ModRing& o) const { return p == o.p && s == o.s; }
  bool operator!=(const ModRing& o) const { return !(*this == o); }
};

}  // namespace bockmas
