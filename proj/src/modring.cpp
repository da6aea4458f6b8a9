#include "bockmas/modring.hpp"

namespace bockmas {

bool ModRing::is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

ModRing::ModRing(uint32_t p_, uint32_t s_) : p(p_), s(s_) {
  require_input(is_prime(p), "modulus base must be prime");
  require_input(s >= 1, "modulus exponent must be at least 1");
  uint64_t m = 1;
  for (uint32_t i = 0; i < s; ++i) {
    m *= p;
    require_input(m <= (uint64_t{1} << 31), "p^s exceeds 2^31");
  }
  q = static_cast<uint32_t>(m);
}

uint32_t ModRing::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % q, acc = 1 % q;
  while (e) {
    if (e & 1) acc = (acc * base) % q;
    base = (base * base) % q;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint32_t ModRing::inv_unit(uint32_t a) const {
  require_internal(is_unit(a), "inverse of a non-unit");
  // extended Euclid on (a, q)
  int64_t r0 = a % q, r1 = q, t0 = 1, t1 = 0;
  while (r1 != 0) {
    int64_t k = r0 / r1;
    int64_t r2 = r0 - k * r1;
    int64_t t2 = t0 - k * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  require_internal(r0 == 1, "gcd(a, q) != 1 for claimed unit");
  return reduce(t0);
}

uint32_t ModRing::val(uint32_t a) const {
  if (a == 0) return s;
  uint32_t v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

uint32_t ModRing::unit_part(uint32_t a) const {
  if (a == 0) return 1;
  while (a % p == 0) a /= p;
  return a;
}

uint32_t ModRing::ppow(uint32_t k) const {
  require_internal(k <= s, "p-power exponent out of range");
  uint32_t r = 1;
  for (uint32_t i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace bockmas
