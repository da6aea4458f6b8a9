#include "bockmas/binomial.hpp"

#include "bockmas/errors.hpp"

namespace bockmas {

namespace {

// strips p-powers from f, multiplies the unit remainder onto acc mod q
void absorb(uint64_t f, uint32_t p, uint32_t q, uint64_t& acc, uint64_t& v) {
  while (f % p == 0) {
    f /= p;
    ++v;
  }
  acc = (acc * (f % q)) % q;
}

}  // namespace

uint32_t binom_mod(const ModRing& R, uint64_t a, uint32_t k) {
  if (k == 0) return 1 % R.q;
  if (a < k) return 0;
  uint64_t num = 1, den = 1, vnum = 0, vden = 0;
  for (uint32_t j = 0; j < k; ++j) {
    absorb(a - j, R.p, R.q, num, vnum);
    absorb(static_cast<uint64_t>(j) + 1, R.p, R.q, den, vden);
  }
  require_internal(vnum >= vden, "binomial with negative p-valuation");
  uint64_t v = vnum - vden;
  if (v >= R.s) return 0;
  uint32_t unit = R.mul(static_cast<uint32_t>(num), R.inv_unit(static_cast<uint32_t>(den)));
  return R.mul(R.ppow(static_cast<uint32_t>(v)), unit);
}

uint32_t binom_mod_multi(const ModRing& R, const std::vector<uint64_t>& a,
                         const std::vector<uint32_t>& k) {
  require_internal(a.size() == k.size(), "mismatched multi-index lengths");
  uint32_t acc = 1 % R.q;
  for (size_t i = 0; i < a.size(); ++i) acc = R.mul(acc, binom_mod(R, a[i], k[i]));
  return acc;
}

}  // namespace bockmas
