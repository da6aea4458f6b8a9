#pragma once

#include <cstdint>
#include <vector>

#include "bockmas/howell.hpp"
#include "bockmas/modmatrix.hpp"
#include "bockmas/modring.hpp"

namespace bockmas {

// Local Smith normal form over Z/p^s: U * N * V = D with D diagonal,
// diagonal entries exact powers of p with ascending exponents.
struct SmithResult {
  std::vector<uint32_t> diag_exponents;  // exponents of the nonzero diagonal entries
  ModMatrix U;                           // rows x rows, invertible
  ModMatrix V;                           // cols x cols, invertible
  ModMatrix D;                           // rows x cols
};

SmithResult smith(const ModMatrix& N);

// Finite abelian p-group presented as big/small for submodules small <= big of
// a free ambient module.  Provides canonical coordinates: a vector in big maps
// to a tuple (c_1, ..., c_r) with c_t in Z/p^(exponents[t]), zero exactly on
// members of small.
struct FPModule {
  ModRing R;
  std::vector<uint32_t> exponents;  // ascending, each in [1, s]
  Submodule big;
  ModMatrix V;     // k x k change of basis on big-coefficient space
  ModMatrix Vinv;  // V * Vinv = identity
  std::vector<size_t> kept;  // positions of surviving coordinates

  size_t rank() const { return exponents.size(); }
  uint64_t log_p_cardinality() const;
  bool is_trivial() const { return exponents.empty(); }

  std::vector<uint32_t> to_coordinates(const std::vector<uint32_t>& v) const;
  std::vector<uint32_t> from_coordinates(const std::vector<uint32_t>& c) const;
  bool is_zero_class(const std::vector<uint32_t>& v) const;
  bool classes_equal(const std::vector<uint32_t>& v, const std::vector<uint32_t>& w) const;
};

// Requires small <= big (checked).
FPModule quotient(const Submodule& big, const Submodule& small);

// Inverse of an invertible square matrix over Z/p^s.
ModMatrix invert(const ModMatrix& M);

}  // namespace bockmas
