#pragma once

#include <vector>

#include "bockmas/group_ring.hpp"
#include "bockmas/groups.hpp"
#include "bockmas/modmatrix.hpp"

namespace bockmas {

// Finite module over R with a left G-action given by one matrix per group
// element.  act[g] satisfies act[gh] = act[g]*act[h]; the action on a
// coordinate row v is v * act[g]^T.
struct GMod {
  ModRing R;
  GroupPtr G;
  size_t dim = 0;
  std::vector<ModMatrix> act;

  std::vector<uint32_t> apply(uint32_t g, const std::vector<uint32_t>& v) const;
  ModMatrix acting(uint32_t g) const { return act[g]; }
  void validate() const;  // identity at e, multiplicativity over all pairs
};

GMod trivial_module(const ModRing& R, const GroupPtr& G, size_t dim);

// The group ring of H as a module over its own group, by left translation.
GMod regular_module(const GroupRing& ring);

// Quotient-coordinate module Omega/small with G acting through pi by left
// translation.  pi.cod must be the group of Q.ring.
GMod quotient_module(const GroupHom& pi, const QuotientCoords& Q);

// T tensor (Omega/small), G acting diagonally: through T.act on the left
// factor and by left translation through pi on the right.  Index layout is
// T-major: (t, w) -> t*Q.dim() + w.
GMod tensor_with_quotient(const GMod& T, const GroupHom& pi, const QuotientCoords& Q);

// Short exact sequence of G-modules with an R-linear (not G-equivariant)
// section of the projection.  Maps act on coordinate rows: v -> v*incl etc.
struct GModSES {
  GMod sub, mid, quo;
  ModMatrix incl;  // sub.dim x mid.dim
  ModMatrix proj;  // mid.dim x quo.dim
  ModMatrix sect;  // quo.dim x mid.dim, proj-section
  void validate() const;
};

// Data describing T tensor Omega/I^{n+1} -> T tensor Omega/I^n with kernel
// T tensor I^n/I^{n+1}; the subquotient action on the kernel is through T
// alone since left translation is trivial on the graded piece.
struct BocksteinSequence {
  GModSES ses;
  QuotientCoords big;    // Omega/I^{n+1} coordinates
  QuotientCoords smallq; // Omega/I^n coordinates
  GradedBasis graded;    // degree-n piece labelling the sub factor
  size_t t_rank = 0;
};

BocksteinSequence bockstein_ses(const GMod& T, const GroupHom& pi, const Filtration& F,
                                size_t n, const std::string& style);

}  // namespace bockmas
