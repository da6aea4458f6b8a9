#pragma once

#include <vector>

#include "bockmas/cohomology.hpp"
#include "bockmas/gmodule.hpp"
#include "bockmas/groups.hpp"

namespace bockmas {

// Unipotent upper triangular matrices with one module-valued band: entry
// (i,j) (0-based, i < j) takes values in T exactly when i < tcut <= j, and in
// R otherwise.  Two T-valued entries never multiply, so the product stays in
// the same shape.
struct UgmaShape {
  ModRing R;
  size_t size = 0;
  size_t tcut = 0;
  size_t r = 1;

  bool tval(size_t i, size_t j) const { return i < tcut && tcut <= j; }
  size_t len(size_t i, size_t j) const { return tval(i, j) ? r : 1; }
  bool operator==(const UgmaShape& o) const {
    return R.q == o.R.q && size == o.size && tcut == o.tcut && r == o.r;
  }
};

struct UgmaElem {
  // e[i][j] for i < j; diagonal ones are implicit
  std::vector<std::vector<std::vector<uint32_t>>> e;
};

UgmaElem ugma_identity(const UgmaShape& S);
UgmaElem ugma_mul(const UgmaShape& S, const UgmaElem& x, const UgmaElem& y);
UgmaElem ugma_inverse(const UgmaShape& S, const UgmaElem& x);
// entrywise action of g: scalars are fixed, T-entries move by T.act
UgmaElem ugma_act(const UgmaShape& S, const GMod& T, uint32_t g, const UgmaElem& x);
bool ugma_equal(const UgmaShape& S, const UgmaElem& x, const UgmaElem& y,
                bool ignore_corner);

// Homomorphism from G into unipotent upper triangular size x size matrices
// over R, stored by table.
struct UnipotentHom {
  GroupPtr G;
  ModRing R;
  size_t size = 0;
  std::vector<ModMatrix> mat;

  void validate() const;

  // entries binom(chi(g), j-i); requires size-1 < p^(t-s+1) so that the
  // binomials are well defined on character values
  static UnipotentHom binomial(const Character& chi, const ModRing& R, size_t size);
  // full coefficient matrix of a Heisenberg group reduced into R
  static UnipotentHom heisenberg_quotient(const GroupPtr& H, const ModRing& R);
  // precompose with a surjection pi: G ->> H
  static UnipotentHom pullback(const UnipotentHom& on_quotient, const GroupHom& pi);
};

// Proper defining system rho: G -> U(T) modulo the corner entry; the corner
// of the stored elements is kept at zero and never read.
struct DefiningSystem {
  UgmaShape shape;
  GMod T;
  std::vector<UgmaElem> rho;

  void validate() const;  // cocycle law away from the corner, all pairs
  bool validate_sampled(SplitMix64& rng, size_t trials) const;
  // F(g,h) = corner entry of rho(g) * g.rho(h); a 2-cocycle valued in T
  ModMatrix massey_cocycle() const;
};

// Block defining system attached to phi (size a+1), theta (size b+1) and a
// T-valued block kappa: rho = [[phi, kappa],[0, theta]].
DefiningSystem block_system(const UnipotentHom& phi, const UnipotentHom& theta,
                            const GMod& T, const ModMatrix& kappa_table);

// The conjugation module E_{phi,theta} = T-valued (a+1) x (b+1) blocks with
// g * x = phi(g) . (g x) . theta(g)^{-1}, coordinate ((i*(b+1))+j)*r + u, and
// its short exact sequence 0 -> T -> E -> E/T -> 0 splitting off the corner
// entry (0, b).
GMod star_module(const UnipotentHom& phi, const UnipotentHom& theta, const GMod& T);
GModSES star_ses(const UnipotentHom& phi, const UnipotentHom& theta, const GMod& T);

// kappa' as a cocycle valued in the star quotient <-> proper defining system
DefiningSystem system_from_cocycle(const UnipotentHom& phi, const UnipotentHom& theta,
                                   const GMod& T, const ModMatrix& kprime);
ModMatrix cocycle_from_system(const UnipotentHom& phi, const UnipotentHom& theta,
                              const DefiningSystem& D);

// The evaluation map p(t (x) [h]) = phi(h) . (t at (a,0)) . theta(h)^{-1} and
// its induced maps on a Bockstein sequence over the same tower.
struct PMap {
  ModMatrix P;     // mid coords -> star coords
  ModMatrix Pbar;  // quo coords -> star-quotient coords
  ModMatrix Psub;  // sub coords -> T (corner) coords
};

// phiH/thetaH are over the ring's group H; star is built from their pullbacks
// along the same tower as B.  Checks that p is equivariant and sends the
// degree-n layer into the corner.
PMap p_map(const UnipotentHom& phiH, const UnipotentHom& thetaH, const GMod& T,
           const BocksteinSequence& B, const GModSES& star);

}  // namespace bockmas
