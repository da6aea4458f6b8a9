#pragma once

#include <optional>
#include <vector>

#include "bockmas/fpmodule.hpp"
#include "bockmas/gmodule.hpp"
#include "bockmas/groups.hpp"
#include "bockmas/howell.hpp"
#include "bockmas/rng.hpp"

namespace bockmas {

// Cochain tables: a 1-cochain on G valued in M is a |G| x m matrix (row g =
// value at g, row 0 zero); a 2-cochain is a |G|^2 x m matrix (row g*|G|+h).

ModMatrix d1(const GMod& M, const ModMatrix& f);
ModMatrix d2(const GMod& M, const ModMatrix& c);  // materializes |G|^3 rows
bool is_cocycle1(const GMod& M, const ModMatrix& f);
bool is_cocycle2(const GMod& M, const ModMatrix& c);
bool is_cocycle2_sampled(const GMod& M, const ModMatrix& c, SplitMix64& rng, size_t trials);

// g -> g.v - v
ModMatrix coboundary1_table(const GMod& M, const std::vector<uint32_t>& v);

// Z^1(G, M) presented on the unknowns (f(s))_s over the generators of G.
// E[g] evaluates an unknown-vector at g; membership in Z is the cocycle
// condition over every Cayley edge.
struct Z1Space {
  GMod M;
  std::vector<ModMatrix> E;  // per element: (k*m) x m
  Submodule Z;               // cocycles, ambient k*m
  Submodule B;               // coboundaries
  FPModule H;                // H^1 = Z/B

  size_t unknown_dim() const { return M.G->gens.size() * M.dim; }
  ModMatrix evaluate(const std::vector<uint32_t>& u) const;
  std::vector<uint32_t> value_at(const std::vector<uint32_t>& u, uint32_t g) const;
  std::vector<uint32_t> unknowns_of_table(const ModMatrix& f) const;
  std::vector<uint32_t> random_cocycle(SplitMix64& rng) const;
};
Z1Space z1_space(const GMod& M);

// Does c bound?  If so returns a normalized 1-cochain table w with d1(w) = c.
std::optional<ModMatrix> coboundary_preimage(const GMod& M, const ModMatrix& c);
bool cohomologous2(const GMod& M, const ModMatrix& a, const ModMatrix& b);

// Character values as an R-valued 1-cocycle row (requires same p, modulus at
// least as fine as R).
std::vector<uint32_t> character_values(const Character& chi, const ModRing& R);

// Cup products against an R-valued homomorphism with trivial action:
// (chi U f)(g,h) = chi(g) * (g . f(h)) and (f U chi)(g,h) = chi(h) * f(g).
ModMatrix cup_char_cochain(const GMod& M, const std::vector<uint32_t>& chi, const ModMatrix& f);
ModMatrix cup_cochain_char(const GMod& M, const ModMatrix& f, const std::vector<uint32_t>& chi);

// Connecting map in degree 1 for a section-equipped SES: lift f through the
// section, take d1 in the middle, pull back through the inclusion.
ModMatrix connecting2(const GModSES& S, const ModMatrix& f);

// Bar complex in low degrees for the left H-module A (homology side).
// 1-chains are rows of length |H|*m, block h = coefficient of [h].
ModMatrix bar_d1(const GMod& A);        // (|H|*m) x m
Submodule bar_cycles1(const GMod& A);   // kernel of bar_d1
std::vector<uint32_t> bar_d2_row(const GMod& A, uint32_t g, uint32_t h,
                                 const std::vector<uint32_t>& v);  // boundary of [g|h] (x) v
ModMatrix coinvariant_relations(const GMod& M);  // rows h.e_i - e_i

// Homology connecting value of a 1-cycle xi (in quo chains): lift blockwise
// through the section, apply bar_d1 in mid, pull back through the inclusion.
std::vector<uint32_t> homology_connecting(const GModSES& S, const std::vector<uint32_t>& xi);

}  // namespace bockmas
