#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bockmas/fpmodule.hpp"
#include "bockmas/groups.hpp"
#include "bockmas/howell.hpp"
#include "bockmas/modmatrix.hpp"
#include "bockmas/modring.hpp"

namespace bockmas {

// R[H]; elements are dense coefficient vectors indexed by H's element labels.
struct GroupRing {
  ModRing R;
  GroupPtr H;

  size_t rank() const { return H->n; }
  std::vector<uint32_t> zero() const { return std::vector<uint32_t>(H->n, 0); }
  std::vector<uint32_t> one() const;
  std::vector<uint32_t> basis(uint32_t h) const;  // [h]
  std::vector<uint32_t> x_of(uint32_t h) const;   // [h] - 1
  std::vector<uint32_t> mul(const std::vector<uint32_t>& a,
                            const std::vector<uint32_t>& b) const;
  std::vector<uint32_t> mul_basis(const std::vector<uint32_t>& a, uint32_t h) const;
  std::vector<uint32_t> mul_x(const std::vector<uint32_t>& a, uint32_t h) const;  // a*([h]-1)
  std::vector<uint32_t> left_translate(uint32_t h, const std::vector<uint32_t>& a) const;
  uint32_t augmentation(const std::vector<uint32_t>& a) const;
  std::vector<uint32_t> power(const std::vector<uint32_t>& a, uint32_t e) const;
};

// Smallest right Omega-submodule containing the span of the given rows.
Submodule right_ideal_closure(const GroupRing& ring, const ModMatrix& gens_rows);

struct Filtration {
  GroupRing ring;
  size_t N = 0;
  std::vector<Submodule> powers;    // powers[k] = I^k, k = 0..N
  std::vector<bool> flat_quotient;  // Omega/I^k free over R, k = 0..N
  std::vector<bool> flat_graded;    // I^k/I^{k+1} free over R, k = 0..N-1
  std::vector<size_t> graded_rank;  // invariant count of I^k/I^{k+1}, k = 0..N-1
};

Filtration augmentation_powers(const GroupRing& ring, size_t N);

FPModule quotient_mod_power(const Filtration& F, size_t k);  // Omega / I^k
FPModule graded_piece(const Filtration& F, size_t k);        // I^k / I^{k+1}

// Degree-n monomial family whose images form a basis of I^n/I^{n+1}.
// Styles: cyclic {x^n}; bicyclic {x^a y^(n-a)} descending in a; heisenberg
// {x,y} / {x^2,y^2,yx,z} / {x^3,xz,yx^2,y^2x,y^3,yz} for n = 1,2,3; abelian
// (all degree-n monomials in the decomposition generators, lex); generic
// (greedy selection from generator words).  Basis-ness is asserted.
struct GradedBasis {
  size_t n = 0;
  std::string style;
  std::vector<std::string> labels;
  std::vector<std::vector<uint32_t>> elems;
  FPModule quot;   // I^n/I^{n+1}
  ModMatrix coord;      // row i = quot coordinates of elems[i]
  ModMatrix coord_inv;  // inverse; exists exactly when elems is a basis

  size_t size() const { return elems.size(); }
  // v in I^n -> coefficients along the basis images
  std::vector<uint32_t> coefficients(const std::vector<uint32_t>& v) const;
};

GradedBasis graded_basis(const Filtration& F, size_t n, const std::string& style);

// Candidate monomials for a style without the basis assertion: (label, element).
std::vector<std::pair<std::string, std::vector<uint32_t>>> monomials_of_degree(
    const GroupRing& ring, size_t n, const std::string& style);

// Linear extension of a group homomorphism to group rings, as the |H| x |C|
// matrix acting by v -> v*M.
ModMatrix induced_ring_map(const GroupRing& dom, const GroupRing& cod, const GroupHom& hom);

// Coordinates on Omega/small relative to chosen representatives.  Requires
// reps + Howell basis of small to be a free basis of Omega, and small to be a
// right ideal (so right multiplication descends).
struct QuotientCoords {
  GroupRing ring;
  Submodule small;
  std::vector<std::vector<uint32_t>> reps;
  ModMatrix stacked_inv;

  size_t dim() const { return reps.size(); }
  std::vector<uint32_t> coords(const std::vector<uint32_t>& v) const;
  std::vector<uint32_t> expand(const std::vector<uint32_t>& c) const;
  ModMatrix act_matrix(uint32_t h) const;       // right multiplication by [h]
  ModMatrix act_left_matrix(uint32_t h) const;  // left multiplication; L(gh) = L(h) L(g)
};

QuotientCoords quotient_coords(const GroupRing& ring, const Submodule& small,
                               const std::vector<std::vector<uint32_t>>& reps);

// Representatives 1, then graded monomials of degrees 1..n-1 in the style.
std::vector<std::vector<uint32_t>> truncation_reps(const Filtration& F, size_t n,
                                                   const std::string& style);
std::vector<std::string> truncation_labels(const Filtration& F, size_t n,
                                           const std::string& style);

// J = I^3 + xy*Omega for H = (Z/p)^2, with the checks on its coimage images.
struct IdealJ {
  Submodule J;
  std::vector<uint32_t> xy;
  std::vector<Character> alpha_chars;  // characters of x, y, x+y directions
  std::vector<Coimage> coimages;       // C_1, C_2, C_3
  std::vector<ModMatrix> alpha_maps;   // induced ring maps Omega -> Omega_i
  std::vector<Submodule> J_images;     // alpha_i(J), equal to I_1^3, I_2^3, I_3^2
};

IdealJ build_J(const Filtration& F);

}  // namespace bockmas
