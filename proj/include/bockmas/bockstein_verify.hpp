#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bockmas/cohomology.hpp"
#include "bockmas/massey.hpp"

namespace bockmas {

// ---------------------------------------------------------------------------
// Towers: a surjection pi : G ->> H together with the augmentation filtration
// of R[H] and the layer-n connecting machinery on Z^1(G, T (x) Omega/I^n).
// ---------------------------------------------------------------------------

struct Tower {
  GroupPtr G;
  GroupHom pi;
  GroupRing ring;  // R[H]
  Filtration filt;
  std::string style;
  GMod T;  // coefficient module over G
  BocksteinSequence B;
  Z1Space Z1;  // Z^1(G, T (x) Omega/I^n)
  size_t n = 0;

  size_t monomials() const { return B.graded.size(); }
  const std::vector<std::string>& labels() const { return B.graded.labels; }
};

// Trivial rank-one coefficients.
Tower make_tower(const GroupPtr& G, const GroupHom& pi, const ModRing& R, size_t n,
                 const std::string& style);
Tower make_tower(const GroupPtr& G, const GroupHom& pi, const ModRing& R, size_t n,
                 const std::string& style, const GMod& coeffs);

// Cocycle tables for the Howell basis of Z^1(G, T (x) Omega/I^n).
std::vector<ModMatrix> cocycle_basis(const Tower& W);
// Deterministic stream of random cocycle tables.
std::vector<ModMatrix> random_cocycles(const Tower& W, size_t count, uint64_t seed);

// The connecting map on a cocycle table, in sub coordinates (columns t*N + j).
ModMatrix psi_connecting(const Tower& W, const ModMatrix& f);
// Section-free evaluation: the degree-n component of (g,h) -> g . lift(f(h)).
ModMatrix psi_direct(const Tower& W, const ModMatrix& f);
// Closed form for abelian H from binomial coefficients of the coordinate
// characters.  Requires H abelian and n p-smaller than every character order.
ModMatrix psi_abelian(const Tower& W, const ModMatrix& f);

// ---------------------------------------------------------------------------
// Massey slots: a pair of unipotent homomorphisms over H attached (usually)
// to a degree-n monomial label, with the induced evaluation maps.  Requires
// rank-one coefficients so that corner evaluations are scalars.
// ---------------------------------------------------------------------------

UnipotentHom trivial_hom(const GroupPtr& H, const ModRing& R);

struct Slot {
  std::string label;
  size_t monomial = SIZE_MAX;  // index into the graded basis; SIZE_MAX if none
  UnipotentHom phiH, thetaH;   // over H
  UnipotentHom phi, theta;     // pullbacks over G
  GModSES star;
  PMap pm;
  std::vector<uint32_t> eval_row;  // corner values on the degree-n monomials
  ModMatrix monomial_values;       // full evaluation columns on those monomials
};

Slot make_slot(const Tower& W, const std::string& label, const UnipotentHom& phiH,
               const UnipotentHom& thetaH);

// kappa' = pbar of f, the attached partial-system cocycle in star-quotient
// coordinates.
ModMatrix attached_cocycle(const Tower& W, const Slot& s, const ModMatrix& f);
// Massey 2-cocycle of the proper defining system attached to kappa'.
ModMatrix attached_massey(const Tower& W, const Slot& s, const ModMatrix& f);

// ---------------------------------------------------------------------------
// Per-cocycle decomposition checks.  For each slot s with coefficient
// 2-cocycles c_j of the connecting value and attached Massey cocycle F_s:
//   cochain_literal   c_s == F_s as tables
//   class_literal     [c_s] == [F_s]
//   projected_cochain sum_j E_{sj} c_j == conn_s + d(w_s) as tables, where
//                     E is the runtime evaluation matrix, conn_s the star
//                     connecting value of kappa'_s, and w_s the corner of the
//                     evaluated lift (an exact bookkeeping identity)
//   projected_class   [sum_j E_{sj} c_j] == [F_s]
// ---------------------------------------------------------------------------

struct SlotCheck {
  std::string label;
  bool cochain_literal = false;
  bool class_literal = false;
  bool projected_cochain = false;
  bool projected_class = false;
  bool correction_vanishes = false;  // w_s == 0
};

struct TheoremCheck {
  std::vector<SlotCheck> slots;
  bool decomposition_cochain = false;  // psi == sum_s F_s x_s as tables
  bool decomposition_class = false;    // the same in cohomology
};

// class_level = false skips every coboundary solve (class fields stay false).
TheoremCheck check_theorem(const Tower& W, const std::vector<Slot>& slots,
                           const ModMatrix& f, bool class_level);

// ---------------------------------------------------------------------------
// Aggregated instance drivers (shared by the acceptance suite and the CLI).
// ---------------------------------------------------------------------------

struct SlotTally {
  std::string label;
  std::vector<uint32_t> eval_row;
  size_t cochain_literal = 0;
  size_t class_literal = 0;
  size_t projected_cochain = 0;
  size_t projected_class = 0;
  size_t correction_vanished = 0;
};

struct DecompositionResult {
  size_t graded_rank = 0;
  std::vector<std::string> graded_labels;
  size_t cocycles = 0;
  bool class_level = true;
  std::vector<SlotTally> slots;
  size_t decomposition_cochain = 0;
  size_t decomposition_class = 0;
  ModMatrix evaluation;  // slot-by-monomial corner evaluation matrix
  bool evaluation_identity = false;

  bool all_cochain() const;
  bool all_class() const;
  bool all_projected() const;
};

DecompositionResult run_decomposition(const Tower& W, const std::vector<Slot>& slots,
                                      const std::vector<ModMatrix>& cocycles,
                                      bool class_level);

// Degree-one identity Psi^(1)(f) = sum_i (chi_i u f) x_i over the coordinate
// characters of the abelianization, for a full cocycle basis, plus agreement
// of the three evaluation algorithms (the closed form runs on the abelianized
// tower when the kernel group is nonabelian).
struct GeneralCaseResult {
  size_t basis_size = 0;
  size_t class_pass = 0;
  size_t direct_agree = 0;
  size_t abelian_agree = 0;
  bool abelian_reduced = false;
  bool ok() const {
    return class_pass == basis_size && direct_agree == basis_size &&
           abelian_agree == basis_size;
  }
};
GeneralCaseResult verify_general_case(const GroupPtr& G, const ModRing& R);

// G = Z/9 over H = Z/3 at n = 2: one slot (chi, chi, lambda) on x^2.
DecompositionResult cyclic_case_check();

// G = H = (Z/3)^2 at n = 2: slots (chi^(a), lambda, psi^(b)) on x^a y^b, plus
// the pointwise comparison of the xy coefficient against the displayed
// formula F(g,h) = chi(g) g.lambda_x(h) + psi(h) lambda_y(g).
struct BicyclicCaseResult {
  DecompositionResult dec;
  size_t intro_formula_pointwise = 0;
};
BicyclicCaseResult bicyclic_case_check();

// The displayed 2-cocycle above, from the degree-one components of f.
ModMatrix intro_xy_formula(const Tower& W, const std::vector<uint32_t>& chiR,
                           const std::vector<uint32_t>& psiR, const ModMatrix& f);

// G = H = heis(m) at layer n in {2, 3} with R = F_p, random seeded cocycles.
struct HeisenbergResult {
  std::vector<size_t> graded_ranks;  // ranks of I^k/I^{k+1}, k = 0..n
  DecompositionResult dec;
  bool pz_worked_values = false;  // n = 2: central-slot columns on S_2
  uint64_t seed = 0;
};
HeisenbergResult heisenberg_check(uint32_t m, size_t n, size_t cocycle_count,
                                  uint64_t seed, bool class_level);

// Elementary abelian (Z/p)^r at layer n: dual basis from the corner
// evaluations of the cyclic-type slots of the characters chi_i, then the
// class-level decomposition over that dual basis for a full cocycle basis.
struct ElemAbelianResult {
  size_t N = 0;                 // number of characters = graded rank
  bool dual_basis_ok = false;   // evaluation matrix invertible
  ModMatrix evaluation;         // N x N corner evaluation matrix
  ModMatrix dual_basis;         // rows = dual basis in monomial coordinates
  size_t basis_size = 0;
  size_t class_pass = 0;
  bool ok() const { return dual_basis_ok && class_pass == basis_size; }
};
ElemAbelianResult elem_abelian_check(uint32_t p, size_t r, size_t n);

// Connecting value of [kappa'] against the attached Massey class for random
// partial-system cocycles, over the stock shapes and groups.
struct ConnectingResult {
  struct Item {
    std::string name;
    size_t trials = 0;
    size_t pass = 0;
  };
  std::vector<Item> items;
  uint64_t seed = 0;
  bool ok() const;
};
ConnectingResult connecting_check(size_t trials, uint64_t seed);

// Invariant factors of the cokernel of the degree-n homology connecting map
// against those of I^n A / I^{n+1} A, for A in {Omega, Omega/I^2} over
// H in {Z/3, (Z/3)^2} and n in {1, 2}.
struct BocklemmaResult {
  struct Item {
    std::string name;
    std::vector<uint32_t> coker_factors;
    std::vector<uint32_t> graded_factors;
    bool match = false;
  };
  std::vector<Item> items;
  bool ok() const;
};
BocklemmaResult bocklemma_check();

}  // namespace bockmas
