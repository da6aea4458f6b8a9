#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bockmas/modmatrix.hpp"

namespace bockmas {

// Howell normal form of the row space over Z/p^s.  Unique for a given span:
// pivots are exact powers p^v in strictly increasing columns, entries above a
// pivot are reduced mod p^v, entries left of a pivot are zero, and for every j
// the rows with pivot column >= j span every element of the row space whose
// first j coordinates vanish.
ModMatrix howell(const ModMatrix& m);

struct HowellData {
  ModMatrix H;  // Howell form of the row space of A
  ModMatrix T;  // T * A = H
  ModMatrix K;  // Howell basis of the kernel {v : v * A = 0}
};
HowellData howell_full(const ModMatrix& A);

// Coefficients u with u * H = v, for H a Howell form.  Complete: returns a
// value exactly when v lies in the row space.
std::optional<std::vector<uint32_t>> reduce_against(const ModMatrix& H,
                                                    const std::vector<uint32_t>& v);

// Best-effort greedy reduction; the residual is zero exactly when v lies in
// the row span of the Howell form H.
std::vector<uint32_t> residual_against(const ModMatrix& H, const std::vector<uint32_t>& v);

bool in_span(const ModMatrix& H, const std::vector<uint32_t>& v);

// General solve against the original rows of A: u with u * A = b, plus kernel.
struct SolveResult {
  std::optional<std::vector<uint32_t>> particular;
  const ModMatrix* kernel;  // borrowed from the HowellData
};
SolveResult solve(const HowellData& hd, const std::vector<uint32_t>& b);

// Submodule of R^ambient with canonical Howell presentation.
struct Submodule {
  size_t ambient = 0;
  ModMatrix rows;  // Howell form

  static Submodule from_generators(const ModMatrix& gens);
  static Submodule zero(ModRing R, size_t ambient);

  size_t rank() const { return rows.rows; }
  bool contains(const std::vector<uint32_t>& v) const { return in_span(rows, v); }
  bool contains(const Submodule& o) const;
  Submodule plus(const Submodule& o) const;
  bool operator==(const Submodule& o) const { return ambient == o.ambient && rows == o.rows; }
};

// Streamed homogeneous solver: maintains a row basis K of the current solution
// set in R^dim while constraints u . col = 0 arrive one column at a time.
// Scales to constraint systems far too wide to materialize.
struct KernelRefiner {
  ModRing R;
  ModMatrix K;

  KernelRefiner(ModRing R_, size_t dim);

  // returns true if the constraint actually cut the solution set
  bool add_constraint(const std::vector<std::pair<size_t, uint32_t>>& sparse_col);
  bool add_constraint_dense(const std::vector<uint32_t>& col);
};

// Affine variant: tracks one particular solution of u . col_i = rhs_i along
// with the homogeneous kernel.  Infeasibility is sticky.
struct AffineSolver {
  ModRing R;
  std::vector<uint32_t> x;
  ModMatrix K;
  bool feasible = true;

  AffineSolver(ModRing R_, size_t dim);

  bool add_constraint(const std::vector<std::pair<size_t, uint32_t>>& sparse_col, uint32_t rhs);
  bool add_constraint_dense(const std::vector<uint32_t>& col, uint32_t rhs);
};

}  // namespace bockmas
