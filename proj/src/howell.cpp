#include "bockmas/howell.hpp"

#include <algorithm>

#include "bockmas/errors.hpp"

namespace bockmas {

namespace {

struct Pivot {
  size_t row;
  size_t col;
  uint32_t val;
};

// In-place row echelon with minimal-valuation pivoting.  After return, rows are
// the nonzero echelon rows with pivots normalized to exact powers of p.
std::vector<Pivot> echelonize(ModMatrix& M) {
  const ModRing R = M.R;
  std::vector<Pivot> pivots;
  size_t r = 0;
  for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
    size_t best = M.rows;
    uint32_t bestv = R.s;
    for (size_t i = r; i < M.rows; ++i) {
      uint32_t v = R.val(M.at(i, c));
      if (v < bestv) {
        bestv = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == M.rows) continue;
    if (best != r)
      for (size_t j = c; j < M.cols; ++j) std::swap(M.at(r, j), M.at(best, j));
    uint32_t u = R.unit_part(M.at(r, c));
    if (u != 1) {
      uint32_t ui = R.inv_unit(u);
      uint32_t* row = M.row_ptr(r);
      for (size_t j = c; j < M.cols; ++j) row[j] = R.mul(row[j], ui);
    }
    uint32_t pv = R.ppow(bestv);
    require_internal(M.at(r, c) == pv, "pivot normalization failed");
    uint64_t q = R.q;
    for (size_t i = r + 1; i < M.rows; ++i) {
      uint32_t e = M.at(i, c);
      if (e == 0) continue;
      uint64_t f = R.neg(e / pv);  // e / pv is exact: val(e) >= bestv by pivot choice
      uint32_t* ri = M.row_ptr(i);
      const uint32_t* rr = M.row_ptr(r);
      for (size_t j = c; j < M.cols; ++j)
        ri[j] = static_cast<uint32_t>((ri[j] + f * rr[j]) % q);
    }
    pivots.push_back({r, c, bestv});
    ++r;
  }
  M.rows = r;
  M.a.resize(r * M.cols);
  return pivots;
}

std::vector<Pivot> scan_pivots(const ModMatrix& H) {
  std::vector<Pivot> piv;
  piv.reserve(H.rows);
  for (size_t i = 0; i < H.rows; ++i) {
    size_t c = 0;
    while (c < H.cols && H.at(i, c) == 0) ++c;
    require_internal(c < H.cols, "zero row in Howell form");
    piv.push_back({i, c, H.R.val(H.at(i, c))});
  }
  return piv;
}

// Greedy reduction of v against echelon rows with known pivots; leaves the
// residual in v.  Complete membership test once the form has the Howell span
// property.
std::optional<std::vector<uint32_t>> greedy_coefficients(const ModMatrix& H,
                                                         const std::vector<Pivot>& piv,
                                                         std::vector<uint32_t>& v) {
  const ModRing R = H.R;
  std::vector<uint32_t> coeff(H.rows, 0);
  uint64_t q = R.q;
  for (const Pivot& P : piv) {
    uint32_t e = v[P.col];
    if (e == 0) continue;
    if (R.val(e) < P.val) return std::nullopt;
    uint32_t f = e / R.ppow(P.val);
    coeff[P.row] = f;
    uint64_t fn = R.neg(f);
    const uint32_t* hr = H.row_ptr(P.row);
    for (size_t j = P.col; j < H.cols; ++j)
      v[j] = static_cast<uint32_t>((v[j] + fn * hr[j]) % q);
  }
  return coeff;
}

void reduce_above_pivots(ModMatrix& M, const std::vector<Pivot>& piv) {
  const ModRing R = M.R;
  uint64_t q = R.q;
  for (const Pivot& P : piv) {
    uint32_t pv = R.ppow(P.val);
    for (size_t i = 0; i < P.row; ++i) {
      uint32_t f = M.at(i, P.col) / pv;
      if (f == 0) continue;
      uint64_t fn = R.neg(f);
      uint32_t* ri = M.row_ptr(i);
      const uint32_t* rr = M.row_ptr(P.row);
      for (size_t j = P.col; j < M.cols; ++j)
        ri[j] = static_cast<uint32_t>((ri[j] + fn * rr[j]) % q);
    }
  }
}

}  // namespace

ModMatrix howell(const ModMatrix& m) {
  ModMatrix M = m;
  for (auto& x : M.a) x %= M.R.q;
  std::vector<Pivot> piv;
  size_t max_rounds = static_cast<size_t>(M.R.s) * (M.cols + 1) + 4;
  for (size_t round = 0;; ++round) {
    require_internal(round < max_rounds, "Howell closure failed to stabilize");
    piv = echelonize(M);
    // Closure: p^(s-v) times a pivot row kills its pivot; if the product is not
    // already reachable by greedy reduction, expose it as a new row.
    std::vector<std::vector<uint32_t>> extra;
    for (const Pivot& P : piv) {
      if (P.val == 0) continue;
      std::vector<uint32_t> cand =
          vec_scaled(M.R, M.row(P.row), M.R.ppow(M.R.s - P.val));
      std::vector<uint32_t> tmp = cand;
      auto red = greedy_coefficients(M, piv, tmp);
      if (!red || !vec_is_zero(tmp)) extra.push_back(std::move(cand));
    }
    if (extra.empty()) break;
    for (auto& e : extra) M.append_row(e);
  }
  reduce_above_pivots(M, piv);
  return M;
}

HowellData howell_full(const ModMatrix& A) {
  ModMatrix B = A.hstack(ModMatrix::identity(A.R, A.rows));
  ModMatrix HB = howell(B);
  std::vector<std::vector<uint32_t>> h_rows, t_rows, k_rows;
  for (size_t i = 0; i < HB.rows; ++i) {
    size_t c = 0;
    while (c < HB.cols && HB.at(i, c) == 0) ++c;
    std::vector<uint32_t> front(HB.row_ptr(i), HB.row_ptr(i) + A.cols);
    std::vector<uint32_t> back(HB.row_ptr(i) + A.cols, HB.row_ptr(i) + HB.cols);
    if (c < A.cols) {
      h_rows.push_back(std::move(front));
      t_rows.push_back(std::move(back));
    } else {
      require_internal(vec_is_zero(front), "kernel row with nonzero image");
      k_rows.push_back(std::move(back));
    }
  }
  HowellData out;
  out.H = ModMatrix::from_rows(A.R, A.cols, h_rows);
  out.T = ModMatrix::from_rows(A.R, A.rows, t_rows);
  out.K = howell(ModMatrix::from_rows(A.R, A.rows, k_rows));
  return out;
}

std::optional<std::vector<uint32_t>> reduce_against(const ModMatrix& H,
                                                    const std::vector<uint32_t>& v) {
  require_internal(v.size() == H.cols, "reduce_against length mismatch");
  std::vector<uint32_t> w(v);
  for (auto& x : w) x %= H.R.q;
  auto piv = scan_pivots(H);
  auto coeff = greedy_coefficients(H, piv, w);
  if (!coeff || !vec_is_zero(w)) return std::nullopt;
  return coeff;
}

std::vector<uint32_t> residual_against(const ModMatrix& H, const std::vector<uint32_t>& v) {
  require_internal(v.size() == H.cols, "residual_against length mismatch");
  const ModRing R = H.R;
  std::vector<uint32_t> w(v);
  for (auto& x : w) x %= R.q;
  uint64_t q = R.q;
  for (const Pivot& P : scan_pivots(H)) {
    uint32_t e = w[P.col];
    if (e == 0 || R.val(e) < P.val) continue;
    uint64_t fn = R.neg(e / R.ppow(P.val));
    const uint32_t* hr = H.row_ptr(P.row);
    for (size_t j = P.col; j < H.cols; ++j)
      w[j] = static_cast<uint32_t>((w[j] + fn * hr[j]) % q);
  }
  return w;
}

bool in_span(const ModMatrix& H, const std::vector<uint32_t>& v) {
  return reduce_against(H, v).has_value();
}

SolveResult solve(const HowellData& hd, const std::vector<uint32_t>& b) {
  SolveResult out{std::nullopt, &hd.K};
  auto u = reduce_against(hd.H, b);
  if (u) out.particular = vec_mat(*u, hd.T);
  return out;
}

Submodule Submodule::from_generators(const ModMatrix& gens) {
  Submodule s;
  s.ambient = gens.cols;
  s.rows = howell(gens);
  return s;
}

Submodule Submodule::zero(ModRing R, size_t ambient) {
  Submodule s;
  s.ambient = ambient;
  s.rows = ModMatrix(R, 0, ambient);
  return s;
}

bool Submodule::contains(const Submodule& o) const {
  require_internal(ambient == o.ambient, "submodule ambient mismatch");
  for (size_t i = 0; i < o.rows.rows; ++i)
    if (!contains(o.rows.row(i))) return false;
  return true;
}

Submodule Submodule::plus(const Submodule& o) const {
  require_internal(ambient == o.ambient, "submodule ambient mismatch");
  return from_generators(rows.vstack(o.rows));
}

namespace {

// Shared single-constraint refinement: cuts rowspace(K) down to
// {z*K : z . w = 0}.  Optionally shifts a particular solution x by
// coeff * K[i0] first (affine use).  Returns false if w = 0 (no cut).
bool refine_kernel(const ModRing& R, ModMatrix& K, const std::vector<uint32_t>& w,
                   std::vector<uint32_t>* x, uint32_t residual, bool* ok) {
  size_t i0 = K.rows;
  uint32_t v0 = R.s;
  for (size_t i = 0; i < K.rows; ++i) {
    uint32_t v = R.val(w[i]);
    if (v < v0) {
      v0 = v;
      i0 = i;
      if (v == 0) break;
    }
  }
  if (i0 == K.rows) {
    if (x && residual != 0) *ok = false;
    return false;
  }
  uint32_t pv = R.ppow(v0);
  uint32_t inv = R.inv_unit(R.unit_part(w[i0]));
  if (x) {
    if (R.val(residual) < v0) {
      *ok = false;
      return false;
    }
    uint32_t coeff = R.mul(residual / pv, inv);
    std::vector<uint32_t> pivot_row = K.row(i0);
    vec_addmul_inplace(R, *x, pivot_row, coeff);
  }
  uint64_t q = R.q;
  const size_t dim = K.cols;
  std::vector<uint32_t> pivot_row = K.row(i0);
  for (size_t i = 0; i < K.rows; ++i) {
    if (i == i0 || w[i] == 0) continue;
    uint64_t f = R.neg(R.mul(w[i] / pv, inv));
    uint32_t* ri = K.row_ptr(i);
    for (size_t j = 0; j < dim; ++j)
      ri[j] = static_cast<uint32_t>((ri[j] + f * pivot_row[j]) % q);
  }
  uint32_t scale = (v0 == 0) ? 0 : R.ppow(R.s - v0) % R.q;
  {
    uint32_t* ri = K.row_ptr(i0);
    for (size_t j = 0; j < dim; ++j) ri[j] = R.mul(ri[j], scale);
  }
  // compact zero rows
  size_t keep = 0;
  for (size_t i = 0; i < K.rows; ++i) {
    bool zero = true;
    const uint32_t* ri = K.row_ptr(i);
    for (size_t j = 0; j < dim; ++j)
      if (ri[j] != 0) {
        zero = false;
        break;
      }
    if (zero) continue;
    if (keep != i)
      std::copy(K.row_ptr(i), K.row_ptr(i) + dim, K.row_ptr(keep));
    ++keep;
  }
  K.rows = keep;
  K.a.resize(keep * dim);
  return true;
}

}  // namespace

KernelRefiner::KernelRefiner(ModRing R_, size_t dim)
    : R(R_), K(ModMatrix::identity(R_, dim)) {}

bool KernelRefiner::add_constraint(const std::vector<std::pair<size_t, uint32_t>>& sparse_col) {
  std::vector<uint32_t> w(K.rows, 0);
  uint64_t q = R.q;
  for (const auto& [idx, raw] : sparse_col) {
    uint64_t val = raw % q;
    if (val == 0) continue;
    for (size_t i = 0; i < K.rows; ++i)
      w[i] = static_cast<uint32_t>((w[i] + val * K.at(i, idx)) % q);
  }
  bool ok = true;
  return refine_kernel(R, K, w, nullptr, 0, &ok);
}

bool KernelRefiner::add_constraint_dense(const std::vector<uint32_t>& col) {
  require_internal(col.size() == K.cols, "constraint length mismatch");
  std::vector<uint32_t> w(K.rows, 0);
  for (size_t i = 0; i < K.rows; ++i) w[i] = dot(R, K.row(i), col);
  bool ok = true;
  return refine_kernel(R, K, w, nullptr, 0, &ok);
}

AffineSolver::AffineSolver(ModRing R_, size_t dim)
    : R(R_), x(dim, 0), K(ModMatrix::identity(R_, dim)) {}

bool AffineSolver::add_constraint(const std::vector<std::pair<size_t, uint32_t>>& sparse_col,
                                  uint32_t rhs) {
  if (!feasible) return false;
  uint64_t q = R.q;
  uint64_t xdot = 0;
  std::vector<uint32_t> w(K.rows, 0);
  for (const auto& [idx, raw] : sparse_col) {
    uint64_t val = raw % q;
    if (val == 0) continue;
    xdot = (xdot + val * x[idx]) % q;
    for (size_t i = 0; i < K.rows; ++i)
      w[i] = static_cast<uint32_t>((w[i] + val * K.at(i, idx)) % q);
  }
  uint32_t residual = R.sub(rhs % R.q, static_cast<uint32_t>(xdot));
  bool ok = true;
  refine_kernel(R, K, w, &x, residual, &ok);
  if (!ok) feasible = false;
  return feasible;
}

bool AffineSolver::add_constraint_dense(const std::vector<uint32_t>& col, uint32_t rhs) {
  if (!feasible) return false;
  require_internal(col.size() == K.cols, "constraint length mismatch");
  uint32_t residual = R.sub(rhs % R.q, dot(R, x, col));
  std::vector<uint32_t> w(K.rows, 0);
  for (size_t i = 0; i < K.rows; ++i) w[i] = dot(R, K.row(i), col);
  bool ok = true;
  refine_kernel(R, K, w, &x, residual, &ok);
  if (!ok) feasible = false;
  return feasible;
}

}  // namespace bockmas
