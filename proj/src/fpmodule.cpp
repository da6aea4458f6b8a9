#include "bockmas/fpmodule.hpp"

#include <algorithm>

#include "bockmas/errors.hpp"

namespace bockmas {

SmithResult smith(const ModMatrix& N) {
  const ModRing R = N.R;
  SmithResult out{{}, ModMatrix::identity(R, N.rows), ModMatrix::identity(R, N.cols), N};
  ModMatrix& D = out.D;
  ModMatrix& U = out.U;
  ModMatrix& V = out.V;
  for (auto& x : D.a) x %= R.q;
  uint64_t q = R.q;
  size_t tmax = std::min(D.rows, D.cols);
  for (size_t t = 0; t < tmax; ++t) {
    size_t bi = D.rows, bj = D.cols;
    uint32_t bestv = R.s;
    for (size_t i = t; i < D.rows; ++i)
      for (size_t j = t; j < D.cols; ++j) {
        uint32_t v = R.val(D.at(i, j));
        if (v < bestv) {
          bestv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi == D.rows) break;  // remaining block is zero
    if (bi != t) {
      for (size_t j = 0; j < D.cols; ++j) std::swap(D.at(t, j), D.at(bi, j));
      for (size_t j = 0; j < U.cols; ++j) std::swap(U.at(t, j), U.at(bi, j));
    }
    if (bj != t) {
      for (size_t i = 0; i < D.rows; ++i) std::swap(D.at(i, t), D.at(i, bj));
      for (size_t i = 0; i < V.rows; ++i) std::swap(V.at(i, t), V.at(i, bj));
    }
    uint32_t u = R.unit_part(D.at(t, t));
    if (u != 1) {
      uint32_t ui = R.inv_unit(u);
      for (size_t j = 0; j < D.cols; ++j) D.at(t, j) = R.mul(D.at(t, j), ui);
      for (size_t j = 0; j < U.cols; ++j) U.at(t, j) = R.mul(U.at(t, j), ui);
    }
    uint32_t pv = R.ppow(bestv);
    require_internal(D.at(t, t) == pv, "smith pivot normalization failed");
    for (size_t i = t + 1; i < D.rows; ++i) {
      uint32_t e = D.at(i, t);
      if (e == 0) continue;
      uint64_t f = R.neg(e / pv);  // exact: bestv is minimal in the block
      for (size_t j = 0; j < D.cols; ++j)
        D.at(i, j) = static_cast<uint32_t>((D.at(i, j) + f * D.at(t, j)) % q);
      for (size_t j = 0; j < U.cols; ++j)
        U.at(i, j) = static_cast<uint32_t>((U.at(i, j) + f * U.at(t, j)) % q);
    }
    for (size_t j = t + 1; j < D.cols; ++j) {
      uint32_t e = D.at(t, j);
      if (e == 0) continue;
      uint64_t f = R.neg(e / pv);
      for (size_t i = 0; i < D.rows; ++i)
        D.at(i, j) = static_cast<uint32_t>((D.at(i, j) + f * D.at(i, t)) % q);
      for (size_t i = 0; i < V.rows; ++i)
        V.at(i, j) = static_cast<uint32_t>((V.at(i, j) + f * V.at(i, t)) % q);
    }
    out.diag_exponents.push_back(bestv);
  }
  return out;
}

ModMatrix invert(const ModMatrix& M) {
  require_internal(M.rows == M.cols, "invert requires square matrix");
  HowellData hd = howell_full(M);
  require_internal(hd.H == ModMatrix::identity(M.R, M.cols), "matrix is not invertible");
  return hd.T;
}

uint64_t FPModule::log_p_cardinality() const {
  uint64_t total = 0;
  for (uint32_t e : exponents) total += e;
  return total;
}

std::vector<uint32_t> FPModule::to_coordinates(const std::vector<uint32_t>& v) const {
  auto u = reduce_against(big.rows, v);
  require_internal(u.has_value(), "vector outside the ambient submodule");
  std::vector<uint32_t> x = vec_mat(*u, V);
  std::vector<uint32_t> out(kept.size());
  for (size_t t = 0; t < kept.size(); ++t)
    out[t] = x[kept[t]] % R.ppow(exponents[t]);
  return out;
}

std::vector<uint32_t> FPModule::from_coordinates(const std::vector<uint32_t>& c) const {
  require_internal(c.size() == kept.size(), "coordinate length mismatch");
  std::vector<uint32_t> x(V.rows, 0);
  for (size_t t = 0; t < kept.size(); ++t) x[kept[t]] = c[t] % R.q;
  std::vector<uint32_t> u = vec_mat(x, Vinv);
  return vec_mat(u, big.rows);
}

bool FPModule::is_zero_class(const std::vector<uint32_t>& v) const {
  return vec_is_zero(to_coordinates(v));
}

bool FPModule::classes_equal(const std::vector<uint32_t>& v,
                             const std::vector<uint32_t>& w) const {
  return to_coordinates(v) == to_coordinates(w);
}

FPModule quotient(const Submodule& big, const Submodule& small) {
  require_internal(big.ambient == small.ambient, "quotient ambient mismatch");
  require_internal(big.contains(small), "quotient requires small <= big");
  const ModRing R = big.rows.R;
  FPModule M;
  M.R = R;
  M.big = big;
  size_t k = big.rows.rows;
  if (k == 0) {
    M.V = ModMatrix(R, 0, 0);
    M.Vinv = ModMatrix(R, 0, 0);
    return M;
  }
  // Relations on big-coefficient space: coefficient vectors of zero, plus
  // coefficient vectors of the small generators.
  HowellData hd = howell_full(big.rows);
  std::vector<std::vector<uint32_t>> rel;
  for (size_t i = 0; i < hd.K.rows; ++i) rel.push_back(hd.K.row(i));
  for (size_t i = 0; i < small.rows.rows; ++i) {
    auto u = reduce_against(big.rows, small.rows.row(i));
    require_internal(u.has_value(), "small generator escaped big");
    rel.push_back(*u);
  }
  ModMatrix N = ModMatrix::from_rows(R, k, rel);
  SmithResult sm = smith(N);
  M.V = sm.V;
  M.Vinv = invert(sm.V);
  for (size_t t = 0; t < k; ++t) {
    uint32_t e = (t < sm.diag_exponents.size()) ? sm.diag_exponents[t] : R.s;
    if (e == 0) continue;
    M.kept.push_back(t);
    M.exponents.push_back(e);
  }
  return M;
}

}  // namespace bockmas
