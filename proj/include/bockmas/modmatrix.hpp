#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bockmas/modring.hpp"

namespace bockmas {

// Dense row-major matrix over Z/p^s.  All entries canonical residues.
// Vectors are rows throughout the project; maps act on the right (v -> v*M).
struct ModMatrix {
  ModRing R;
  size_t rows = 0, cols = 0;
  std::vector<uint32_t> a;

  ModMatrix() = default;
  ModMatrix(ModRing R_, size_t r, size_t c) : R(R_), rows(r), cols(c), a(r * c, 0) {}

  uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }
  const uint32_t* row_ptr(size_t i) const { return a.data() + i * cols; }
  uint32_t* row_ptr(size_t i) { return a.data() + i * cols; }

  static ModMatrix identity(ModRing R, size_t n);
  static ModMatrix from_rows(ModRing R, size_t cols,
                             const std::vector<std::vector<uint32_t>>& rows);

  std::vector<uint32_t> row(size_t i) const;
  void set_row(size_t i, const std::vector<uint32_t>& v);
  void append_row(const std::vector<uint32_t>& v);

  ModMatrix mul(const ModMatrix& o) const;
  ModMatrix add(const ModMatrix& o) const;
  ModMatrix sub(const ModMatrix& o) const;
  ModMatrix scaled(uint32_t c) const;
  ModMatrix transpose() const;
  ModMatrix hstack(const ModMatrix& o) const;
  ModMatrix vstack(const ModMatrix& o) const;
  // Kronecker product: index (i1*o.rows+i2, j1*o.cols+j2) -> at(i1,j1)*o.at(i2,j2)
  ModMatrix kronecker(const ModMatrix& o) const;
  ModMatrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const;

  bool is_zero() const;
  bool operator==(const ModMatrix& o) const;
  bool operator!=(const ModMatrix& o) const { return !(*this == o); }
  std::string to_string() const;
};

// v * M for a row vector v of length M.rows
std::vector<uint32_t> vec_mat(const std::vector<uint32_t>& v, const ModMatrix& M);

std::vector<uint32_t> vec_add(const ModRing& R, const std::vector<uint32_t>& x,
                              const std::vector<uint32_t>& y);
std::vector<uint32_t> vec_sub(const ModRing& R, const std::vector<uint32_t>& x,
                              const std::vector<uint32_t>& y);
std::vector<uint32_t> vec_scaled(const ModRing& R, const std::vector<uint32_t>& x, uint32_t c);
// x += c*y
void vec_addmul_inplace(const ModRing& R, std::vector<uint32_t>& x,
                        const std::vector<uint32_t>& y, uint32_t c);
bool vec_is_zero(const std::vector<uint32_t>& x);
uint32_t dot(const ModRing& R, const std::vector<uint32_t>& x, const std::vector<uint32_t>& y);

}  // namespace bockmas
