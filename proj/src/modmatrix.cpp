#include "bockmas/modmatrix.hpp"

#include <sstream>

#include "bockmas/errors.hpp"

namespace bockmas {

ModMatrix ModMatrix::identity(ModRing R, size_t n) {
  ModMatrix m(R, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1 % R.q;
  return m;
}

ModMatrix ModMatrix::from_rows(ModRing R, size_t cols,
                               const std::vector<std::vector<uint32_t>>& rows) {
  ModMatrix m(R, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

std::vector<uint32_t> ModMatrix::row(size_t i) const {
  return std::vector<uint32_t>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void ModMatrix::set_row(size_t i, const std::vector<uint32_t>& v) {
  require_internal(v.size() == cols, "row length mismatch");
  for (size_t j = 0; j < cols; ++j) a[i * cols + j] = v[j] % R.q;
}

void ModMatrix::append_row(const std::vector<uint32_t>& v) {
  require_internal(v.size() == cols, "row length mismatch");
  for (uint32_t x : v) a.push_back(x % R.q);
  ++rows;
}

ModMatrix ModMatrix::mul(const ModMatrix& o) const {
  require_internal(cols == o.rows && R == o.R, "matrix product shape mismatch");
  ModMatrix out(R, rows, o.cols);
  uint64_t q = R.q;
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < cols; ++k) {
      uint64_t x = at(i, k);
      if (x == 0) continue;
      const uint32_t* src = o.row_ptr(k);
      uint32_t* dst = out.row_ptr(i);
      for (size_t j = 0; j < o.cols; ++j)
        dst[j] = static_cast<uint32_t>((dst[j] + x * src[j]) % q);
    }
  }
  return out;
}

ModMatrix ModMatrix::add(const ModMatrix& o) const {
  require_internal(rows == o.rows && cols == o.cols, "matrix sum shape mismatch");
  ModMatrix out(R, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = R.add(a[i], o.a[i]);
  return out;
}

ModMatrix ModMatrix::sub(const ModMatrix& o) const {
  require_internal(rows == o.rows && cols == o.cols, "matrix difference shape mismatch");
  ModMatrix out(R, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = R.sub(a[i], o.a[i]);
  return out;
}

ModMatrix ModMatrix::scaled(uint32_t c) const {
  ModMatrix out(R, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = R.mul(a[i], c);
  return out;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix out(R, cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

ModMatrix ModMatrix::hstack(const ModMatrix& o) const {
  require_internal(rows == o.rows, "hstack row mismatch");
  ModMatrix out(R, rows, cols + o.cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) out.at(i, j) = at(i, j);
    for (size_t j = 0; j < o.cols; ++j) out.at(i, cols + j) = o.at(i, j);
  }
  return out;
}

ModMatrix ModMatrix::vstack(const ModMatrix& o) const {
  require_internal(cols == o.cols, "vstack column mismatch");
  ModMatrix out(R, rows + o.rows, cols);
  std::copy(a.begin(), a.end(), out.a.begin());
  std::copy(o.a.begin(), o.a.end(), out.a.begin() + a.size());
  return out;
}

ModMatrix ModMatrix::kronecker(const ModMatrix& o) const {
  ModMatrix out(R, rows * o.rows, cols * o.cols);
  for (size_t i1 = 0; i1 < rows; ++i1)
    for (size_t j1 = 0; j1 < cols; ++j1) {
      uint32_t x = at(i1, j1);
      if (x == 0) continue;
      for (size_t i2 = 0; i2 < o.rows; ++i2)
        for (size_t j2 = 0; j2 < o.cols; ++j2)
          out.at(i1 * o.rows + i2, j1 * o.cols + j2) = R.mul(x, o.at(i2, j2));
    }
  return out;
}

ModMatrix ModMatrix::submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
  require_internal(r0 + nr <= rows && c0 + nc <= cols, "submatrix out of range");
  ModMatrix out(R, nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

bool ModMatrix::is_zero() const {
  for (uint32_t x : a)
    if (x != 0) return false;
  return true;
}

bool ModMatrix::operator==(const ModMatrix& o) const {
  return R == o.R && rows == o.rows && cols == o.cols && a == o.a;
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows; ++i) {
    os << (i == 0 ? "[" : " ");
    for (size_t j = 0; j < cols; ++j) os << at(i, j) << (j + 1 < cols ? " " : "");
    os << (i + 1 < rows ? "\n" : "]");
  }
  return os.str();
}

std::vector<uint32_t> vec_mat(const std::vector<uint32_t>& v, const ModMatrix& M) {
  require_internal(v.size() == M.rows, "vec_mat length mismatch");
  std::vector<uint32_t> out(M.cols, 0);
  uint64_t q = M.R.q;
  for (size_t i = 0; i < M.rows; ++i) {
    uint64_t x = v[i];
    if (x == 0) continue;
    const uint32_t* src = M.row_ptr(i);
    for (size_t j = 0; j < M.cols; ++j)
      out[j] = static_cast<uint32_t>((out[j] + x * src[j]) % q);
  }
  return out;
}

std::vector<uint32_t> vec_add(const ModRing& R, const std::vector<uint32_t>& x,
                              const std::vector<uint32_t>& y) {
  require_internal(x.size() == y.size(), "vector sum length mismatch");
  std::vector<uint32_t> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = R.add(x[i], y[i]);
  return out;
}

std::vector<uint32_t> vec_sub(const ModRing& R, const std::vector<uint32_t>& x,
                              const std::vector<uint32_t>& y) {
  require_internal(x.size() == y.size(), "vector difference length mismatch");
  std::vector<uint32_t> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = R.sub(x[i], y[i]);
  return out;
}

std::vector<uint32_t> vec_scaled(const ModRing& R, const std::vector<uint32_t>& x, uint32_t c) {
  std::vector<uint32_t> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = R.mul(x[i], c);
  return out;
}

void vec_addmul_inplace(const ModRing& R, std::vector<uint32_t>& x,
                        const std::vector<uint32_t>& y, uint32_t c) {
  require_internal(x.size() == y.size(), "vector addmul length mismatch");
  if (c == 0) return;
  uint64_t q = R.q, cc = c;
  for (size_t i = 0; i < x.size(); ++i)
    x[i] = static_cast<uint32_t>((x[i] + cc * y[i]) % q);
}

bool vec_is_zero(const std::vector<uint32_t>& x) {
  for (uint32_t v : x)
    if (v != 0) return false;
  return true;
}

uint32_t dot(const ModRing& R, const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
  require_internal(x.size() == y.size(), "dot length mismatch");
  uint64_t acc = 0, q = R.q;
  for (size_t i = 0; i < x.size(); ++i) acc = (acc + static_cast<uint64_t>(x[i]) * y[i]) % q;
  return static_cast<uint32_t>(acc);
}

}  // namespace bockmas
