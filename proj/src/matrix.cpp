#include "rees/matrix.hpp"

#include <cstdint>
#include <map>

namespace rees {

PolyMatrix::PolyMatrix(const RingSpec& ring, int rows, int cols)
    : ring_(ring),
      rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, Polynomial::zero(ring)) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

PolyMatrix::PolyMatrix(const RingSpec& ring, int rows, int cols,
                       std::vector<Polynomial> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
    throw DomainError("matrix entry count does not match dimensions");
  for (const auto& e : entries_)
    if (!(e.ring() == ring)) throw RingMismatchError("matrix entry ring mismatch");
}

void PolyMatrix::set(int i, int j, Polynomial p) {
  if (!(p.ring() == ring_)) throw RingMismatchError("matrix entry ring mismatch");
  entries_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_idx,
                                 const std::vector<int>& col_idx) const {
  PolyMatrix r(ring_, static_cast<int>(row_idx.size()),
               static_cast<int>(col_idx.size()));
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      r.set(static_cast<int>(i), static_cast<int>(j),
            at(row_idx[i], col_idx[j]));
  return r;
}

PolyMatrix PolyMatrix::drop_row(int i) const {
  std::vector<int> rowsel, colsel;
  for (int r = 0; r < rows_; ++r)
    if (r != i) rowsel.push_back(r);
  for (int c = 0; c < cols_; ++c) colsel.push_back(c);
  return submatrix(rowsel, colsel);
}

PolyMatrix PolyMatrix::drop_col(int j) const {
  std::vector<int> rowsel, colsel;
  for (int r = 0; r < rows_; ++r) rowsel.push_back(r);
  for (int c = 0; c < cols_; ++c)
    if (c != j) colsel.push_back(c);
  return submatrix(rowsel, colsel);
}

PolyMatrix PolyMatrix::concat_cols(const PolyMatrix& other) const {
  if (other.rows_ != rows_) throw DomainError("row count mismatch in concat");
  if (!(other.ring_ == ring_)) throw RingMismatchError("ring mismatch");
  PolyMatrix r(ring_, rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int j = 0; j < other.cols_; ++j) r.set(i, cols_ + j, other.at(i, j));
  }
  return r;
}

namespace {

// Expansion along rows 0..k-1 over the column subset `colmask`; the row
// index is determined by how many columns remain.
Polynomial det_rec(const PolyMatrix& M, std::uint32_t colmask, int row,
                   std::map<std::uint32_t, Polynomial>& memo) {
  if (colmask == 0) return Polynomial::constant(M.ring(), M.ring().field.one());
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  Polynomial acc = Polynomial::zero(M.ring());
  int sign = 1;
  for (int c = 0; c < M.cols(); ++c) {
    if ((colmask & (1u << c)) == 0) continue;
    const Polynomial& e = M.at(row, c);
    if (!e.is_zero()) {
      Polynomial sub = det_rec(M, colmask & ~(1u << c), row + 1, memo);
      Polynomial contrib = e * sub;
      acc = sign > 0 ? acc + contrib : acc - contrib;
    }
    sign = -sign;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

Polynomial determinant(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw DomainError("determinant of non-square matrix");
  if (M.rows() == 0) return Polynomial::constant(M.ring(), M.ring().field.one());
  if (M.rows() > 31) throw DomainError("matrix too large for determinant");
  std::map<std::uint32_t, Polynomial> memo;
  std::uint32_t full = (M.cols() >= 31) ? 0x7fffffffu : ((1u << M.cols()) - 1);
  return det_rec(M, full, 0, memo);
}

namespace {

// Lexicographically ordered r-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

Ideal minor_ideal(const PolyMatrix& M, int r) {
  if (r < 1 || r > std::min(M.rows(), M.cols()))
    throw DomainError("minor size out of range");
  std::vector<Polynomial> gens;
  for (const auto& rs : subsets(M.rows(), r)) {
    for (const auto& cs : subsets(M.cols(), r)) {
      Polynomial d = determinant(M.submatrix(rs, cs));
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  return Ideal(M.ring(), std::move(gens));
}

std::vector<Polynomial> hilbert_burch_generators(const PolyMatrix& phi) {
  if (phi.cols() != phi.rows() - 1)
    throw DomainError("Hilbert-Burch matrix must be m x (m-1)");
  std::vector<Polynomial> alphas;
  alphas.reserve(phi.rows());
  for (int i = 0; i < phi.rows(); ++i) {
    Polynomial d = determinant(phi.drop_row(i));
    alphas.push_back(i % 2 == 0 ? d : -d);
  }
  return alphas;
}

std::vector<Polynomial> row_vector_times(const std::vector<Polynomial>& v,
                                         const PolyMatrix& M) {
  if (static_cast<int>(v.size()) != M.rows())
    throw DomainError("row vector length must match matrix rows");
  std::vector<Polynomial> out;
  out.reserve(M.cols());
  for (int j = 0; j < M.cols(); ++j) {
    Polynomial acc = Polynomial::zero(M.ring());
    for (int i = 0; i < M.rows(); ++i) acc = acc + v[i] * M.at(i, j);
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace rees
