#ifndef REES_MATRIX_HPP
#define REES_MATRIX_HPP

#include <vector>

#include "rees/ideal.hpp"

namespace rees {

// Dense matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(const RingSpec& ring, int rows, int cols);
  PolyMatrix(const RingSpec& ring, int rows, int cols,
             std::vector<Polynomial> entries);

  const RingSpec& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Polynomial& at(int i, int j) const { return entries_[i * cols_ + j]; }
  void set(int i, int j, Polynomial p);

  PolyMatrix submatrix(const std::vector<int>& row_idx,
                       const std::vector<int>& col_idx) const;
  PolyMatrix drop_row(int i) const;
  PolyMatrix drop_col(int j) const;
  PolyMatrix concat_cols(const PolyMatrix& other) const;

 private:
  RingSpec ring_;
  int rows_, cols_;
  std::vector<Polynomial> entries_;
};

// Exact determinant by cofactor expansion, memoized on column subsets.
Polynomial determinant(const PolyMatrix& M);

// Ideal of all r x r minors, enumerated in lexicographic (row-set,
// column-set) order.
Ideal minor_ideal(const PolyMatrix& M, int r);

// Signed maximal minors of an m x (m-1) matrix: alpha_i =
// (-1)^(i+1) det(phi with row i deleted), so that [alpha] . phi = 0.
std::vector<Polynomial> hilbert_burch_generators(const PolyMatrix& phi);

// Row vector [v_1 .. v_rows] . M as a list of entries.
std::vector<Polynomial> row_vector_times(const std::vector<Polynomial>& v,
                                         const PolyMatrix& M);

}  // namespace rees

#endif
