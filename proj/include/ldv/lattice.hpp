#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ldv/laurent.hpp"

namespace ldv {

// Dense rectangular matrix over Z with arbitrary-precision entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<ExponentVector>& rows);
  static IntegerMatrix from_columns(const std::vector<ExponentVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExponentVector row(std::size_t i) const;
  ExponentVector column(std::size_t j) const;

  IntegerMatrix transposed() const;
  Integer determinant() const;  // fraction-free (Bareiss); square only
  bool is_unimodular() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  ExponentVector apply(const ExponentVector& v) const;  // this * v

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::string to_string(const IntegerMatrix& m);

// U * M * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ...
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix s;
  IntegerMatrix v;

  std::vector<Integer> invariant_factors() const;  // nonzero diagonal
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Q is r x n with the generators q_j as rows.
bool is_saturated(const IntegerMatrix& q);

enum class CompletionStrategy {
  // Greedily append unit vectors e_n, e_{n-1}, ... that keep the lattice
  // saturated; falls back to kSmith when that does not reach a basis.
  kCoordinate,
  // Rows of V^{-1} from the Smith form of Q, reduced modulo Q and put in
  // Hermite form.
  kSmith,
};

// n x n unimodular B whose first r columns are the rows of Q.
IntegerMatrix extend_to_unimodular(const IntegerMatrix& q,
                                   CompletionStrategy strategy = CompletionStrategy::kCoordinate);

IntegerMatrix inverse_unimodular(const IntegerMatrix& b);

// Row-style Hermite normal form (upper echelon, positive pivots, entries
// above pivots reduced into [0, pivot)). Zero rows are dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

}  // namespace ldv
