#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Dense matrix with arbitrary-precision integer entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(const std::vector<IntVec>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(size_t i) const;
  IntVec column(size_t j) const;
  std::vector<IntVec> row_list() const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(size_t a, size_t b);
  void swap_cols(size_t a, size_t b);

 private:
  size_t rows_, cols_;
  std::vector<Int> data_;
};

// U * A * V = S, U and V unimodular, S diagonal with s_1 | s_2 | ..., s_i >= 0.
struct SmithForm {
  IntMatrix u, s, v;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Lattice basis of { x integer : A x = 0 }; size = cols - rank.
std::vector<IntVec> integer_kernel_basis(const IntMatrix& a);

// Unique integer vector on ray(v) with gcd of entries 1 (direction preserved).
IntVec primitive_vector(const RatVec& v);
IntVec primitive_vector(const IntVec& v);

Int determinant(const IntMatrix& a);  // Bareiss fraction-free elimination

// --- rational elimination utilities ---

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

IntVec vec_neg(const IntVec& v);
bool is_zero_vec(const RatVec& v);
bool is_zero_vec(const IntVec& v);

size_t rat_rank(std::vector<RatVec> rows);
// Nonzero rows of the reduced row echelon form (canonical for the row space).
std::vector<RatVec> rat_rref(std::vector<RatVec> rows);
// Right kernel basis of the matrix with the given rows.
std::vector<RatVec> rat_kernel_basis(const std::vector<RatVec>& rows, size_t ncols);
// One exact solution x of rows * x = rhs, or nullopt if inconsistent.
std::optional<RatVec> solve_linear(const std::vector<RatVec>& rows, const RatVec& rhs);

// RREF rows scaled to primitive integer vectors: canonical basis of a subspace.
std::vector<IntVec> lattice_rref(const std::vector<RatVec>& rows);

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace toric
