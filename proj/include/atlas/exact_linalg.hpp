#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long>;
using IntMatrix = std::vector<IntVector>;

/// Dense matrix of exact rationals. The shape is fixed at construction.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_int(const IntMatrix& m);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                  std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalVector row(std::size_t i) const;
  RationalVector col(std::size_t j) const;
  bool is_zero() const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& s) const;

  /// Stack `below` under this matrix; column counts must agree.
  RationalMatrix vstack(const RationalMatrix& below) const;

  bool operator==(const RationalMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_rational(const RationalMatrix& m);

/// Rank of a list of row vectors of common length.
std::size_t rank_of_rows(const std::vector<RationalVector>& rows,
                         std::size_t cols);

/// Basis of the right null space. Empty iff the rank equals cols.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument when b has the wrong length.
std::optional<RationalVector> solve_linear(const RationalMatrix& m,
                                           const RationalVector& b);

/// Determinant of a square integer matrix.
Integer determinant(const IntMatrix& m);

/// Exact positive-definiteness test for a symmetric rational matrix.
bool is_positive_definite(const RationalMatrix& m);

/// Row-echelon data produced by fraction-free Gauss-Jordan elimination:
/// every pivot row i satisfies rows[i][pivots[i]] == denom, and all other
/// entries in pivot columns are zero.
struct ReducedEchelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
  Integer denom{1};
};

ReducedEchelon reduced_echelon(const RationalMatrix& m);

RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& a, const Rational& s);
bool is_zero(const RationalVector& v);

}  // namespace atlas
