#include "atlas/exact_linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace atlas {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_int(const IntMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  RationalMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j];
  return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
  RationalMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalVector RationalMatrix::col(std::size_t j) const {
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (sgn(rhs(k, j)) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out(*this);
  for (auto& x : out.data_) x *= s;
  return out;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& below) const {
  if (rows_ != 0 && below.rows_ != 0 && cols_ != below.cols_)
    throw std::invalid_argument("vstack column mismatch");
  RationalMatrix out(rows_ + below.rows_, rows_ != 0 ? cols_ : below.cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Clear denominators row by row; scaling a row does not change the rank or
// the row space.
IntRows integer_rows(const RationalMatrix& m) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (sgn(x) == 0) continue;
      out[i][j] = x.get_num() * (l / x.get_den());
    }
  }
  return out;
}

// One Bareiss update of `target` against pivot row `pivot_row`:
//   target[j] <- (p * target[j] - target[c] * pivot_row[j]) / prev   (j >= from)
void bareiss_update(std::vector<Integer>& target, const std::vector<Integer>& pivot_row,
                    std::size_t c, std::size_t from, const Integer& prev,
                    Integer& tmp) {
  const Integer& p = pivot_row[c];
  const Integer factor = target[c];
  const bool trivial_prev = prev == 1;
  for (std::size_t j = from; j < target.size(); ++j) {
    if (j == c) continue;
    Integer& t = target[j];
    const Integer& r = pivot_row[j];
    if (sgn(factor) == 0 || sgn(r) == 0) {
      if (sgn(t) == 0) continue;
      mpz_mul(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    } else {
      mpz_mul(tmp.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
      mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), r.get_mpz_t());
      mpz_swap(t.get_mpz_t(), tmp.get_mpz_t());
    }
    if (!trivial_prev) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  }
  target[c] = 0;
}

std::size_t bareiss_rank(IntRows a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) bareiss_update(a[i], a[r], c, c + 1, prev, tmp);
    prev = a[r][c];
    ++r;
  }
  return r;
}

ReducedEchelon gauss_jordan(IntRows a, std::size_t cols) {
  const std::size_t rows = a.size();
  ReducedEchelon out;
  std::size_t r = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      // Rows above keep their earlier pivot columns in sync through the
      // full-width update.
      bareiss_update(a[i], a[r], c, 0, prev, tmp);
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  out.denom = prev;
  return out;
}

}  // namespace

std::size_t rank_rational(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return bareiss_rank(integer_rows(m.transpose()), m.rows());
  return bareiss_rank(integer_rows(m), m.cols());
}

std::size_t rank_of_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank_rational(RationalMatrix::from_rows(rows, cols));
}

ReducedEchelon reduced_echelon(const RationalMatrix& m) {
  return gauss_jordan(integer_rows(m), m.cols());
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  const ReducedEchelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const Integer& x = e.rows[i][f];
      if (sgn(x) == 0) continue;
      v[e.pivots[i]] = Rational(-x, e.denom);
      v[e.pivots[i]].canonicalize();
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve_linear: right-hand side length mismatch");
  const std::size_t n = m.cols();
  RationalMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const ReducedEchelon e = reduced_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    x[e.pivots[i]] = Rational(e.rows[i][n], e.denom);
    x[e.pivots[i]].canonicalize();
  }
  return x;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntRows a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  Integer prev = 1;
  Integer tmp;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) bareiss_update(a[i], a[c], c, c + 1, prev, tmp);
    prev = a[c][c];
  }
  return sign * prev;
}

bool is_positive_definite(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("is_positive_definite: non-square");
  RationalMatrix a = m;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational piv = a(k, k);
    if (sgn(piv) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k) / piv;
      for (std::size_t j = k; j < n; ++j)
        if (sgn(a(k, j)) != 0) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

RationalVector scale(const RationalVector& a, const Rational& s) {
  RationalVector out(a);
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace atlas
