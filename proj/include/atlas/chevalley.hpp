#pragma once

#include "atlas/exact_linalg.hpp"
#include "atlas/root_system.hpp"

#include <cstdint>
#include <vector>

namespace atlas {

/// Element of g^C over the Chevalley basis. Complex coefficients are kept
/// as a pair of rational vectors (real and imaginary parts).
struct AlgebraElement {
  RationalVector re;
  RationalVector im;

  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t dim) : re(dim), im(dim) {}
  AlgebraElement(RationalVector real, RationalVector imag)
      : re(std::move(real)), im(std::move(imag)) {}
  static AlgebraElement real(RationalVector v) {
    RationalVector z(v.size());
    return {std::move(v), std::move(z)};
  }

  std::size_t dim() const { return re.size(); }
  bool is_real() const { return atlas::is_zero(im); }
  bool is_zero() const { return atlas::is_zero(re) && atlas::is_zero(im); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  /// Multiply by the complex scalar (a + b i).
  AlgebraElement times(const Rational& a, const Rational& b = 0) const;
  bool operator==(const AlgebraElement&) const = default;
};

/// One term of a structure-constant expansion: coeff * basis[index].
struct BasisTerm {
  std::uint32_t index;
  long coeff;
};

/// Split g^C with its Chevalley basis
///   index 0..r-1           h_i (simple coroots)
///   index r..r+P-1         e_alpha, alpha positive (RootSystem order)
///   index r+P..r+2P-1      e_{-alpha} in the same order.
/// Signs of the structure constants are fixed by taking N = +(p+1) on every
/// extraspecial pair, with the positive roots ordered by height and then
/// lexicographically; N_{-a,-b} = -N_{a,b} and [e_a, e_{-a}] = h_a.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return static_cast<std::size_t>(rs_.rank()); }
  std::size_t num_positive() const { return rs_.num_positive(); }

  /// Basis index of e_root.
  std::size_t root_index(const Root& r) const;
  /// Root of a root-vector basis index (throws for Cartan indices).
  Root root_of(std::size_t index) const;
  bool is_cartan_index(std::size_t index) const { return index < rank(); }

  /// Structure constant N_{a,b}: [e_a, e_b] = N_{a,b} e_{a+b}; 0 if a+b is not a root.
  long structure_constant(const Root& a, const Root& b) const;

  /// [b_i, b_j] expanded in the basis.
  const std::vector<BasisTerm>& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }

  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Adjoint matrix of a basis element, assembled from the cached sparse
  /// structure-constant table.
  RationalMatrix ad_basis(std::size_t i) const;
  /// Matrix of y -> [x, y] for a real element x.
  RationalMatrix ad_matrix(const RationalVector& x) const;
  RationalMatrix ad_matrix(const AlgebraElement& x) const;
  /// Real 2n x 2n matrix of ad(x) acting on the realification (re, im).
  RationalMatrix ad_matrix_realified(const AlgebraElement& x) const;

  /// Killing form on basis elements: tr(ad b_i ad b_j).
  Rational killing_basis(std::size_t i, std::size_t j) const;
  Rational killing(const RationalVector& x, const RationalVector& y) const;
  /// Complex-bilinear Killing form, returned as (re, im).
  std::pair<Rational, Rational> killing(const AlgebraElement& x, const AlgebraElement& y) const;

  AlgebraElement basis_element(std::size_t i) const;
  AlgebraElement cartan_element(const CartanElement& h) const;
  AlgebraElement root_vector(const Root& r) const { return basis_element(root_index(r)); }

 private:
  void build_structure_constants();
  void build_table();

  RootSystem rs_;
  std::size_t dim_;
  // N_{a,b} for a, b positive; indexed by positive-root positions.
  std::vector<long> npos_;
  std::vector<std::vector<BasisTerm>> table_;
};

/// Complex dimension of the centralizer of x.
std::size_t centralizer_dim(const ChevalleyAlgebra& a, const AlgebraElement& x);

/// Realified basis of the compact real form: {i h_j}, {e_a - e_-a},
/// {i (e_a + e_-a)} for a > 0.
struct CompactFormBasis {
  std::vector<AlgebraElement> elements;
};

CompactFormBasis compact_form_basis(const ChevalleyAlgebra& a);

/// Gram matrix of the Killing form on the compact basis (real because the
/// compact form is a real form).
RationalMatrix compact_killing_gram(const ChevalleyAlgebra& a, const CompactFormBasis& b);

/// The compact conjugation sigma: e_a -> -e_{-a}, h -> -h, antilinear.
AlgebraElement compact_conjugate(const ChevalleyAlgebra& a, const AlgebraElement& x);

/// Matrix power helper.
RationalMatrix matrix_power(const RationalMatrix& m, unsigned k);

}  // namespace atlas
