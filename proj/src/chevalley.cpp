#include "atlas/chevalley.hpp"

#include <stdexcept>

namespace atlas {

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  return {add(re, o.re), add(im, o.im)};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return {sub(re, o.re), sub(im, o.im)};
}

AlgebraElement AlgebraElement::times(const Rational& a, const Rational& b) const {
  AlgebraElement out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    out.re[k] = a * re[k] - b * im[k];
    out.im[k] = a * im[k] + b * re[k];
  }
  return out;
}

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs)
    : rs_(std::move(rs)), dim_(static_cast<std::size_t>(rs_.dimension())) {
  build_structure_constants();
  build_table();
}

std::size_t ChevalleyAlgebra::root_index(const Root& r) const {
  const auto loc = rs_.locate(r);
  if (!loc) throw std::invalid_argument("root_index: not a root");
  return rank() + loc->first + (loc->second > 0 ? 0 : num_positive());
}

Root ChevalleyAlgebra::root_of(std::size_t index) const {
  if (index < rank() || index >= dim_) throw std::out_of_range("root_of: not a root index");
  const std::size_t k = index - rank();
  if (k < num_positive()) return rs_.positive_roots()[k];
  return negate(rs_.positive_roots()[k - num_positive()]);
}

namespace {

Root sum(const Root& a, const Root& b) {
  Root out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

bool positive(const Root& r) { return height(r) > 0; }

long to_long(const Rational& q) {
  if (q.get_den() != 1) throw std::logic_error("non-integral structure constant");
  return q.get_num().get_si();
}

}  // namespace

long ChevalleyAlgebra::structure_constant(const Root& a, const Root& b) const {
  const Root c = sum(a, b);
  if (!rs_.is_root(c)) return 0;
  const std::size_t P = num_positive();
  if (positive(a) && positive(b)) {
    const auto ia = rs_.locate(a)->first, ib = rs_.locate(b)->first;
    return npos_[ia * P + ib];
  }
  if (!positive(a) && !positive(b)) return -structure_constant(negate(a), negate(b));
  if (!positive(a)) return -structure_constant(b, a);
  // a > 0 > b. Use the cyclic identity for a + b + (-c) = 0:
  //   N_{a,b}/(c,c) = N_{b,-c}/(a,a) = N_{-c,a}/(b,b)
  const Rational cc = rs_.inner(c, c);
  if (positive(c)) return to_long(cc / rs_.inner(a, a) * structure_constant(b, negate(c)));
  return to_long(cc / rs_.inner(b, b) * structure_constant(negate(c), a));
}

void ChevalleyAlgebra::build_structure_constants() {
  const auto& pos = rs_.positive_roots();
  const std::size_t P = pos.size();
  npos_.assign(P * P, 0);
  // Positive roots are sorted by height, so every sum below has already
  // been handled when its decompositions are visited.
  for (std::size_t z = 0; z < P; ++z) {
    const Root& zeta = pos[z];
    std::vector<std::size_t> parts;
    for (std::size_t x = 0; x < P && height(pos[x]) < height(zeta); ++x) {
      Root rest(zeta);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= pos[x][i];
      if (auto loc = rs_.locate(rest); loc && loc->second > 0) parts.push_back(x);
    }
    if (parts.empty()) continue;  // simple root
    const std::size_t ia = parts.front();
    const Root& alpha = pos[ia];
    Root beta(zeta);
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] -= alpha[i];
    const std::size_t ib = rs_.locate(beta)->first;
    long p = 0;
    Root down = beta;
    while (true) {
      for (std::size_t i = 0; i < down.size(); ++i) down[i] -= alpha[i];
      if (!rs_.is_root(down)) break;
      ++p;
    }
    const long nab = p + 1;
    npos_[ia * P + ib] = nab;
    npos_[ib * P + ia] = -nab;
    const Rational zz = rs_.inner(zeta, zeta);
    for (std::size_t ix : parts) {
      if (ix == ia || ix == ib) continue;
      const Root& xi = pos[ix];
      Root eta(zeta);
      for (std::size_t i = 0; i < eta.size(); ++i) eta[i] -= xi[i];
      // Four-term identity on (alpha, beta, -xi, -eta).
      Rational t = 0;
      const Root bx = sum(beta, negate(xi));
      if (rs_.is_root(bx))
        t += Rational(structure_constant(beta, negate(xi)) * structure_constant(alpha, negate(eta))) /
             rs_.inner(bx, bx);
      const Root ax = sum(alpha, negate(xi));
      if (rs_.is_root(ax))
        t += Rational(structure_constant(negate(xi), alpha) * structure_constant(beta, negate(eta))) /
             rs_.inner(ax, ax);
      npos_[ix * P + rs_.locate(eta)->first] = to_long(zz * t / nab);
    }
  }
}

void ChevalleyAlgebra::build_table() {
  const std::size_t r = rank();
  table_.assign(dim_ * dim_, {});
  std::vector<Root> roots(dim_);
  for (std::size_t i = r; i < dim_; ++i) roots[i] = root_of(i);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      auto& out = table_[i * dim_ + j];
      const bool hi = i < r, hj = j < r;
      if (hi && hj) continue;
      if (hi) {
        const long v = rs_.pairing(roots[j], static_cast<int>(i));
        if (v) out.push_back({static_cast<std::uint32_t>(j), v});
        continue;
      }
      if (hj) {
        const long v = rs_.pairing(roots[i], static_cast<int>(j));
        if (v) out.push_back({static_cast<std::uint32_t>(i), -v});
        continue;
      }
      const Root s = sum(roots[i], roots[j]);
      bool zero = true;
      for (long c : s) zero = zero && c == 0;
      if (zero) {
        const IntVector co = rs_.coroot(roots[i]);
        for (std::size_t k = 0; k < r; ++k)
          if (co[k]) out.push_back({static_cast<std::uint32_t>(k), co[k]});
        continue;
      }
      if (!rs_.is_root(s)) continue;
      out.push_back({static_cast<std::uint32_t>(root_index(s)),
                     structure_constant(roots[i], roots[j])});
    }
}

RationalVector ChevalleyAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  RationalVector out(dim_);
  Rational tmp;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      for (const auto& t : table_[i * dim_ + j]) {
        tmp = x[i] * y[j];
        tmp *= t.coeff;
        out[t.index] += tmp;
      }
    }
  }
  return out;
}

AlgebraElement ChevalleyAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  const bool xr = x.is_real(), yr = y.is_real();
  if (xr && yr) return AlgebraElement::real(bracket(x.re, y.re));
  AlgebraElement out(dim_);
  out.re = bracket(x.re, y.re);
  if (!xr && !yr) out.re = sub(out.re, bracket(x.im, y.im));
  out.im = RationalVector(dim_);
  if (!yr) out.im = bracket(x.re, y.im);
  if (!xr) out.im = add(out.im, bracket(x.im, y.re));
  return out;
}

RationalMatrix ChevalleyAlgebra::ad_basis(std::size_t i) const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& t : table_[i * dim_ + j]) m(t.index, j) += t.coeff;
  return m;
}

RationalMatrix ChevalleyAlgebra::ad_matrix(const RationalVector& x) const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : table_[i * dim_ + j]) m(t.index, j) += x[i] * t.coeff;
  }
  return m;
}

RationalMatrix ChevalleyAlgebra::ad_matrix(const AlgebraElement& x) const {
  if (!x.is_real()) throw std::invalid_argument("ad_matrix: complex element; use ad_matrix_realified");
  return ad_matrix(x.re);
}

RationalMatrix ChevalleyAlgebra::ad_matrix_realified(const AlgebraElement& x) const {
  const RationalMatrix a = ad_matrix(x.re);
  const RationalMatrix b = ad_matrix(x.im);
  RationalMatrix m(2 * dim_, 2 * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      m(i, j) = a(i, j);
      m(i + dim_, j + dim_) = a(i, j);
      m(i, j + dim_) = -b(i, j);
      m(i + dim_, j) = b(i, j);
    }
  return m;
}

Rational ChevalleyAlgebra::killing_basis(std::size_t i, std::size_t j) const {
  // tr(ad b_i ad b_j) = sum_k <b_k^*, [b_i, [b_j, b_k]]>
  long tr = 0;
  for (std::size_t k = 0; k < dim_; ++k)
    for (const auto& inner : table_[j * dim_ + k])
      for (const auto& outer : table_[i * dim_ + inner.index])
        if (outer.index == k) tr += inner.coeff * outer.coeff;
  return tr;
}

Rational ChevalleyAlgebra::killing(const RationalVector& x, const RationalVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      // Killing pairs h with h and e_a with e_{-a} only.
      const bool hi = i < rank(), hj = j < rank();
      if (hi != hj) continue;
      if (!hi) {
        const std::size_t P = num_positive();
        const std::size_t a = i - rank(), b = j - rank();
        if (!(a + P == b || b + P == a)) continue;
      }
      s += x[i] * y[j] * killing_basis(i, j);
    }
  }
  return s;
}

std::pair<Rational, Rational> ChevalleyAlgebra::killing(const AlgebraElement& x,
                                                        const AlgebraElement& y) const {
  Rational re = killing(x.re, y.re) - killing(x.im, y.im);
  Rational im = killing(x.re, y.im) + killing(x.im, y.re);
  return {re, im};
}

AlgebraElement ChevalleyAlgebra::basis_element(std::size_t i) const {
  AlgebraElement e(dim_);
  e.re[i] = 1;
  return e;
}

AlgebraElement ChevalleyAlgebra::cartan_element(const CartanElement& h) const {
  AlgebraElement e(dim_);
  for (std::size_t k = 0; k < rank(); ++k) e.re[k] = h.coords[k];
  return e;
}

std::size_t centralizer_dim(const ChevalleyAlgebra& a, const AlgebraElement& x) {
  if (x.is_real()) return a.dim() - rank_rational(a.ad_matrix(x.re));
  return a.dim() - rank_rational(a.ad_matrix_realified(x)) / 2;
}

CompactFormBasis compact_form_basis(const ChevalleyAlgebra& a) {
  CompactFormBasis out;
  const std::size_t n = a.dim(), r = a.rank(), P = a.num_positive();
  for (std::size_t j = 0; j < r; ++j) {
    AlgebraElement u(n);
    u.im[j] = 1;
    out.elements.push_back(std::move(u));
  }
  for (std::size_t k = 0; k < P; ++k) {
    AlgebraElement u(n), v(n);
    u.re[r + k] = 1;
    u.re[r + P + k] = -1;
    v.im[r + k] = 1;
    v.im[r + P + k] = 1;
    out.elements.push_back(std::move(u));
    out.elements.push_back(std::move(v));
  }
  return out;
}

RationalMatrix compact_killing_gram(const ChevalleyAlgebra& a, const CompactFormBasis& b) {
  const std::size_t m = b.elements.size();
  RationalMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const auto [re, im] = a.killing(b.elements[i], b.elements[j]);
      if (sgn(im) != 0) throw std::logic_error("compact Killing form is not real");
      g(i, j) = re;
      g(j, i) = re;
    }
  return g;
}

AlgebraElement compact_conjugate(const ChevalleyAlgebra& a, const AlgebraElement& x) {
  const std::size_t n = a.dim(), r = a.rank(), P = a.num_positive();
  AlgebraElement out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t target = k;
    if (k >= r) target = k < r + P ? k + P : k - P;
    out.re[target] = -x.re[k];
    out.im[target] = x.im[k];
  }
  return out;
}

RationalMatrix matrix_power(const RationalMatrix& m, unsigned k) {
  RationalMatrix out = RationalMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace atlas
