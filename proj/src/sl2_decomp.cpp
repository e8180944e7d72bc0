#include "atlas/sl2_decomp.hpp"

#include <algorithm>

namespace atlas {

namespace {

// ad(H) eigenvalue of each basis element; H must be a real Cartan element
// with integral root pairings.
std::vector<long> grades(const ChevalleyAlgebra& a, const AlgebraElement& h) {
  if (!h.is_real()) throw std::invalid_argument("H must be real");
  for (std::size_t k = a.rank(); k < a.dim(); ++k)
    if (sgn(h.re[k]) != 0) throw std::invalid_argument("H must lie in the Cartan subalgebra");
  CartanElement ce{RationalVector(h.re.begin(), h.re.begin() + static_cast<std::ptrdiff_t>(a.rank()))};
  std::vector<long> out(a.dim(), 0);
  for (std::size_t k = a.rank(); k < a.dim(); ++k) {
    const Rational g = a.root_system().pairing(a.root_of(k), ce);
    if (g.get_den() != 1) throw std::invalid_argument("H has non-integral eigenvalues");
    out[k] = g.get_num().get_si();
  }
  return out;
}

std::vector<std::size_t> graded_indices(const std::vector<long>& g, long k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] == k) out.push_back(i);
  return out;
}

RationalMatrix columns_of_brackets(const ChevalleyAlgebra& a, const RationalVector& x,
                                   const std::vector<std::size_t>& idx) {
  RationalMatrix m(a.dim(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    RationalVector b(a.dim());
    b[idx[j]] = 1;
    const RationalVector c = a.bracket(x, b);
    for (std::size_t i = 0; i < a.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

RationalVector expand(std::size_t dim, const std::vector<std::size_t>& idx, const RationalVector& c) {
  RationalVector v(dim);
  for (std::size_t j = 0; j < idx.size(); ++j) v[idx[j]] = c[j];
  return v;
}

}  // namespace

Sl2Triple complete_triple(const ChevalleyAlgebra& a, const AlgebraElement& x,
                          const AlgebraElement& h) {
  if (!x.is_real()) throw std::invalid_argument("complete_triple expects a real X");
  const std::vector<long> g = grades(a, h);
  if (a.bracket(h, x) != x.times(2)) throw std::invalid_argument("[H, X] != 2X");
  const std::vector<std::size_t> idx = graded_indices(g, -2);
  if (idx.empty()) throw TripleError("the eigenvalue -2 space is empty");
  const auto sol = solve_linear(columns_of_brackets(a, x.re, idx), h.re);
  if (!sol) throw TripleError("no Y with [X, Y] = H; X is not generic in its grade");
  Sl2Triple t{x, AlgebraElement::real(expand(a.dim(), idx, *sol)), h};
  if (!triple_relations_hold(a, t)) throw std::logic_error("triple relations fail after solve");
  return t;
}

bool triple_relations_hold(const ChevalleyAlgebra& a, const Sl2Triple& t) {
  return a.bracket(t.h, t.x) == t.x.times(2) && a.bracket(t.h, t.y) == t.y.times(-2) &&
         a.bracket(t.x, t.y) == t.h;
}

TripleCentralizer triple_centralizer(const ChevalleyAlgebra& a, const Sl2Triple& t) {
  // ker ad(H) is the eigenvalue-0 span, so only that span is searched.
  const std::vector<long> g = grades(a, t.h);
  const std::vector<std::size_t> idx = graded_indices(g, 0);
  const std::size_t n = a.dim();
  const RationalMatrix mx = columns_of_brackets(a, t.x.re, idx);
  const RationalMatrix my = columns_of_brackets(a, t.y.re, idx);
  TripleCentralizer out;
  for (const auto& c : kernel_basis(mx.vstack(my))) out.basis.push_back(expand(n, idx, c));
  out.dim = out.basis.size();
  return out;
}

IsotypicDecomposition isotypic_decomposition(const ChevalleyAlgebra& a, const Sl2Triple& t) {
  const std::vector<long> g = grades(a, t.h);
  IsotypicDecomposition d;
  for (long v : g) ++d.eigenspace_dims[v];
  for (const auto& [k, m] : d.eigenspace_dims) {
    auto it = d.eigenspace_dims.find(-k);
    if (it == d.eigenspace_dims.end() || it->second != m)
      throw std::logic_error("ad(H) eigenvalues are not symmetric");
  }
  auto dim_of = [&](long k) -> long {
    auto it = d.eigenspace_dims.find(k);
    return it == d.eigenspace_dims.end() ? 0 : static_cast<long>(it->second);
  };
  const long k0 = dim_of(0) - dim_of(2);
  if (k0 < 0) throw std::logic_error("negative centralizer dimension");
  d.k_dim = static_cast<std::size_t>(k0);
  long total = 3 + k0;
  const long top = d.eigenspace_dims.rbegin()->first;
  for (long k = 1; k <= top; ++k) {
    long m = dim_of(k) - dim_of(k + 2);
    if (k == 2) m -= 1;
    if (m < 0) throw std::logic_error("negative isotypic multiplicity");
    if (m == 0) continue;
    d.multiplicities[k] = static_cast<std::size_t>(m);
    total += m * (k + 1);
    if (k >= 2) d.w_dim += static_cast<std::size_t>(m * (k - 1));
  }
  if (total != static_cast<long>(a.dim())) throw std::logic_error("isotypic dimensions do not add up");
  return d;
}

long bundle_degree(const IsotypicDecomposition& d) {
  long found = 0;
  for (const auto& [k, m] : d.multiplicities) {
    if (k < 2 || m == 0) continue;
    if (found != 0) throw std::logic_error("more than one nonzero A_k with k >= 2");
    found = k;
  }
  return found;
}

std::vector<RationalVector> highest_weight_space(const ChevalleyAlgebra& a, const Sl2Triple& t,
                                                 long k) {
  const std::vector<long> g = grades(a, t.h);
  const std::vector<std::size_t> idx = graded_indices(g, k);
  if (idx.empty()) return {};
  RationalMatrix m = columns_of_brackets(a, t.x.re, idx);
  if (k == 2) {
    // B(., Y) is K-invariant and nonzero on X; its kernel is a K-stable
    // complement to the line through X.
    RationalMatrix row(1, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
      RationalVector b(a.dim());
      b[idx[j]] = 1;
      row(0, j) = a.killing(b, t.y.re);
    }
    m = m.vstack(row);
  }
  std::vector<RationalVector> out;
  for (const auto& c : kernel_basis(m)) out.push_back(expand(a.dim(), idx, c));
  return out;
}

std::vector<RationalMatrix> restricted_action(const ChevalleyAlgebra& a,
                                              const std::vector<RationalVector>& acting,
                                              const std::vector<RationalVector>& space) {
  const std::size_t n = a.dim(), m = space.size();
  if (m == 0) return std::vector<RationalMatrix>(acting.size(), RationalMatrix(0, 0));
  // Rows of the space matrix where it is invertible.
  const ReducedEchelon e = reduced_echelon(RationalMatrix::from_rows(space, n));
  if (e.pivots.size() != m) throw std::invalid_argument("space vectors are dependent");
  RationalMatrix sub(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) sub(i, j) = space[j][e.pivots[i]];
  RationalMatrix inv(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    RationalVector unit(m);
    unit[j] = 1;
    const auto col = solve_linear(sub, unit);
    if (!col) throw std::logic_error("pivot block is singular");
    for (std::size_t i = 0; i < m; ++i) inv(i, j) = (*col)[i];
  }
  std::vector<RationalMatrix> out;
  for (const auto& z : acting) {
    RationalMatrix act(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const RationalVector img = a.bracket(z, space[j]);
      RationalVector pick(m);
      for (std::size_t i = 0; i < m; ++i) pick[i] = img[e.pivots[i]];
      const RationalVector c = inv * pick;
      RationalVector back(n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(space[i][l]) != 0) back[l] += c[i] * space[i][l];
      if (back != img) throw std::invalid_argument("space is not invariant under the action");
      for (std::size_t i = 0; i < m; ++i) act(i, j) = c[i];
    }
    out.push_back(std::move(act));
  }
  return out;
}

std::size_t commutant_dim(const std::vector<RationalMatrix>& action_matrices) {
  if (action_matrices.empty()) throw std::invalid_argument("no action matrices");
  const std::size_t m = action_matrices.front().rows();
  const std::size_t unknowns = m * m;
  if (unknowns == 0) return 0;
  // Incremental elimination; the identity always commutes, so the rank of
  // the equations is at most m^2 - 1 and we may stop there.
  std::vector<std::pair<std::size_t, RationalVector>> basis;
  for (const auto& mat : action_matrices) {
    if (mat.rows() != m || mat.cols() != m) throw std::invalid_argument("action matrix size mismatch");
    for (std::size_t r = 0; r < m && basis.size() + 1 < unknowns; ++r)
      for (std::size_t c = 0; c < m && basis.size() + 1 < unknowns; ++c) {
        // (C M - M C)_{rc} = sum_k C_{rk} M_{kc} - M_{rk} C_{kc}
        RationalVector eq(unknowns);
        for (std::size_t k = 0; k < m; ++k) {
          eq[r * m + k] += mat(k, c);
          eq[k * m + c] -= mat(r, k);
        }
        for (const auto& [p, row] : basis) {
          if (sgn(eq[p]) == 0) continue;
          const Rational f = eq[p];
          for (std::size_t j = 0; j < unknowns; ++j)
            if (sgn(row[j]) != 0) eq[j] -= f * row[j];
        }
        std::size_t p = 0;
        while (p < unknowns && sgn(eq[p]) == 0) ++p;
        if (p == unknowns) continue;
        const Rational lead = eq[p];
        for (auto& v : eq) v /= lead;
        basis.emplace_back(p, std::move(eq));
      }
    if (basis.size() + 1 == unknowns) break;
  }
  return unknowns - basis.size();
}

}  // namespace atlas
