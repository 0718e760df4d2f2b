#pragma once

// independent reference computations shared by the unit tests and the acceptance run;
// nothing here goes through the structure constants or the search code it checks

#include <optional>
#include <utility>
#include <vector>

#include "ckforms/algebra.hpp"
#include "ckforms/pairs.hpp"
#include "ckforms/rational.hpp"

namespace ckforms::testing {

inline QVector vectorize(const SparseQMatrix& m) {
  QVector v(m.size() * m.size());
  for (const auto& e : m.entries()) v[e.row * m.size() + e.col] = e.value;
  return v;
}

// B(X_i, X_j) = tr(ad X_i ad X_j), ad matrices from matrix commutators solved
// against the vectorized basis; empty optional if a commutator leaves the span
inline std::optional<QMatrix> brute_killing(const LieAlgebraInstance& a) {
  const std::size_t d = a.dim();
  QMatrix rows(0, a.matrix_size() * a.matrix_size());
  for (const auto& b : a.basis()) rows.append_row(vectorize(b));
  std::vector<QMatrix> ad(d, QMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const auto c = solve_in_row_space(rows, vectorize(commutator(a.basis()[i], a.basis()[k])));
      if (!c) return std::nullopt;
      for (std::size_t r = 0; r < d; ++r) ad[i](r, k) = (*c)[r];
    }
  QMatrix b(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const QMatrix prod = ad[i] * ad[j];
      Rational t = 0;
      for (std::size_t r = 0; r < d; ++r) t += prod(r, r);
      b(i, j) = t;
    }
  return b;
}

// tr(X_i X_j) on the realified matrices
inline QMatrix trace_form(const LieAlgebraInstance& a) {
  const std::size_t d = a.dim();
  QMatrix t(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const SparseQMatrix prod = a.basis()[i] * a.basis()[j];
      Rational s = 0;
      for (std::size_t r = 0; r < a.matrix_size(); ++r) s += prod.at(r, r);
      t(i, j) = s;
    }
  return t;
}

// rank tables per family: (complex rank of G, rank of its maximal compact subgroup)
inline std::pair<int, int> table_ranks(const AlgebraSpec& s) {
  const auto& a = s.params;
  int rg = 0, rk = 0;
  switch (s.family) {
    case Family::SL_R: rg = a[0] - 1; rk = a[0] / 2; break;
    case Family::SL_C: rg = 2 * (a[0] - 1); rk = a[0] - 1; break;
    case Family::SL_H: rg = 2 * a[0] - 1; rk = a[0]; break;
    case Family::SO: rg = (a[0] + a[1]) / 2; rk = a[0] / 2 + a[1] / 2; break;
    case Family::SO_C: rg = 2 * (a[0] / 2); rk = a[0] / 2; break;
    case Family::SU: rg = a[0] + a[1] - 1; rk = a[0] + a[1] - 1; break;
    case Family::SP: rg = a[0] + a[1]; rk = a[0] + a[1]; break;
    case Family::SP_C: rg = 2 * a[0]; rk = a[0]; break;
    case Family::SOSTAR: rg = a[0] / 2; rk = a[0] / 2; break;
  }
  return {rg * s.copies, rk * s.copies};
}

inline std::vector<int> flips_at(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<int> d(n, 1);
  for (auto i : idx) d[i] = -1;
  return d;
}

// matrix of X -> D X D on V in the V basis, from the basis matrices directly
inline std::optional<QMatrix> sign_action_on_V(const ReductivePair& rp, const std::vector<int>& d) {
  const LieAlgebraInstance& g = *rp.g;
  const std::size_t p = rp.V.dim();
  QMatrix m(p, p);
  for (std::size_t a = 0; a < p; ++a) {
    const SparseQMatrix x = g.to_matrix(rp.V.basis().row(a));
    std::vector<SparseEntry> conj;
    for (const auto& e : x.entries()) conj.push_back({e.row, e.col, e.value * d[e.row] * d[e.col]});
    const auto c = g.coordinates(SparseQMatrix(x.size(), conj));
    if (!c) return std::nullopt;
    const auto v = rp.V.coordinates_of(*c);
    if (!v) return std::nullopt;
    for (std::size_t b = 0; b < p; ++b) m(b, a) = (*v)[b];
  }
  return m;
}

}  // namespace ckforms::testing
