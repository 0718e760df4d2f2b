#include "ckforms/pairs.hpp"

#include <optional>

#include "ckforms/errors.hpp"

namespace ckforms {

const char* embedding_name(Embedding e) {
  switch (e) {
    case Embedding::UpperLeftBlock: return "UpperLeftBlock";
    case Embedding::RealFormInComplexification: return "RealFormInComplexification";
    case Embedding::DiagonalGroupSpace: return "DiagonalGroupSpace";
  }
  return "?";
}

std::string PairSpec::to_string() const {
  AlgebraSpec single = h;
  single.copies = 1;
  if (embedding == Embedding::DiagonalGroupSpace) return "GROUP(" + single.to_string() + ")";
  return g.to_string() + "/" + h.to_string();
}

Subspace Subspace::span(const QMatrix& rows, std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  if (rows.rows() == 0) {
    s.basis_ = QMatrix(0, ambient_dim);
    return s;
  }
  if (rows.cols() != ambient_dim) throw Error(ErrorKind::Internal, "Subspace::span: width mismatch");
  Echelon e = row_echelon(rows);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::size_t first, std::size_t last) {
  QMatrix m(last - first, ambient_dim);
  for (std::size_t i = first; i < last; ++i) m(i - first, i) = 1;
  return span(m, ambient_dim);
}

std::optional<QVector> Subspace::coordinates_of(const QVector& v) const {
  if (v.size() != ambient_) return std::nullopt;
  QVector c(dim());
  QVector r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    c[i] = v[pivots_[i]];
    if (sgn(c[i]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) r[j] -= c[i] * basis_(i, j);
  }
  if (!is_zero(r)) return std::nullopt;
  return c;
}

bool Subspace::contains(const QVector& v) const { return coordinates_of(v).has_value(); }

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim(), ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return Subspace::span(QMatrix(0, n), n);
  QMatrix m(n, ra + rb);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < ra; ++i) m(j, i) = a.basis()(i, j);
    for (std::size_t i = 0; i < rb; ++i) m(j, ra + i) = -b.basis()(i, j);
  }
  const QMatrix ns = nullspace(m);
  QMatrix rows(ns.rows(), n);
  for (std::size_t t = 0; t < ns.rows(); ++t)
    for (std::size_t i = 0; i < ra; ++i) {
      if (sgn(ns(t, i)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows(t, j) += ns(t, i) * a.basis()(i, j);
    }
  return Subspace::span(rows, n);
}

Subspace orthogonal_complement(const Subspace& s, const QMatrix& form) {
  if (sgn(determinant(form)) == 0) throw Error(ErrorKind::DegenerateForm, "bilinear form is degenerate");
  const std::size_t n = s.ambient_dim();
  if (s.dim() == 0) return Subspace::coordinate(n, 0, n);
  return Subspace::span(nullspace(s.basis() * form), n);
}

QMatrix gram(const QMatrix& form, const Subspace& s) {
  return s.basis() * form * s.basis().transpose();
}

Inertia restricted_inertia(const QMatrix& form, const Subspace& s) { return inertia(gram(form, s)); }

bool is_subalgebra(const LieAlgebraInstance& g, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(g.bracket(s.basis().row(i), s.basis().row(j)))) return false;
  return true;
}

bool is_theta_stable(const LieAlgebraInstance& g, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    QVector v = s.basis().row(i);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (g.theta_signature()[k] < 0) v[k] = -v[k];
    if (!s.contains(v)) return false;
  }
  return true;
}

namespace {

// scalar index map for block embeddings; ratio 2 embeds real entries into complex ones
struct BlockMap {
  std::vector<int> index;
  int ratio = 1;
};

std::vector<int> prefix(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// h index i < lo goes to i, the rest to hi + (i - lo)
std::vector<int> split(int m, int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i < lo ? i : hi + (i - lo);
  return v;
}

std::optional<BlockMap> upper_left_map(const AlgebraSpec& g, const AlgebraSpec& h) {
  if (g.copies != 1 || h.copies != 1) return std::nullopt;
  const int gn = g.params[0];
  const int ga = g.params[0], gb = g.params.size() > 1 ? g.params[1] : 0;
  const int ha = h.params[0], hb = h.params.size() > 1 ? h.params[1] : 0;
  const bool nested_pq = ha <= ga && hb <= gb && !(ha == ga && hb == gb);
  switch (g.family) {
    case Family::SL_R:
      if (h.family == Family::SL_R && ha < gn) return BlockMap{prefix(ha), 1};
      if (h.family == Family::SO && ha + hb <= gn) return BlockMap{prefix(ha + hb), 1};
      break;
    case Family::SO:
      if (h.family == Family::SO && nested_pq) return BlockMap{split(ha + hb, ha, ga), 1};
      break;
    case Family::SU:
      if (h.family == Family::SU && nested_pq) return BlockMap{split(ha + hb, ha, ga), 1};
      if (h.family == Family::SO && ha <= ga && hb <= gb) return BlockMap{split(ha + hb, ha, ga), 2};
      break;
    case Family::SP:
      if (h.family == Family::SP && nested_pq) return BlockMap{split(ha + hb, ha, ga), 1};
      break;
    case Family::SL_C:
      if (h.family == Family::SL_C && ha < gn) return BlockMap{prefix(ha), 1};
      if (h.family == Family::SU && ha + hb < gn) return BlockMap{prefix(ha + hb), 1};
      if (h.family == Family::SL_R && ha < gn) return BlockMap{prefix(ha), 2};
      break;
    case Family::SO_C:
      if (h.family == Family::SO_C && ha < gn) return BlockMap{prefix(ha), 1};
      break;
    case Family::SP_C:
      if (h.family == Family::SP_C && ha < gn) return BlockMap{split(2 * ha, ha, gn), 1};
      break;
    case Family::SL_H:
      if (h.family == Family::SL_H && ha < gn) return BlockMap{prefix(ha), 1};
      if (h.family == Family::SP && ha + hb <= gn) return BlockMap{prefix(ha + hb), 1};
      break;
    case Family::SOSTAR:
      if (h.family == Family::SOSTAR && ha < gn) return BlockMap{split(ha, ha / 2, gn / 2), 1};
      break;
  }
  return std::nullopt;
}

enum class Condition { Anti, Commute };

struct RealFormCondition {
  Condition kind;
  SparseQMatrix m;
};

SparseQMatrix complex_diag(const std::vector<int>& signs) {
  std::vector<SparseEntry> e;
  for (std::size_t i = 0; i < signs.size(); ++i)
    for (std::uint32_t t = 0; t < 2; ++t)
      e.push_back({static_cast<std::uint32_t>(2 * i) + t, static_cast<std::uint32_t>(2 * i) + t,
                   Rational(signs[i])});
  return SparseQMatrix(2 * signs.size(), std::move(e));
}

std::vector<int> signature_signs(int p, int q) {
  std::vector<int> s(static_cast<std::size_t>(p), 1);
  s.insert(s.end(), static_cast<std::size_t>(q), -1);
  return s;
}

// realified [[0, I], [-I, 0]] of complex size 2n
SparseQMatrix complex_omega(int n) {
  std::vector<SparseEntry> e;
  for (int i = 0; i < n; ++i)
    for (std::uint32_t t = 0; t < 2; ++t) {
      e.push_back({static_cast<std::uint32_t>(2 * i) + t, static_cast<std::uint32_t>(2 * (n + i)) + t, Rational(1)});
      e.push_back({static_cast<std::uint32_t>(2 * (n + i)) + t, static_cast<std::uint32_t>(2 * i) + t, Rational(-1)});
    }
  return SparseQMatrix(static_cast<std::size_t>(4 * n), std::move(e));
}

SparseQMatrix conjugation(int n) {
  std::vector<SparseEntry> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({static_cast<std::uint32_t>(2 * i), static_cast<std::uint32_t>(2 * i), Rational(1)});
    e.push_back({static_cast<std::uint32_t>(2 * i + 1), static_cast<std::uint32_t>(2 * i + 1), Rational(-1)});
  }
  return SparseQMatrix(static_cast<std::size_t>(2 * n), std::move(e));
}

std::optional<RealFormCondition> real_form_condition(const AlgebraSpec& g, const AlgebraSpec& h) {
  if (g.copies != 1 || h.copies != 1) return std::nullopt;
  const int gn = g.params[0];
  const int ha = h.params[0], hb = h.params.size() > 1 ? h.params[1] : 0;
  if (g.family == Family::SL_C && h.family == Family::SU && ha + hb == gn)
    return RealFormCondition{Condition::Anti, complex_diag(signature_signs(ha, hb))};
  if (g.family == Family::SO_C && h.family == Family::SO && ha + hb == gn)
    return RealFormCondition{Condition::Anti, complex_diag(signature_signs(ha, hb))};
  if (g.family == Family::SP_C && h.family == Family::SP && ha + hb == gn) {
    std::vector<int> s = signature_signs(ha, hb), both = s;
    both.insert(both.end(), s.begin(), s.end());
    return RealFormCondition{Condition::Anti, complex_diag(both)};
  }
  if (g.family == Family::SO_C && h.family == Family::SOSTAR && ha == gn)
    return RealFormCondition{Condition::Anti, complex_omega(gn / 2)};
  if (g.family == Family::SL_C && h.family == Family::SL_R && ha == gn)
    return RealFormCondition{Condition::Commute, conjugation(gn)};
  if (g.family == Family::SL_C && h.family == Family::SL_H && 2 * ha == gn)
    return RealFormCondition{Condition::Commute, complex_omega(ha) * conjugation(gn)};
  return std::nullopt;
}

SparseQMatrix apply_block_map(const SparseQMatrix& x, const BlockMap& map, int hb, int gb, std::size_t n) {
  std::vector<SparseEntry> e;
  for (const auto& en : x.entries()) {
    const int rs = static_cast<int>(en.row) / hb, rt = static_cast<int>(en.row) % hb;
    const int cs = static_cast<int>(en.col) / hb, ct = static_cast<int>(en.col) % hb;
    for (int u = 0; u < map.ratio; ++u) {
      const int r = map.index[static_cast<std::size_t>(rs)] * gb + rt * map.ratio + u;
      const int c = map.index[static_cast<std::size_t>(cs)] * gb + ct * map.ratio + u;
      e.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), en.value});
    }
  }
  return SparseQMatrix(n, std::move(e));
}

QMatrix coordinate_rows(const LieAlgebraInstance& g, const std::vector<SparseQMatrix>& mats) {
  QMatrix rows(0, g.dim());
  for (const auto& m : mats) {
    auto c = g.coordinates(m);
    if (!c) throw Error(ErrorKind::IncompatiblePair, "embedded element is not in " + g.spec().to_string());
    rows.append_row(*c);
  }
  return rows;
}

}  // namespace

PairSpec make_pair(const AlgebraSpec& g, const AlgebraSpec& h) {
  PairSpec ps;
  ps.g = g;
  ps.h = h;
  ps.embedding = real_form_condition(g, h) ? Embedding::RealFormInComplexification : Embedding::UpperLeftBlock;
  return ps;
}

PairSpec make_group_space(const AlgebraSpec& h) {
  PairSpec ps;
  ps.h = h;
  ps.h.copies = 1;
  ps.g = ps.h;
  ps.g.copies = 2;
  ps.embedding = Embedding::DiagonalGroupSpace;
  return ps;
}

bool is_supported_pair(const PairSpec& ps) {
  switch (ps.embedding) {
    case Embedding::UpperLeftBlock: return upper_left_map(ps.g, ps.h).has_value();
    case Embedding::RealFormInComplexification: return real_form_condition(ps.g, ps.h).has_value();
    case Embedding::DiagonalGroupSpace: {
      AlgebraSpec single = ps.g;
      single.copies = 1;
      return ps.g.copies == 2 && single == ps.h;
    }
  }
  return false;
}

QMatrix embedded_h_rows(const PairSpec& ps, const LieAlgebraInstance& g, std::size_t dimension_cap) {
  const std::size_t n = g.matrix_size();
  switch (ps.embedding) {
    case Embedding::DiagonalGroupSpace: {
      AlgebraSpec single = ps.h;
      single.copies = 1;
      const RawBasis hb = raw_basis(single);
      std::vector<SparseQMatrix> mats;
      const std::size_t half = hb.matrix_size;
      for (const auto* part : {&hb.k, &hb.p})
        for (const auto& x : *part) {
          std::vector<SparseEntry> e;
          for (const auto& en : x.entries()) {
            e.push_back(en);
            e.push_back({static_cast<std::uint32_t>(en.row + half), static_cast<std::uint32_t>(en.col + half), en.value});
          }
          mats.emplace_back(n, std::move(e));
        }
      return coordinate_rows(g, mats);
    }
    case Embedding::UpperLeftBlock: {
      auto map = upper_left_map(ps.g, ps.h);
      if (!map)
        throw Error(ErrorKind::IncompatiblePair, "no block embedding of " + ps.h.to_string() + " into " +
                                                     ps.g.to_string());
      if (real_dimension(ps.h) > dimension_cap)
        throw Error(ErrorKind::DimensionCapExceeded, ps.h.to_string());
      const RawBasis hb = raw_basis(ps.h);
      const int hblk = field_block(field_of(ps.h.family)), gblk = field_block(field_of(ps.g.family));
      std::vector<SparseQMatrix> mats;
      for (const auto* part : {&hb.k, &hb.p})
        for (const auto& x : *part) mats.push_back(apply_block_map(x, *map, hblk, gblk, n));
      return coordinate_rows(g, mats);
    }
    case Embedding::RealFormInComplexification: {
      auto cond = real_form_condition(ps.g, ps.h);
      if (!cond)
        throw Error(ErrorKind::NotAComplexificationPair,
                    ps.h.to_string() + " is not a supported real form of " + ps.g.to_string());
      // columns: entries of the condition matrix for each basis element
      const std::size_t d = g.dim();
      QMatrix sys(n * n, d);
      for (std::size_t k = 0; k < d; ++k) {
        const SparseQMatrix& x = g.basis()[k];
        const SparseQMatrix c = cond->kind == Condition::Anti ? x.transpose() * cond->m + cond->m * x
                                                               : x * cond->m - cond->m * x;
        for (const auto& en : c.entries()) sys(en.row * n + en.col, k) = en.value;
      }
      return nullspace(sys);
    }
  }
  throw Error(ErrorKind::Internal, "unknown embedding");
}

Subspace compute_V(const LieAlgebraInstance& g, const Subspace& h, const Subspace& k,
                   std::size_t expected_dim) {
  const std::size_t d = g.dim();
  const QMatrix stacked = vstack(k.basis(), h.basis());
  Subspace v = Subspace::span(nullspace(stacked * g.killing()), d);
  if (v.dim() != expected_dim)
    throw Error(ErrorKind::DimensionMismatch, "dim V = " + std::to_string(v.dim()) + ", expected " +
                                                  std::to_string(expected_dim));
  const Inertia in = restricted_inertia(g.killing(), v);
  if (in.positive != v.dim())
    throw Error(ErrorKind::DimensionMismatch, "Killing form not positive definite on V");
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t t = 0; t < g.dim_k(); ++t)
      if (sgn(v.basis()(i, t)) != 0) throw Error(ErrorKind::DimensionMismatch, "V leaves the p-part");
  return v;
}

ReductivePair embed_pair(const PairSpec& ps, const EmbedOptions& opts) {
  validate_spec(ps.g);
  validate_spec(ps.h);
  if (ps.embedding == Embedding::DiagonalGroupSpace) {
    AlgebraSpec single = ps.g;
    single.copies = 1;
    if (ps.g.copies != 2 || !(single == ps.h))
      throw Error(ErrorKind::IncompatiblePair, "group space needs g = h + h");
  }
  ReductivePair rp;
  rp.spec = ps;
  rp.g = build_algebra_shared(ps.g, opts.dimension_cap);
  const LieAlgebraInstance& g = *rp.g;
  const std::size_t d = g.dim();

  rp.h_subspace = Subspace::span(embedded_h_rows(ps, g, opts.dimension_cap), d);
  AlgebraSpec single_h = ps.h;
  single_h.copies = 1;
  const std::size_t dim_h = real_dimension(single_h);
  if (rp.h_subspace.dim() != dim_h)
    throw Error(ErrorKind::IncompatiblePair, "embedded " + ps.h.to_string() + " has dimension " +
                                                 std::to_string(rp.h_subspace.dim()) + ", expected " +
                                                 std::to_string(dim_h));
  if (!is_subalgebra(g, rp.h_subspace))
    throw Error(ErrorKind::IncompatiblePair, "embedded " + ps.h.to_string() + " is not a subalgebra");
  if (!is_theta_stable(g, rp.h_subspace))
    throw Error(ErrorKind::ThetaIncompatibleEmbedding, ps.to_string());
  const Inertia hin = restricted_inertia(g.killing(), rp.h_subspace);
  const std::size_t hk = compact_dimension(single_h);
  if (hin.zero != 0 || hin.negative != hk || hin.positive != dim_h - hk)
    throw Error(ErrorKind::ThetaIncompatibleEmbedding,
                "Killing form of " + ps.g.to_string() + " has wrong signature on " + ps.h.to_string());

  rp.k_subspace = Subspace::coordinate(d, 0, g.dim_k());
  rp.l_subspace = intersect(rp.h_subspace, rp.k_subspace);
  rp.dim_GH = d - rp.h_subspace.dim();
  rp.q_fiber = g.dim_k() - rp.l_subspace.dim();
  rp.p_degree = rp.dim_GH - rp.q_fiber;
  rp.V = compute_V(g, rp.h_subspace, rp.k_subspace, rp.p_degree);
  return rp;
}

bool V_is_l_invariant(const ReductivePair& rp) {
  for (std::size_t i = 0; i < rp.l_subspace.dim(); ++i)
    for (std::size_t j = 0; j < rp.V.dim(); ++j)
      if (!rp.V.contains(rp.g->bracket(rp.l_subspace.basis().row(i), rp.V.basis().row(j)))) return false;
  return true;
}

}  // namespace ckforms
