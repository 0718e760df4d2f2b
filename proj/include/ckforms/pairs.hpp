#pragma once

#include <cstddef>
#include <string>

#include "ckforms/algebra.hpp"
#include "ckforms/rational.hpp"

namespace ckforms {

enum class Embedding { UpperLeftBlock, RealFormInComplexification, DiagonalGroupSpace };

const char* embedding_name(Embedding e);

struct PairSpec {
  AlgebraSpec g;  // for group spaces: h with copies = 2
  AlgebraSpec h;
  Embedding embedding = Embedding::UpperLeftBlock;

  std::string to_string() const;  // canonical grammar form
  friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

// picks RealFormInComplexification when h is a real form of the complex g, else UpperLeftBlock
PairSpec make_pair(const AlgebraSpec& g, const AlgebraSpec& h);
PairSpec make_group_space(const AlgebraSpec& h);
bool is_supported_pair(const PairSpec& ps);

// rows are coordinates in the ambient basis, kept in reduced row echelon form
class Subspace {
 public:
  Subspace() = default;
  // ambient_dim is taken from rows.cols(); rows need not be independent
  static Subspace span(const QMatrix& rows, std::size_t ambient_dim);
  static Subspace coordinate(std::size_t ambient_dim, std::size_t first, std::size_t last);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const QMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const QVector& v) const;
  // coordinates of v in the row basis; nullopt if v is outside
  std::optional<QVector> coordinates_of(const QVector& v) const;
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);

// B-orthogonal complement; throws DegenerateForm when det B == 0
Subspace orthogonal_complement(const Subspace& s, const QMatrix& form);

struct ReductivePair {
  PairSpec spec;
  AlgebraPtr g;
  Subspace h_subspace;
  Subspace k_subspace;
  Subspace l_subspace;
  Subspace V;
  std::size_t dim_GH = 0;
  std::size_t q_fiber = 0;
  std::size_t p_degree = 0;
};

struct EmbedOptions {
  std::size_t dimension_cap = 256;
};

ReductivePair embed_pair(const PairSpec& ps, const EmbedOptions& opts = {});

// rows spanning the image of h in g coordinates (exposed for tests)
QMatrix embedded_h_rows(const PairSpec& ps, const LieAlgebraInstance& g, std::size_t dimension_cap = 256);

// V = k-perp ∩ h-perp; throws DimensionMismatch when dim V != dim_GH - q_fiber
Subspace compute_V(const LieAlgebraInstance& g, const Subspace& h, const Subspace& k,
                   std::size_t expected_dim);

bool is_subalgebra(const LieAlgebraInstance& g, const Subspace& s);
bool is_theta_stable(const LieAlgebraInstance& g, const Subspace& s);
Inertia restricted_inertia(const QMatrix& form, const Subspace& s);
QMatrix gram(const QMatrix& form, const Subspace& s);
// [l, V] has no component in (V-perp ∩ p)
bool V_is_l_invariant(const ReductivePair& rp);

}  // namespace ckforms
