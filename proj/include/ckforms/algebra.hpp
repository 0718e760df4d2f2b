#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ckforms/rational.hpp"

namespace ckforms {

enum class Family { SL_R, SL_C, SL_H, SO, SO_C, SU, SP, SP_C, SOSTAR };

enum class Field { Real, Complex, Quaternion };

const char* family_name(Family f);

struct AlgebraSpec {
  Family family = Family::SL_R;
  // SL_*(n), SO_C(n), SP_C(n): {n}; SO/SU/SP: {p, q}; SOSTAR: {2n}
  std::vector<int> params;
  // number of identical block-diagonal copies (2 for the ambient algebra of a group space)
  int copies = 1;

  std::string to_string() const;
  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

AlgebraSpec make_spec(Family f, std::vector<int> params, int copies = 1);

// "SO(3,2)", "sl_r(4)", "SOSTAR(6)", shorthand "SO(n)" = SO(n,0); offset is for error positions
AlgebraSpec parse_algebra_spec(std::string_view text, std::size_t offset = 0);
// validates parameter ranges, throws UnsupportedFamily
void validate_spec(const AlgebraSpec& spec);

Field field_of(Family f);
int field_block(Field f);  // 1, 2, 4
// size of one copy as a matrix over its field
int scalar_size(const AlgebraSpec& spec);
// size of the realified matrices (all copies)
int realified_size(const AlgebraSpec& spec);
std::size_t real_dimension(const AlgebraSpec& spec);
std::size_t compact_dimension(const AlgebraSpec& spec);  // dim k

// every family in the catalog is simple or a direct sum of identical pieces; no other sums
class LieAlgebraInstance {
 public:
  const AlgebraSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t dim_k() const noexcept { return dim_k_; }
  std::size_t dim_p() const noexcept { return basis_.size() - dim_k_; }
  std::size_t matrix_size() const noexcept { return n_; }

  const std::vector<SparseQMatrix>& basis() const noexcept { return basis_; }
  const std::vector<int>& theta_signature() const noexcept { return theta_; }
  // c_{ij} as sparse vector of (k, c_{ij}^k)
  const SparseVector& structure(std::size_t i, std::size_t j) const { return structure_[i * dim() + j]; }
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  const QMatrix& killing() const noexcept { return killing_; }

  // exact coordinates of a matrix in the basis; nullopt if outside the span
  std::optional<QVector> coordinates(const SparseQMatrix& m) const;
  SparseQMatrix to_matrix(const QVector& coords) const;
  QVector bracket(const QVector& x, const QVector& y) const;
  QMatrix ad(std::size_t i) const;  // column k holds coordinates of [X_i, X_k]

 private:
  friend LieAlgebraInstance build_algebra(const AlgebraSpec&, std::size_t);
  AlgebraSpec spec_;
  std::size_t n_ = 0;
  std::size_t dim_k_ = 0;
  std::vector<SparseQMatrix> basis_;
  std::vector<int> theta_;
  std::vector<SparseVector> structure_;
  QMatrix killing_;
  // coordinate extraction: pivot entries (row*n+col) and inverse of the pivot submatrix
  std::vector<std::size_t> pivot_positions_;
  QMatrix pivot_inverse_;
};

LieAlgebraInstance build_algebra(const AlgebraSpec& spec, std::size_t dimension_cap = 256);
using AlgebraPtr = std::shared_ptr<const LieAlgebraInstance>;
AlgebraPtr build_algebra_shared(const AlgebraSpec& spec, std::size_t dimension_cap = 256);

// recomputes B_ij = tr(ad_i ad_j) from the structure constants
QMatrix killing_form(const LieAlgebraInstance& a);

struct CartanDecomposition {
  std::vector<std::size_t> k_basis;
  std::vector<std::size_t> p_basis;
};
CartanDecomposition cartan_decomposition(const LieAlgebraInstance& a);

bool satisfies_jacobi(const LieAlgebraInstance& a);
bool killing_is_invariant(const LieAlgebraInstance& a);
bool is_theta_adapted(const LieAlgebraInstance& a);

// raw basis generation, exposed for tests: matrices with their theta signs, k first
struct RawBasis {
  std::size_t matrix_size = 0;
  std::vector<SparseQMatrix> k;
  std::vector<SparseQMatrix> p;
};
RawBasis raw_basis(const AlgebraSpec& spec);

// left-multiplication matrix of a quaternion a + b i + c j + d k, basis (1, i, j, k)
QMatrix quaternion_block(int a, int b, int c, int d);

}  // namespace ckforms
