#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ckforms/algebra.hpp"
#include "ckforms/rational.hpp"

namespace ckforms {

enum class SpaceFamily {
  Sphere,        // S^d
  CPn,           // CP^d
  GrassC,        // U(p+q)/U(p)xU(q)
  GrassH,        // Sp(p+q)/Sp(p)xSp(q)
  GrassR,        // SO(p+q)/SO(p)xSO(q), oriented
  SU_over_SO,    // SU(n)/SO(n)
  SU2n_over_Sp,  // SU(2n)/Sp(n)
  SO2n_over_U,   // SO(2n)/U(n)
  Sp_over_U,     // Sp(n)/U(n)
  GroupSU,
  GroupSO,
  GroupSp,
};

struct SymSpaceId {
  SpaceFamily family = SpaceFamily::Sphere;
  std::vector<int> params;

  std::string to_string() const;
  int dimension() const;  // from the classification table
  friend bool operator==(const SymSpaceId&, const SymSpaceId&) = default;
};

// finite product of symmetric spaces; empty product is a point
struct SymSpaceProduct {
  std::vector<SymSpaceId> factors;
  std::string to_string() const;
  int dimension() const;
};

SymSpaceId make_space(SpaceFamily f, std::vector<int> params);

// "S(3)", "S^3", "CP(2)", "GR_C(2,1)", "GR_H(1,1)", "GR_R(3,3)", "SU(3)/SO(3)", "SU(4)/SP(2)",
// "SO(6)/U(3)", "SP(2)/U(2)", "SU(3)", "SO(5)", "SP(2)", products joined by 'x'
SymSpaceProduct parse_space(std::string_view text);

// integer polynomial, coefficient i is the coefficient of t^i
using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly& a, const Poly& b);
std::int64_t poly_eval_one(const Poly& a);
std::int64_t poly_eval_minus_one(const Poly& a);
std::string poly_to_string(const Poly& a);

struct PoincareBigrade {
  Poly even_series;
  std::vector<int> primitive_degrees;
  int dim_even_top = 0;
  int dim_odd_top = 0;
  Poly poincare_series;
  std::int64_t euler_characteristic = 0;
  int rank_G = 0;  // rank of the compact group acting
  int rank_K = 0;  // rank of the isotropy group
};

PoincareBigrade poincare_bigrade(const SymSpaceId& s);
PoincareBigrade poincare_bigrade(const SymSpaceProduct& s);
bool even_nontrivial(const SymSpaceId& s);
bool even_nontrivial(const SymSpaceProduct& s);

// compact dual G_U/K of a (possibly doubled) real form
SymSpaceProduct compact_dual(const AlgebraSpec& spec);
// every space the tables support, within the given parameter bound, for sweeps
std::vector<SymSpaceId> supported_spaces(int max_param);

struct Bidegree {
  int a = 0;
  int b = 0;
  bool vanish_signal = false;  // a < 0 or b < 0
  bool chern_weil = false;     // b == 0 and no vanish signal
  std::string g_dual;
  std::string h_dual;
};

struct PairSpec;
Bidegree bidegree_of_omega(const PairSpec& ps);

// graded rings with Poincare duality

struct RingBasisElement {
  std::string label;
  int degree;
};

class GradedRing {
 public:
  GradedRing(std::string name, int dimension, std::vector<RingBasisElement> basis);

  const std::string& name() const noexcept { return name_; }
  int dimension() const noexcept { return dimension_; }
  const std::vector<RingBasisElement>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  std::vector<std::size_t> degree_indices(int k) const;

  void set_product(std::size_t i, std::size_t j, QVector value);
  void set_integral(std::size_t i, const Rational& value);
  const QVector& product(std::size_t i, std::size_t j) const { return products_[i * size() + j]; }
  QVector multiply(const QVector& a, const QVector& b) const;
  Rational integrate(const QVector& a) const;
  std::size_t unit_index() const;
  // exponent e with basis element = g^e for the ring generator g, or -1
  void set_generator_exponents(std::vector<int> e) { generator_exponents_ = std::move(e); }
  const std::vector<int>& generator_exponents() const noexcept { return generator_exponents_; }

 private:
  std::string name_;
  int dimension_;
  std::vector<RingBasisElement> basis_;
  std::vector<QVector> products_;
  QVector integral_;
  std::vector<int> generator_exponents_;
};

GradedRing build_ring(const SymSpaceId& s);
bool is_graded_commutative(const GradedRing& r);
bool is_associative(const GradedRing& r);
// rows: basis of H^k, columns: basis of H^{d-k}
QMatrix pairing_matrix(const GradedRing& r, int k);
bool pairing_nondegenerate(const GradedRing& r);

struct LefschetzTerm {
  std::size_t left;
  std::size_t right;
  Rational coeff;
};

struct LefschetzClass {
  std::vector<LefschetzTerm> terms;  // omitted terms are zero
};

LefschetzClass lefschetz_class(const GradedRing& r);

// f* on each degree: column j holds the image of the j-th basis element of that degree
struct RingEndomorphism {
  std::vector<QMatrix> per_degree;  // indexed by degree 0..d
};

RingEndomorphism identity_endomorphism(const GradedRing& r);
// scales the lowest positive-degree generator by k (CPn: omega -> k omega; sphere: degree-k map)
RingEndomorphism generator_scaling(const GradedRing& r, const Rational& k);
QVector apply(const GradedRing& r, const RingEndomorphism& f, const QVector& x);
bool is_ring_map(const GradedRing& r, const RingEndomorphism& f);

struct LefschetzNumber {
  Rational graph_pairing;  // <beta_Lef, graph of f>
  Rational trace_formula;  // sum (-1)^k tr f*|H^k
};

LefschetzNumber lefschetz_number(const GradedRing& r, const RingEndomorphism& f);

struct VolumeTerm {
  std::string invariant;  // e.g. "tau_1" or "Vol(rho)"
  std::string definition;
  Rational coefficient;
};

struct VolumeFormula {
  std::string group;      // the compact factor whose volume multiplies the sum
  std::string statement;  // human-readable
  std::vector<VolumeTerm> terms;
};

VolumeFormula su_volume_coefficients(int d);
VolumeFormula so_volume_coefficients(int d);

}  // namespace ckforms
