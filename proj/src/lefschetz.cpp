#include <algorithm>

#include "ckforms/cohomology.hpp"
#include "ckforms/errors.hpp"

namespace ckforms {

GradedRing::GradedRing(std::string name, int dimension, std::vector<RingBasisElement> basis)
    : name_(std::move(name)), dimension_(dimension), basis_(std::move(basis)) {
  products_.assign(basis_.size() * basis_.size(), QVector(basis_.size()));
  integral_.assign(basis_.size(), Rational(0));
}

std::vector<std::size_t> GradedRing::degree_indices(int k) const {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == k) v.push_back(i);
  return v;
}

void GradedRing::set_product(std::size_t i, std::size_t j, QVector value) {
  products_.at(i * size() + j) = std::move(value);
}

void GradedRing::set_integral(std::size_t i, const Rational& value) { integral_.at(i) = value; }

QVector GradedRing::multiply(const QVector& a, const QVector& b) const {
  QVector out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rational f = a[i] * b[j];
      const QVector& p = product(i, j);
      for (std::size_t t = 0; t < size(); ++t)
        if (sgn(p[t]) != 0) out[t] += f * p[t];
    }
  }
  return out;
}

Rational GradedRing::integrate(const QVector& a) const { return dot(a, integral_); }

std::size_t GradedRing::unit_index() const {
  const auto zero = degree_indices(0);
  if (zero.size() != 1) throw Error(ErrorKind::UnsupportedSpace, "ring is not connected");
  return zero.front();
}

namespace {

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

GradedRing build_ring(const SymSpaceId& s) {
  if (s.family == SpaceFamily::Sphere) {
    const int d = s.params[0];
    GradedRing r(s.to_string(), d, {{"1", 0}, {"v", d}});
    r.set_product(0, 0, unit_vector(2, 0));
    r.set_product(0, 1, unit_vector(2, 1));
    r.set_product(1, 0, unit_vector(2, 1));
    r.set_integral(1, 1);
    r.set_generator_exponents({0, 1});
    return r;
  }
  if (s.family == SpaceFamily::CPn) {
    const int d = s.params[0];
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    std::vector<RingBasisElement> basis;
    for (int j = 0; j <= d; ++j)
      basis.push_back({j == 0 ? "1" : (j == 1 ? "w" : "w^" + std::to_string(j)), 2 * j});
    GradedRing r(s.to_string(), 2 * d, std::move(basis));
    std::vector<int> ex;
    for (std::size_t a = 0; a < n; ++a) {
      ex.push_back(static_cast<int>(a));
      for (std::size_t b = 0; b < n; ++b)
        if (a + b < n) r.set_product(a, b, unit_vector(n, a + b));
    }
    r.set_integral(n - 1, 1);
    r.set_generator_exponents(std::move(ex));
    return r;
  }
  throw Error(ErrorKind::UnsupportedSpace, "no ring model for " + s.to_string());
}

bool is_graded_commutative(const GradedRing& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      const int sign = (r.basis()[i].degree * r.basis()[j].degree) % 2 ? -1 : 1;
      QVector rhs = r.product(j, i);
      for (auto& x : rhs) x *= sign;
      if (r.product(i, j) != rhs) return false;
    }
  return true;
}

bool is_associative(const GradedRing& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const QVector a = r.multiply(r.product(i, j), unit_vector(n, k));
        const QVector b = r.multiply(unit_vector(n, i), r.product(j, k));
        if (a != b) return false;
      }
  return true;
}

QMatrix pairing_matrix(const GradedRing& r, int k) {
  const auto rows = r.degree_indices(k), cols = r.degree_indices(r.dimension() - k);
  QMatrix p(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) p(a, b) = r.integrate(r.product(rows[a], cols[b]));
  return p;
}

bool pairing_nondegenerate(const GradedRing& r) {
  for (int k = 0; k <= r.dimension(); ++k) {
    const QMatrix p = pairing_matrix(r, k);
    if (p.rows() != p.cols()) return false;
    if (p.rows() > 0 && sgn(determinant(p)) == 0) return false;
  }
  return true;
}

LefschetzClass lefschetz_class(const GradedRing& r) {
  LefschetzClass c;
  const int d = r.dimension();
  for (int k = 0; k <= d; ++k) {
    const auto left = r.degree_indices(k), right = r.degree_indices(d - k);
    if (left.empty() && right.empty()) continue;
    const QMatrix p = pairing_matrix(r, k);
    if (p.rows() != p.cols()) throw Error(ErrorKind::DegeneratePairing, "pairing in degree " + std::to_string(k));
    auto x = inverse(p);
    if (!x) throw Error(ErrorKind::DegeneratePairing, "pairing in degree " + std::to_string(k));
    const int sign = (d - k) % 2 ? -1 : 1;
    // dual of left[i] is sum_m X(m, i) right[m]
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t m = 0; m < right.size(); ++m)
        if (sgn((*x)(m, i)) != 0) c.terms.push_back({left[i], right[m], sign * (*x)(m, i)});
  }
  return c;
}

RingEndomorphism identity_endomorphism(const GradedRing& r) {
  RingEndomorphism f;
  for (int k = 0; k <= r.dimension(); ++k) f.per_degree.push_back(QMatrix::identity(r.degree_indices(k).size()));
  return f;
}

RingEndomorphism generator_scaling(const GradedRing& r, const Rational& k) {
  const auto& ex = r.generator_exponents();
  if (ex.size() != r.size() || std::any_of(ex.begin(), ex.end(), [](int e) { return e < 0; }))
    throw Error(ErrorKind::UnsupportedSpace, "ring " + r.name() + " is not generated by one element");
  RingEndomorphism f = identity_endomorphism(r);
  for (int deg = 0; deg <= r.dimension(); ++deg) {
    const auto idx = r.degree_indices(deg);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      Rational v = 1;
      for (int e = 0; e < ex[idx[a]]; ++e) v *= k;
      f.per_degree[static_cast<std::size_t>(deg)](a, a) = v;
    }
  }
  return f;
}

QVector apply(const GradedRing& r, const RingEndomorphism& f, const QVector& x) {
  QVector out(r.size());
  for (int deg = 0; deg <= r.dimension(); ++deg) {
    const auto idx = r.degree_indices(deg);
    const QMatrix& m = f.per_degree.at(static_cast<std::size_t>(deg));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        if (sgn(x[idx[b]]) != 0) out[idx[a]] += m(a, b) * x[idx[b]];
  }
  return out;
}

bool is_ring_map(const GradedRing& r, const RingEndomorphism& f) {
  if (f.per_degree.size() != static_cast<std::size_t>(r.dimension()) + 1) return false;
  for (int deg = 0; deg <= r.dimension(); ++deg) {
    const std::size_t n = r.degree_indices(deg).size();
    const QMatrix& m = f.per_degree[static_cast<std::size_t>(deg)];
    if (m.rows() != n || m.cols() != n) return false;
  }
  const std::size_t n = r.size(), u = r.unit_index();
  if (apply(r, f, unit_vector(n, u)) != unit_vector(n, u)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QVector lhs = apply(r, f, r.product(i, j));
      const QVector rhs = r.multiply(apply(r, f, unit_vector(n, i)), apply(r, f, unit_vector(n, j)));
      if (lhs != rhs) return false;
    }
  return true;
}

LefschetzNumber lefschetz_number(const GradedRing& r, const RingEndomorphism& f) {
  if (!is_ring_map(r, f)) throw Error(ErrorKind::NotARingMap, "f* does not preserve products on " + r.name());
  LefschetzNumber out;
  const std::size_t n = r.size();
  // graph pairing: each term a (x) b contributes coeff * integral of a . f*(b)
  for (const auto& t : lefschetz_class(r).terms)
    out.graph_pairing += t.coeff * r.integrate(r.multiply(unit_vector(n, t.left), apply(r, f, unit_vector(n, t.right))));
  for (int k = 0; k <= r.dimension(); ++k) {
    const QMatrix& m = f.per_degree[static_cast<std::size_t>(k)];
    Rational tr = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
    out.trace_formula += (k % 2 ? -tr : tr);
  }
  return out;
}

VolumeFormula su_volume_coefficients(int d) {
  if (d < 1) throw Error(ErrorKind::UnsupportedSpace, "d must be positive");
  const GradedRing r = build_ring(make_space(SpaceFamily::CPn, {d}));
  VolumeFormula v;
  v.group = "SU(" + std::to_string(d + 1) + ")";
  // a term w^(d-j) (x) w^j pairs with the graph to tau_j
  std::vector<Rational> coeff(static_cast<std::size_t>(d) + 1);
  for (const auto& t : lefschetz_class(r).terms) {
    const int j = r.generator_exponents()[t.right];
    if (r.generator_exponents()[t.left] != d - j) throw Error(ErrorKind::Internal, "unexpected Lefschetz term");
    coeff[static_cast<std::size_t>(j)] += t.coeff;
  }
  std::string sum;
  for (int j = 0; j <= d; ++j) {
    const std::string name = "tau_" + std::to_string(j);
    v.terms.push_back({name, "integral over Gamma\\H^" + std::to_string(d) + "_C of w^" + std::to_string(d - j) +
                                 " ^ f*w^" + std::to_string(j),
                       coeff[static_cast<std::size_t>(j)]});
    const Rational& c = coeff[static_cast<std::size_t>(j)];
    std::string cs = c == 1 ? "" : (c == -1 ? "-" : c.get_str() + "*");
    sum += (j ? " + " : "") + cs + name;
  }
  v.statement = "Vol = Vol(" + v.group + ") * |" + sum + "|";
  return v;
}

VolumeFormula so_volume_coefficients(int d) {
  if (d < 1) throw Error(ErrorKind::UnsupportedSpace, "d must be positive");
  const GradedRing r = build_ring(make_space(SpaceFamily::Sphere, {d}));
  VolumeFormula v;
  v.group = "SO(" + std::to_string(d) + ")";
  Rational c_base = 0, c_rho = 0;
  for (const auto& t : lefschetz_class(r).terms) {
    if (r.basis()[t.left].degree == d) c_base += t.coeff;  // vol (x) 1
    else c_rho += t.coeff;                                     // 1 (x) vol
  }
  v.terms.push_back({"Vol(Gamma\\H^" + std::to_string(d) + ")", "integral of vol ^ f*1", c_base});
  v.terms.push_back({"Vol(rho)", "integral of f*vol", c_rho});
  const std::string sign = c_rho > 0 ? " + " : " - ";
  const Rational mag = abs(c_rho);
  v.statement = "Vol = Vol(" + v.group + ") * |" + v.terms[0].invariant + sign +
                (mag == 1 ? "" : mag.get_str() + "*") + "Vol(rho)|";
  return v;
}

}  // namespace ckforms
