#include "ckforms/algebra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "ckforms/errors.hpp"

namespace ckforms {

const char* family_name(Family f) {
  switch (f) {
    case Family::SL_R: return "SL_R";
    case Family::SL_C: return "SL_C";
    case Family::SL_H: return "SL_H";
    case Family::SO: return "SO";
    case Family::SO_C: return "SO_C";
    case Family::SU: return "SU";
    case Family::SP: return "SP";
    case Family::SP_C: return "SP_C";
    case Family::SOSTAR: return "SOSTAR";
  }
  return "?";
}

namespace {

bool two_params(Family f) { return f == Family::SO || f == Family::SU || f == Family::SP; }

std::string single_string(const AlgebraSpec& s) {
  std::string out = family_name(s.family);
  out += "(";
  for (std::size_t i = 0; i < s.params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.params[i]);
  }
  return out + ")";
}

}  // namespace

std::string AlgebraSpec::to_string() const {
  std::string one = single_string(*this);
  std::string out = one;
  for (int c = 1; c < copies; ++c) out += "+" + one;
  return out;
}

AlgebraSpec make_spec(Family f, std::vector<int> params, int copies) {
  AlgebraSpec s;
  s.family = f;
  s.params = std::move(params);
  s.copies = copies;
  if (two_params(f) && s.params.size() == 1) s.params.push_back(0);
  validate_spec(s);
  return s;
}

AlgebraSpec parse_algebra_spec(std::string_view text, std::size_t offset) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
    ++offset;
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::size_t pos = 0;
  std::string name;
  while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
    name += static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos++])));
  static const std::map<std::string, Family> names = {
      {"SL_R", Family::SL_R}, {"SL_C", Family::SL_C}, {"SL_H", Family::SL_H},
      {"SO", Family::SO},     {"SO_C", Family::SO_C}, {"SU", Family::SU},
      {"SP", Family::SP},     {"SP_C", Family::SP_C}, {"SOSTAR", Family::SOSTAR}};
  auto it = names.find(name);
  if (it == names.end())
    throw ParseError("unknown algebra family '" + name + "'", offset,
                     "one of SL_R SL_C SL_H SO SO_C SU SP SP_C SOSTAR");
  const Family fam = it->second;
  if (pos >= text.size() || text[pos] != '(') throw ParseError("missing '('", offset + pos, "'('");
  ++pos;
  std::vector<int> params;
  for (;;) {
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos++] - '0');
      if (value > 100000) throw ParseError("parameter too large", offset + start, "small integer");
    }
    if (pos == start) throw ParseError("expected integer parameter", offset + pos, "digit");
    params.push_back(static_cast<int>(value));
    if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
    break;
  }
  if (pos >= text.size() || text[pos] != ')') throw ParseError("missing ')'", offset + pos, "')'");
  ++pos;
  if (pos != text.size()) throw ParseError("trailing characters", offset + pos, "end of algebra spec");
  const std::size_t want = two_params(fam) ? 2 : 1;
  if (params.size() > want || (params.size() < want && !two_params(fam)))
    throw ParseError(std::string("wrong parameter count for ") + family_name(fam), offset,
                     std::to_string(want) + " parameter(s)");
  return make_spec(fam, std::move(params));
}

void validate_spec(const AlgebraSpec& s) {
  const std::size_t want = two_params(s.family) ? 2 : 1;
  if (s.params.size() != want)
    throw Error(ErrorKind::UnsupportedFamily, std::string("bad parameter count for ") + family_name(s.family));
  for (int p : s.params)
    if (p < 0) throw Error(ErrorKind::UnsupportedFamily, "negative parameter in " + s.to_string());
  if (s.copies < 1 || s.copies > 2)
    throw Error(ErrorKind::UnsupportedFamily, "only one or two copies are supported");
  const int a = s.params[0];
  const int b = want == 2 ? s.params[1] : 0;
  bool ok = true;
  switch (s.family) {
    case Family::SL_R:
    case Family::SL_C: ok = a >= 2; break;
    case Family::SL_H:
    case Family::SP_C: ok = a >= 1; break;
    case Family::SO_C: ok = a >= 2; break;
    case Family::SO:
    case Family::SU: ok = a + b >= 2; break;
    case Family::SP: ok = a + b >= 1; break;
    case Family::SOSTAR: ok = a >= 2 && a % 2 == 0; break;
  }
  if (!ok) throw Error(ErrorKind::UnsupportedFamily, "parameters out of range: " + s.to_string());
}

Field field_of(Family f) {
  switch (f) {
    case Family::SL_R:
    case Family::SO: return Field::Real;
    case Family::SL_H:
    case Family::SP: return Field::Quaternion;
    default: return Field::Complex;
  }
}

int field_block(Field f) { return f == Field::Real ? 1 : (f == Field::Complex ? 2 : 4); }

int scalar_size(const AlgebraSpec& s) {
  switch (s.family) {
    case Family::SO:
    case Family::SU:
    case Family::SP: return s.params[0] + s.params[1];
    case Family::SP_C: return 2 * s.params[0];
    default: return s.params[0];
  }
}

int realified_size(const AlgebraSpec& s) {
  return s.copies * scalar_size(s) * field_block(field_of(s.family));
}

std::size_t real_dimension(const AlgebraSpec& s) {
  const std::size_t a = static_cast<std::size_t>(s.params[0]);
  const std::size_t b = s.params.size() > 1 ? static_cast<std::size_t>(s.params[1]) : 0;
  const std::size_t n = a + b;
  std::size_t d = 0;
  switch (s.family) {
    case Family::SL_R: d = a * a - 1; break;
    case Family::SL_C: d = 2 * (a * a - 1); break;
    case Family::SL_H: d = 4 * a * a - 1; break;
    case Family::SO: d = n * (n - 1) / 2; break;
    case Family::SO_C: d = a * (a - 1); break;
    case Family::SU: d = n * n - 1; break;
    case Family::SP: d = n * (2 * n + 1); break;
    case Family::SP_C: d = 2 * a * (2 * a + 1); break;
    case Family::SOSTAR: d = (a / 2) * (a - 1); break;
  }
  return d * static_cast<std::size_t>(s.copies);
}

std::size_t compact_dimension(const AlgebraSpec& s) {
  const std::size_t a = static_cast<std::size_t>(s.params[0]);
  const std::size_t b = s.params.size() > 1 ? static_cast<std::size_t>(s.params[1]) : 0;
  std::size_t d = 0;
  switch (s.family) {
    case Family::SL_R: d = a * (a - 1) / 2; break;
    case Family::SL_C: d = a * a - 1; break;
    case Family::SL_H: d = a * (2 * a + 1); break;
    case Family::SO: d = a * (a - (a ? 1 : 0)) / 2 + b * (b - (b ? 1 : 0)) / 2; break;
    case Family::SO_C: d = a * (a - 1) / 2; break;
    case Family::SU: d = a * a + b * b - 1; break;
    case Family::SP: d = a * (2 * a + 1) + b * (2 * b + 1); break;
    case Family::SP_C: d = a * (2 * a + 1); break;
    case Family::SOSTAR: d = (a / 2) * (a / 2); break;
  }
  return d * static_cast<std::size_t>(s.copies);
}

QMatrix quaternion_block(int a, int b, int c, int d) {
  QMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) m(i, i) = a;
  // i
  m(1, 0) += b; m(0, 1) -= b; m(3, 2) += b; m(2, 3) -= b;
  // j
  m(2, 0) += c; m(3, 1) -= c; m(0, 2) -= c; m(1, 3) += c;
  // k
  m(3, 0) += d; m(2, 1) += d; m(1, 2) -= d; m(0, 3) -= d;
  return m;
}

namespace {

// entry of a matrix over R, C or H: value c[0] + c[1] i + c[2] j + c[3] k
struct FEntry {
  int i, j;
  std::array<int, 4> c;
};
using FMat = std::vector<FEntry>;

constexpr std::array<int, 4> unit(int comp, int sign = 1) {
  std::array<int, 4> c{0, 0, 0, 0};
  c[static_cast<std::size_t>(comp)] = sign;
  return c;
}

FMat antisym(int i, int j, int comp) { return {{i, j, unit(comp)}, {j, i, unit(comp, -1)}}; }
FMat sym(int i, int j, int comp) { return {{i, j, unit(comp)}, {j, i, unit(comp)}}; }
FMat diag_diff(int i, int comp) { return {{i, i, unit(comp)}, {i + 1, i + 1, unit(comp, -1)}}; }
FMat diag(int i, int comp) { return {{i, i, unit(comp)}}; }

SparseQMatrix realify(Field f, int n, const FMat& m) {
  const int b = field_block(f);
  std::vector<SparseEntry> e;
  auto put = [&](int r, int c, int v) {
    if (v != 0) e.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), Rational(v)});
  };
  for (const auto& x : m) {
    const int r0 = x.i * b, c0 = x.j * b;
    if (f == Field::Real) {
      put(r0, c0, x.c[0]);
    } else if (f == Field::Complex) {
      put(r0, c0, x.c[0]);
      put(r0, c0 + 1, -x.c[1]);
      put(r0 + 1, c0, x.c[1]);
      put(r0 + 1, c0 + 1, x.c[0]);
    } else {
      const QMatrix q = quaternion_block(x.c[0], x.c[1], x.c[2], x.c[3]);
      for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
          if (sgn(q(s, t)) != 0) e.push_back({static_cast<std::uint32_t>(r0 + s),
                                              static_cast<std::uint32_t>(c0 + t), q(s, t)});
    }
  }
  return SparseQMatrix(static_cast<std::size_t>(n * b), std::move(e));
}

FMat concat(FMat a, const FMat& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct FieldBasis {
  std::vector<FMat> k, p;
};

// complex sp(2n): [[A,B],[C,-A^T]]; compact part [[A,B],[-conj B, conj A]], A in u(n), B symmetric
FieldBasis sp_complex_basis(int n) {
  FieldBasis fb;
  auto shift = [n](int i) { return n + i; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      fb.k.push_back(concat(antisym(i, j, 0), antisym(shift(i), shift(j), 0)));
      FMat m = sym(i, j, 1);
      for (auto [a, b] : {std::pair{shift(i), shift(j)}, std::pair{shift(j), shift(i)}})
        m.push_back({a, b, unit(1, -1)});
      fb.k.push_back(m);
    }
  for (int i = 0; i < n; ++i) fb.k.push_back({{i, i, unit(1)}, {shift(i), shift(i), unit(1, -1)}});
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      FMat real, imag;
      if (i == j) {
        real = {{i, shift(i), unit(0)}, {shift(i), i, unit(0, -1)}};
        imag = {{i, shift(i), unit(1)}, {shift(i), i, unit(1)}};
      } else {
        real = {{i, shift(j), unit(0)}, {j, shift(i), unit(0)},
                {shift(i), j, unit(0, -1)}, {shift(j), i, unit(0, -1)}};
        imag = {{i, shift(j), unit(1)}, {j, shift(i), unit(1)},
                {shift(i), j, unit(1)}, {shift(j), i, unit(1)}};
      }
      fb.k.push_back(real);
      fb.k.push_back(imag);
    }
  return fb;
}

// multiply a complex field matrix by i
FMat times_i(const FMat& m) {
  FMat out;
  for (const auto& x : m) out.push_back({x.i, x.j, {-x.c[1], x.c[0], 0, 0}});
  return out;
}

FieldBasis field_basis(const AlgebraSpec& s) {
  FieldBasis fb;
  switch (s.family) {
    case Family::SL_R: {
      const int n = s.params[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) fb.k.push_back(antisym(i, j, 0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) fb.p.push_back(sym(i, j, 0));
      for (int i = 0; i + 1 < n; ++i) fb.p.push_back(diag_diff(i, 0));
      break;
    }
    case Family::SO: {
      const int p = s.params[0], n = p + s.params[1];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if ((i < p) == (j < p)) fb.k.push_back(antisym(i, j, 0));
          else fb.p.push_back(sym(i, j, 0));
        }
      break;
    }
    case Family::SU: {
      const int p = s.params[0], n = p + s.params[1];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if ((i < p) == (j < p)) {
            fb.k.push_back(antisym(i, j, 0));
            fb.k.push_back(sym(i, j, 1));
          } else {
            fb.p.push_back(sym(i, j, 0));
            fb.p.push_back(antisym(i, j, 1));
          }
        }
      for (int i = 0; i + 1 < n; ++i) fb.k.push_back(diag_diff(i, 1));
      break;
    }
    case Family::SL_C: {
      const int n = s.params[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          fb.k.push_back(antisym(i, j, 0));
          fb.k.push_back(sym(i, j, 1));
        }
      for (int i = 0; i + 1 < n; ++i) fb.k.push_back(diag_diff(i, 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          fb.p.push_back(antisym(i, j, 1));
          fb.p.push_back(sym(i, j, 0));
        }
      for (int i = 0; i + 1 < n; ++i) fb.p.push_back(diag_diff(i, 0));
      break;
    }
    case Family::SO_C: {
      const int n = s.params[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) fb.k.push_back(antisym(i, j, 0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) fb.p.push_back(antisym(i, j, 1));
      break;
    }
    case Family::SP:
    case Family::SL_H: {
      const bool sl = s.family == Family::SL_H;
      const int p = s.params[0];
      const int n = sl ? s.params[0] : s.params[0] + s.params[1];
      for (int i = 0; i < n; ++i)
        for (int u = 1; u <= 3; ++u) fb.k.push_back(diag(i, u));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const bool same = sl || ((i < p) == (j < p));
          auto& target = same ? fb.k : fb.p;
          if (same) {
            target.push_back(antisym(i, j, 0));
            for (int u = 1; u <= 3; ++u) target.push_back(sym(i, j, u));
          } else {
            target.push_back(sym(i, j, 0));
            for (int u = 1; u <= 3; ++u) target.push_back(antisym(i, j, u));
          }
        }
      if (sl) {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            fb.p.push_back(sym(i, j, 0));
            for (int u = 1; u <= 3; ++u) fb.p.push_back(antisym(i, j, u));
          }
        for (int i = 0; i + 1 < n; ++i) fb.p.push_back(diag_diff(i, 0));
      }
      break;
    }
    case Family::SP_C: {
      fb = sp_complex_basis(s.params[0]);
      for (const auto& m : fb.k) fb.p.push_back(times_i(m));
      break;
    }
    case Family::SOSTAR: {
      const int n = s.params[0] / 2;
      auto sh = [n](int i) { return n + i; };
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          fb.k.push_back(concat(antisym(i, j, 0), antisym(sh(i), sh(j), 0)));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          if (i == j)
            fb.k.push_back({{i, sh(i), unit(0)}, {sh(i), i, unit(0, -1)}});
          else
            fb.k.push_back({{i, sh(j), unit(0)}, {j, sh(i), unit(0)},
                            {sh(i), j, unit(0, -1)}, {sh(j), i, unit(0, -1)}});
        }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          fb.p.push_back({{i, j, unit(1)}, {j, i, unit(1, -1)},
                          {sh(i), sh(j), unit(1, -1)}, {sh(j), sh(i), unit(1)}});
          fb.p.push_back({{i, sh(j), unit(1)}, {j, sh(i), unit(1, -1)},
                          {sh(i), j, unit(1)}, {sh(j), i, unit(1, -1)}});
        }
      break;
    }
  }
  return fb;
}

SparseQMatrix shifted(const SparseQMatrix& m, std::size_t offset, std::size_t total) {
  std::vector<SparseEntry> e;
  for (const auto& x : m.entries())
    e.push_back({static_cast<std::uint32_t>(x.row + offset), static_cast<std::uint32_t>(x.col + offset),
                 x.value});
  return SparseQMatrix(total, std::move(e));
}

}  // namespace

RawBasis raw_basis(const AlgebraSpec& s) {
  validate_spec(s);
  const Field f = field_of(s.family);
  const int n = scalar_size(s);
  const FieldBasis fb = field_basis(s);
  const std::size_t one = static_cast<std::size_t>(n * field_block(f));
  RawBasis rb;
  rb.matrix_size = one * static_cast<std::size_t>(s.copies);
  for (int c = 0; c < s.copies; ++c)
    for (const auto& m : fb.k) rb.k.push_back(shifted(realify(f, n, m), one * c, rb.matrix_size));
  for (int c = 0; c < s.copies; ++c)
    for (const auto& m : fb.p) rb.p.push_back(shifted(realify(f, n, m), one * c, rb.matrix_size));
  return rb;
}

Rational LieAlgebraInstance::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  const SparseVector& v = structure(i, j);
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != v.end() && it->first == k) return it->second;
  return 0;
}

std::optional<QVector> LieAlgebraInstance::coordinates(const SparseQMatrix& m) const {
  if (m.size() != n_) return std::nullopt;
  const std::size_t d = dim();
  // values at pivot positions
  QVector y(d);
  for (std::size_t t = 0; t < d; ++t) {
    const std::size_t pos = pivot_positions_[t];
    y[t] = m.at(pos / n_, pos % n_);
  }
  QVector c(d);
  for (std::size_t r = 0; r < d; ++r) {
    Rational acc = 0;
    for (std::size_t t = 0; t < d; ++t)
      if (sgn(y[t]) != 0 && sgn(pivot_inverse_(r, t)) != 0) acc += pivot_inverse_(r, t) * y[t];
    c[r] = acc;
  }
  if (!(linear_combination(basis_, c, n_) == m)) return std::nullopt;
  return c;
}

SparseQMatrix LieAlgebraInstance::to_matrix(const QVector& coords) const {
  return linear_combination(basis_, coords, n_);
}

QVector LieAlgebraInstance::bracket(const QVector& x, const QVector& y) const {
  const std::size_t d = dim();
  QVector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      const Rational f = x[i] * y[j];
      for (const auto& [k, c] : structure(i, j)) out[k] += f * c;
    }
  }
  return out;
}

QMatrix LieAlgebraInstance::ad(std::size_t i) const {
  const std::size_t d = dim();
  QMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& [l, c] : structure(i, k)) m(l, k) = c;
  return m;
}

LieAlgebraInstance build_algebra(const AlgebraSpec& spec, std::size_t dimension_cap) {
  validate_spec(spec);
  const std::size_t expected = real_dimension(spec);
  if (expected > dimension_cap)
    throw Error(ErrorKind::DimensionCapExceeded,
                spec.to_string() + " has dimension " + std::to_string(expected) + " > cap " +
                    std::to_string(dimension_cap));
  RawBasis rb = raw_basis(spec);
  LieAlgebraInstance a;
  a.spec_ = spec;
  a.n_ = rb.matrix_size;
  a.dim_k_ = rb.k.size();
  for (auto& m : rb.k) { a.basis_.push_back(std::move(m)); a.theta_.push_back(1); }
  for (auto& m : rb.p) { a.basis_.push_back(std::move(m)); a.theta_.push_back(-1); }
  const std::size_t d = a.basis_.size(), n = a.n_;
  if (d != expected)
    throw Error(ErrorKind::Internal, "basis size " + std::to_string(d) + " != expected " +
                                         std::to_string(expected) + " for " + spec.to_string());

  // pick d matrix positions on which the basis is independent
  QMatrix flat(d, n * n);
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& e : a.basis_[k].entries()) flat(k, e.row * n + e.col) = e.value;
  const Echelon ech = row_echelon(flat);
  if (ech.pivots.size() != d) throw Error(ErrorKind::Internal, "basis not independent for " + spec.to_string());
  a.pivot_positions_ = ech.pivots;
  const QMatrix sub = flat.select_cols(ech.pivots);  // c^T sub = y_P
  auto inv = inverse(sub);
  if (!inv) throw Error(ErrorKind::Internal, "pivot block singular");
  a.pivot_inverse_ = inv->transpose();

  a.structure_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const SparseQMatrix br = commutator(a.basis_[i], a.basis_[j]);
      if (br.is_zero()) continue;
      auto c = a.coordinates(br);
      if (!c) throw Error(ErrorKind::Internal, "bracket leaves the span in " + spec.to_string());
      SparseVector sv, neg;
      for (std::size_t k = 0; k < d; ++k)
        if (sgn((*c)[k]) != 0) {
          sv.emplace_back(static_cast<std::uint32_t>(k), (*c)[k]);
          neg.emplace_back(static_cast<std::uint32_t>(k), -(*c)[k]);
        }
      a.structure_[i * d + j] = std::move(sv);
      a.structure_[j * d + i] = std::move(neg);
    }
  a.killing_ = killing_form(a);
  return a;
}

AlgebraPtr build_algebra_shared(const AlgebraSpec& spec, std::size_t dimension_cap) {
  return std::make_shared<const LieAlgebraInstance>(build_algebra(spec, dimension_cap));
}

QMatrix killing_form(const LieAlgebraInstance& a) {
  const std::size_t d = a.dim();
  QMatrix b(d, d);
  // B_ij = sum_{k,l} c_{ik}^l c_{jl}^k
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& [l, c] : a.structure(i, k)) {
          const Rational other = a.structure_constant(j, l, k);
          if (sgn(other) != 0) acc += c * other;
        }
      b(i, j) = acc;
      b(j, i) = acc;
    }
  return b;
}

bool is_theta_adapted(const LieAlgebraInstance& a) {
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const SparseQMatrix& x = a.basis()[k];
    // theta(X) = -X^T must equal sign * X
    if (!(x.transpose().scaled(-1) == x.scaled(a.theta_signature()[k]))) return false;
  }
  for (std::size_t k = 0; k < a.dim(); ++k)
    if ((k < a.dim_k()) != (a.theta_signature()[k] == 1)) return false;
  return true;
}

CartanDecomposition cartan_decomposition(const LieAlgebraInstance& a) {
  if (!is_theta_adapted(a))
    throw Error(ErrorKind::SignatureViolation, "basis of " + a.spec().to_string() + " not theta-adapted");
  CartanDecomposition cd;
  for (std::size_t k = 0; k < a.dim(); ++k)
    (a.theta_signature()[k] == 1 ? cd.k_basis : cd.p_basis).push_back(k);
  const QMatrix& b = a.killing();
  for (auto i : cd.k_basis)
    for (auto j : cd.p_basis)
      if (sgn(b(i, j)) != 0) throw Error(ErrorKind::SignatureViolation, "B(k, p) != 0");
  QMatrix bk(cd.k_basis.size(), cd.k_basis.size()), bp(cd.p_basis.size(), cd.p_basis.size());
  for (std::size_t i = 0; i < cd.k_basis.size(); ++i)
    for (std::size_t j = 0; j < cd.k_basis.size(); ++j) bk(i, j) = b(cd.k_basis[i], cd.k_basis[j]);
  for (std::size_t i = 0; i < cd.p_basis.size(); ++i)
    for (std::size_t j = 0; j < cd.p_basis.size(); ++j) bp(i, j) = b(cd.p_basis[i], cd.p_basis[j]);
  const Inertia ik = inertia(bk), ip = inertia(bp);
  if (ik.negative != cd.k_basis.size())
    throw Error(ErrorKind::SignatureViolation,
                "Killing form not negative definite on k of " + a.spec().to_string());
  if (ip.positive != cd.p_basis.size())
    throw Error(ErrorKind::SignatureViolation,
                "Killing form not positive definite on p of " + a.spec().to_string());
  return cd;
}

namespace {

void add_bracket_with_basis(const LieAlgebraInstance& a, std::size_t i, const SparseVector& y,
                            std::map<std::uint32_t, Rational>& acc) {
  for (const auto& [m, ym] : y)
    for (const auto& [k, c] : a.structure(i, m)) acc[k] += ym * c;
}

}  // namespace

bool satisfies_jacobi(const LieAlgebraInstance& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::map<std::uint32_t, Rational> acc;
        add_bracket_with_basis(a, i, a.structure(j, k), acc);
        add_bracket_with_basis(a, j, a.structure(k, i), acc);
        add_bracket_with_basis(a, k, a.structure(i, j), acc);
        for (const auto& [idx, v] : acc)
          if (sgn(v) != 0) return false;
      }
  return true;
}

bool killing_is_invariant(const LieAlgebraInstance& a) {
  const std::size_t d = a.dim();
  const QMatrix& b = a.killing();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j; k < d; ++k) {
        Rational s = 0;
        for (const auto& [m, c] : a.structure(i, j)) s += c * b(m, k);
        for (const auto& [m, c] : a.structure(i, k)) s += c * b(j, m);
        if (sgn(s) != 0) return false;
      }
  return true;
}

}  // namespace ckforms
