#include "ckforms/cohomology.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>

#include "ckforms/errors.hpp"
#include "ckforms/pairs.hpp"

namespace ckforms {

namespace {

std::string params_string(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// fundamental degrees; the Euler degree of SO(2k) is reported separately
struct Degrees {
  std::vector<int> regular;
  std::optional<int> euler;
  std::vector<int> all() const {
    std::vector<int> v = regular;
    if (euler) v.push_back(*euler);
    return v;
  }
};

Degrees so_degrees(int m) {
  Degrees d;
  if (m <= 1) return d;
  if (m % 2 == 1) {
    for (int i = 1; 2 * i <= m - 1; ++i) d.regular.push_back(2 * i);
  } else {
    const int k = m / 2;
    for (int i = 1; i < k; ++i) d.regular.push_back(2 * i);
    d.euler = k;
  }
  return d;
}

std::vector<int> range_degrees(int from, int to, int step = 1) {
  std::vector<int> v;
  for (int i = from; i <= to; i += step) v.push_back(i);
  return v;
}

std::vector<int> u_degrees(int n) { return range_degrees(1, n); }
std::vector<int> su_degrees(int n) { return range_degrees(2, n); }
std::vector<int> sp_degrees(int n) { return range_degrees(2, 2 * n, 2); }

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Cartan's description: even part Q[k-invariants] / (used G-invariants), odd generators from the rest
struct CartanModel {
  std::vector<int> used;
  std::vector<int> unused;
  std::vector<int> k;
  int rank_G = 0;
  int rank_K = 0;
};

CartanModel model_for(const SymSpaceId& s) {
  CartanModel m;
  const auto& p = s.params;
  switch (s.family) {
    case SpaceFamily::Sphere:
    case SpaceFamily::GrassR: {
      const int a = s.family == SpaceFamily::Sphere ? 1 : p[0];
      const int b = s.family == SpaceFamily::Sphere ? p[0] : p[1];
      const Degrees g = so_degrees(a + b), ka = so_degrees(a), kb = so_degrees(b);
      m.k = join(ka.all(), kb.all());
      if (a % 2 == 1 && b % 2 == 1) {
        m.used = g.regular;
        if (g.euler) m.unused.push_back(*g.euler);
      } else {
        m.used = g.all();
      }
      m.rank_G = static_cast<int>(g.all().size());
      break;
    }
    case SpaceFamily::CPn:
    case SpaceFamily::GrassC: {
      const int a = s.family == SpaceFamily::CPn ? 1 : p[0];
      const int b = s.family == SpaceFamily::CPn ? p[0] : p[1];
      m.used = u_degrees(a + b);
      m.k = join(u_degrees(a), u_degrees(b));
      m.rank_G = a + b;
      break;
    }
    case SpaceFamily::GrassH:
      m.used = sp_degrees(p[0] + p[1]);
      m.k = join(sp_degrees(p[0]), sp_degrees(p[1]));
      m.rank_G = p[0] + p[1];
      break;
    case SpaceFamily::SU_over_SO:
    case SpaceFamily::SU2n_over_Sp: {
      const int n = s.family == SpaceFamily::SU_over_SO ? p[0] : 2 * p[0];
      for (int d : su_degrees(n)) (d % 2 == 0 ? m.used : m.unused).push_back(d);
      m.k = s.family == SpaceFamily::SU_over_SO ? so_degrees(n).all() : sp_degrees(p[0]);
      m.rank_G = n - 1;
      break;
    }
    case SpaceFamily::SO2n_over_U:
      m.used = so_degrees(2 * p[0]).all();
      m.k = u_degrees(p[0]);
      m.rank_G = p[0];
      break;
    case SpaceFamily::Sp_over_U:
      m.used = sp_degrees(p[0]);
      m.k = u_degrees(p[0]);
      m.rank_G = p[0];
      break;
    case SpaceFamily::GroupSU:
    case SpaceFamily::GroupSO:
    case SpaceFamily::GroupSp: {
      // (G x G)/diag: one copy of the invariants cancels the isotropy, the other is primitive
      std::vector<int> d = s.family == SpaceFamily::GroupSU   ? su_degrees(p[0])
                           : s.family == SpaceFamily::GroupSO ? so_degrees(p[0]).all()
                                                              : sp_degrees(p[0]);
      m.used = d;
      m.k = d;
      m.unused = d;
      m.rank_G = 2 * static_cast<int>(d.size());
      break;
    }
  }
  m.rank_K = static_cast<int>(m.k.size());
  return m;
}

Poly one_minus_t(int a) {
  Poly p(static_cast<std::size_t>(a) + 1, 0);
  p[0] = 1;
  p[static_cast<std::size_t>(a)] = -1;
  return p;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly divide_exact_one_minus(const Poly& num, int a) {
  const std::size_t deg = num.size() - 1, sa = static_cast<std::size_t>(a);
  if (deg < sa) throw Error(ErrorKind::Internal, "inexact Poincare division");
  Poly q(deg - sa + 1, 0);
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = num[k] + (k >= sa ? q[k - sa] : 0);
  Poly check = poly_mul(q, one_minus_t(a));
  check.resize(std::max(check.size(), num.size()), 0);
  Poly n2 = num;
  n2.resize(check.size(), 0);
  if (check != n2) throw Error(ErrorKind::Internal, "inexact Poincare division");
  return q;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

std::int64_t poly_eval_one(const Poly& a) { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

std::int64_t poly_eval_minus_one(const Poly& a) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i % 2 ? -a[i] : a[i]);
  return s;
}

std::string poly_to_string(const Poly& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += a[i] > 0 ? " + " : " - ";
    else if (a[i] < 0) s += "-";
    const std::int64_t c = a[i] < 0 ? -a[i] : a[i];
    if (i == 0) s += std::to_string(c);
    else {
      if (c != 1) s += std::to_string(c);
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string SymSpaceId::to_string() const {
  switch (family) {
    case SpaceFamily::Sphere: return "S" + params_string(params);
    case SpaceFamily::CPn: return "CP" + params_string(params);
    case SpaceFamily::GrassC: return "GR_C" + params_string(params);
    case SpaceFamily::GrassH: return "GR_H" + params_string(params);
    case SpaceFamily::GrassR: return "GR_R" + params_string(params);
    case SpaceFamily::SU_over_SO:
      return "SU(" + std::to_string(params[0]) + ")/SO(" + std::to_string(params[0]) + ")";
    case SpaceFamily::SU2n_over_Sp:
      return "SU(" + std::to_string(2 * params[0]) + ")/SP(" + std::to_string(params[0]) + ")";
    case SpaceFamily::SO2n_over_U:
      return "SO(" + std::to_string(2 * params[0]) + ")/U(" + std::to_string(params[0]) + ")";
    case SpaceFamily::Sp_over_U:
      return "SP(" + std::to_string(params[0]) + ")/U(" + std::to_string(params[0]) + ")";
    case SpaceFamily::GroupSU: return "SU" + params_string(params);
    case SpaceFamily::GroupSO: return "SO" + params_string(params);
    case SpaceFamily::GroupSp: return "SP" + params_string(params);
  }
  return "?";
}

int SymSpaceId::dimension() const {
  const auto& p = params;
  switch (family) {
    case SpaceFamily::Sphere: return p[0];
    case SpaceFamily::CPn: return 2 * p[0];
    case SpaceFamily::GrassC: return 2 * p[0] * p[1];
    case SpaceFamily::GrassH: return 4 * p[0] * p[1];
    case SpaceFamily::GrassR: return p[0] * p[1];
    case SpaceFamily::SU_over_SO: return (p[0] - 1) * (p[0] + 2) / 2;
    case SpaceFamily::SU2n_over_Sp: return (p[0] - 1) * (2 * p[0] + 1);
    case SpaceFamily::SO2n_over_U: return p[0] * (p[0] - 1);
    case SpaceFamily::Sp_over_U: return p[0] * (p[0] + 1);
    case SpaceFamily::GroupSU: return p[0] * p[0] - 1;
    case SpaceFamily::GroupSO: return p[0] * (p[0] - 1) / 2;
    case SpaceFamily::GroupSp: return p[0] * (2 * p[0] + 1);
  }
  return 0;
}

std::string SymSpaceProduct::to_string() const {
  if (factors.empty()) return "point";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].to_string();
  return s;
}

int SymSpaceProduct::dimension() const {
  int d = 0;
  for (const auto& f : factors) d += f.dimension();
  return d;
}

SymSpaceId make_space(SpaceFamily f, std::vector<int> params) {
  const bool two = f == SpaceFamily::GrassC || f == SpaceFamily::GrassH || f == SpaceFamily::GrassR;
  if (params.size() != (two ? 2u : 1u)) throw Error(ErrorKind::UnsupportedSpace, "wrong parameter count");
  for (int p : params)
    if (p < 0) throw Error(ErrorKind::UnsupportedSpace, "negative parameter");
  bool ok = true;
  switch (f) {
    case SpaceFamily::Sphere:
    case SpaceFamily::CPn:
    case SpaceFamily::SU2n_over_Sp:
    case SpaceFamily::SO2n_over_U:
    case SpaceFamily::Sp_over_U:
    case SpaceFamily::GroupSU:
    case SpaceFamily::GroupSO:
    case SpaceFamily::GroupSp: ok = params[0] >= 1; break;
    case SpaceFamily::SU_over_SO: ok = params[0] >= 2; break;
    default: ok = params[0] + params[1] >= 1; break;
  }
  SymSpaceId s{f, std::move(params)};
  if (!ok) throw Error(ErrorKind::UnsupportedSpace, "parameters out of range for " + s.to_string());
  return s;
}

SymSpaceProduct parse_space(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t.empty()) throw ParseError("empty space", 0, "a symmetric space");
  if (t == "POINT") return {};
  SymSpaceProduct out;
  std::size_t start = 0;
  while (start <= t.size()) {
    // factors are separated by 'X' outside parentheses
    int depth = 0;
    std::size_t end = start;
    while (end < t.size() && !(depth == 0 && t[end] == 'X')) {
      if (t[end] == '(') ++depth;
      if (t[end] == ')') --depth;
      ++end;
    }
    const std::string f = t.substr(start, end - start);
    static const std::regex one(R"(^(S|CP|SU|SO|SP)(?:\((\d+)\)|\^(\d+))$)");
    static const std::regex two(R"(^GR_(C|H|R)\((\d+),(\d+)\)$)");
    static const std::regex quot(R"(^(SU|SO|SP)\((\d+)\)/(SO|SP|U)\((\d+)\)$)");
    std::smatch m;
    auto num = [](const std::string& s) { return std::stoi(s); };
    if (std::regex_match(f, m, one)) {
      const std::string name = m[1];
      const int v = num(m[2].matched ? m[2].str() : m[3].str());
      if (m[3].matched && name != "S" && name != "CP")
        throw ParseError("'^' only allowed for S and CP", start, "S^d or CP^d");
      const SpaceFamily fam = name == "S"    ? SpaceFamily::Sphere
                              : name == "CP" ? SpaceFamily::CPn
                              : name == "SU" ? SpaceFamily::GroupSU
                              : name == "SO" ? SpaceFamily::GroupSO
                                             : SpaceFamily::GroupSp;
      out.factors.push_back(make_space(fam, {v}));
    } else if (std::regex_match(f, m, two)) {
      const std::string k = m[1];
      const SpaceFamily fam = k == "C" ? SpaceFamily::GrassC : k == "H" ? SpaceFamily::GrassH : SpaceFamily::GrassR;
      out.factors.push_back(make_space(fam, {num(m[2]), num(m[3])}));
    } else if (std::regex_match(f, m, quot)) {
      const std::string g = m[1], h = m[3];
      const int a = num(m[2]), b = num(m[4]);
      if (g == "SU" && h == "SO" && a == b) out.factors.push_back(make_space(SpaceFamily::SU_over_SO, {a}));
      else if (g == "SU" && h == "SP" && a == 2 * b) out.factors.push_back(make_space(SpaceFamily::SU2n_over_Sp, {b}));
      else if (g == "SO" && h == "U" && a == 2 * b) out.factors.push_back(make_space(SpaceFamily::SO2n_over_U, {b}));
      else if (g == "SP" && h == "U" && a == b) out.factors.push_back(make_space(SpaceFamily::Sp_over_U, {a}));
      else throw ParseError("unsupported quotient '" + f + "'", start,
                            "SU(n)/SO(n), SU(2n)/SP(n), SO(2n)/U(n) or SP(n)/U(n)");
    } else {
      throw ParseError("unrecognized space '" + f + "'", start,
                       "S(d), CP(d), GR_C(p,q), GR_H(p,q), GR_R(p,q), a quotient, or SU(n)/SO(n)/SP(n)");
    }
    if (end >= t.size()) break;
    start = end + 1;
  }
  return out;
}

PoincareBigrade poincare_bigrade(const SymSpaceId& s) {
  const CartanModel m = model_for(s);
  Poly num{1};
  for (int d : m.used) num = poly_mul(num, one_minus_t(2 * d));
  for (int d : m.k) num = divide_exact_one_minus(num, 2 * d);
  trim(num);
  PoincareBigrade pb;
  pb.even_series = num;
  for (int d : m.unused) pb.primitive_degrees.push_back(2 * d - 1);
  std::sort(pb.primitive_degrees.begin(), pb.primitive_degrees.end());
  pb.dim_even_top = static_cast<int>(num.size()) - 1;
  pb.dim_odd_top = std::accumulate(pb.primitive_degrees.begin(), pb.primitive_degrees.end(), 0);
  Poly total = num;
  for (int d : pb.primitive_degrees) {
    Poly f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = 1;
    f[static_cast<std::size_t>(d)] = 1;
    total = poly_mul(total, f);
  }
  pb.poincare_series = total;
  pb.euler_characteristic = poly_eval_minus_one(total);
  pb.rank_G = m.rank_G;
  pb.rank_K = m.rank_K;
  if (pb.dim_even_top + pb.dim_odd_top != s.dimension())
    throw Error(ErrorKind::Internal, "Poincare data of " + s.to_string() + " contradicts its dimension");
  return pb;
}

PoincareBigrade poincare_bigrade(const SymSpaceProduct& s) {
  PoincareBigrade pb;
  pb.even_series = {1};
  pb.poincare_series = {1};
  for (const auto& f : s.factors) {
    const PoincareBigrade x = poincare_bigrade(f);
    pb.even_series = poly_mul(pb.even_series, x.even_series);
    pb.poincare_series = poly_mul(pb.poincare_series, x.poincare_series);
    pb.primitive_degrees.insert(pb.primitive_degrees.end(), x.primitive_degrees.begin(), x.primitive_degrees.end());
    pb.dim_even_top += x.dim_even_top;
    pb.dim_odd_top += x.dim_odd_top;
    pb.rank_G += x.rank_G;
    pb.rank_K += x.rank_K;
  }
  std::sort(pb.primitive_degrees.begin(), pb.primitive_degrees.end());
  pb.euler_characteristic = poly_eval_minus_one(pb.poincare_series);
  return pb;
}

bool even_nontrivial(const SymSpaceId& s) {
  const Poly e = poincare_bigrade(s).even_series;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] != 0) return true;
  return false;
}

bool even_nontrivial(const SymSpaceProduct& s) {
  for (const auto& f : s.factors)
    if (even_nontrivial(f)) return true;
  return false;
}

SymSpaceProduct compact_dual(const AlgebraSpec& spec) {
  const auto& p = spec.params;
  SymSpaceId one;
  switch (spec.family) {
    case Family::SL_R: one = make_space(SpaceFamily::SU_over_SO, {p[0]}); break;
    case Family::SL_C: one = make_space(SpaceFamily::GroupSU, {p[0]}); break;
    case Family::SL_H: one = make_space(SpaceFamily::SU2n_over_Sp, {p[0]}); break;
    case Family::SO: one = make_space(SpaceFamily::GrassR, {p[0], p[1]}); break;
    case Family::SO_C: one = make_space(SpaceFamily::GroupSO, {p[0]}); break;
    case Family::SU: one = make_space(SpaceFamily::GrassC, {p[0], p[1]}); break;
    case Family::SP: one = make_space(SpaceFamily::GrassH, {p[0], p[1]}); break;
    case Family::SP_C: one = make_space(SpaceFamily::GroupSp, {p[0]}); break;
    case Family::SOSTAR: one = make_space(SpaceFamily::SO2n_over_U, {p[0] / 2}); break;
  }
  SymSpaceProduct out;
  for (int c = 0; c < spec.copies; ++c) out.factors.push_back(one);
  return out;
}

std::vector<SymSpaceId> supported_spaces(int max_param) {
  std::vector<SymSpaceId> v;
  for (int a = 1; a <= max_param; ++a) {
    for (auto f : {SpaceFamily::Sphere, SpaceFamily::CPn, SpaceFamily::SU2n_over_Sp, SpaceFamily::SO2n_over_U,
                   SpaceFamily::Sp_over_U, SpaceFamily::GroupSU, SpaceFamily::GroupSO, SpaceFamily::GroupSp})
      v.push_back(make_space(f, {a}));
    if (a >= 2) v.push_back(make_space(SpaceFamily::SU_over_SO, {a}));
    for (int b = 0; b <= max_param; ++b)
      for (auto f : {SpaceFamily::GrassC, SpaceFamily::GrassH, SpaceFamily::GrassR})
        v.push_back(make_space(f, {a, b}));
  }
  return v;
}

Bidegree bidegree_of_omega(const PairSpec& ps) {
  AlgebraSpec h = ps.h;
  h.copies = 1;
  const SymSpaceProduct gd = compact_dual(ps.g), hd = compact_dual(h);
  const PoincareBigrade G = poincare_bigrade(gd), H = poincare_bigrade(hd);
  Bidegree b;
  b.a = G.dim_even_top - H.dim_even_top;
  b.b = G.dim_odd_top - H.dim_odd_top;
  b.vanish_signal = b.a < 0 || b.b < 0;
  b.chern_weil = !b.vanish_signal && b.b == 0;
  b.g_dual = gd.to_string();
  b.h_dual = hd.to_string();
  return b;
}

}  // namespace ckforms
