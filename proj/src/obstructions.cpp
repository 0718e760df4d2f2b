#include "ckforms/obstructions.hpp"

#include <algorithm>
#include <sstream>

#include "ckforms/errors.hpp"
#include "ckforms/ranks.hpp"

namespace ckforms {

const char* rank_verdict_name(RankVerdict v) {
  switch (v) {
    case RankVerdict::Obstruction: return "NoCompactForms";
    case RankVerdict::Equality: return "RationalVolumeCandidate";
    case RankVerdict::NoConclusion: return "NoConclusion";
  }
  return "?";
}

RankData rank_data(const PairSpec& ps) {
  validate_spec(ps.g);
  validate_spec(ps.h);
  AlgebraSpec h = ps.h;
  h.copies = 1;
  return {complex_rank(ps.g), compact_rank(ps.g), complex_rank(h), compact_rank(h)};
}

RankVerdict rank_obstruction(const RankData& rd) {
  const int lhs = rd.rk_G - rd.rk_K, rhs = rd.rk_H - rd.rk_L;
  if (lhs < rhs) return RankVerdict::Obstruction;
  if (lhs == rhs) return RankVerdict::Equality;
  return RankVerdict::NoConclusion;
}

SignStructure sign_structure(const AlgebraSpec& g) {
  SignStructure s;
  s.matrix_size = static_cast<std::size_t>(realified_size(g));
  const std::size_t one = s.matrix_size / static_cast<std::size_t>(g.copies);
  const int b = field_block(field_of(g.family));
  const int n = scalar_size(g);
  for (int c = 0; c < g.copies; ++c) {
    const std::size_t base = one * static_cast<std::size_t>(c);
    const std::size_t first_class = s.classes.size();
    auto cls = [&](std::initializer_list<int> idx) {
      std::vector<std::size_t> coords;
      for (int i : idx)
        for (int t = 0; t < b; ++t) coords.push_back(base + static_cast<std::size_t>(i * b + t));
      s.classes.push_back(std::move(coords));
    };
    auto group = [&](std::size_t lo, std::size_t hi) {
      std::vector<std::size_t> g2;
      for (std::size_t i = lo; i < hi; ++i) g2.push_back(first_class + i);
      s.parity_groups.push_back(std::move(g2));
    };
    switch (g.family) {
      case Family::SL_R:
      case Family::SL_C:
      case Family::SU:
      case Family::SO_C:
        for (int i = 0; i < n; ++i) cls({i});
        group(0, static_cast<std::size_t>(n));
        break;
      case Family::SO: {
        for (int i = 0; i < n; ++i) cls({i});
        const auto p = static_cast<std::size_t>(g.params[0]);
        group(0, p);
        group(p, static_cast<std::size_t>(n));
        break;
      }
      case Family::SP_C:
      case Family::SOSTAR: {
        const int h = n / 2;
        for (int i = 0; i < h; ++i) cls({i, h + i});
        break;
      }
      case Family::SP:
      case Family::SL_H:
        for (int i = 0; i < n; ++i) cls({i});
        break;
    }
  }
  return s;
}

bool parity_ok(const SignStructure& s, const std::vector<std::size_t>& flipped) {
  for (const auto& grp : s.parity_groups) {
    std::size_t cnt = 0;
    for (std::size_t c : flipped)
      if (std::find(grp.begin(), grp.end(), c) != grp.end()) ++cnt;
    if (cnt % 2 != 0) return false;
  }
  return true;
}

std::vector<int> diagonal_of(const SignStructure& s, const std::vector<std::size_t>& flipped) {
  std::vector<int> d(s.matrix_size, 1);
  for (std::size_t c : flipped)
    for (std::size_t i : s.classes.at(c)) d[i] = -d[i];
  return d;
}

std::vector<std::vector<std::size_t>> seed_patterns(const ReductivePair& rp, const SignStructure& s) {
  std::vector<std::vector<std::size_t>> out;
  const PairSpec& ps = rp.spec;
  if (ps.embedding != Embedding::UpperLeftBlock || ps.g.copies != 1) return out;
  std::size_t lo = 0;
  if (ps.g.family == Family::SO && ps.h.family == Family::SO && ps.g.params[0] == ps.h.params[0] &&
      ps.g.params[1] > ps.h.params[1]) {
    lo = static_cast<std::size_t>(ps.h.params[0] + ps.h.params[1]) - 1;
  } else if (ps.g.family == Family::SL_R && ps.h.family == Family::SL_R &&
             ps.h.params[0] >= 1 && ps.g.params[0] > ps.h.params[0]) {
    lo = static_cast<std::size_t>(ps.h.params[0]) - 1;
  } else {
    return out;
  }
  // real families: class i is coordinate i
  if (lo + 1 < s.classes.size()) out.push_back({lo, lo + 1});
  return out;
}

namespace {

SparseQMatrix conjugate(const SparseQMatrix& m, const std::vector<int>& d) {
  std::vector<SparseEntry> e;
  e.reserve(m.nnz());
  for (const auto& x : m.entries()) {
    const int s = d[x.row] * d[x.col];
    e.push_back({x.row, x.col, s > 0 ? x.value : Rational(-x.value)});
  }
  return SparseQMatrix(m.size(), std::move(e));
}

// Ad_D on the coordinate vectors of g, for the basis elements in `support`
std::optional<QVector> ad_apply(const LieAlgebraInstance& g, const std::vector<int>& d, const QVector& v,
                                std::vector<std::optional<QVector>>& cache, std::vector<bool>& done) {
  QVector out(g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) {
    if (sgn(v[k]) == 0) continue;
    if (!done[k]) {
      cache[k] = g.coordinates(conjugate(g.basis()[k], d));
      done[k] = true;
    }
    if (!cache[k]) return std::nullopt;
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (sgn((*cache[k])[j]) != 0) out[j] += v[k] * (*cache[k])[j];
  }
  return out;
}

}  // namespace

std::optional<Rational> sign_action_det(const ReductivePair& rp, const std::vector<int>& d) {
  const LieAlgebraInstance& g = *rp.g;
  const QMatrix& vb = rp.V.basis();
  const std::size_t p = vb.rows();
  std::vector<std::optional<QVector>> cache(g.dim());
  std::vector<bool> done(g.dim(), false);
  QMatrix a(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    const auto img = ad_apply(g, d, vb.row(i), cache, done);
    if (!img) return std::nullopt;
    const auto c = rp.V.coordinates_of(*img);
    if (!c) return std::nullopt;
    for (std::size_t j = 0; j < p; ++j) a(i, j) = (*c)[j];
  }
  return determinant(a);
}

SignSearchResult sign_element_search(const ReductivePair& rp, const SignSearchOptions& opts) {
  const SignStructure s = sign_structure(rp.g->spec());
  const std::size_t nc = s.classes.size();
  const std::size_t max_flips = opts.exhaustive ? nc : std::min(opts.max_flips, nc);
  const auto seeds = seed_patterns(rp, s);

  SignSearchResult res;
  res.exhaustive = max_flips == nc;
  std::uint64_t total = seeds.size();
  for (std::size_t k = 1; k <= max_flips; ++k) {
    total += binomial(nc, k);
    if (total > opts.candidate_cap) break;
  }
  res.candidates_total = total;
  if (total > opts.candidate_cap)
    throw Error(ErrorKind::SearchBudgetExceeded,
                "sign search for " + rp.spec.to_string() + " needs more than " +
                    std::to_string(opts.candidate_cap) + " candidates");

  auto test = [&](const std::vector<std::size_t>& flipped, bool seed) -> bool {
    ++res.candidates_examined;
    if (!parity_ok(s, flipped)) return false;
    const std::vector<int> d = diagonal_of(s, flipped);
    const auto det = sign_action_det(rp, d);
    if (!det) return false;
    ++res.candidates_in_K;
    if (*det == -1) {
      res.element = SignElement{d, flipped, *det, seed};
      return true;
    }
    return false;
  };

  for (const auto& sd : seeds)
    if (test(sd, true)) return res;
  for (std::size_t k = 1; k <= max_flips; ++k)
    for (const auto& t : increasing_tuples(static_cast<int>(nc), static_cast<int>(k))) {
      std::vector<std::size_t> flipped(t.begin(), t.end());
      if (test(flipped, false)) return res;
    }
  return res;
}

SignVerification verify_sign_element(const ReductivePair& rp, const std::vector<int>& d) {
  SignVerification out;
  const LieAlgebraInstance& g = *rp.g;
  const std::size_t n = g.matrix_size();
  if (d.size() != n) return out;
  auto vec = [n](const SparseQMatrix& m) {
    QVector v(n * n);
    for (const auto& e : m.entries()) v[e.row * n + e.col] = e.value;
    return v;
  };
  auto rows_of = [&](const QMatrix& coords) {
    QMatrix m(0, n * n);
    for (std::size_t i = 0; i < coords.rows(); ++i)
      m.append_row(vec(linear_combination(g.basis(), coords.row(i), n)));
    return m;
  };

  // diagonal +-1, constant on the field blocks, right component of K, normalizes k and g
  const SignStructure s = sign_structure(g.spec());
  std::vector<std::size_t> flipped;
  bool blocks = true;
  for (std::size_t c = 0; c < s.classes.size(); ++c) {
    const int v0 = d[s.classes[c][0]];
    for (std::size_t i : s.classes[c]) blocks = blocks && d[i] == v0 && (v0 == 1 || v0 == -1);
    if (v0 == -1) flipped.push_back(c);
  }
  const QMatrix kb = rows_of(rp.k_subspace.basis());
  bool normalizes = true;
  for (std::size_t i = 0; i < g.dim() && normalizes; ++i) {
    const SparseQMatrix c = conjugate(g.basis()[i], d);
    if (i < g.dim_k())
      normalizes = solve_in_row_space(kb, vec(c)).has_value();
    else
      normalizes = g.coordinates(c).has_value();
  }
  out.in_K = blocks && parity_ok(s, flipped) && normalizes;

  const QMatrix vm = rows_of(rp.V.basis());
  const std::size_t p = vm.rows();
  QMatrix a(p, p);
  out.preserves_V = true;
  for (std::size_t i = 0; i < p; ++i) {
    const SparseQMatrix m = linear_combination(g.basis(), rp.V.basis().row(i), n);
    const auto x = solve_in_row_space(vm, vec(conjugate(m, d)));
    if (!x) {
      out.preserves_V = false;
      return out;
    }
    for (std::size_t j = 0; j < p; ++j) a(i, j) = (*x)[j];
  }
  out.det = determinant_bareiss(a);
  return out;
}

ComplexificationResult complexification_criterion(const PairSpec& ps) {
  if (ps.embedding != Embedding::RealFormInComplexification)
    throw Error(ErrorKind::NotAComplexificationPair, ps.to_string() + " is not a real form in its complexification");
  ComplexificationResult r;
  r.applicable = true;
  const SymSpaceProduct hd = compact_dual(ps.h);
  r.space = hd.to_string();
  r.even_nontrivial = even_nontrivial(hd);
  return r;
}

bool homotopy_rule_applies(const PairSpec& ps) {
  if (ps.embedding != Embedding::UpperLeftBlock || ps.g.copies != 1) return false;
  const bool fam = (ps.g.family == Family::SL_R && ps.h.family == Family::SO) ||
                   (ps.g.family == Family::SL_H && ps.h.family == Family::SP);
  if (!fam) return false;
  const int p = ps.h.params[0], q = ps.h.params[1];
  return p > 1 && q > 1 && p + q == ps.g.params[0];
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::NoCompactForms: return "NoCompactForms";
    case Classification::RationalVolume: return "RationalVolume";
    case Classification::Unknown: return "Unknown";
  }
  return "?";
}

std::optional<Classification> parse_classification(const std::string& s) {
  for (Classification c : {Classification::NoCompactForms, Classification::RationalVolume, Classification::Unknown})
    if (s == classification_name(c)) return c;
  return std::nullopt;
}

const char* evidence_kind_name(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::Rank: return "rank";
    case EvidenceKind::Sign: return "sign";
    case EvidenceKind::Complexification: return "complexification";
    case EvidenceKind::Homotopy: return "homotopy";
    case EvidenceKind::MonteCarlo: return "montecarlo";
  }
  return "?";
}

const char* evidence_effect_name(EvidenceEffect e) {
  switch (e) {
    case EvidenceEffect::Obstruction: return "obstruction";
    case EvidenceEffect::RankEquality: return "rank_equality";
    case EvidenceEffect::Vanishing: return "vanishing";
    case EvidenceEffect::NonVanishing: return "non_vanishing";
    case EvidenceEffect::Neutral: return "neutral";
  }
  return "?";
}

void Verdict::add_evidence(Evidence e) {
  // numerical evidence is never allowed to obstruct
  if (e.kind == EvidenceKind::MonteCarlo && e.effect == EvidenceEffect::Obstruction) e.effect = EvidenceEffect::Vanishing;
  reasons_.push_back(std::move(e));
  bool obstruction = false, equality = false, vanishing = false;
  for (const auto& r : reasons_) {
    obstruction = obstruction || r.effect == EvidenceEffect::Obstruction;
    equality = equality || r.effect == EvidenceEffect::RankEquality;
    vanishing = vanishing || r.effect == EvidenceEffect::Vanishing;
  }
  if (obstruction)
    classification_ = Classification::NoCompactForms;
  else if (equality && !vanishing)
    classification_ = Classification::RationalVolume;
  else
    classification_ = Classification::Unknown;
}

namespace {

std::string diag_string(const std::vector<int>& d) {
  std::ostringstream os;
  os << "diag(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

}  // namespace

Analysis analyze(const ReductivePair& rp, const ClassifyOptions& opts) {
  Analysis a;
  a.pair = rp.spec;
  a.dims = {rp.g->dim(), rp.h_subspace.dim(), rp.k_subspace.dim(), rp.l_subspace.dim(),
            rp.V.dim(),   rp.p_degree,        rp.q_fiber};

  a.rank = rank_data(rp.spec);
  a.rank_verdict = rank_obstruction(a.rank);
  {
    std::ostringstream os;
    os << "rk G - rk K = " << a.rank.rk_G - a.rank.rk_K << ", rk H - rk L = " << a.rank.rk_H - a.rank.rk_L;
    const EvidenceEffect eff = a.rank_verdict == RankVerdict::Obstruction ? EvidenceEffect::Obstruction
                               : a.rank_verdict == RankVerdict::Equality  ? EvidenceEffect::RankEquality
                                                                          : EvidenceEffect::Neutral;
    a.verdict.add_evidence({EvidenceKind::Rank, eff, os.str()});
  }

  a.sign = sign_element_search(rp, opts.sign);
  if (a.sign.element) {
    a.sign_check = verify_sign_element(rp, a.sign.element->diagonal);
    if (!a.sign_check->ok())
      throw Error(ErrorKind::Internal, "sign element failed re-verification for " + rp.spec.to_string());
    a.verdict.add_evidence({EvidenceKind::Sign, EvidenceEffect::Obstruction,
                            diag_string(a.sign.element->diagonal) + " acts on V with determinant -1"});
  } else {
    a.verdict.add_evidence({EvidenceKind::Sign, EvidenceEffect::Neutral,
                            "no sign element among " + std::to_string(a.sign.candidates_examined) +
                                (a.sign.exhaustive ? " candidates (exhaustive)" : " candidates")});
  }

  if (rp.spec.embedding == Embedding::RealFormInComplexification) {
    a.complexification = complexification_criterion(rp.spec);
    a.verdict.add_evidence(
        {EvidenceKind::Complexification,
         a.complexification.even_nontrivial ? EvidenceEffect::Obstruction : EvidenceEffect::NonVanishing,
         "even cohomology of " + a.complexification.space +
             (a.complexification.even_nontrivial ? " is nontrivial" : " is trivial")});
  }

  a.homotopy = homotopy_rule_applies(rp.spec);
  if (a.homotopy)
    a.verdict.add_evidence({EvidenceKind::Homotopy, EvidenceEffect::Obstruction,
                            "V volume class is homotopically trivial in the compact dual"});

  try {
    a.bidegree = bidegree_of_omega(rp.spec);
  } catch (const Error&) {
    a.bidegree = {};
  }

  if (opts.run_mc) {
    try {
      a.mc = average_form(rp, opts.mc);
      std::ostringstream os;
      os << "max |z| = " << a.mc->max_abs_z << " over " << a.mc->estimate.size() << " coefficients, n = "
         << a.mc->n_samples;
      const EvidenceEffect eff = a.mc->verdict == McVerdict::VanishConsistent ? EvidenceEffect::Vanishing
                                 : a.mc->verdict == McVerdict::NonZero        ? EvidenceEffect::NonVanishing
                                                                              : EvidenceEffect::Neutral;
      a.verdict.add_evidence({EvidenceKind::MonteCarlo, eff, os.str()});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegreeTooLarge) throw;
      a.mc_skipped = e.what();
    }
  }
  return a;
}

Analysis analyze(const PairSpec& ps, const ClassifyOptions& opts) {
  EmbedOptions eo;
  eo.dimension_cap = opts.dimension_cap;
  const ReductivePair rp = embed_pair(ps, eo);
  return analyze(rp, opts);
}

Verdict classify(const PairSpec& ps, const ClassifyOptions& opts) { return analyze(ps, opts).verdict; }

}  // namespace ckforms
