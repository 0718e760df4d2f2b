#include "ckforms/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "ckforms/errors.hpp"

namespace ckforms {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

double AlternatingTensor::max_abs_diff(const AlternatingTensor& o) const {
  if (o.coeffs.size() != coeffs.size()) return std::numeric_limits<double>::infinity();
  double m = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) m = std::max(m, std::abs(coeffs[i] - o.coeffs[i]));
  return m;
}

std::vector<std::vector<int>> increasing_tuples(int n, int degree) {
  std::vector<std::vector<int>> out;
  if (degree > n || degree < 0) return out;
  std::vector<int> t(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) t[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(t);
    int i = degree - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - degree + i) --i;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < degree; ++j) t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

Eigen::MatrixXd dense(const SparseQMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : m.entries()) out(e.row, e.col) = e.value.get_d();
  return out;
}

Eigen::MatrixXd to_double(const QMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

std::uint64_t colex_rank(const std::vector<int>& s) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += binomial(static_cast<std::uint64_t>(s[i]), i + 1);
  return r;
}

}  // namespace

FormIntegrand::FormIntegrand(const ReductivePair& rp, std::uint64_t cap) : rp_(&rp) {
  const LieAlgebraInstance& g = *rp.g;
  const std::size_t d = g.dim(), dk = g.dim_k();
  n_ = static_cast<int>(g.dim_p());
  degree_ = static_cast<int>(rp.V.dim());
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(degree_));
  if (count > cap)
    throw Error(ErrorKind::DegreeTooLarge, "C(" + std::to_string(n_) + "," + std::to_string(degree_) + ") = " +
                                               std::to_string(count) + " coefficients exceeds the cap of " +
                                               std::to_string(cap));
  std::uint64_t work = 0;
  for (int r = 1; r <= degree_; ++r) work += binomial(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(r)) * static_cast<std::uint64_t>(r);
  if (work > 200000000ULL)
    throw Error(ErrorKind::DegreeTooLarge, "minor recursion table too large for " + rp.spec.to_string());
  count_ = static_cast<std::size_t>(count);
  compact_ = compact_structure(g.spec());

  // ordered p basis: V rows, then p ∩ V-perp; Gram-Schmidt for B
  QMatrix rows = rp.V.basis();
  const QMatrix w = nullspace(vstack(rp.k_subspace.basis(), rp.V.basis()) * g.killing());
  for (std::size_t i = 0; i < w.rows(); ++i) rows.append_row(w.row(i));
  if (rows.rows() != static_cast<std::size_t>(n_))
    throw Error(ErrorKind::Internal, "p basis has the wrong size for " + rp.spec.to_string());
  const Eigen::MatrixXd B = to_double(g.killing());
  f_ = to_double(rows);
  for (Eigen::Index i = 0; i < f_.rows(); ++i) {
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < i; ++j) {
        const double c = f_.row(j) * B * f_.row(i).transpose();
        f_.row(i) -= c * f_.row(j);
      }
    const double nrm = f_.row(i) * B * f_.row(i).transpose();
    if (!(nrm > 0)) throw Error(ErrorKind::DegenerateForm, "Killing form not positive on p");
    f_.row(i) /= std::sqrt(nrm);
  }

  std::vector<Eigen::MatrixXd> X;
  X.reserve(d);
  for (const auto& m : g.basis()) X.push_back(dense(m));
  const auto N = static_cast<Eigen::Index>(g.matrix_size());
  Eigen::MatrixXd fro(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      fro(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          fro(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = (X[i].array() * X[j].array()).sum();
  const Eigen::LDLT<Eigen::MatrixXd> fro_ldlt(fro);
  auto combine = [&](const Eigen::VectorXd& c) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    for (std::size_t k = 0; k < d; ++k)
      if (c(static_cast<Eigen::Index>(k)) != 0.0) m += c(static_cast<Eigen::Index>(k)) * X[k];
    return m;
  };
  for (Eigen::Index j = 0; j < f_.rows(); ++j) fm_.push_back(combine(f_.row(j).transpose()));
  for (int a = 0; a < degree_; ++a) {
    const Eigen::VectorXd bw = B * f_.row(a).transpose();
    dual_.push_back(combine(fro_ldlt.solve(bw)));
  }
  (void)dk;

  // minor recursion tables
  steps_.resize(static_cast<std::size_t>(degree_));
  for (int r = 0; r < degree_; ++r) {
    const int m = r + 1;
    const std::uint64_t cnt = binomial(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(m));
    auto& st = steps_[static_cast<std::size_t>(r)];
    st.assign(static_cast<std::size_t>(cnt) * static_cast<std::size_t>(m), Step{0, 0, 0.0});
    std::vector<int> sub(static_cast<std::size_t>(r));
    std::uint64_t lex = 0;
    for (const auto& s : increasing_tuples(n_, m)) {
      const std::uint64_t c = colex_rank(s);
      if (m == degree_) {
        if (colex_to_lex_.empty()) colex_to_lex_.resize(count_);
        colex_to_lex_[c] = static_cast<std::uint32_t>(lex);
      }
      ++lex;
      for (int t = 0; t < m; ++t) {
        std::size_t o = 0;
        for (int i = 0; i < m; ++i)
          if (i != t) sub[o++] = s[static_cast<std::size_t>(i)];
        st[static_cast<std::size_t>(c) * static_cast<std::size_t>(m) + static_cast<std::size_t>(t)] =
            Step{static_cast<std::uint32_t>(s[static_cast<std::size_t>(t)]),
                 static_cast<std::uint32_t>(colex_rank(sub)), ((r + t) % 2 == 0) ? 1.0 : -1.0};
      }
    }
  }
  if (degree_ == 0) colex_to_lex_ = {0};
}

std::vector<Eigen::MatrixXd> FormIntegrand::l_matrices() const {
  std::vector<Eigen::MatrixXd> out;
  const QMatrix& l = rp_->l_subspace.basis();
  for (std::size_t i = 0; i < l.rows(); ++i) out.push_back(dense(rp_->g->to_matrix(l.row(i))));
  return out;
}

Eigen::MatrixXd FormIntegrand::projected_action(const Eigen::MatrixXd& u) const {
  Eigen::MatrixXd m(degree_, n_);
  for (int a = 0; a < degree_; ++a) {
    const Eigen::MatrixXd z = u.transpose() * dual_[static_cast<std::size_t>(a)] * u;
    for (int j = 0; j < n_; ++j) m(a, j) = (z.array() * fm_[static_cast<std::size_t>(j)].array()).sum();
  }
  return m;
}

void FormIntegrand::pullback_into(const Eigen::MatrixXd& u, std::vector<double>& out,
                                  std::vector<double>& scratch) const {
  out.resize(count_);
  if (degree_ == 0) {
    out[0] = 1.0;
    return;
  }
  const Eigen::MatrixXd M = projected_action(u);
  std::size_t widest = 0;
  for (int r = 0; r < degree_; ++r)
    widest = std::max(widest, steps_[static_cast<std::size_t>(r)].size() / static_cast<std::size_t>(r + 1));
  scratch.resize(2 * widest);
  double* prev = scratch.data();
  double* cur = scratch.data() + widest;
  for (int j = 0; j < n_; ++j) prev[j] = M(0, j);
  for (int r = 1; r < degree_; ++r) {
    const auto& st = steps_[static_cast<std::size_t>(r)];
    const std::size_t m = static_cast<std::size_t>(r + 1);
    const std::size_t cnt = st.size() / m;
    for (std::size_t c = 0; c < cnt; ++c) {
      double acc = 0;
      const Step* s = &st[c * m];
      for (std::size_t t = 0; t < m; ++t) acc += s[t].sign * M(r, s[t].col) * prev[s[t].sub];
      cur[c] = acc;
    }
    std::swap(prev, cur);
  }
  for (std::size_t c = 0; c < count_; ++c) out[colex_to_lex_[c]] = prev[c];
}

AlternatingTensor FormIntegrand::pullback(const Eigen::MatrixXd& u) const {
  AlternatingTensor t;
  t.degree = degree_;
  t.basis_dim = n_;
  std::vector<double> scratch;
  pullback_into(u, t.coeffs, scratch);
  return t;
}

AlternatingTensor pullback_form(const ReductivePair& rp, const Eigen::MatrixXd& u) {
  return FormIntegrand(rp).pullback(u);
}

const char* mc_verdict_name(McVerdict v) {
  switch (v) {
    case McVerdict::VanishConsistent: return "VanishConsistent";
    case McVerdict::NonZero: return "NonZero";
    case McVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

McVerdict classify_z(double z, const Thresholds& t) {
  if (z <= t.vanish) return McVerdict::VanishConsistent;
  if (z >= t.nonzero) return McVerdict::NonZero;
  return McVerdict::Inconclusive;
}

double max_abs_z(const std::vector<double>& mean, const std::vector<double>& se, std::size_t* argmax) {
  double best = 0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < mean.size(); ++i) {
    const double a = std::abs(mean[i]);
    double z;
    if (se[i] < kNumericalZero)
      z = a < kNumericalZero ? 0.0 : std::numeric_limits<double>::infinity();
    else
      z = a / se[i];
    if (z > best) {
      best = z;
      arg = i;
    }
  }
  if (argmax) *argmax = arg;
  return best;
}

McVerdict vanishing_test(const IntegrationReport& r) { return classify_z(r.max_abs_z, r.thresholds); }

namespace {

struct Moments {
  std::size_t n = 0;
  std::vector<double> mean, m2;
};

Moments merge(Moments a, const Moments& b) {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  const double na = static_cast<double>(a.n), nb = static_cast<double>(b.n), n = na + nb;
  for (std::size_t i = 0; i < a.mean.size(); ++i) {
    const double delta = b.mean[i] - a.mean[i];
    a.mean[i] += delta * nb / n;
    a.m2[i] += b.m2[i] + delta * delta * na * nb / n;
  }
  a.n += b.n;
  return a;
}

Moments run_chunk(const FormIntegrand& f, std::uint64_t seed, std::size_t chunk, std::size_t samples) {
  Rng rng(splitmix64(splitmix64(seed) + chunk));
  Moments m;
  m.mean.assign(f.coefficient_count(), 0.0);
  m.m2.assign(f.coefficient_count(), 0.0);
  std::vector<double> x, scratch;
  for (std::size_t s = 0; s < samples; ++s) {
    const Eigen::MatrixXd u = sample_compact(f.compact(), rng);
    f.pullback_into(u, x, scratch);
    ++m.n;
    const double k = static_cast<double>(m.n);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - m.mean[i];
      m.mean[i] += d / k;
      m.m2[i] += d * (x[i] - m.mean[i]);
    }
  }
  return m;
}

}  // namespace

IntegrationReport average_form(const FormIntegrand& f, const AverageOptions& opts) {
  if (opts.n_samples < 100) throw Error(ErrorKind::ConfigError, "need at least 100 samples");
  const std::size_t chunks = (opts.n_samples + kChunkSize - 1) / kChunkSize;
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(chunks, 1)));

  // binary-counter merge in chunk order; independent of the thread count
  std::vector<std::pair<int, Moments>> stack;
  auto push = [&](Moments m) {
    stack.emplace_back(0, std::move(m));
    while (stack.size() >= 2 && stack[stack.size() - 1].first == stack[stack.size() - 2].first) {
      auto top = std::move(stack.back());
      stack.pop_back();
      stack.back().second = merge(std::move(stack.back().second), top.second);
      ++stack.back().first;
    }
  };
  for (std::size_t base = 0; base < chunks; base += threads) {
    const std::size_t batch = std::min<std::size_t>(threads, chunks - base);
    std::vector<Moments> results(batch);
    auto work = [&](std::size_t i) {
      const std::size_t c = base + i;
      const std::size_t samples = std::min(kChunkSize, opts.n_samples - c * kChunkSize);
      results[i] = run_chunk(f, opts.seed, c, samples);
    };
    if (batch == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = 0; i < batch; ++i) pool.emplace_back(work, i);
      for (auto& t : pool) t.join();
    }
    for (auto& r : results) push(std::move(r));
  }
  Moments total;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) total = merge(std::move(it->second), total);

  IntegrationReport rep;
  rep.n_samples = opts.n_samples;
  rep.seed = opts.seed;
  rep.degree = f.degree();
  rep.basis_dim = f.basis_dim();
  rep.thresholds = opts.thresholds;
  rep.estimate.degree = f.degree();
  rep.estimate.basis_dim = f.basis_dim();
  rep.estimate.coeffs = total.n ? total.mean : std::vector<double>(f.coefficient_count(), 0.0);
  rep.std_errors.assign(f.coefficient_count(), 0.0);
  if (total.n > 1)
    for (std::size_t i = 0; i < total.m2.size(); ++i) {
      const double n = static_cast<double>(total.n);
      rep.std_errors[i] = std::sqrt(std::max(0.0, total.m2[i]) / (n - 1) / n);
    }
  rep.max_abs_z = max_abs_z(rep.estimate.coeffs, rep.std_errors, &rep.argmax);
  rep.verdict = classify_z(rep.max_abs_z, rep.thresholds);
  return rep;
}

IntegrationReport average_form(const ReductivePair& rp, const AverageOptions& opts) {
  const FormIntegrand f(rp, opts.coefficient_cap);
  return average_form(f, opts);
}

}  // namespace ckforms
