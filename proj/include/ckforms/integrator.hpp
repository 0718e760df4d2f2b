#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "ckforms/compact_sampling.hpp"
#include "ckforms/pairs.hpp"

namespace ckforms {

// saturates at UINT64_MAX
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// element of Λ^degree of an n-dimensional space, coefficients on increasing tuples in lexicographic order
struct AlternatingTensor {
  int degree = 0;
  int basis_dim = 0;
  std::vector<double> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  double max_abs_diff(const AlternatingTensor& o) const;
};

// all increasing degree-tuples of {0..n-1}, lexicographic
std::vector<std::vector<int>> increasing_tuples(int n, int degree);

// floating data for pulling the V volume form back along Ad(u), u in K
class FormIntegrand {
 public:
  // throws DegreeTooLarge when C(dim p, dim V) exceeds coefficient_cap
  explicit FormIntegrand(const ReductivePair& rp, std::uint64_t coefficient_cap = 1000000);

  int degree() const noexcept { return degree_; }
  int basis_dim() const noexcept { return n_; }
  std::size_t coefficient_count() const noexcept { return count_; }
  const CompactStructure& compact() const noexcept { return compact_; }
  // orthonormal basis of p (first degree() span V), coordinates in the g basis
  const Eigen::MatrixXd& p_basis() const noexcept { return f_; }
  // realified matrices of the orthonormal p basis, and of the duals used to read V coordinates
  const std::vector<Eigen::MatrixXd>& p_matrices() const noexcept { return fm_; }
  // realified matrices of the l basis
  std::vector<Eigen::MatrixXd> l_matrices() const;

  // projection of Ad(u) restricted to p onto V, a degree x n matrix
  Eigen::MatrixXd projected_action(const Eigen::MatrixXd& u) const;
  AlternatingTensor pullback(const Eigen::MatrixXd& u) const;
  // writes lexicographic coefficients into out (size coefficient_count())
  void pullback_into(const Eigen::MatrixXd& u, std::vector<double>& out, std::vector<double>& scratch) const;

 private:
  const ReductivePair* rp_;
  int degree_ = 0;
  int n_ = 0;
  std::size_t count_ = 0;
  CompactStructure compact_;
  Eigen::MatrixXd f_;
  std::vector<Eigen::MatrixXd> fm_;    // F_j
  std::vector<Eigen::MatrixXd> dual_;  // W_a with <u^T W_a u, F_j> = B(Ad_u f_j, v_a)
  // minor recursion: level r subsets in colex order; for subset s, the r (column, sub-rank, sign) triples
  struct Step {
    std::uint32_t col;
    std::uint32_t sub;
    double sign;
  };
  std::vector<std::vector<Step>> steps_;  // steps_[r] has C(n, r+1) * (r+1) entries
  std::vector<std::uint32_t> colex_to_lex_;
};

enum class McVerdict { VanishConsistent, NonZero, Inconclusive };
const char* mc_verdict_name(McVerdict v);

struct Thresholds {
  double vanish = 3.0;
  double nonzero = 5.0;
};

McVerdict classify_z(double max_abs_z, const Thresholds& t = {});

struct AverageOptions {
  std::size_t n_samples = 20000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t coefficient_cap = 1000000;
  Thresholds thresholds{};
};

struct IntegrationReport {
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  int degree = 0;
  int basis_dim = 0;
  AlternatingTensor estimate;
  std::vector<double> std_errors;
  double max_abs_z = 0.0;  // may be +inf
  std::size_t argmax = 0;
  McVerdict verdict = McVerdict::Inconclusive;
  Thresholds thresholds{};
};

inline constexpr double kNumericalZero = 1e-10;
inline constexpr std::size_t kChunkSize = 512;

// Haar average of the pullback; results depend only on (pair, n_samples, seed)
IntegrationReport average_form(const ReductivePair& rp, const AverageOptions& opts = {});
IntegrationReport average_form(const FormIntegrand& f, const AverageOptions& opts);

// max |mean| / SE with the numerical-zero floor
double max_abs_z(const std::vector<double>& mean, const std::vector<double>& se, std::size_t* argmax = nullptr);
McVerdict vanishing_test(const IntegrationReport& r);

// convenience for a single sample
AlternatingTensor pullback_form(const ReductivePair& rp, const Eigen::MatrixXd& u);

}  // namespace ckforms
