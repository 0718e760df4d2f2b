#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckforms/cohomology.hpp"
#include "ckforms/integrator.hpp"
#include "ckforms/pairs.hpp"

namespace ckforms {

struct RankData {
  int rk_G = 0;
  int rk_K = 0;
  int rk_H = 0;
  int rk_L = 0;
  friend bool operator==(const RankData&, const RankData&) = default;
};

enum class RankVerdict { Obstruction, Equality, NoConclusion };
const char* rank_verdict_name(RankVerdict v);

RankData rank_data(const PairSpec& ps);
RankVerdict rank_obstruction(const RankData& rd);

// admissible diagonal sign patterns: realified coordinates tied into classes that flip together,
// with an even number of flips required inside each parity group
struct SignStructure {
  std::size_t matrix_size = 0;
  std::vector<std::vector<std::size_t>> classes;        // realified coordinates per class
  std::vector<std::vector<std::size_t>> parity_groups;  // class indices
};

SignStructure sign_structure(const AlgebraSpec& g);
bool parity_ok(const SignStructure& s, const std::vector<std::size_t>& flipped_classes);
std::vector<int> diagonal_of(const SignStructure& s, const std::vector<std::size_t>& flipped_classes);

struct SignElement {
  std::vector<int> diagonal;                 // realified coordinates
  std::vector<std::size_t> flipped_classes;  // into SignStructure::classes
  Rational det_on_V;
  bool from_seed = false;
};

struct SignSearchOptions {
  std::size_t max_flips = 4;
  bool exhaustive = false;  // overrides max_flips with the class count
  std::uint64_t candidate_cap = 1ULL << 20;
};

struct SignSearchResult {
  std::optional<SignElement> element;
  std::uint64_t candidates_total = 0;
  std::uint64_t candidates_examined = 0;
  std::uint64_t candidates_in_K = 0;  // parity passed and normalizes g and V
  bool exhaustive = false;            // search space holds every pattern; all examined when none is found
};

// the explicit patterns for SO(p,q+r)/SO(p,q) and SL_R(n)/SL_R(m), as flipped class sets
std::vector<std::vector<std::size_t>> seed_patterns(const ReductivePair& rp, const SignStructure& s);

// exact det of Ad_D on V, nullopt if D does not normalize g or does not preserve V
std::optional<Rational> sign_action_det(const ReductivePair& rp, const std::vector<int>& diagonal);

// throws SearchBudgetExceeded
SignSearchResult sign_element_search(const ReductivePair& rp, const SignSearchOptions& opts = {});

// independent check through matrices: D in K, Ad_D(V) in V, det
struct SignVerification {
  bool in_K = false;
  bool preserves_V = false;
  Rational det;
  bool ok() const { return in_K && preserves_V && det == -1; }
};
SignVerification verify_sign_element(const ReductivePair& rp, const std::vector<int>& diagonal);

struct ComplexificationResult {
  bool applicable = false;
  bool even_nontrivial = false;
  std::string space;  // H_U/L
};

// throws NotAComplexificationPair
ComplexificationResult complexification_criterion(const PairSpec& ps);
// SL_R(p+q)/SO(p,q) and SL_H(p+q)/SP(p,q) with p, q > 1
bool homotopy_rule_applies(const PairSpec& ps);

enum class Classification { NoCompactForms, RationalVolume, Unknown };
const char* classification_name(Classification c);
std::optional<Classification> parse_classification(const std::string& s);

enum class EvidenceKind { Rank, Sign, Complexification, Homotopy, MonteCarlo };
const char* evidence_kind_name(EvidenceKind k);

enum class EvidenceEffect {
  Obstruction,   // exact: no compact forms
  RankEquality,  // ranks satisfy the rational volume hypothesis
  Vanishing,     // numerical: consistent with the form vanishing
  NonVanishing,  // numerical or cohomological: the form looks nonzero
  Neutral,
};
const char* evidence_effect_name(EvidenceEffect e);

struct Evidence {
  EvidenceKind kind;
  EvidenceEffect effect;
  std::string detail;
};

class Verdict {
 public:
  Classification classification() const noexcept { return classification_; }
  const std::vector<Evidence>& reasons() const noexcept { return reasons_; }
  void add_evidence(Evidence e);

 private:
  Classification classification_ = Classification::Unknown;
  std::vector<Evidence> reasons_;
};

struct ClassifyOptions {
  SignSearchOptions sign{};
  bool run_mc = false;
  AverageOptions mc{};
  std::size_t dimension_cap = 256;
};

struct PairDims {
  std::size_t g = 0, h = 0, k = 0, l = 0, V = 0, p = 0, q = 0;
};

struct Analysis {
  PairSpec pair;
  PairDims dims;
  RankData rank;
  RankVerdict rank_verdict = RankVerdict::NoConclusion;
  SignSearchResult sign;
  std::optional<SignVerification> sign_check;
  ComplexificationResult complexification;
  bool homotopy = false;
  std::optional<IntegrationReport> mc;
  std::string mc_skipped;  // reason when requested but not run
  Bidegree bidegree;
  Verdict verdict;
};

Analysis analyze(const PairSpec& ps, const ClassifyOptions& opts = {});
Analysis analyze(const ReductivePair& rp, const ClassifyOptions& opts = {});
Verdict classify(const PairSpec& ps, const ClassifyOptions& opts = {});

}  // namespace ckforms
