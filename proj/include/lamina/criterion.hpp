#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamina/gaps.hpp"

namespace lamina {

class SlicingFamily {
 public:
  // Throws InvalidFamily when two members are linked or overlap.
  explicit SlicingFamily(std::vector<AngleClass> members);

  const std::vector<AngleClass>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<AngleClass> members_;
};

struct SlicingResult {
  bool well_slicing = false;
  std::optional<std::pair<std::size_t, std::size_t>> unseparated;
  std::string reason;
};

SlicingResult is_well_slicing(const SlicingFamily& fam);
SlicingFamily vertical_collection(int denominator_bound);

struct LemmaCheck {
  std::size_t samples = 0;
  std::size_t premises_met = 0;
  std::vector<std::string> failures;
};

struct LemmaReport {
  LemmaCheck middle_separates;
  LemmaCheck sep_sep;
  LemmaCheck no_finite;
  bool passed() const {
    return middle_separates.failures.empty() && sep_sep.failures.empty() && no_finite.failures.empty();
  }
};

LemmaReport ray_separation_lemmas_check(const SlicingFamily& fam, std::size_t samples, std::uint64_t seed = 1);

enum class CensusVerdict { Growing, Stable, Inconclusive };
const char* to_string(CensusVerdict v);

struct ParattractingWitness {
  std::size_t face;
  int period;
  int degree;
  std::size_t basis_size;
};

struct SiegelWitness {
  std::vector<AngleClass> critical;  // the collection H
  std::vector<std::size_t> cycle;    // faces of the Siegel cycle
  std::vector<Leaf> contact;         // leaf shared by each H_i and the cycle
  int evidence_depth = 0;
  std::string label = "combinatorial only";
};

struct CriterionOptions {
  int horizon = 64;
  int growth_window = 3;
};

struct CriterionReport {
  std::optional<ParattractingWitness> parattracting;
  std::map<int, std::size_t> census;  // period -> periodic classes with at least two angles
  CensusVerdict census_verdict = CensusVerdict::Inconclusive;
  std::optional<SiegelWitness> siegel;
  enum class Overall { NonDegenerate, NoEvidence };
  Overall overall = Overall::NoEvidence;
  std::string witness;  // which condition supplied the verdict
  int evidence_depth = 0;
};

std::optional<SiegelWitness> detect_siegel_configuration(const GapAnalysis& analysis);
std::optional<SiegelWitness> detect_siegel_configuration(const Lamination& lam);

CriterionReport evaluate_criterion(const Lamination& lam, int period_bound, CriterionOptions options = {});

// Periodic classes with at least two angles, keyed by exact period.
std::map<int, std::size_t> periodic_class_census(const Lamination& lam, int period_bound);
CensusVerdict census_verdict(const std::map<int, std::size_t>& census, int period_bound, int window);

}  // namespace lamina
