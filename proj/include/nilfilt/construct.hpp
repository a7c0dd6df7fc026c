#ifndef NILFILT_CONSTRUCT_HPP
#define NILFILT_CONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilfilt/filtration.hpp"
#include "nilfilt/linalg.hpp"

namespace nilfilt {

/// Raised when a functional violates the constraints of a construction step.
class StepError : public Error {
public:
  using Error::Error;
};

/// User-supplied functional values. Text format, one assignment per line:
///   <step> <map> <key> = v1 [v2]
/// where <map> is sigma (step 1), p, q or phi, <key> a basis key as printed
/// in construction reports (LL, LK, KK for sigma), and the values are the
/// components of the image. '#' starts a comment. A map that appears in the
/// file replaces the default entirely; its missing keys are 0.
struct FunctionalChoices {
  std::map<std::pair<unsigned, std::string>, std::map<std::string, std::vector<Scalar>>> maps;

  const std::map<std::string, std::vector<Scalar>>* find(unsigned step, const std::string& map) const;
};

FunctionalChoices parse_functionals(const std::string& text, Field field = {});

enum class ChoiceMode { Default, Random };

struct ConstructOptions {
  FunctionalChoices user;
  ChoiceMode mode = ChoiceMode::Default;
  std::uint64_t seed = 0;
};

/// A linear map from a finite-dimensional quotient, one row per target
/// component, one column per basis key.
struct MapRecord {
  std::string name;
  std::vector<std::string> keys;
  Matrix rows;
};

struct StepRecord {
  unsigned step = 0;
  std::string label;
  std::optional<Ideal> J, I;
  std::vector<MapRecord> maps;
  std::vector<Check> checks;
};

struct ConstructionState {
  unsigned mtype = 2, n = 0, r = 0;
  RingPtr ring;
  Ideal I{RingPtr{}};
  unsigned next_step = 2;
  /// Index l holds J_l / I_l once built; entries 0 and 1 are (1) and I.
  std::vector<Ideal> J_chain, I_chain;
  ConstructOptions options;
  std::mt19937_64 rng;
  Matrix p2;     // 2 x dim I/I^2, rows (L, K)
  Matrix sigma;  // 2 x 3 on (LL, LK, KK), rows (L^2, K^2); C3 only
  std::optional<Polynomial> lambda, kappa;
  /// -phi(kappa^m) / phi(lambda^n), set by the last step.
  std::optional<Scalar> coefficient;
  std::vector<StepRecord> log;
};

ConstructionState construct_init(unsigned mtype, unsigned n, unsigned r,
                                 ConstructOptions options = {});
void step2(ConstructionState& st);
/// One step among 3..n-1.
void step_middle(ConstructionState& st);
/// Steps n and n+1; returns J_{n+1}.
Ideal step_final(ConstructionState& st);

struct ConstructionResult {
  ConstructionState state;
  Ideal final_ideal{RingPtr{}};
  /// (y^m + c x^n, xy, z) for the scalar c with y^m + c x^n in the result.
  bool normal_form = false;
  std::optional<Scalar> c;
  std::vector<Check> checks;
  std::optional<FiltrationReport> report;

  bool pass() const { return all_pass(checks) && report && report->pass(); }
};

ConstructionResult construct_run(unsigned mtype, unsigned n, unsigned r,
                                 ConstructOptions options = {});

/// Printed name of a step ("Step 3", "Step n-1", "Step n+1").
std::string step_label(const ConstructionState& st, unsigned step);

}  // namespace nilfilt

#endif
