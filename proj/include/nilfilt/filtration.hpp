#ifndef NILFILT_FILTRATION_HPP
#define NILFILT_FILTRATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilfilt/ideal.hpp"

namespace nilfilt {

/// A multiple structure in a local polynomial model: I is the ideal of the
/// smooth support (generated by variables), J the ideal of the structure.
class LocalModel {
public:
  /// Validates J ⊆ I, I generated by variables, R/J finite-dimensional.
  LocalModel(Ideal support, Ideal structure);

  const RingPtr& ring() const { return support_.ring(); }
  const Ideal& support() const { return support_; }
  const Ideal& structure() const { return structure_; }

private:
  Ideal support_;
  Ideal structure_;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<Check>& checks);

/// The three canonical chains, each indexed 0..m+1.
///   bf[l] = I^l + J (optionally saturated)
///   xs[l] = J : I^(m+1-l)
///   ys[l] = J : (J : I^l)
struct Filtrations {
  unsigned m = 0;
  std::vector<Ideal> bf, xs, ys;
};

struct RankProfiles {
  std::vector<std::size_t> B, A, M;
};

/// Smallest m with I^(m+1) ⊆ J. Throws Error past `max_iter` or when J = I.
unsigned compute_m(const LocalModel& model, unsigned max_iter = 0);

/// With `unmix`, each I^l + J is replaced by its saturation with respect to it.
std::vector<Ideal> bf_filtration(const LocalModel& model, unsigned m,
                                 const std::optional<Ideal>& unmix = std::nullopt);
std::vector<Ideal> x_filtration(const LocalModel& model, unsigned m);
std::vector<Ideal> y_filtration(const LocalModel& model, unsigned m);

Filtrations compute_filtrations(const LocalModel& model,
                                const std::optional<Ideal>& unmix = std::nullopt);

/// Entry l is dim chain[l]/chain[l+1], l = 0..m.
RankProfiles rank_profiles(const Filtrations& f);

/// rank A_l = rank M_(m-l) for all l, top ranks 1, and J_m = I_m.
Check duality_check(const Filtrations& f, const RankProfiles& ranks);

/// (A_l1 · A_l2 ≠ 0, A_l1 · M_l2 ≠ 0) in the graded objects.
std::pair<bool, bool> multiplication_nonzero(const Filtrations& f, unsigned l1, unsigned l2);

/// I^l + J ⊆ J_l ⊆ I_l for 1 <= l <= m, with equalities noted.
std::vector<Check> containment_report(const Filtrations& f);

/// Chains descend from the unit ideal to J, ys[1] = I, ranks telescope.
std::vector<Check> structural_checks(const LocalModel& model, const Filtrations& f,
                                     const RankProfiles& ranks);

enum class CuspType { C2 = 2, C3 = 3 };

/// Dimension and containment ledger behind the exact sequences of the
/// cuspidal analyses. Violations are failed checks, never exceptions.
std::vector<Check> exactness_suite(const LocalModel& model, const Filtrations& f, CuspType type);

/// Ring k[x, y, z1..zr].
RingPtr cuspidal_ring(unsigned r);

struct CuspidalModel {
  LocalModel model;
  unsigned mtype = 2;
  unsigned n = 0;
  /// Closed-form chains, indexed like Filtrations::xs / ys.
  std::vector<Ideal> expected_x, expected_y;
  std::vector<std::size_t> expected_rank_a, expected_rank_m;
};

/// (y^mtype + x^n, x*y, z1..zr) with its closed-form tables.
/// Requires n >= 3 for mtype 2 and n >= 4 for mtype 3.
CuspidalModel cuspidal_model(unsigned mtype, unsigned n, unsigned r);

struct Fingerprint {
  unsigned m = 0;
  std::vector<std::size_t> rank_a, rank_m;
  bool top_equal = false;  // J_m = I_m
  bool duality = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FiltrationReport {
  LocalModel model;
  Filtrations chains;
  RankProfiles ranks;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  Fingerprint fingerprint;
  std::string label;

  bool pass() const { return all_pass(checks); }
};

Fingerprint fingerprint(const LocalModel& model);
Fingerprint fingerprint(const Filtrations& f, const RankProfiles& ranks);

/// Necessary-condition classifier: the unique catalog class (primitive(n),
/// M4(n), C_{2,n}, C_{3,n}) whose model ideal in the same ring has the same
/// fingerprint, or "unknown". No coordinate changes are searched.
std::string classify(const LocalModel& model, const Fingerprint& fp);

/// Generic analysis: chains, ranks, duality, containments, multiplications,
/// structural checks and the catalog label.
FiltrationReport analyze(const LocalModel& model, const std::optional<Ideal>& unmix = std::nullopt);

/// Table checks of an analysis against closed-form chains (m must equal n).
std::vector<Check> table_checks(const FiltrationReport& report, const CuspidalModel& expected);

/// Full verification of a cuspidal structure J against the closed-form
/// tables of type C_{mtype,n}; J is normally the model ideal itself.
FiltrationReport verify_against_tables(const LocalModel& model, const CuspidalModel& expected);

FiltrationReport verify_cuspidal(unsigned mtype, unsigned n, unsigned r);

}  // namespace nilfilt

#endif
