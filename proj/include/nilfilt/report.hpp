#ifndef NILFILT_REPORT_HPP
#define NILFILT_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilfilt/construct.hpp"
#include "nilfilt/filtration.hpp"

namespace nilfilt {

using Gens = std::vector<std::string>;

/// Everything a command prints. Text and JSON are rendered from the same
/// record, so their verdicts always agree.
struct Report {
  std::string command;
  RingPtr ring;
  std::vector<std::pair<std::string, Gens>> inputs;
  std::optional<unsigned> m;
  std::vector<Gens> bf, x, y;
  RankProfiles ranks;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::optional<Fingerprint> fingerprint;
  std::string label;
  nlohmann::json steps = nlohmann::json::array();
  nlohmann::json final_ideal;  // null unless a construction ran
  double elapsed_ms = 0;

  bool pass() const { return all_pass(checks); }
};

Report make_report(std::string command, const FiltrationReport& fr);
/// Report of the verification of the final ideal, plus the step log.
Report make_report(std::string command, const ConstructionResult& res);

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

nlohmann::json sweep_json(const std::string& command, const std::vector<Report>& cases, double elapsed_ms);
std::string sweep_text(const std::vector<Report>& cases, double elapsed_ms);

}  // namespace nilfilt

#endif
