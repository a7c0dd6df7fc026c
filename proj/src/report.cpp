#include "nilfilt/report.hpp"

#include <cstdio>
#include <sstream>

namespace nilfilt {

using nlohmann::json;

namespace {

std::vector<Gens> strings(const std::vector<Ideal>& chain) {
  std::vector<Gens> out;
  for (const auto& i : chain) out.push_back(i.canonical_strings());
  return out;
}

std::string paren(const Gens& g) {
  std::string s = "(";
  for (std::size_t k = 0; k < g.size(); ++k) s += (k ? ", " : "") + g[k];
  return s + ")";
}

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "]";
}

json matrix_json(const Matrix& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

Report make_report(std::string command, const FiltrationReport& fr) {
  Report r;
  r.command = std::move(command);
  r.ring = fr.model.ring();
  r.inputs = {{"I", fr.model.support().canonical_strings()}, {"J", fr.model.structure().canonical_strings()}};
  r.m = fr.chains.m;
  r.bf = strings(fr.chains.bf);
  r.x = strings(fr.chains.xs);
  r.y = strings(fr.chains.ys);
  r.ranks = fr.ranks;
  r.checks = fr.checks;
  r.notes = fr.notes;
  r.fingerprint = fr.fingerprint;
  r.label = fr.label;
  return r;
}

Report make_report(std::string command, const ConstructionResult& res) {
  Report r = make_report(std::move(command), *res.report);
  const auto& st = res.state;
  for (const auto& rec : st.log) {
    json step{{"step", rec.step}, {"label", rec.label}};
    step["J"] = rec.J ? json(rec.J->canonical_strings()) : json();
    step["I"] = rec.I ? json(rec.I->canonical_strings()) : json();
    json maps = json::array();
    for (const auto& m : rec.maps) maps.push_back({{"name", m.name}, {"keys", m.keys}, {"rows", matrix_json(m.rows)}});
    step["maps"] = std::move(maps);
    step["checks"] = checks_json(rec.checks);
    r.steps.push_back(std::move(step));
  }
  r.final_ideal = {{"generators", res.final_ideal.canonical_strings()},
                   {"normal_form", res.normal_form},
                   {"c", res.c ? json(res.c->to_string()) : json()}};
  // construction checks first, then the verification of the final ideal
  std::vector<Check> all = res.checks;
  all.insert(all.end(), r.checks.begin(), r.checks.end());
  r.checks = std::move(all);
  return r;
}

json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  if (r.ring)
    j["ring"] = {{"field", r.ring->field().name()}, {"vars", r.ring->vars()}, {"order", r.ring->order().name()}};
  json inputs = json::object();
  for (const auto& [name, gens] : r.inputs) inputs[name] = gens;
  j["inputs"] = std::move(inputs);
  j["m"] = r.m ? json(*r.m) : json();
  j["chains"] = {{"bf", r.bf}, {"x", r.x}, {"y", r.y}};
  j["ranks"] = {{"B", r.ranks.B}, {"A", r.ranks.A}, {"M", r.ranks.M}};
  j["checks"] = checks_json(r.checks);
  if (r.fingerprint)
    j["fingerprint"] = {{"label", r.label},
                        {"m", r.fingerprint->m},
                        {"rankA", r.fingerprint->rank_a},
                        {"rankM", r.fingerprint->rank_m},
                        {"top_equal", r.fingerprint->top_equal},
                        {"duality", r.fingerprint->duality}};
  else
    j["fingerprint"] = nullptr;
  j["notes"] = r.notes;
  if (!r.steps.empty()) j["steps"] = r.steps;
  if (!r.final_ideal.is_null()) j["final"] = r.final_ideal;
  j["pass"] = r.pass();
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream o;
  o << "command: " << r.command << "\n";
  if (r.ring) o << "ring: " << r.ring->describe() << "\n";
  for (const auto& [name, gens] : r.inputs) o << name << " = " << paren(gens) << "\n";
  if (r.m) o << "m = " << *r.m << "\n";
  auto chain = [&](const char* title, const std::vector<Gens>& c) {
    if (c.empty()) return;
    o << title << "\n";
    for (std::size_t l = 0; l < c.size(); ++l) o << "  " << l << ": " << paren(c[l]) << "\n";
  };
  chain("I^(l) = I^l + J:", r.bf);
  chain("I_l = J:I^(m+1-l):", r.x);
  chain("J_l = J:(J:I^l):", r.y);
  if (!r.ranks.A.empty())
    o << "ranks: B " << list(r.ranks.B) << "  A " << list(r.ranks.A) << "  M " << list(r.ranks.M) << "\n";
  if (r.fingerprint)
    o << "fingerprint: " << r.label << " (m " << r.fingerprint->m << ", rankA " << list(r.fingerprint->rank_a)
      << ", rankM " << list(r.fingerprint->rank_m) << ", J_m = I_m " << (r.fingerprint->top_equal ? "yes" : "no")
      << ", duality " << (r.fingerprint->duality ? "yes" : "no") << ")\n";
  for (const auto& s : r.steps) {
    o << s["label"].get<std::string>() << ":";
    if (!s["J"].is_null()) o << " J_" << s["step"].get<unsigned>() << " = " << paren(s["J"].get<Gens>());
    if (!s["I"].is_null()) o << "  I_" << s["step"].get<unsigned>() << " = " << paren(s["I"].get<Gens>());
    o << "\n";
    for (const auto& m : s["maps"]) {
      o << "  " << m["name"].get<std::string>() << " on [" ;
      const auto keys = m["keys"].get<Gens>();
      for (std::size_t k = 0; k < keys.size(); ++k) o << (k ? " " : "") << keys[k];
      o << "]:";
      for (const auto& row : m["rows"]) {
        o << " (";
        bool first = true;
        for (const auto& v : row) {
          o << (first ? "" : " ") << v.get<std::string>();
          first = false;
        }
        o << ")";
      }
      o << "\n";
    }
  }
  if (!r.final_ideal.is_null()) o << "final: " << paren(r.final_ideal["generators"].get<Gens>()) << "\n";
  o << "checks:\n";
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    failed += !c.pass;
    o << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) o << ": " << c.detail;
    o << "\n";
  }
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  o << "result: " << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() - failed << "/" << r.checks.size()
    << " checks)\n";
  o << "elapsed: " << ms(r.elapsed_ms) << " ms\n";
  return o.str();
}

json sweep_json(const std::string& command, const std::vector<Report>& cases, double elapsed_ms) {
  json arr = json::array();
  bool pass = true;
  for (const auto& c : cases) {
    arr.push_back(to_json(c));
    pass = pass && c.pass();
  }
  return {{"command", command}, {"cases", std::move(arr)}, {"pass", pass}, {"elapsed_ms", elapsed_ms}};
}

std::string sweep_text(const std::vector<Report>& cases, double elapsed_ms) {
  std::ostringstream o;
  bool pass = true;
  for (const auto& c : cases) {
    std::size_t failed = 0;
    for (const auto& k : c.checks) failed += !k.pass;
    pass = pass && c.pass();
    o << c.command << ": " << (c.pass() ? "PASS" : "FAIL") << "  m " << (c.m ? std::to_string(*c.m) : "-")
      << "  " << c.label << "  " << c.checks.size() - failed << "/" << c.checks.size() << " checks";
    for (const auto& k : c.checks)
      if (!k.pass) o << "\n    FAIL " << k.name << ": " << k.detail;
    o << "\n";
  }
  o << "result: " << (pass ? "PASS" : "FAIL") << "\nelapsed: " << ms(elapsed_ms) << " ms\n";
  return o.str();
}

}  // namespace nilfilt
