#include "nilfilt/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilfilt/report.hpp"
#include "nilfilt/session.hpp"

namespace nilfilt::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t k = 0; k < args.size(); ++k) s += (k ? " " : "") + args[k];
  return s;
}

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (as_json)
    out << to_json(r).dump(2) << "\n";
  else
    out << to_text(r);
}

std::vector<Ideal> fixture_chain(const nlohmann::json& rows, const RingPtr& R, std::size_t len,
                                 const char* key) {
  if (!rows.is_array() || rows.size() != len)
    throw Error(std::string("fixture: '") + key + "' must list " + std::to_string(len) + " ideals");
  std::vector<Ideal> out;
  for (const auto& row : rows) {
    std::vector<Polynomial> gens;
    for (const auto& g : row) gens.push_back(parse_polynomial(R, g.get<std::string>()));
    out.emplace_back(R, std::move(gens));
  }
  return out;
}

// Replaces the closed-form tables by those of a fixture file.
void load_expected(CuspidalModel& cm, unsigned r, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error("fixture '" + path + "': " + e.what());
  }
  auto field = [&](const char* k, unsigned have) {
    if (j.contains(k) && j[k].get<unsigned>() != have)
      throw Error(std::string("fixture '") + path + "': " + k + " is " + std::to_string(j[k].get<unsigned>()) +
                  ", command has " + std::to_string(have));
  };
  try {
    field("type", cm.mtype);
    field("n", cm.n);
    field("r", r);
    const RingPtr& R = cm.model.ring();
    const std::size_t len = cm.n + 2;
    if (j.contains("x")) cm.expected_x = fixture_chain(j["x"], R, len, "x");
    if (j.contains("y")) cm.expected_y = fixture_chain(j["y"], R, len, "y");
    if (j.contains("rankA")) cm.expected_rank_a = j["rankA"].get<std::vector<std::size_t>>();
    if (j.contains("rankM")) cm.expected_rank_m = j["rankM"].get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error("fixture '" + path + "': " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Filtrations of multiple structures and cuspidal verification", "nilfilt"};
  app.require_subcommand(1);

  std::string file, iname, jname, unmix, expected, functionals, expr;
  unsigned type = 0, n = 0, r = 0, nmin = 0, nmax = 0, rmax = 0;
  std::uint64_t seed = 1;
  bool as_json = false, random = false;

  auto* a = app.add_subcommand("analyze", "Filtrations, ranks and checks for ideals of a session file");
  a->add_option("file", file, "session file")->required();
  a->add_option("--I", iname, "support ideal name")->required();
  a->add_option("--J", jname, "structure ideal name")->required();
  a->add_option("--unmix", unmix, "saturate I^l + J with respect to this ideal");
  a->add_flag("--json", as_json);

  auto* c = app.add_subcommand("cuspidal", "Verify the closed-form tables of C_{type,n}");
  c->add_option("--type", type)->required()->check(CLI::IsMember({2u, 3u}));
  c->add_option("--n", n)->required();
  c->add_option("--r", r)->default_val(0u);
  c->add_option("--expected", expected, "JSON fixture replacing the closed-form tables");
  c->add_flag("--json", as_json);

  auto* s = app.add_subcommand("sweep", "Run cuspidal over a range of n and r");
  s->add_option("--type", type)->required()->check(CLI::IsMember({2u, 3u}));
  s->add_option("--n-min", nmin)->required();
  s->add_option("--n-max", nmax)->required();
  s->add_option("--r-max", rmax)->default_val(0u);
  s->add_flag("--json", as_json);

  auto* k = app.add_subcommand("construct", "Build a cuspidal structure step by step");
  k->add_option("--type", type)->required()->check(CLI::IsMember({2u, 3u}));
  k->add_option("--n", n)->required();
  k->add_option("--r", r)->default_val(0u);
  k->add_option("--functionals", functionals, "file of functional values");
  k->add_flag("--random", random, "random unit scalars where no value is given");
  k->add_option("--seed", seed)->default_val(1u);
  k->add_flag("--json", as_json);

  auto* e = app.add_subcommand("eval", "Evaluate an ideal expression over a session file");
  e->add_option("file", file, "session file")->required();
  e->add_option("--expr", expr, "expression")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& pe) {
    if (pe.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << pe.what() << "\n";
    return kUsage;
  }

  const std::string command = join_args(args);
  const auto t0 = Clock::now();
  try {
    if (a->parsed()) {
      Session ses = parse_session(read_file(file));
      LocalModel model(ses.get(iname), ses.get(jname));
      std::optional<Ideal> w;
      if (!unmix.empty()) w = ses.get(unmix);
      Report rep = make_report(command, analyze(model, w));
      rep.inputs = {{iname, model.support().canonical_strings()}, {jname, model.structure().canonical_strings()}};
      if (!model.ring()->field().is_rational())
        rep.notes.push_back("coefficients in " + model.ring()->field().name() +
                            "; catalog labels and cuspidal checks assume characteristic 0");
      rep.elapsed_ms = since(t0);
      emit(rep, as_json, out);
      return kPass;
    }
    if (c->parsed()) {
      CuspidalModel cm = cuspidal_model(type, n, r);
      if (!expected.empty()) load_expected(cm, r, expected);
      Report rep = make_report(command, verify_against_tables(cm.model, cm));
      rep.elapsed_ms = since(t0);
      emit(rep, as_json, out);
      return rep.pass() ? kPass : kFail;
    }
    if (s->parsed()) {
      if (nmin > nmax) throw Error("--n-min exceeds --n-max");
      for (unsigned nn = nmin; nn <= nmax; ++nn) cuspidal_model(type, nn, 0);  // range check
      std::vector<Report> cases;
      bool pass = true;
      for (unsigned nn = nmin; nn <= nmax; ++nn)
        for (unsigned rr = 0; rr <= rmax; ++rr) {
          const auto tc = Clock::now();
          std::string cmd = "cuspidal --type " + std::to_string(type) + " --n " + std::to_string(nn) +
                            " --r " + std::to_string(rr);
          cases.push_back(make_report(cmd, verify_cuspidal(type, nn, rr)));
          cases.back().elapsed_ms = since(tc);
          pass = pass && cases.back().pass();
        }
      if (as_json)
        out << sweep_json(command, cases, since(t0)).dump(2) << "\n";
      else
        out << sweep_text(cases, since(t0));
      return pass ? kPass : kFail;
    }
    if (k->parsed()) {
      cuspidal_model(type, n, r);  // range check
      ConstructOptions opt;
      if (!functionals.empty()) opt.user = parse_functionals(read_file(functionals));
      opt.mode = random ? ChoiceMode::Random : ChoiceMode::Default;
      opt.seed = seed;
      ConstructionResult res;
      try {
        res = construct_run(type, n, r, std::move(opt));
      } catch (const StepError& se) {
        err << "error: " << se.what() << "\n";
        return kFail;
      }
      Report rep = make_report(command, res);
      rep.elapsed_ms = since(t0);
      emit(rep, as_json, out);
      return rep.pass() ? kPass : kFail;
    }
    if (e->parsed()) {
      Session ses = parse_session(read_file(file));
      out << eval_expr(ses, expr).to_string() << "\n";
      return kPass;
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace nilfilt::cli
