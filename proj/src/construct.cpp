#include "nilfilt/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nilfilt/quotient.hpp"

namespace nilfilt {

const std::map<std::string, std::vector<Scalar>>* FunctionalChoices::find(
    unsigned step, const std::string& map) const {
  auto it = maps.find({step, map});
  return it == maps.end() ? nullptr : &it->second;
}

FunctionalChoices parse_functionals(const std::string& text, Field field) {
  FunctionalChoices out;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string step_text, map, key, eq;
    if (!(ls >> step_text)) continue;
    auto fail = [lineno](const std::string& msg) {
      return Error("functionals line " + std::to_string(lineno) + ": " + msg);
    };
    unsigned step = 0;
    try {
      std::size_t used = 0;
      step = static_cast<unsigned>(std::stoul(step_text, &used));
      if (used != step_text.size()) throw std::invalid_argument(step_text);
    } catch (const std::exception&) {
      throw fail("expected a step number, got '" + step_text + "'");
    }
    if (!(ls >> map >> key >> eq) || eq != "=") throw fail("expected '<step> <map> <key> = values'");
    if (map != "sigma" && map != "p" && map != "q" && map != "phi")
      throw fail("unknown map '" + map + "' (sigma, p, q, phi)");
    std::vector<Scalar> values;
    for (std::string v; ls >> v;) {
      try {
        values.push_back(Scalar::parse(v, field));
      } catch (const Error& e) {
        throw fail(e.what());
      }
    }
    if (values.empty() || values.size() > 2) throw fail("expected one or two values");
    auto& slot = out.maps[{step, map}][key];
    if (!slot.empty()) throw fail("duplicate entry for key '" + key + "'");
    slot = std::move(values);
  }
  return out;
}

std::string step_label(const ConstructionState& st, unsigned step) {
  if (step == st.n + 1) return "Step n+1";
  if (step == st.n) return "Step n";
  if (st.mtype == 3 && step == st.n - 1 && st.n >= 5) return "Step n-1";
  return "Step " + std::to_string(step);
}

namespace {

struct Constraint {
  Vector v;
  Scalar value;       // required value, or the default of a unit
  bool unit = false;  // value must merely be nonzero
  std::string what;
  bool hint = false;  // shapes the default only; user maps are not held to it
};
using RowSpec = std::vector<Constraint>;

Scalar random_unit(std::mt19937_64& rng, Field f) {
  std::uniform_int_distribution<long> num(1, 5), den(1, 3), sign(0, 1);
  mpq_class q(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  q.canonicalize();
  return Scalar(q, f);
}

// Units take their default (or random) value; free columns are 0.
std::optional<Vector> solve_row(const RowSpec& spec, std::size_t dim, Field f,
                                std::mt19937_64* rng) {
  Matrix aug;
  for (const auto& c : spec) {
    Vector row = c.v;
    row.push_back(c.unit && rng ? random_unit(*rng, f) : c.value);
    aug.push_back(std::move(row));
  }
  Echelon e = echelonize(std::move(aug), dim + 1, f);
  std::vector<bool> pivot(dim + 1, false);
  for (auto p : e.pivots) pivot[p] = true;
  if (pivot[dim]) return std::nullopt;
  Vector row = zero_vector(dim, f);
  for (std::size_t i = 0; i < e.rank(); ++i) {
    Scalar val = e.rows[i][dim];
    for (std::size_t j = 0; j < dim; ++j)
      if (!pivot[j]) val -= e.rows[i][j] * row[j];
    row[e.pivots[i]] = val;
  }
  return row;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

Matrix user_rows(const std::map<std::string, std::vector<Scalar>>& user,
                 const std::vector<std::string>& keys, std::size_t t, Field f,
                 const std::string& where) {
  Matrix rows(t, zero_vector(keys.size(), f));
  for (const auto& [key, values] : user) {
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end())
      throw StepError(where + ": unknown basis key '" + key + "' (basis: " + join(keys) + ")");
    if (values.size() != t)
      throw StepError(where + ": key '" + key + "' needs " + std::to_string(t) + " value(s)");
    for (std::size_t c = 0; c < t; ++c) rows[c][it - keys.begin()] = values[c];
  }
  return rows;
}

class Engine {
public:
  explicit Engine(ConstructionState& st) : st_(st), f_(st.ring->field()) {}

  std::string where(unsigned step, const std::string& name) const {
    return step_label(st_, step) + ": map " + name;
  }

  Matrix realize(unsigned step, const std::string& name, const std::vector<std::string>& keys,
                 const std::vector<RowSpec>& specs) {
    const std::size_t dim = keys.size(), t = specs.size();
    const std::string at = where(step, name);
    if (const auto* user = st_.options.user.find(step, name)) {
      Matrix rows = user_rows(*user, keys, t, f_, at);
      for (std::size_t c = 0; c < t; ++c)
        for (const auto& con : specs[c]) {
          if (con.hint) continue;
          Scalar d = dot(rows[c], con.v);
          if (con.unit ? d.is_zero() : !(d == con.value))
            throw StepError(at + " " + con.what + (t > 1 ? " (component " + std::to_string(c + 1) + ")" : ""));
        }
      if (rank(rows, dim, f_) != t)
        throw StepError(at + " is not surjective onto its rank-" + std::to_string(t) + " target");
      return rows;
    }
    std::mt19937_64* rng = st_.options.mode == ChoiceMode::Random ? &st_.rng : nullptr;
    for (int attempt = 0; attempt < (rng ? 64 : 1); ++attempt) {
      Matrix rows;
      for (const auto& spec : specs) {
        auto row = solve_row(spec, dim, f_, rng);
        if (!row) throw StepError(at + ": constraints are not jointly satisfiable");
        rows.push_back(std::move(*row));
      }
      if (rank(rows, dim, f_) == t) return rows;
    }
    throw StepError(at + ": no surjective choice satisfies the constraints");
  }

  // A map fixed by the others; a user-supplied copy must agree.
  Matrix derived(unsigned step, const std::string& name, const std::vector<std::string>& keys,
                 Matrix rows, const std::string& relation) {
    if (const auto* user = st_.options.user.find(step, name)) {
      const std::string at = where(step, name);
      if (!(user_rows(*user, keys, rows.size(), f_, at) == rows))
        throw StepError(at + " does not commute with " + relation);
    }
    return rows;
  }

  Vector coords(const SubquotientBasis& V, const Polynomial& p, unsigned step,
                const std::string& what) const {
    if (!V.numerator().contains(p))
      throw StepError(step_label(st_, step) + ": " + what + " " + p.to_string() + " is not in " +
                      V.numerator().to_string());
    return V.coordinates(p);
  }

  Ideal kernel(const Ideal& base, const SubquotientBasis& V, const Matrix& rows) const {
    std::vector<Polynomial> lifts;
    for (const auto& v : nullspace(rows, V.dim(), f_)) lifts.push_back(V.lift(v));
    return sum(base, Ideal(st_.ring, std::move(lifts)));
  }

  // iota[k] = coordinates in V_I of the k-th basis vector of V_J
  Matrix inclusion(const SubquotientBasis& VJ, const SubquotientBasis& VI) const {
    Matrix iota;
    for (std::size_t k = 0; k < VJ.dim(); ++k) iota.push_back(VI.coordinates(VJ.representative(k)));
    return iota;
  }

  Matrix kernel_of_inclusion(const Matrix& iota, std::size_t target_dim) const {
    Matrix cols;
    for (std::size_t j = 0; j < target_dim; ++j) {
      Vector c;
      for (const auto& v : iota) c.push_back(v[j]);
      cols.push_back(std::move(c));
    }
    return nullspace(cols, iota.size(), f_);
  }

  void zero_on(RowSpec& spec, const Matrix& vectors, const std::string& what) const {
    for (const auto& v : vectors) spec.push_back({v, Scalar(0, f_), false, "must vanish on " + what});
  }

  // Row constraints making `row` composed with the inclusion equal `values`.
  void through(RowSpec& spec, const Matrix& iota, const Vector& values, const std::string& what) const {
    for (std::size_t k = 0; k < iota.size(); ++k)
      spec.push_back({iota[k], values[k], false, "must satisfy " + what});
  }

  Vector compose(const Vector& q, const Matrix& iota) const {
    Vector p;
    for (const auto& v : iota) p.push_back(dot(q, v));
    return p;
  }

  void check_step(StepRecord& rec, const Ideal& Jprev, const Ideal& Jnew, std::size_t jdrop,
                  const Ideal* Iprev, const Ideal* Inew, std::size_t idrop) {
    const std::string s = std::to_string(rec.step), s1 = std::to_string(rec.step - 1);
    auto dim_of = [](const Ideal& a, const Ideal& b) {
      return a.contains(b) ? static_cast<long>(subquotient_dim(a, b)) : -1L;
    };
    long dj = dim_of(Jprev, Jnew);
    rec.checks.push_back({"dim J_" + s1 + "/J_" + s + " = " + std::to_string(jdrop),
                          dj == static_cast<long>(jdrop), "dim " + std::to_string(dj)});
    bool mono = Jnew.contains(product(st_.I, Jprev));
    rec.checks.push_back({"IJ_" + s1 + " in J_" + s, mono, mono ? "holds" : "fails"});
    if (Inew) {
      long di = dim_of(*Iprev, *Inew);
      rec.checks.push_back({"dim I_" + s1 + "/I_" + s + " = " + std::to_string(idrop),
                            di == static_cast<long>(idrop), "dim " + std::to_string(di)});
      bool inside = Inew->contains(Jnew);
      rec.checks.push_back({"J_" + s + " in I_" + s, inside, inside ? "holds" : "fails"});
    }
    for (const auto& c : rec.checks)
      if (!c.pass) throw StepError(rec.label + ": " + c.name + " violated (" + c.detail + ")");
  }

  void record(StepRecord rec) {
    if (rec.J) {
      st_.J_chain.resize(std::max<std::size_t>(st_.J_chain.size(), rec.step + 1), Ideal(st_.ring));
      st_.J_chain[rec.step] = *rec.J;
    }
    if (rec.I) {
      st_.I_chain.resize(std::max<std::size_t>(st_.I_chain.size(), rec.step + 1), Ideal(st_.ring));
      st_.I_chain[rec.step] = *rec.I;
    }
    st_.log.push_back(std::move(rec));
  }

  Polynomial lambda_power(unsigned k) const {
    Polynomial p = Polynomial::constant(st_.ring, 1);
    for (unsigned i = 0; i < k; ++i) p *= *st_.lambda;
    return p;
  }

  Scalar unit(long v) const { return Scalar(v, f_); }

  ConstructionState& st_;
  Field f_;
};

Vector basis_vector(std::size_t dim, std::size_t k, Field f) {
  Vector v = zero_vector(dim, f);
  v[k] = Scalar(1, f);
  return v;
}

void step1(ConstructionState& st) {
  Engine e(st);
  StepRecord rec{1, step_label(st, 1), std::nullopt, std::nullopt, {}, {}};
  if (st.mtype == 3) {
    const std::vector<std::string> keys{"LL", "LK", "KK"};
    const Field f = st.ring->field();
    RowSpec l2{{basis_vector(3, 1, f), e.unit(0), false, "must vanish on LK (S^2E -> L^2)"},
               {basis_vector(3, 2, f), e.unit(0), false, "must vanish on KK (S^2E -> L^2)"},
               {basis_vector(3, 0, f), e.unit(1), true, "must be nonzero on LL"}};
    RowSpec k2{{basis_vector(3, 2, f), e.unit(1), true, "must be nonzero on KK (K^2 injects)"}};
    st.sigma = e.realize(1, "sigma", keys, {l2, k2});
    rec.maps.push_back({"sigma", keys, st.sigma});
  }
  e.record(std::move(rec));
}

}  // namespace

ConstructionState construct_init(unsigned mtype, unsigned n, unsigned r, ConstructOptions options) {
  CuspidalModel model = cuspidal_model(mtype, n, r);  // validates the range
  for (const auto& [slot, values] : options.user.maps) {
    const auto& [step, map] = slot;
    const std::string at = "functional '" + std::to_string(step) + " " + map + "'";
    if (step < 1 || step > n + 1) throw Error(at + ": steps run from 1 to " + std::to_string(n + 1));
    bool ok = map == "sigma" ? step == 1 && mtype == 3
              : map == "phi" ? step == n + 1
              : map == "q"   ? step >= 2 && step < n
                             : step >= 2 && step <= n;
    if (!ok) throw Error(at + ": no such map at that step");
  }
  ConstructionState st;
  st.mtype = mtype;
  st.n = n;
  st.r = r;
  st.ring = model.model.ring();
  st.I = model.model.support();
  st.J_chain = {Ideal::unit(st.ring), st.I};
  st.I_chain = {Ideal::unit(st.ring), st.I};
  st.options = std::move(options);
  st.rng.seed(st.options.seed);
  step1(st);
  st.next_step = 2;
  return st;
}

void step2(ConstructionState& st) {
  if (st.next_step != 2) throw Error("step 2 already done");
  Engine e(st);
  const Ideal& I = st.I;
  SubquotientBasis V(I, power(I, 2));
  auto keys = V.key_strings();
  const std::size_t d = V.dim();
  auto key_vec = [&](std::size_t var) {
    return e.coords(V, Polynomial::variable(st.ring, var), 2, "variable");
  };
  RowSpec rl{{key_vec(0), e.unit(1), true, "must be nonzero on x", true}};
  RowSpec rk{{key_vec(1), e.unit(1), true, "must be nonzero on y", true}};
  st.p2 = e.realize(2, "p", keys, {rl, rk});
  Matrix q2 = e.derived(2, "q", keys, {st.p2[0]}, "the projection E -> L");

  Ideal J2 = e.kernel(power(I, 2), V, st.p2);
  Ideal I2 = e.kernel(power(I, 2), V, q2);

  const Field f = st.ring->field();
  std::size_t lk = 0;
  while (st.p2[0][lk].is_zero()) ++lk;
  Vector lv = basis_vector(d, lk, f);
  lv[lk] = st.p2[0][lk].inverse();
  st.lambda = V.lift(lv);
  for (const auto& u : nullspace({st.p2[0]}, d, f)) {
    Scalar s = dot(st.p2[1], u);
    if (s.is_zero()) continue;
    Vector kv = u;
    for (auto& x : kv) x /= s;
    st.kappa = V.lift(kv);
    break;
  }

  StepRecord rec{2, step_label(st, 2), J2, I2, {{"p", keys, st.p2}, {"q", keys, q2}}, {}};
  e.check_step(rec, I, J2, 2, &I, &I2, 1);
  long k = I2.contains(J2) ? static_cast<long>(subquotient_dim(I2, J2)) : -1;
  rec.checks.push_back({"dim I_2/J_2 = 1", k == 1, "dim " + std::to_string(k)});
  if (k != 1) throw StepError(rec.label + ": I_2/J_2 is not of rank 1");
  e.record(std::move(rec));
  st.next_step = 3;
}

void step_middle(ConstructionState& st) {
  const unsigned l = st.next_step;
  if (l < 3 || l >= st.n) throw Error("no middle step pending");
  Engine e(st);
  const Ideal& I = st.I;
  const Ideal Jp = st.J_chain[l - 1];
  const Ideal Ip = st.I_chain[l - 1];
  const Ideal IJ = product(I, Jp);
  const Ideal II = product(I, Ip);
  SubquotientBasis VJ(Jp, IJ), VI(Ip, II);
  const auto kj = VJ.key_strings(), ki = VI.key_strings();
  const Matrix iota = e.inclusion(VJ, VI);
  const std::string label = step_label(st, l);
  const Field f = st.ring->field();

  auto free_key_unit = [&](RowSpec& spec) {
    Echelon im = echelonize(iota, VI.dim(), f);
    for (std::size_t j = 0; j < VI.dim(); ++j) {
      Vector ej = basis_vector(VI.dim(), j, f);
      if (!im.spans(ej)) {
        spec.push_back({ej, e.unit(1), true, "must be nonzero on the K class " + ki[j]});
        return;
      }
    }
    throw StepError(label + ": the inclusion is onto, no room for the K component");
  };

  Matrix p, q;
  std::size_t jdrop = 1, idrop = 1;
  if (st.mtype == 3 && l == 3) {
    // p3 : J_2/IJ_2 -> F restricts to sigma on S^2E = I^2/IJ_2.
    SubquotientBasis V2(I, power(I, 2));
    const std::size_t v = st.ring->arity();
    std::vector<Vector> e_coords;
    for (std::size_t i = 0; i < v; ++i) {
      Vector c = V2.coordinates(Polynomial::variable(st.ring, i));
      e_coords.push_back({dot(st.p2[0], c), dot(st.p2[1], c)});
    }
    RowSpec rows[2];
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = i; j < v; ++j) {
        const auto& a = e_coords[i];
        const auto& b = e_coords[j];
        Vector s2{a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]};
        Polynomial uv = Polynomial::variable(st.ring, i) * Polynomial::variable(st.ring, j);
        Vector w = VJ.coordinates(uv);
        for (int c = 0; c < 2; ++c)
          rows[c].push_back({w, dot(st.sigma[c], s2), false,
                             "must agree with sigma on " + uv.to_string()});
      }
    p = e.realize(l, "p", kj, {rows[0], rows[1]});
    jdrop = 2;
    Vector first = p[0];
    if (st.n == 4) {
      // Also the step n-1 square: q3 lands in F' with q3 o iota = (p3 to L^2, 0).
      RowSpec a, b;
      e.through(a, iota, first, "q o iota = (p to L^2, 0)");
      e.through(b, iota, zero_vector(VJ.dim(), f), "q o iota = (p to L^2, 0)");
      free_key_unit(b);
      q = e.realize(l, "q", ki, {a, b});
      idrop = 2;
    } else {
      RowSpec a;
      e.through(a, iota, first, "q o iota = (F -> L^2) o p");
      q = e.realize(l, "q", ki, {a});
    }
  } else if (st.mtype == 3 && l == st.n - 1) {
    // p retracts L^{n-2} into J_{n-2}/IJ_{n-2}; q lands in F'.
    RowSpec a;
    e.zero_on(a, VJ.image(product(power(I, l - 2), st.I_chain[2])).rows, "I^{n-3}I_2");
    e.zero_on(a, e.kernel_of_inclusion(iota, VI.dim()), "the kernel of J_{n-2}/IJ_{n-2} -> I_{n-2}/II_{n-2}");
    a.push_back({e.coords(VJ, e.lambda_power(l - 1), l, "L class"), e.unit(1), true,
                 "must be a unit on the L^" + std::to_string(l - 1) + " class"});
    p = e.realize(l, "p", kj, {a});
    RowSpec q0, q1;
    e.through(q0, iota, p[0], "q o iota = (p, 0)");
    e.through(q1, iota, zero_vector(VJ.dim(), f), "q o iota = (p, 0)");
    free_key_unit(q1);
    q = e.realize(l, "q", ki, {q0, q1});
    idrop = 2;
  } else {
    // q retracts L^{l-1} into I_{l-1}/II_{l-1}; p = q o iota.
    RowSpec a;
    e.zero_on(a, VI.image(product(power(I, l - 2), st.I_chain[2])).rows, "I^{l-2}I_2");
    a.push_back({e.coords(VI, e.lambda_power(l - 1), l, "L class"), e.unit(1), true,
                 "must be a unit on the L^" + std::to_string(l - 1) + " class"});
    q = e.realize(l, "q", ki, {a});
    p = e.derived(l, "p", kj, {e.compose(q[0], iota)}, "q o iota");
    if (rank(p, VJ.dim(), f) != 1) throw StepError(label + ": map p is not surjective");
  }

  Ideal Jn = e.kernel(IJ, VJ, p);
  Ideal In = e.kernel(II, VI, q);
  StepRecord rec{l, label, Jn, In, {{"p", kj, p}, {"q", ki, q}}, {}};
  e.check_step(rec, Jp, Jn, jdrop, &Ip, &In, idrop);
  e.record(std::move(rec));
  st.next_step = l + 1;
}

Ideal step_final(ConstructionState& st) {
  while (st.next_step < st.n) step_middle(st);
  const unsigned n = st.n;
  Engine e(st);
  const Ideal& I = st.I;

  {  // Step n: J_n = I_n from a retract of L^{n-1}.
    const Ideal Jp = st.J_chain[n - 1];
    const Ideal Ip = st.I_chain[n - 1];
    const Ideal IJ = product(I, Jp);
    SubquotientBasis VJ(Jp, IJ), VI(Ip, product(I, Ip));
    const auto kj = VJ.key_strings();
    const Matrix iota = e.inclusion(VJ, VI);
    RowSpec a;
    e.zero_on(a, VJ.image(product(power(I, n - 2), st.I_chain[2])).rows, "I^{n-2}I_2");
    e.zero_on(a, e.kernel_of_inclusion(iota, VI.dim()), "the kernel of J_{n-1}/IJ_{n-1} -> I_{n-1}/II_{n-1}");
    a.push_back({e.coords(VJ, e.lambda_power(n - 1), n, "L class"), e.unit(1), true,
                 "must be a unit on the L^{n-1} class"});
    Matrix p = e.realize(n, "p", kj, {a});
    Ideal Jn = e.kernel(IJ, VJ, p);
    StepRecord rec{n, step_label(st, n), Jn, Jn, {{"p", kj, p}}, {}};
    e.check_step(rec, Jp, Jn, 1, &Ip, &Jn, 2);
    bool over = Jn.contains(product(I, Ip));
    rec.checks.push_back({"II_{n-1} in J_n", over, over ? "holds" : "fails"});
    if (!over) throw StepError(rec.label + ": II_{n-1} is not contained in J_n");
    e.record(std::move(rec));
  }

  // Step n+1: phi on I_n/II_n retracts both L^n and K^m.
  const unsigned s = n + 1;
  const Ideal In = st.I_chain[n];
  const Ideal II = product(I, In);
  SubquotientBasis V(In, II);
  const auto keys = V.key_strings();
  const Ideal& I2 = st.I_chain[2];
  const Ideal& J2 = st.J_chain[2];
  Ideal DL = product(power(I, n - 1), I2);
  Ideal DK = st.mtype == 2
                 ? sum(product(I2, st.J_chain[n - 1]), product(st.I_chain[n - 1], J2))
                 : sum(sum(product(product(I2, J2), st.I_chain[n - 2]),
                           product(product(I2, I2), st.J_chain[n - 2])),
                       product(product(I, product(I2, I2)), st.I_chain[n - 1]));
  Polynomial km = Polynomial::constant(st.ring, 1);
  for (unsigned i = 0; i < st.mtype; ++i) km *= *st.kappa;
  const std::string kname = "K^" + std::to_string(st.mtype);
  RowSpec a;
  e.zero_on(a, V.image(DL).rows, "I^{n-1}I_2 (retract of L^n)");
  e.zero_on(a, V.image(DK).rows, "the relations of the " + kname + " inclusion");
  Polynomial mixed = *st.lambda * *st.kappa;
  if (In.contains(mixed)) {
    Vector mv = V.coordinates(mixed);
    if (!is_zero(mv)) a.push_back({mv, e.unit(0), false, "must vanish on the mixed class " + mixed.to_string()});
  }
  Vector lv = e.coords(V, e.lambda_power(n), s, "L^n class");
  Vector kv = e.coords(V, km, s, kname + " class");
  a.push_back({lv, e.unit(1), true, "must be a unit on the L^n class (retract of L^n)"});
  a.push_back({kv, e.unit(-1), true, "must be nonzero on the " + kname + " class (retract of " + kname + ")"});
  Matrix phi = e.realize(s, "phi", keys, {a});
  st.coefficient = -dot(phi[0], kv) / dot(phi[0], lv);

  Ideal J = e.kernel(II, V, phi);
  StepRecord rec{s, step_label(st, s), J, J, {{"phi", keys, phi}}, {}};
  e.check_step(rec, In, J, 1, nullptr, nullptr, 0);
  e.record(std::move(rec));
  st.next_step = s + 1;
  return J;
}

ConstructionResult construct_run(unsigned mtype, unsigned n, unsigned r, ConstructOptions options) {
  const bool defaults = options.mode == ChoiceMode::Default && options.user.maps.empty();
  ConstructionResult res;
  res.state = construct_init(mtype, n, r, std::move(options));
  ConstructionState& st = res.state;
  step2(st);
  res.final_ideal = step_final(st);

  const CuspidalModel model = cuspidal_model(mtype, n, r);
  const RingPtr& R = st.ring;
  const Scalar one(1, R->field());
  const Polynomial ym = Polynomial::monomial(R, Monomial::variable(R->arity(), 1, mtype), one);
  const Polynomial xn = Polynomial::monomial(R, Monomial::variable(R->arity(), 0, n), one);
  // c with y^m + c x^n in J, read off the normal forms of both monomials
  const auto& gb = res.final_ideal.groebner();
  const Polynomial ny = gb.normal_form(ym), nx = gb.normal_form(xn);
  if (!nx.is_zero()) {
    const Term& t = nx.leading_term();
    Scalar c = -ny.coefficient(t.mono) / t.coef;
    if ((ny + nx.scaled(c)).is_zero() && !c.is_zero()) res.c = c;
  }
  if (res.c) {
    std::vector<Polynomial> gens{ym + xn.scaled(*res.c),
                                 Polynomial::variable(R, 0) * Polynomial::variable(R, 1)};
    for (std::size_t i = 2; i < R->arity(); ++i) gens.push_back(Polynomial::variable(R, i));
    res.normal_form = equals(res.final_ideal, Ideal(R, std::move(gens)));
  }

  std::optional<LocalModel> lm;
  try {
    lm.emplace(st.I, res.final_ideal);
  } catch (const Error& err) {
    throw StepError("Step n+1: result is not a multiple structure on the support (" +
                    std::string(err.what()) + ")");
  }
  std::string want = "C_{" + std::to_string(mtype) + "," + std::to_string(n) + "}";
  if (res.normal_form) {
    res.report = verify_against_tables(*lm, model);
  } else {
    res.report = analyze(*lm);
  }
  const Filtrations& f = res.report->chains;
  Fingerprint target = fingerprint(model.model);
  res.checks.push_back({"fingerprint matches " + want, res.report->fingerprint == target,
                        "label " + res.report->label});
  if (f.m == n) {
    for (unsigned l = 2; l <= n; ++l) {
      std::string s = std::to_string(l);
      bool jy = equals(st.J_chain[l], f.ys[l]);
      bool ix = equals(st.I_chain[l], f.xs[l]);
      res.checks.push_back({"constructed J_" + s + " = J:(J:I^" + s + ")", jy,
                            st.J_chain[l].to_string()});
      res.checks.push_back({"constructed I_" + s + " = J:I^" + std::to_string(n + 1 - l), ix,
                            st.I_chain[l].to_string()});
    }
  } else {
    res.checks.push_back({"m = n", false, "m " + std::to_string(f.m)});
  }
  res.report->notes.push_back(res.normal_form
                                  ? "result is (y^m + c x^n, xy, z) with c = " + res.c->to_string()
                                  : "result is not in the normal form (y^m + c x^n, xy, z)");
  if (defaults) {
    bool eq = equals(res.final_ideal, model.model.structure());
    res.checks.push_back({"defaults reproduce the model ideal", eq, res.final_ideal.to_string()});
  }
  return res;
}

}  // namespace nilfilt
