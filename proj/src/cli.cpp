#include "gqm/cli.hpp"

#include "gqm/composite.hpp"
#include "gqm/error.hpp"
#include "gqm/f1.hpp"
#include "gqm/lhv.hpp"
#include "gqm/qcount.hpp"
#include "gqm/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace gqm::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Table = std::vector<std::vector<std::string>>;

struct Report {
  explicit Report(std::string name = {}) : command(std::move(name)) {}

  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<Check> checks;
  std::string text;
  std::optional<Table> csv;
};

std::string aligned(const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += c + 1 == row.size() ? row[c] : fmt::format("{:<{}}  ", row[c], width[c]);
    }
    out += line + "\n";
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      json doc;
      doc["tool"] = "gqm";
      doc["version"] = std::string(kVersion);
      doc["command"] = report.command;
      doc["inputs"] = report.inputs;
      doc["results"] = report.results;
      json checks = json::array();
      for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
      }
      doc["checks"] = std::move(checks);
      doc["pass"] = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      for (const auto& row : *report.csv) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
        out << "\n";
      }
      return;
    case Format::Text:
      out << report.text;
      if (!report.checks.empty()) {
        out << "\nchecks:\n";
        for (const auto& c : report.checks) {
          out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
          if (!c.detail.empty()) out << " (" << c.detail << ")";
          out << "\n";
        }
      }
      return;
  }
}

// ---- field selection -------------------------------------------------------

struct FieldArgs {
  std::uint64_t q = 0;
  unsigned p = 0;
  unsigned n = 0;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--q", args.q, "field order, a prime power");
  cmd->add_option("--p", args.p, "characteristic (with --n)");
  cmd->add_option("--n", args.n, "extension degree (with --p)");
}

FieldPtr resolve_field(const FieldArgs& args, json& inputs) {
  const std::string hint = "q must be a prime power (q=1: use `fun`)";
  unsigned p = 0;
  unsigned n = 0;
  if (args.q != 0) {
    if (!factor_prime_power(args.q, p, n)) throw UsageError(hint);
    if ((args.p != 0 && args.p != p) || (args.n != 0 && args.n != n)) {
      throw UsageError("--q " + std::to_string(args.q) + " conflicts with --p/--n");
    }
  } else if (args.p != 0) {
    p = args.p;
    n = args.n == 0 ? 1 : args.n;
    if (!is_prime(p)) throw UsageError("--p must be prime");
  } else {
    throw UsageError("a field is required: --q <prime power> or --p <prime> [--n <degree>]");
  }
  auto field = Field::create(p, n);
  inputs["q"] = field->order();
  inputs["p"] = p;
  inputs["n"] = n;
  return field;
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string dir_label(SpinDirection d) { return "A_" + std::to_string(d.r) + "," + std::to_string(d.s); }

const char* kPairNames[] = {"pp", "pm", "mp", "mm"};

// ---- subcommands -----------------------------------------------------------

Report cmd_field(const FieldArgs& fa) {
  Report r{"field"};
  const auto field = resolve_field(fa, r.inputs);
  const auto gen = field->generator();
  r.results["modulus"] = field->modulus();
  r.results["modulus_poly"] = field->modulus_string();
  r.results["generator"] = to_string(gen);
  r.results["generator_poly"] = to_poly_string(gen);
  json elements = json::array();
  Table rows{{"code", "element", "poly", "log"}};
  for (const auto& x : field->elements()) {
    const std::string lg = x.is_zero() ? "-" : std::to_string(field->log(x));
    elements.push_back({{"code", x.code()}, {"value", to_string(x)}, {"poly", to_poly_string(x)},
                        {"log", x.is_zero() ? json(nullptr) : json(field->log(x))}});
    rows.push_back({std::to_string(x.code()), to_string(x), to_poly_string(x), lg});
  }
  r.results["elements"] = std::move(elements);

  bool full_order = gen.pow(field->order() - 1) == field->one();
  for (std::uint32_t k = 1; k + 1 < field->order() && full_order; ++k) full_order = gen.pow(k) != field->one();
  FieldElement sum = field->zero();
  for (unsigned i = 0; i < field->characteristic(); ++i) sum += field->one();
  r.checks.push_back({"generator has order q-1", full_order, ""});
  r.checks.push_back({"p copies of 1 sum to 0", sum.is_zero(), ""});

  r.text = fmt::format("GF({}) = GF({}^{})\nmodulus:   {}\ngenerator: {}\n\n", field->order(),
                       field->characteristic(), field->degree(), field->modulus_string(), to_poly_string(gen)) +
           aligned(rows);
  r.csv = rows;
  return r;
}

Report cmd_counts(const FieldArgs& fa, unsigned N, bool brute) {
  Report r{"counts"};
  const auto field = resolve_field(fa, r.inputs);
  const std::uint64_t q = field->order();
  r.inputs["N"] = N;
  r.results["q_int"] = q_int(N, q).str();
  r.results["q_factorial"] = q_factorial(N, q).str();
  json gb = json::array();
  for (unsigned M = 0; M <= N; ++M) gb.push_back(gaussian_binomial(N, M, q).str());
  r.results["gaussian_binomials"] = std::move(gb);

  Table rows{{"k", "subspaces", "points_each"}};
  json subs = json::array();
  for (int k = -1; k < static_cast<int>(N); ++k) {
    const auto count = subspace_count(N, k, q);
    const auto pts = points_per_subspace(k, q);
    subs.push_back({{"k", k}, {"count", count.str()}, {"points", pts.str()}});
    rows.push_back({std::to_string(k), count.str(), pts.str()});
    if (brute) {
      const auto oracle = brute_force_subspace_count(N, k, q);
      r.checks.push_back({"k=" + std::to_string(k) + " matches enumeration", oracle == count,
                          count.str() + " vs " + oracle.str()});
    }
  }
  r.results["subspaces"] = std::move(subs);
  r.text = fmt::format("PG({},{}): [{}]_q = {}, [{}]_q! = {}\n\n", N - 1, q, N, q_int(N, q).str(), N,
                       q_factorial(N, q).str()) +
           aligned(rows);
  r.csv = rows;
  return r;
}

Report cmd_states(const FieldArgs& fa, unsigned N) {
  Report r{"states"};
  const auto field = resolve_field(fa, r.inputs);
  r.inputs["N"] = N;
  if (N < 1) throw UsageError("--N must be >= 1");
  const auto points = enumerate_points(N, *field);
  Table rows{{"index", "point"}};
  json pts = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    pts.push_back(vec_json(points[i].entries()));
    rows.push_back({std::to_string(i), to_string(points[i].entries())});
  }
  r.results["points"] = std::move(pts);
  r.checks.push_back({"point count = [N]_q", BigInt(points.size()) == q_int(N, field->order()),
                      std::to_string(points.size())});
  r.text = fmt::format("PG({},{}) has {} points\n\n", N - 1, field->order(), points.size()) + aligned(rows);
  r.csv = rows;

  if (N == 2) {
    Table spin{{"r", "ket", "bra"}};
    json kets = json::array();
    for (unsigned i = 0; i <= field->order(); ++i) {
      const auto k = ket(i, *field);
      const auto b = bra(i, *field);
      kets.push_back({{"r", i}, {"ket", vec_json(k.entries())}, {"bra", vec_json(b.entries())}});
      spin.push_back({std::to_string(i), to_string(k.entries()), to_string(b.entries())});
    }
    r.results["spin_model"] = std::move(kets);
    r.text += "\nspin model (generator " + to_poly_string(field->generator()) + ")\n" + aligned(spin);
  }
  return r;
}

Report cmd_probs(const FieldArgs& fa, std::optional<unsigned> r_opt, std::optional<unsigned> s_opt) {
  Report r{"probs"};
  const auto field = resolve_field(fa, r.inputs);
  if (r_opt.has_value() != s_opt.has_value()) throw UsageError("--r and --s go together");
  std::vector<SpinDirection> dirs;
  if (r_opt) {
    if (*r_opt == *s_opt) throw UsageError("--r and --s must differ");
    if (*r_opt > field->order() || *s_opt > field->order()) throw UsageError("spin index must be <= q");
    dirs.push_back({*r_opt, *s_opt});
    r.inputs["r"] = *r_opt;
    r.inputs["s"] = *s_opt;
  } else {
    dirs = spin_directions(*field);
  }
  Table rows{{"observable", "state", "P(+1)", "P(-1)", "EV"}};
  json out = json::array();
  bool normalized = true;
  bool eigen_ok = true;
  std::vector<ProjVector> kets;
  for (unsigned t = 0; t <= field->order(); ++t) kets.push_back(ket(t, *field));
  for (const auto& d : dirs) {
    const auto obs = spin_observable(d.r, d.s, *field);
    for (unsigned t = 0; t < kets.size(); ++t) {
      const auto p = distribution(obs, kets[t]);
      const auto ev = expectation(obs, kets[t]);
      normalized = normalized && p[0] + p[1] == 1;
      out.push_back({{"observable", dir_label(d)}, {"state", t}, {"p_plus", to_string(p[0])},
                     {"p_minus", to_string(p[1])}, {"ev", to_string(ev)}});
      rows.push_back({dir_label(d), "|" + std::to_string(t) + ">", to_string(p[0]), to_string(p[1]), to_string(ev)});
    }
    const auto eig = eigenstates(obs, kets);
    eigen_ok = eigen_ok && eig.size() == 2 && eig[0].state == kets[std::min(d.r, d.s)] &&
               eig[1].state == kets[std::max(d.r, d.s)] && eig[0].value == (d.r < d.s ? -1 : 1);
  }
  r.results["rows"] = std::move(out);
  r.checks.push_back({"probabilities sum to 1", normalized, ""});
  r.checks.push_back({"eigenstates are |s> (+1) and |r> (-1)", eigen_ok, ""});
  r.text = aligned(rows);
  r.csv = rows;
  return r;
}

Report cmd_table1(const FieldArgs& fa) {
  Report r{"table1"};
  const auto field = resolve_field(fa, r.inputs);
  Table rows{{"observable", "++", "+-", "-+", "--", "E.V."}};
  json out = json::array();
  for (const auto& entry : table1(*field)) {
    const std::string name(label(entry.pattern));
    if (!entry.row) {
      out.push_back({{"observable", name}, {"skipped", true}, {"reason", "RowSkipped"}});
      rows.push_back({name, "RowSkipped", "", "", "", ""});
      r.checks.push_back({name + " skipped only when q < 3", entry.pattern == Table1Pattern::Disjoint &&
                                                                  field->order() < 3, ""});
      continue;
    }
    const auto& row = *entry.row;
    json item{{"observable", name}};
    for (std::size_t i = 0; i < 4; ++i) item[kPairNames[i]] = to_string(row.probs[i]);
    item["ev"] = to_string(row.ev);
    item["assignments"] = entry.assignments;
    out.push_back(std::move(item));
    rows.push_back({name, to_string(row.probs[0]), to_string(row.probs[1]), to_string(row.probs[2]),
                    to_string(row.probs[3]), to_string(row.ev)});
    const auto ref = reference_row(entry.pattern);
    r.checks.push_back({name + " matches the expected row", ref.probs == row.probs && ref.ev == row.ev, ""});
  }
  r.results["rows"] = std::move(out);
  r.text = fmt::format("singlet correlations over GF({})\n\n", field->order()) + aligned(rows);
  r.csv = rows;
  return r;
}

Report cmd_chsh(const FieldArgs& fa, bool all_states) {
  Report r{"chsh"};
  const auto field = resolve_field(fa, r.inputs);
  r.inputs["all_states"] = all_states;
  std::vector<TwoSpinState> states;
  if (all_states) {
    states = enumerate_two_spin_states(*field).entangled;
  } else {
    states.push_back(singlet(0, 1, *field));
  }
  const auto res = chsh_max(*field, states);
  r.results["states_swept"] = states.size();
  r.results["max_abs"] = to_string(res.max_abs);
  r.results["value"] = to_string(res.value);
  r.results["witness"] = {{"A", dir_label(res.witness[0])},
                          {"a", dir_label(res.witness[1])},
                          {"B", dir_label(res.witness[2])},
                          {"b", dir_label(res.witness[3])}};
  r.results["state"] = vec_json(res.state.vector().entries());
  r.checks.push_back({"max |<A,a;B,b>| = 2", res.max_abs == 2, to_string(res.max_abs)});
  r.text = fmt::format(
      "CHSH over {} state(s) of GF({})^4\nmax |<A,a;B,b>| = {}\nwitness: A={} a={} B={} b={} value={}\nstate:   {}\n",
      states.size(), field->order(), to_string(res.max_abs), dir_label(res.witness[0]), dir_label(res.witness[1]),
      dir_label(res.witness[2]), dir_label(res.witness[3]), to_string(res.value),
      to_string(res.state.vector().entries()));
  return r;
}

Rat json_rat(const json& v) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw UsageError("probabilities must be \"num/den\" strings");
}

JointTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  try {
    const Scenario s{doc.at("m1").get<unsigned>(), doc.at("m2").get<unsigned>()};
    if (s.m1 < 1 || s.m2 < 1 || s.m1 + s.m2 > kMaxObservables) throw UsageError("m1, m2 out of range");
    const auto& pairs = doc.at("pairs");
    if (!pairs.is_object() || pairs.size() != static_cast<std::size_t>(s.m1) * s.m2) {
      throw UsageError("\"pairs\" must hold exactly m1*m2 entries");
    }
    std::vector<JointTable::Row> rows(s.m1 * s.m2);
    for (unsigned i = 0; i < s.m1; ++i) {
      for (unsigned j = 0; j < s.m2; ++j) {
        const auto& entry = pairs.at(std::to_string(i) + "," + std::to_string(j));
        for (std::size_t k = 0; k < 4; ++k) rows[i * s.m2 + j][k] = json_rat(entry.at(kPairNames[k]));
      }
    }
    return JointTable::make(s, std::move(rows));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed table: ") + e.what());
  } catch (const Error& e) {
    throw UsageError(std::string("malformed table: ") + e.what());
  }
}

json table_json(const std::vector<JointTable::Row>& rows, Scenario s) {
  json out = json::object();
  for (unsigned i = 0; i < s.m1; ++i) {
    for (unsigned j = 0; j < s.m2; ++j) {
      json entry;
      for (std::size_t k = 0; k < 4; ++k) entry[kPairNames[k]] = to_string(rows[i * s.m2 + j][k]);
      out[std::to_string(i) + "," + std::to_string(j)] = std::move(entry);
    }
  }
  return out;
}

Report cmd_lhv(const FieldArgs& fa, const std::string& path, bool from_gqm, const std::string& state_spec) {
  Report r{"lhv"};
  std::optional<JointTable> table;
  if (from_gqm) {
    if (!path.empty()) throw UsageError("give either a table file or --from-gqm, not both");
    const auto field = resolve_field(fa, r.inputs);
    r.inputs["state"] = state_spec;
    std::optional<TwoSpinState> state;
    unsigned a = 0;
    unsigned b = 0;
    char sep = 0;
    std::istringstream spec(state_spec.size() > 8 ? state_spec.substr(8) : "");
    if (state_spec == "singlet") {
      state = singlet(0, 1, *field);
    } else if (state_spec.rfind("product:", 0) == 0 && (spec >> a >> sep >> b) && sep == ',' && spec.eof() &&
               a <= field->order() && b <= field->order()) {
      state = tensor_ket(ket(a, *field), ket(b, *field));
    } else {
      throw UsageError("--state is `singlet` or `product:R,S` with R, S <= q");
    }
    auto gqm = gqm_joint_table(*state, *field);
    json labels = json::array();
    for (const auto& d : gqm.directions) labels.push_back(dir_label(d));
    r.results["observables"] = std::move(labels);
    table = std::move(gqm.table);
  } else {
    if (path.empty()) throw UsageError("lhv needs a table file or --from-gqm");
    r.inputs["file"] = path;
    table = read_table(path);
  }

  const Scenario s = table->scenario();
  const auto verdict = lhv_feasible(*table);
  r.results["m1"] = s.m1;
  r.results["m2"] = s.m2;
  r.results["strategies"] = std::uint64_t{1} << (s.m1 + s.m2);
  r.results["feasible"] = verdict.feasible;
  std::string text = fmt::format("scenario m1={} m2={} ({} strategies)\nverdict: {}\n", s.m1, s.m2,
                                 std::uint64_t{1} << (s.m1 + s.m2), verdict.feasible ? "local" : "not local");
  if (verdict.feasible) {
    json weights = json::object();
    Table rows{{"strategy", "weight"}};
    for (const auto& w : verdict.weights) {
      weights[to_string(w.strategy, s)] = to_string(w.weight);
      rows.push_back({to_string(w.strategy, s), to_string(w.weight)});
    }
    r.results["weights"] = std::move(weights);
    r.checks.push_back({"weights reproduce the table", weights_reproduce(*table, verdict.weights), ""});
    text += "\n" + aligned(rows);
  } else {
    const auto& cert = *verdict.certificate;
    Rat strategy_max;
    bool first = true;
    for (const auto& st : deterministic_strategies(s)) {
      const Rat v = certificate_value(cert, st, s);
      if (first || v > strategy_max) strategy_max = v;
      first = false;
    }
    const Rat on_table = certificate_value(cert, *table);
    r.results["certificate"] = table_json(cert, s);
    r.results["certificate_on_table"] = to_string(on_table);
    r.results["certificate_max_on_strategies"] = to_string(strategy_max);
    r.checks.push_back({"certificate separates the table", certificate_separates(*table, cert),
                        to_string(on_table) + " > " + to_string(strategy_max)});
    text += fmt::format("certificate value on table: {}\nmax over strategies:        {}\n", to_string(on_table),
                        to_string(strategy_max));
  }
  r.text = text;
  return r;
}

Report cmd_fun(unsigned n) {
  Report r{"fun"};
  r.inputs["N"] = n;
  if (n < 2) throw UsageError("--n must be >= 2");
  if (n > f1::kMaxAutomorphismDim) throw UsageError("--n is capped at " + std::to_string(f1::kMaxAutomorphismDim));
  auto point_name = [](std::size_t i) {
    return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i);
  };

  const auto geom = f1::pg_n_1(n);
  json subs = json::array();
  std::string text = fmt::format("PG({},1): {} points\n", n - 1, geom.points);
  for (std::size_t k = 0; k < geom.subspaces.size(); ++k) {
    json level = json::array();
    std::vector<std::string> names;
    for (const auto& sub : geom.subspaces[k]) {
      std::string name = "{";
      for (std::size_t i = 0; i < sub.size(); ++i) name += (i ? "," : "") + point_name(sub[i]);
      name += "}";
      names.push_back(name);
      level.push_back(name);
    }
    subs.push_back({{"k", k}, {"count", geom.subspaces[k].size()}, {"subspaces", std::move(level)}});
    std::string joined;
    for (std::size_t i = 0; i < names.size(); ++i) joined += (i ? " " : "") + names[i];
    text += fmt::format("  k={}: {} {}\n", k, geom.subspaces[k].size(), joined);
  }
  r.results["geometry"] = {{"points", geom.points}, {"subspaces", std::move(subs)}};
  const auto autos = f1::f1_automorphisms(n);
  r.results["automorphism_group_order"] = autos.size();
  text += fmt::format("automorphisms: {} (S_{})\n", autos.size(), n);

  const auto spin = f1::q1_spin_model();
  const Rat ev_up = f1::f1_expectation(spin.observable, spin.up.vector);
  const Rat ev_down = f1::f1_expectation(spin.observable, spin.down.vector);
  bool forbidden = false;
  try {
    (void)spin.superpose();
  } catch (const Error& e) {
    forbidden = e.kind() == ErrorKind::AdditionForbidden;
  }
  r.results["spin_model"] = {{"states", 2},
                             {"ev_up", to_string(ev_up)},
                             {"ev_down", to_string(ev_down)},
                             {"superposition", forbidden ? "AdditionForbidden" : "allowed"}};
  r.checks.push_back({"q=1 spin model has 2 states", spin.states().size() == 2, ""});
  r.checks.push_back({"<A>_up = +1, <A>_down = -1", ev_up == 1 && ev_down == -1, ""});
  r.checks.push_back({"superposition raises AdditionForbidden", forbidden, ""});

  const auto two = f1::q1_two_spin_model();
  bool all_eigen = true;
  json states = json::array();
  for (const auto& st : two.states) {
    const auto idx = two.definite_outcome(st.vector);
    all_eigen = all_eigen && idx.has_value();
    const auto pair = idx ? two.outcome_pairs[*idx] : std::pair<int, int>{0, 0};
    states.push_back({{"state", st.name}, {"outcome", fmt::format("{}{}", pair.first > 0 ? '+' : '-',
                                                                   pair.second > 0 ? '+' : '-')}});
  }
  const Rat bound = two.chsh_bound();
  r.results["two_spin_model"] = {{"states", two.states.size()},
                                 {"entangled", two.entangled_count},
                                 {"definite_outcomes", std::move(states)},
                                 {"chsh_bound", to_string(bound)}};
  r.checks.push_back({"q=1 two-spin model has 4 states, 0 entangled",
                      two.states.size() == 4 && two.entangled_count == 0, ""});
  r.checks.push_back({"every two-spin state is an eigenstate of AA", all_eigen, ""});
  r.checks.push_back({"q=1 CHSH bound = 2", bound == 2, to_string(bound)});
  text += fmt::format("q=1 spin: <A>_up = {}, <A>_down = {}, superposition: {}\n", to_string(ev_up),
                      to_string(ev_down), forbidden ? "AdditionForbidden" : "allowed");
  text += fmt::format("q=1 two-spin: {} states, {} entangled, CHSH bound {}\n", two.states.size(), two.entangled_count,
                      to_string(bound));

  json report = json::array();
  for (const auto& c : f1::q1_consistency_report(n)) {
    report.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    r.checks.push_back({c.name, c.pass, c.actual});
  }
  r.results["consistency_report"] = std::move(report);
  r.text = text;
  return r;
}

Report cmd_verify_all(const FieldArgs& fa) {
  Report r{"verify-all"};
  const auto field = resolve_field(fa, r.inputs);
  const auto report = verify_all(*field);
  r.checks = report.checks;
  r.results["checks_run"] = report.checks.size();
  r.results["failed"] = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return !c.pass; });
  r.text = fmt::format("verify-all for GF({}): {} checks\n", field->order(), report.checks.size());
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois-field quantum mechanics: exact tables, bounds and the q=1 limit", "gqm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string format_name = "text";
  FieldArgs fa;
  unsigned N = 2;
  unsigned fun_n = 3;
  bool brute = false;
  bool all_states = false;
  bool from_gqm = false;
  std::string state_spec = "singlet";
  std::string table_path;
  std::optional<unsigned> r_idx;
  std::optional<unsigned> s_idx;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* field_cmd = app.add_subcommand("field", "field construction, generator and elements");
  add_field_options(field_cmd, fa);
  add_format(field_cmd);

  auto* counts_cmd = app.add_subcommand("counts", "q-analogs and subspace counts of PG(N-1,q)");
  add_field_options(counts_cmd, fa);
  counts_cmd->add_option("--N", N, "vector space dimension")->check(CLI::Range(1u, 64u));
  counts_cmd->add_flag("--check", brute, "cross-check against explicit subspace enumeration");
  add_format(counts_cmd);

  auto* states_cmd = app.add_subcommand("states", "points of PG(N-1,q) and the spin-model kets and bras");
  add_field_options(states_cmd, fa);
  states_cmd->add_option("--N", N, "vector space dimension")->check(CLI::Range(1u, 8u));
  add_format(states_cmd);

  auto* probs_cmd = app.add_subcommand("probs", "single-spin probabilities and expectations");
  add_field_options(probs_cmd, fa);
  probs_cmd->add_option("--r", r_idx, "first index of A_rs");
  probs_cmd->add_option("--s", s_idx, "second index of A_rs");
  add_format(probs_cmd);

  auto* table1_cmd = app.add_subcommand("table1", "product-observable correlations in the singlet");
  add_field_options(table1_cmd, fa);
  add_format(table1_cmd);

  auto* chsh_cmd = app.add_subcommand("chsh", "maximum CHSH correlator");
  add_field_options(chsh_cmd, fa);
  chsh_cmd->add_flag("--all-states", all_states, "sweep every entangled state instead of the singlet");
  add_format(chsh_cmd);

  auto* lhv_cmd = app.add_subcommand("lhv", "exact local-hidden-variable feasibility of a joint table");
  lhv_cmd->add_option("table", table_path, "JSON joint table");
  lhv_cmd->add_flag("--from-gqm", from_gqm, "build the table from a two-spin state");
  add_field_options(lhv_cmd, fa);
  lhv_cmd->add_option("--state", state_spec, "singlet or product:R,S");
  add_format(lhv_cmd);

  auto* fun_cmd = app.add_subcommand("fun", "the q=1 limit over F1");
  fun_cmd->add_option("--n", fun_n, "number of points N");
  add_format(fun_cmd);

  auto* verify_cmd = app.add_subcommand("verify-all", "run every reproduction check for one field");
  add_field_options(verify_cmd, fa);
  add_format(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;
  try {
    Report report;
    if (*field_cmd) {
      report = cmd_field(fa);
    } else if (*counts_cmd) {
      report = cmd_counts(fa, N, brute);
    } else if (*states_cmd) {
      report = cmd_states(fa, N);
    } else if (*probs_cmd) {
      report = cmd_probs(fa, r_idx, s_idx);
    } else if (*table1_cmd) {
      report = cmd_table1(fa);
    } else if (*chsh_cmd) {
      report = cmd_chsh(fa, all_states);
    } else if (*lhv_cmd) {
      report = cmd_lhv(fa, table_path, from_gqm, state_spec);
    } else if (*fun_cmd) {
      report = cmd_fun(fun_n);
    } else {
      report = cmd_verify_all(fa);
    }
    if (format == Format::Csv && !report.csv) throw UsageError("csv output is not available for " + report.command);
    emit(report, format, out);
    const bool pass = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
    return pass ? kOk : kCheckFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalInvariantViolation ? kCheckFailed : kUsage;
  }
}

}  // namespace gqm::cli
