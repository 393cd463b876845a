#include "charvar/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "charvar/batch.hpp"
#include "charvar/explore.hpp"
#include "charvar/json_io.hpp"
#include "charvar/reconstruct.hpp"
#include "charvar/wirtinger.hpp"

namespace charvar {

namespace {

struct Options {
  std::string t;
  std::string component;
  int samples = -1;
  std::uint64_t seed = 0;
  double tol = -1.0;
  int attempts = 200;
  std::string out;
  std::string format = "json";
  bool inject_fault = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json report;
  Table table;
  int code = 0;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Complex parse_t(const std::string& text, Complex fallback) {
  if (text.empty()) return fallback;
  const auto z = parse_complex(text);
  if (!z) throw UsageError("cannot parse complex value '" + text + "'");
  return *z;
}

std::vector<ComponentId> selected(const Options& o) {
  if (o.component.empty()) return {kAllComponents.begin(), kAllComponents.end()};
  const auto id = parse_component(o.component);
  if (!id) throw UsageError("unknown component '" + o.component + "'");
  return {*id};
}

std::vector<std::string> vector_cells(const TraceVector& v) {
  std::vector<std::string> cells;
  for (Complex z : v.as_array()) {
    cells.push_back(num(z.real()));
    cells.push_back(num(z.imag()));
  }
  return cells;
}

std::vector<std::string> vector_header() {
  std::vector<std::string> h;
  for (const char* n : TraceVector::kNames) {
    h.push_back(std::string(n) + "_re");
    h.push_back(std::string(n) + "_im");
  }
  return h;
}

Outcome cmd_catalog(const Options& o) {
  const Complex t = parse_t(o.t, 2.0);
  const double tol = o.tol > 0 ? o.tol : kMembershipTol;
  Outcome res;
  res.report = Json::array();
  res.table.header = {"id", "branch"};
  for (auto& h : vector_header()) res.table.header.push_back(h);
  res.table.header.push_back("max_residual");
  for (ComponentId id : selected(o)) {
    for (const ComponentSample& s : sample_component(id, t)) {
      res.report.push_back(to_json(s));
      const double m = membership_max(id, s.vector);
      if (m > tol) res.code = 1;
      std::vector<std::string> row{to_string(id), std::to_string(s.branch)};
      for (auto& c : vector_cells(s.vector)) row.push_back(c);
      row.push_back(num(m));
      res.table.rows.push_back(std::move(row));
    }
  }
  return res;
}

struct VerifyItem {
  ComponentId id;
  int branch;
  Complex t;
  std::string path;
  double relator, trace, membership;
  bool pass;
};

Outcome cmd_verify(const Options& o) {
  const std::vector<ComponentId> ids = selected(o);
  const double tol = o.tol > 0 ? o.tol : kRelatorTol;
  std::vector<std::pair<ComponentId, Complex>> jobs;
  if (!o.t.empty()) {
    const Complex t = parse_t(o.t, 0.0);
    for (ComponentId id : ids) {
      if (!admissible(id, t))
        throw Error(Errc::ExcludedParameter, std::string("t is excluded for ") + to_string(id));
      jobs.emplace_back(id, t);
    }
  } else {
    const int n = o.samples >= 0 ? o.samples : 10;
    for (ComponentId id : ids)
      for (int k = 0; k < n; ++k) {
        Rng rng = rng_stream(o.seed, 1000u * static_cast<std::uint64_t>(id) + static_cast<std::uint64_t>(k));
        jobs.emplace_back(id, random_admissible_t(id, rng));
      }
  }

  std::vector<std::vector<VerifyItem>> slots(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto [id, t] = jobs[j];
    std::vector<ComponentSample> samples;
    try {
      samples = sample_component(id, t);
    } catch (const Error& e) {
      slots[j].push_back({id, -1, t, errc_name(e.code()), std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), false});
    }
    for (const ComponentSample& s : samples) {
      VerifyItem it{id, s.branch, t, "none", std::numeric_limits<double>::infinity(),
                    max_normalized(trace_equation_residuals(s.vector)), membership_max(id, s.vector), false};
      try {
        const Realization r = realize_character(s.vector);
        it.path = to_string(r.path);
        it.relator = is_representation(r.quadruple).residual;
      } catch (const Error& e) {
        it.path = errc_name(e.code());
      }
      it.pass = it.relator <= tol && it.trace <= kTraceEquationTol && it.membership <= kMembershipTol;
      slots[j].push_back(it);
    }
  }

  Outcome res;
  Json items = Json::array();
  res.table.header = {"id", "branch", "t_re", "t_im", "path", "relator", "trace_equations", "membership", "pass"};
  double rmax = 0.0, rsum = 0.0;
  int count = 0, failed = 0;
  for (const auto& slot : slots)
    for (const VerifyItem& it : slot) {
      items.push_back(Json{{"id", to_string(it.id)}, {"branch", it.branch}, {"t", complex_to_json(it.t)},
                           {"path", it.path}, {"relator", it.relator}, {"trace_equations", it.trace},
                           {"membership", it.membership}, {"pass", it.pass}});
      res.table.rows.push_back({to_string(it.id), std::to_string(it.branch), num(it.t.real()), num(it.t.imag()),
                                it.path, num(it.relator), num(it.trace), num(it.membership),
                                it.pass ? "true" : "false"});
      ++count;
      if (!it.pass) ++failed;
      rmax = std::max(rmax, it.relator);
      rsum += it.relator;
    }
  res.report = Json{{"command", "verify"},
                    {"seed", o.seed},
                    {"tol", tol},
                    {"items", items},
                    {"summary", Json{{"items", count},
                                     {"failed", failed},
                                     {"relator_max", rmax},
                                     {"relator_mean", count ? rsum / count : 0.0}}},
                    {"pass", failed == 0}};
  res.code = failed == 0 ? 0 : 1;
  return res;
}

Outcome cmd_parabolic(const Options&) {
  const CensusReport c = enumerate_parabolic();
  constexpr std::array<int, 10> expected{4, 4, 4, 4, 2, 4, 1, 1, 1, 1};
  Outcome res;
  Json counts = Json::object();
  for (std::size_t k = 0; k < kAllComponents.size(); ++k) counts[to_string(kAllComponents[k])] = c.counts[k];
  Json samples = Json::array();
  res.table.header = {"id", "branch"};
  for (auto& h : vector_header()) res.table.header.push_back(h);
  for (const ComponentSample& s : c.samples) {
    samples.push_back(to_json(s));
    std::vector<std::string> row{to_string(s.id), std::to_string(s.branch)};
    for (auto& cell : vector_cells(s.vector)) row.push_back(cell);
    res.table.rows.push_back(std::move(row));
  }
  const bool ok = c.total == 26 && c.counts == expected;
  res.report = Json{{"command", "parabolic"}, {"total", c.total}, {"counts", counts}, {"samples", samples}, {"pass", ok}};
  res.code = ok ? 0 : 1;
  return res;
}

Outcome cmd_identities(const Options& o) {
  const int n = o.samples >= 0 ? o.samples : 500;
  const IdentityReport r = identity_battery(o.seed, n, o.inject_fault);
  Outcome res;
  res.report = Json{{"command", "identities"},
                    {"seed", o.seed},
                    {"n", r.n},
                    {"inject_fault", r.fault_injected},
                    {"type1_max", r.type1},
                    {"type2_max", r.type2},
                    {"det_diamond_max", r.det_diamond},
                    {"cayley_hamilton_max", r.cayley_hamilton},
                    {"xyx_max", r.xyx},
                    {"anticommutator_max", r.anticommutator},
                    {"pairs", r.pairs},
                    {"oracle_disagreements", r.oracle_disagreements},
                    {"pass", r.pass}};
  res.table.header = {"n", "inject_fault", "type1_max", "type2_max", "det_diamond_max", "cayley_hamilton_max",
                      "xyx_max", "anticommutator_max", "pairs", "oracle_disagreements", "pass"};
  res.table.rows.push_back({std::to_string(r.n), r.fault_injected ? "true" : "false", num(r.type1), num(r.type2),
                            num(r.det_diamond), num(r.cayley_hamilton), num(r.xyx), num(r.anticommutator),
                            std::to_string(r.pairs), std::to_string(r.oracle_disagreements),
                            r.pass ? "true" : "false"});
  res.code = r.pass ? 0 : 1;
  return res;
}

Outcome cmd_explore(const Options& o) {
  const Complex t = parse_t(o.t, 3.0);
  if (o.attempts < 0) throw UsageError("--attempts must be non-negative");
  const ExploreReport r = explore_solve(t, o.seed, o.attempts);
  Outcome res;
  Json hist = Json::object();
  for (const auto& [label, n] : r.histogram) hist[label] = n;
  Json points = Json::array();
  res.table.header = {"attempt", "iterations", "label", "membership"};
  for (auto& h : vector_header()) res.table.header.push_back(h);
  int unclassified = 0;
  for (const ExplorePoint& p : r.converged) {
    if (p.cls.label == "unclassified") ++unclassified;
    points.push_back(Json{{"attempt", p.attempt}, {"iterations", p.iterations}, {"label", p.cls.label},
                          {"membership", p.cls.membership}, {"vector", to_json(p.vector)}});
    std::vector<std::string> row{std::to_string(p.attempt), std::to_string(p.iterations), p.cls.label,
                                 num(p.cls.membership)};
    for (auto& c : vector_cells(p.vector)) row.push_back(c);
    res.table.rows.push_back(std::move(row));
  }
  res.report = Json{{"command", "explore"},
                    {"t", complex_to_json(t)},
                    {"seed", o.seed},
                    {"attempts", o.attempts},
                    {"converged", r.converged.size()},
                    {"histogram", hist},
                    {"points", points},
                    {"pass", unclassified == 0}};
  res.code = unclassified == 0 ? 0 : 1;
  return res;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_table(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << csv_field(cells[k]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void apply_thread_cap() {
  const char* env = std::getenv("CHARVAR_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw UsageError("CHARVAR_THREADS must be a positive integer");
  omp_set_num_threads(static_cast<int>(n));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SL(2,C) character variety of the 8_18 knot group"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the report to this file");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto* catalog = app.add_subcommand("catalog", "all branches of each component at t");
  catalog->add_option("--t", o.t, "generator trace, e.g. 3 or 2+1i (default 2)");
  catalog->add_option("--component", o.component, "restrict to one component");
  catalog->add_option("--tol", o.tol, "membership tolerance");
  common(catalog);

  auto* verify = app.add_subcommand("verify", "sample, realize and check relators");
  verify->add_option("--t", o.t, "generator trace (default: random admissible values)");
  verify->add_option("--component", o.component, "restrict to one component");
  verify->add_option("--samples", o.samples, "random t values per component (default 10)");
  verify->add_option("--seed", o.seed, "random seed (default 0)");
  verify->add_option("--tol", o.tol, "relator tolerance (default 1e-7)");
  common(verify);

  auto* parabolic = app.add_subcommand("parabolic", "classes at t = 2");
  common(parabolic);

  auto* identities = app.add_subcommand("identities", "universal identity battery");
  identities->add_option("--samples", o.samples, "random quadruples (default 500)");
  identities->add_option("--seed", o.seed, "random seed (default 0)");
  identities->add_flag("--inject-fault", o.inject_fault, "perturb s12 before checking the relations");
  common(identities);

  auto* explore = app.add_subcommand("explore", "Newton probe from random starts");
  explore->add_option("--t", o.t, "generator trace (default 3)");
  explore->add_option("--seed", o.seed, "random seed (default 0)");
  explore->add_option("--attempts", o.attempts, "random starts (default 200)");
  common(explore);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    apply_thread_cap();
    if (*catalog) res = cmd_catalog(o);
    else if (*verify) res = cmd_verify(o);
    else if (*parabolic) res = cmd_parabolic(o);
    else if (*identities) res = cmd_identities(o);
    else res = cmd_explore(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::ExcludedParameter || e.code() == Errc::InvalidArgument ? 2 : 1;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot open " << o.out << "\n";
      return 2;
    }
  }
  std::ostream& os = o.out.empty() ? out : file;
  if (o.format == "csv") write_table(os, res.table);
  else os << res.report.dump(2) << '\n';

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "elapsed: " << secs << " s\n";
  return res.code;
}

}  // namespace charvar
