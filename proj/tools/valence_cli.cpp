// valence: command-line front end for the interval-valence engine.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "valence/distribution.hpp"
#include "valence/multipoly.hpp"
#include "valence/poset.hpp"
#include "valence/series_solver.hpp"
#include "valence/tamari.hpp"
#include "valence/verify.hpp"

namespace {

using namespace valence;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr std::size_t kMaxEnumerationN = 9;
constexpr std::size_t kMaxIntervalPosetN = 7;
constexpr std::size_t kMaxSeriesN = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  unsigned threads = 1;
  std::string output;  // empty: stdout

  // poly
  std::size_t n = 1;
  std::vector<std::string> specs;
  bool two_var = false;
  bool intervals = false;
  std::string format = "text";

  // series
  std::string mode = "full";
  std::size_t truncation = kDefaultTruncation;

  // verify
  std::vector<std::string> suites{"all"};
  std::size_t max_n = 7;
  bool json = false;
  bool timings = false;

  // table
  std::string pair = "y,ybar";

  // trees
  bool canopy = false;
  bool stats = false;
  bool with_q = false;
};

void require_range(const char* what, std::size_t v, std::size_t lo, std::size_t hi) {
  if (v < lo || v > hi) {
    throw UsageError(std::string(what) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (f == a) return;
  }
  throw UsageError("unsupported format '" + f + "'");
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

/// "var=int" or "var=name"; names not already present extend the universe.
MultiPoly specialize(const MultiPoly& p, const std::vector<std::string>& specs) {
  const Universe& U = p.universe();
  std::vector<std::pair<std::string, std::string>> parsed;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("bad --spec '" + s + "', expected var=value");
    std::string var = s.substr(0, eq), val = s.substr(eq + 1);
    if (!U.contains(var)) throw UsageError("unknown variable '" + var + "' in --spec");
    for (const auto& [v, _] : parsed) {
      if (v == var) throw UsageError("variable '" + var + "' specified twice");
    }
    if (val.empty()) throw UsageError("bad --spec '" + s + "'");
    parsed.emplace_back(var, val);
  }
  std::vector<std::string> names;
  auto bound = [&](const std::string& v) {
    for (const auto& [b, _] : parsed) {
      if (b == v) return true;
    }
    return false;
  };
  for (const auto& v : U.names()) {
    if (!bound(v)) names.push_back(v);
  }
  for (const auto& [_, val] : parsed) {
    if (is_identifier(val) && std::find(names.begin(), names.end(), val) == names.end()) names.push_back(val);
  }
  const Universe target(names);
  Bindings b;
  for (const auto& [var, val] : parsed) {
    if (is_identifier(val)) {
      b.emplace(var, MultiPoly::variable(target, val));
    } else {
      try {
        std::size_t used = 0;
        const long long k = std::stoll(val, &used);
        if (used != val.size()) throw std::invalid_argument(val);
        b.emplace(var, MultiPoly::constant(target, Integer(std::to_string(k))));
      } catch (const std::logic_error&) {
        throw UsageError("bad value '" + val + "' in --spec");
      }
    }
  }
  return substitute(p, b, target);
}

void emit_poly(std::ostream& os, const MultiPoly& p, const std::string& format) {
  if (format == "json") {
    os << to_json(p).dump() << '\n';
  } else {
    os << to_text(p) << '\n';
  }
}

int cmd_poly(const CliConfig& c, std::ostream& os) {
  require_range("--n", c.n, 1, kMaxEnumerationN);
  require_format(c.format, {"text", "json"});
  const TamariLattice L = tamari_lattice(c.n);
  MultiPoly p;
  if (c.two_var) {
    if (c.intervals) {
      require_range("--n with --intervals", c.n, 1, kMaxIntervalPosetN);
      p = valence_poly_D(interval_poset(L.poset).poset);
    } else {
      p = valence_poly_D(L.poset);
    }
  } else {
    if (c.intervals) throw UsageError("--intervals needs --two-var");
    StatisticsOptions opts;
    opts.threads = c.threads;
    std::vector<IntervalDegrees> degs;
    for (const auto& r : interval_statistics(L, opts)) degs.push_back(r.deg);
    p = valence_poly_DD(degs);
  }
  emit_poly(os, specialize(p, c.specs), c.format);
  return kExitOk;
}

int cmd_series(const CliConfig& c, std::ostream& os) {
  SystemMode mode;
  try {
    mode = parse_mode(c.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  require_range("--N", c.truncation, 1, kMaxSeriesN);
  require_format(c.format, {"text", "json"});
  const SolverOutput out = solve({mode, c.truncation});

  nlohmann::json checks = nlohmann::json::object();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass) {
    checks[name] = pass;
    ok = ok && pass;
  };
  if (mode == SystemMode::Full || mode == SystemMode::QAnalogue) {
    record("alternative_phi", check_alternative_phi(out));
    if (mode == SystemMode::Full) record("bridge", check_bridge(out));
  }
  std::optional<SeriesT> res;
  if (mode == SystemMode::SynchronousRestricted) res = residual(out.phi_11, synchronous_cubic());
  if (mode == SystemMode::BicubicRestricted) res = residual(out.phi_11, bicubic_quadratic());
  if (res) record("residual_zero", res->is_zero());

  if (c.format == "json") {
    nlohmann::json j;
    j["mode"] = to_string(mode);
    j["variables"] = out.phi.universe().names();
    j["phi"] = to_json(out.phi);
    j["theta"] = to_json(out.theta);
    j["phi_11"] = to_json(out.phi_11);
    j["checks"] = checks;
    os << j.dump() << '\n';
  } else {
    const bool two = has_two_catalytic_variables(mode);
    const std::string args = two ? "(u,v)" : "(u)";
    const std::string one = two ? "(1,1)" : "(1)";
    for (std::size_t k = 1; k < out.phi.order(); ++k) os << "Phi" << args << " t^" << k << ": " << to_text(out.phi[k]) << '\n';
    for (std::size_t k = 1; k < out.theta.order(); ++k) os << "Theta" << args << " t^" << k << ": " << to_text(out.theta[k]) << '\n';
    for (std::size_t k = 1; k < out.phi_11.order(); ++k) os << "Phi" << one << " t^" << k << ": " << to_text(out.phi_11[k]) << '\n';
    for (const auto& [name, pass] : checks.items()) os << "check " << name << ": " << (pass.get<bool>() ? "pass" : "FAIL") << '\n';
    if (res) {
      std::size_t first = res->order();
      for (std::size_t k = 0; k < res->order(); ++k) {
        if (!(*res)[k].is_zero()) {
          first = k;
          break;
        }
      }
      if (first == res->order()) {
        os << "residual: 0 mod t^" << res->order() << '\n';
      } else {
        os << "residual: nonzero at t^" << first << ": " << to_text((*res)[first]) << '\n';
      }
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const CliConfig& c, std::ostream& os) {
  for (const auto& s : c.suites) {
    if (!is_suite_id(s)) throw UsageError("unknown suite '" + s + "'");
  }
  Workbench wb(c.threads);
  const auto reports = run_suites(wb, c.suites, c.max_n);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.status != CheckStatus::Fail;
  if (c.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, c.timings));
    os << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      os << summary_line(r, c.timings) << '\n';
      for (const auto& d : r.details) os << "    " << d << '\n';
    }
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : reports) {
      passed += r.status == CheckStatus::Pass;
      failed += r.status == CheckStatus::Fail;
      skipped += r.status == CheckStatus::Skipped;
    }
    os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_table(const CliConfig& c, std::ostream& os) {
  require_range("--n", c.n, 1, kMaxEnumerationN);
  require_format(c.format, {"text", "csv", "json"});
  const auto comma = c.pair.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects two statistics, e.g. y,ybar");
  Stat a, b;
  try {
    a = parse_stat(c.pair.substr(0, comma));
    b = parse_stat(c.pair.substr(comma + 1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool need_q = a == Stat::Q || b == Stat::Q;
  if (need_q) require_range("--n with q", c.n, 1, kMaxChainN);
  StatisticsOptions opts;
  opts.with_q = need_q;
  opts.threads = c.threads;
  const auto recs = interval_statistics(tamari_lattice(c.n), opts);
  const DistributionTable t = distribution(recs, a, b);
  if (c.format == "csv") {
    os << to_csv(t);
  } else if (c.format == "json") {
    nlohmann::json j;
    j["n"] = c.n;
    j["rows"] = to_string(a);
    j["cols"] = to_string(b);
    j["table"] = to_json(t);
    os << j.dump() << '\n';
  } else {
    os << "rows " << to_string(a) << ", columns " << to_string(b) << '\n' << to_text(t);
  }
  return kExitOk;
}

int cmd_trees(const CliConfig& c, std::ostream& os) {
  require_range("--n", c.n, 1, kMaxEnumerationN);
  if (c.stats) {
    if (c.with_q) require_range("--n with --with-q", c.n, 1, kMaxChainN);
    const TamariLattice L = tamari_lattice(c.n);
    StatisticsOptions opts;
    opts.with_q = c.with_q;
    opts.threads = c.threads;
    write_statistics_csv(os, L, interval_statistics(L, opts));
    return kExitOk;
  }
  for (const auto& t : enumerate_trees(c.n)) {
    os << t.to_string();
    if (c.canopy) os << '\t' << canopy(t);
    os << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-valence polynomials of Tamari lattices"};
  app.require_subcommand(1);
  CliConfig c;
  app.add_option("--threads", c.threads, "Worker threads for interval statistics")->check(CLI::Range(1u, 256u));
  app.add_option("-o,--output", c.output, "Write to this file instead of stdout");

  auto* poly = app.add_subcommand("poly", "Print DD_n, optionally specialized, or a two-variable valence polynomial");
  poly->add_option("--n", c.n, "Size of the trees")->required();
  poly->add_option("--spec", c.specs, "Specialization var=int or var=name (repeatable)");
  poly->add_flag("--two-var", c.two_var, "D(a,abar) of Tam_n instead of DD_n");
  poly->add_flag("--intervals", c.intervals, "With --two-var: D(a,abar) of Int(Tam_n)");
  poly->add_option("--format", c.format, "text or json");

  auto* series = app.add_subcommand("series", "Solve the functional equations to a given order in t");
  series->add_option("--mode", c.mode, "full, q, canopy, sync or bicubic");
  series->add_option("--N", c.truncation, "Exclusive order in t");
  series->add_option("--format", c.format, "text or json");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", c.suites, "Suite id or all (repeatable)");
  verify->add_option("--max-n", c.max_n, "Largest n; clamped per suite");
  verify->add_flag("--json", c.json, "JSON array of reports");
  verify->add_flag("--timings", c.timings, "Include wall times");

  auto* table = app.add_subcommand("table", "Distribution table of two interval statistics");
  table->add_option("--n", c.n, "Size of the trees")->required();
  table->add_option("--pair", c.pair, "Two of x,y,ybar,xbar,q,ll,rr, comma separated");
  table->add_option("--format", c.format, "text, csv or json");

  auto* trees = app.add_subcommand("trees", "List trees or per-interval statistics");
  trees->add_option("--n", c.n, "Size of the trees")->required();
  trees->add_flag("--canopy", c.canopy, "Print each canopy");
  trees->add_flag("--stats", c.stats, "CSV of per-interval statistics");
  trees->add_flag("--with-q", c.with_q, "With --stats: include the longest chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ofstream file;
  if (!c.output.empty()) {
    file.open(c.output);
    if (!file) {
      std::cerr << "error: cannot open " << c.output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& os = c.output.empty() ? std::cout : file;

  try {
    if (*poly) return cmd_poly(c, os);
    if (*series) return cmd_series(c, os);
    if (*verify) return cmd_verify(c, os);
    if (*table) return cmd_table(c, os);
    if (*trees) return cmd_trees(c, os);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
