#include "fbr_cli/app.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "fbr/group_spec.hpp"
#include "fbr/number_theory.hpp"
#include "fbr_cli/report.hpp"
#include "fbr_cli/verify.hpp"

namespace fbr::cli {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::string n = "all";
  std::string format = "text";
  std::string out;
  int cap = kDefaultOrderCap;
  bool catalog_all = false;
  std::string suite;
  std::string fiber_map;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "Catalog name or group file (JSON)");
  sub->add_option("--n", o.n, "Fiber order, or 'all' for every divisor of exp(G)");
  sub->add_option("--format", o.format, "json, tsv or text")->check(CLI::IsMember({"json", "tsv", "text"}));
  sub->add_option("--out", o.out, "Write the report to this file");
  sub->add_option("--cap", o.cap, "Largest accepted group order")->check(CLI::PositiveNumber);
}

std::vector<GroupPtr> load_groups(const Options& o) {
  std::vector<GroupPtr> out;
  try {
    if (o.catalog_all) {
      if (!o.group.empty()) throw ConfigError("--group and --catalog-all are mutually exclusive");
      for (const auto& name : catalog_names()) out.push_back(load_group(GroupSpec::from_catalog(name), o.cap));
    } else {
      if (o.group.empty()) throw ConfigError("--group is required");
      out.push_back(load_group(GroupSpec::from_argument(o.group), o.cap));
    }
  } catch (const GroupError& e) {
    throw ConfigError(e.what());
  }
  return out;
}

std::vector<int> fiber_orders(const Options& o, const FiniteGroup& g, std::ostream& err) {
  if (o.n == "all" || o.n == "all-divisors") return divisors(g.exponent());
  int n = 0;
  std::size_t used = 0;
  try {
    n = std::stoi(o.n, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != o.n.size() || n < 1) throw ConfigError("--n must be a positive integer or 'all', got '" + o.n + "'");
  const int norm = normalize_fiber_order(g, n);
  if (norm != n) {
    err << "warning: " << g.name() << ": n=" << n << " replaced by gcd(n, exp(G))=" << norm << '\n';
  }
  return {norm};
}

class Output {
public:
  Output(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ConfigError("cannot open '" + path + "' for writing");
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw ConfigError("write failed");
  }

private:
  std::ofstream file_;
  std::ostream* out_;
};

int run_report(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  const Format fmt = parse_format(o.format);
  std::vector<Report> reports;
  RingCache cache;
  for (const GroupPtr& g : load_groups(o)) {
    for (int n : fiber_orders(o, *g, err)) {
      RingPtr ring = cache.get(g, n);
      if (command == "basis") {
        reports.push_back(basis_report(*ring));
      } else if (command == "marks") {
        reports.push_back(marks_report(*ring));
      } else if (command == "species") {
        reports.push_back(species_report(*ring, fmt));
      } else if (command == "idempotents") {
        reports.push_back(idempotents_report(*ring, fmt));
      } else {
        reports.push_back(conductors_report(*ring));
      }
    }
  }
  Output sink(o.out, out);
  render(reports, fmt, sink.stream());
  sink.finish();
  return 0;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> suites{"thm51", "splitting", "naturality", "boltje", "lemmas"};
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end()) {
    throw ConfigError("unknown suite '" + o.suite + "' (thm51, splitting, naturality, boltje, lemmas)");
  }
  std::optional<FiberMap> f;
  if (!o.fiber_map.empty()) {
    try {
      f = FiberMap::parse(o.fiber_map);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (o.suite == "naturality" && !f) throw ConfigError("the naturality suite needs --f t,n,k");
  const Format fmt = parse_format(o.format);

  std::vector<SuiteResult> results;
  RingCache cache;
  for (const GroupPtr& g : load_groups(o)) {
    if (o.suite == "naturality") {
      results.push_back(verify_naturality(g, *f, cache));
      continue;
    }
    for (int n : fiber_orders(o, *g, err)) {
      if (o.suite == "thm51") {
        results.push_back(verify_thm51(cache.get(g, n)));
      } else if (o.suite == "splitting") {
        results.push_back(verify_splitting(cache.get(g, n)));
      } else if (o.suite == "boltje") {
        results.push_back(verify_boltje(cache.get(g, n)));
      } else {
        results.push_back(verify_lemmas(g, n, cache));
      }
    }
  }

  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  Output sink(o.out, out);
  std::ostream& s = sink.stream();
  if (fmt == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(r.to_json());
    s << nlohmann::json{{"suite", o.suite}, {"passed", ok}, {"results", arr}}.dump(2) << '\n';
  } else if (fmt == Format::Tsv) {
    s << "suite\tgroup\tn\tchecks\tfailures\tstatus\n";
    for (const auto& r : results) {
      s << r.suite << '\t' << r.group << '\t' << r.n << '\t' << r.checks << '\t' << r.failure_count << '\t'
        << (r.passed() ? "pass" : "fail") << '\n';
    }
  } else {
    for (const auto& r : results) {
      s << (r.passed() ? "PASS " : "FAIL ") << r.suite << ' ' << r.group << " n=" << r.n << " checks=" << r.checks;
      if (!r.passed()) s << " failures=" << r.failure_count;
      s << '\n';
      for (const auto& line : r.failures) s << "  counterexample: " << line << '\n';
      for (const auto& line : r.notes) s << "  " << line << '\n';
    }
    s << (ok ? "all checks passed" : "verification failed") << '\n';
  }
  sink.finish();
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibered Burnside rings of finite groups with cyclic fibers"};
  app.name("fbr");
  app.require_subcommand(1);
  Options o;

  static const std::vector<std::pair<std::string, std::string>> reports{
      {"basis", "Standard basis with stabilizer orders"},
      {"marks", "Mark matrix: rows are basis elements, columns ghost coordinates"},
      {"species", "Species table: rows are points, columns basis elements"},
      {"idempotents", "Primitive idempotents in the standard basis"},
      {"conductors", "Conductor of every primitive idempotent"}};
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const auto& [name, help] : reports) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    sub->add_flag("--catalog-all", o.catalog_all, "Run over every catalog group");
    subs.emplace_back(name, sub);
  }
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "thm51, splitting, naturality, boltje or lemmas")->required();
  add_common(verify, o);
  verify->add_flag("--catalog-all", o.catalog_all, "Run over every catalog group");
  verify->add_option("--f", o.fiber_map, "Fiber map t,n,k (zeta_t -> zeta_n^k)");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(o, out, err);
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) return run_report(name, o, out, err);
    }
    err << "error: no command given\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace fbr::cli
