#include "nsg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "nsg/classify.hpp"
#include "nsg/decompose.hpp"
#include "nsg/ordinary.hpp"
#include "nsg/sweep.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace nsg::cli {
namespace {

struct Options {
  bool json = false;
  bool timing = false;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;

  std::string spec;
  std::vector<std::string> components;
  std::int64_t m = 0;
  std::int64_t f_max = 0;
  std::optional<std::int64_t> ell;
  bool all = false;
  bool min = false;
  bool interval = false;
  bool msbound = false;
  std::string selector = "all";
};

struct Outcome {
  Json input;
  Json result;
  int code = kOk;
};

std::uint64_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("NSG_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) fail(ErrorKind::invalid_argument, "NSG_BUDGET must be a positive integer");
    return value;
  }
  return kDefaultBudget;
}

Json spec_input(const std::string& spec, const NumericalSemigroup& s) {
  return {{"spec", spec}, {"semigroup", s.to_string()}};
}

Outcome cmd_info(const Options& o) {
  const auto s = parse_semigroup(o.spec);
  const auto report = classify(s);
  Json result = {{"semigroup", semigroup_json(s)}, {"kind", std::string(to_string(report.kind))}};
  if (s.is_naturals()) {
    result["pseudo_frobenius"] = Json::array();
    result["special_gaps"] = Json::array();
    result["type"] = 0;
  } else {
    result["pseudo_frobenius"] = pseudo_frobenius(s);
    result["special_gaps"] = special_gaps(s);
    result["type"] = type(s);
  }
  result["pseudosymmetric_index"] = report.pseudosymmetric_index ? Json(*report.pseudosymmetric_index) : Json(nullptr);
  if (report.reducible_witness) {
    result["reducible_witness"] = {generators_json(report.reducible_witness->first),
                                   generators_json(report.reducible_witness->second)};
  } else {
    result["reducible_witness"] = nullptr;
  }
  return {spec_input(o.spec, s), std::move(result)};
}

Outcome cmd_lengths(const Options& o, Budget& budget) {
  const auto s = parse_semigroup(o.spec);
  const auto spectrum = length_spectrum(s, budget);
  Json result = spectrum_json(spectrum);
  result["is_interval"] = spectrum.is_interval();
  return {spec_input(o.spec, s), std::move(result)};
}

Outcome cmd_decompose(const Options& o, Budget& budget) {
  const auto s = parse_semigroup(o.spec);
  Json input = spec_input(o.spec, s);
  if (o.components.empty()) {
    const auto d = minimum_decomposition(s, budget);
    return {std::move(input), {{"minimum_length", d.length()}, {"decomposition", decomposition_json(d)}}};
  }
  std::vector<NumericalSemigroup> parts;
  Json echoed = Json::array();
  for (const auto& c : o.components) {
    parts.push_back(parse_semigroup(c));
    echoed.push_back(parts.back().to_string());
  }
  input["components"] = std::move(echoed);
  Json result = check_json(is_decomposition(s, parts));
  result["length"] = parts.size();
  return {std::move(input), std::move(result)};
}

Outcome cmd_ordinary(const Options& o, Budget& budget) {
  Json input = {{"m", o.m}};
  const int modes = (o.ell ? 1 : 0) + (o.all ? 1 : 0) + (o.min ? 1 : 0);
  if (modes > 1) fail(ErrorKind::invalid_argument, "choose one of --ell, --all, --min");
  if (o.ell) {
    input["mode"] = "ell";
    input["ell"] = *o.ell;
    return {std::move(input), dfamily_json(D(o.m, *o.ell))};
  }
  if (o.min) {
    input["mode"] = "min";
    if (o.m < 2) fail(ErrorKind::invalid_argument, "m must be at least 2");
    const auto d = minimum_decomposition(H(o.m), budget);
    Json result = {{"minimum_length", d.length()}, {"decomposition", decomposition_json(d)}};
    result["n_m"] = o.m >= 4 ? Json(n_min(o.m)) : Json(nullptr);
    return {std::move(input), std::move(result)};
  }
  input["mode"] = "all";
  const auto lengths = d_family_lengths(o.m);
  const auto n = n_min(o.m);
  std::vector<std::size_t> expected;
  for (auto k = n; k <= o.m / 2; ++k) expected.push_back(static_cast<std::size_t>(k));
  const std::vector<std::size_t> found(lengths.begin(), lengths.end());
  Outcome out{std::move(input), {{"lengths", found}, {"n_m", n}, {"half_m", o.m / 2}, {"matches_interval", found == expected}}};
  if (found != expected) out.code = kMismatch;
  return out;
}

Outcome cmd_check(const Options& o, Budget& budget) {
  if (o.interval == o.msbound) fail(ErrorKind::invalid_argument, "choose exactly one of --interval, --msbound");
  Json input = {{"m", o.m}, {"f_max", o.f_max}, {"mode", o.interval ? "interval" : "msbound"}};
  if (o.interval) {
    const auto report = check_interval(o.m, o.f_max, budget, o.threads);
    Json bad = Json::array();
    for (const auto& [s, lengths] : report.counterexamples) {
      bad.push_back({{"semigroup", generators_json(s)}, {"lengths", lengths}});
    }
    Json census = Json::array();
    for (const auto& [lengths, count] : report.census) census.push_back({{"lengths", lengths}, {"count", count}});
    Outcome out{std::move(input),
                {{"semigroups", report.semigroups}, {"counterexamples", std::move(bad)}, {"census", std::move(census)}}};
    if (!report.counterexamples.empty()) out.code = kMismatch;
    return out;
  }
  const auto report = check_msbound(o.m, o.f_max, budget, o.threads);
  Json bad = Json::array();
  for (const auto& v : report.violations) {
    bad.push_back({{"semigroup", generators_json(v.semigroup)},
                   {"oversemigroup", generators_json(v.oversemigroup)},
                   {"mset_size", v.mset_size}});
  }
  Outcome out{std::move(input),
              {{"semigroups", report.semigroups},
               {"pairs_checked", report.pairs_checked},
               {"max_mset_size", report.max_mset_size},
               {"violations", std::move(bad)}}};
  if (!report.violations.empty()) out.code = kMismatch;
  return out;
}

Outcome cmd_verify(const Options& o, Budget& budget) {
  auto verdict = verify_paper(o.selector, budget, o.threads);
  Outcome out{{{"selector", o.selector}}, std::move(verdict.result)};
  if (!verdict.passed) out.code = kMismatch;
  return out;
}

// Echo of the request before any parsing, used when a command fails.
Json raw_input(const std::string& command, const Options& o) {
  if (command == "info" || command == "lengths") return {{"spec", o.spec}};
  if (command == "decompose") return {{"spec", o.spec}, {"components", o.components}};
  if (command == "ordinary") return {{"m", o.m}};
  if (command == "check") return {{"m", o.m}, {"f_max", o.f_max}};
  return {{"selector", o.selector}};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::budget_exceeded: return kBudget;
    case ErrorKind::search_failed: return kMismatch;
    case ErrorKind::internal_assertion: return kInternal;
    default: return kUsage;
  }
}

void emit(std::ostream& out, const Options& o, const Json& report) {
  if (o.json) {
    out << report.dump(2) << "\n";
  } else {
    write_plain(out, report);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical semigroup decompositions into irreducibles", "nsg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("nsg ") + kSchemaVersion);

  const auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit the report as JSON");
    sub->add_option("--budget", o.budget, "Node budget per enumeration (default: NSG_BUDGET or 5000000)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "Worker threads for sweeps")->check(CLI::Range(1u, 256u));
    sub->add_flag("--timing", o.timing, "Include elapsed time in the report");
  };
  const auto spec = [&](CLI::App* sub) { sub->add_option("spec", o.spec, "Semigroup: 5,6,7 | gaps:1,2,4 | H:m | T:F | I:F")->required(); };

  auto* info = app.add_subcommand("info", "Invariants and classification");
  spec(info);
  common(info);
  auto* lengths = app.add_subcommand("lengths", "Set of decomposition lengths with witnesses");
  spec(lengths);
  common(lengths);
  auto* decompose = app.add_subcommand("decompose", "Check a decomposition, or find a minimum one");
  spec(decompose);
  decompose->add_option("components", o.components, "Proposed components");
  common(decompose);
  auto* ordinary = app.add_subcommand("ordinary", "Decompositions of the ordinary semigroup H_m");
  ordinary->add_option("m", o.m, "Multiplicity")->required();
  ordinary->add_option("--ell", o.ell, "Build D(m, ell)");
  ordinary->add_flag("--all", o.all, "Lengths of the whole D family (default)");
  ordinary->add_flag("--min", o.min, "True minimum decomposition length");
  common(ordinary);
  auto* check = app.add_subcommand("check", "Exhaustive sweep over a multiplicity");
  check->add_option("m", o.m, "Multiplicity")->required();
  check->add_option("f_max", o.f_max, "Largest Frobenius number")->required();
  check->add_flag("--interval", o.interval, "Every spectrum is an interval");
  check->add_flag("--msbound", o.msbound, "2 #M_S(T) <= m when #SG(S) = m - 1");
  common(check);
  auto* verify = app.add_subcommand("verify-paper", "Reproduce the reference examples");
  verify->add_option("selector", o.selector,
                     "all | example-3.6 | example-3.7 | example-3.8 | example-4.2 | remark-4.4 | theorem-4.3:A..B | "
                     "sweep:M:F");
  common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Json report = {{"schema_version", kSchemaVersion}, {"command", command}};
  try {
    Budget budget(resolve_budget(o));
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    if (command == "info") outcome = cmd_info(o);
    else if (command == "lengths") outcome = cmd_lengths(o, budget);
    else if (command == "decompose") outcome = cmd_decompose(o, budget);
    else if (command == "ordinary") outcome = cmd_ordinary(o, budget);
    else if (command == "check") outcome = cmd_check(o, budget);
    else outcome = cmd_verify(o, budget);

    Json stats = {{"budget_limit", budget.limit()}, {"nodes_spent", budget.spent()}, {"threads", o.threads}};
    if (o.timing) {
      stats["elapsed_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    report["input"] = std::move(outcome.input);
    report["result"] = std::move(outcome.result);
    report["stats"] = std::move(stats);
    emit(out, o, report);
    if (outcome.code == kMismatch) err << "nsg: " << command << ": mismatch or counterexample found\n";
    return outcome.code;
  } catch (const Error& e) {
    err << "nsg: " << to_string(e.kind()) << ": " << e.what() << "\n";
    if (o.json) {
      report["input"] = raw_input(command, o);
      report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      out << report.dump(2) << "\n";
    }
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "nsg: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace nsg::cli
