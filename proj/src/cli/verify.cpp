#include "verify.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "nsg/cli.hpp"
#include "nsg/sweep.hpp"
#include "paper_expectations.hpp"

namespace nsg::cli {

std::string_view paper_expectations() { return kPaperExpectations; }

namespace {

struct Record {
  std::string kind;
  std::string selector;
  std::vector<std::string> fields;
};

std::vector<Record> load_records() {
  std::vector<Record> records;
  std::istringstream in{std::string(paper_expectations())};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    Record r;
    if (!(words >> r.kind >> r.selector)) continue;
    for (std::string w; words >> w;) r.fields.push_back(w);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::int64_t to_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::invalid_argument, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::size_t> to_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& p : split(text, ',')) out.push_back(static_cast<std::size_t>(to_int(p, "length")));
  return out;
}

class Verifier {
 public:
  Verifier(Budget& budget, unsigned threads) : budget_(budget), threads_(threads), records_(load_records()) {}

  void run(std::string_view selector) {
    if (selector == "all") {
      for (const char* s : {"example-3.6", "example-3.7", "example-3.8", "example-4.2", "remark-4.4"}) table(s);
      theorem_4_3(4, 200);
      for (const auto& [m, f] : std::vector<std::pair<int, int>>{{4, 14}, {5, 16}, {6, 18}}) sweep(m, f);
      return;
    }
    if (selector.starts_with("theorem-4.3:")) {
      const auto range = std::string(selector.substr(12));
      const auto dots = range.find("..");
      if (dots == std::string::npos) fail(ErrorKind::invalid_argument, "expected theorem-4.3:A..B");
      theorem_4_3(to_int(range.substr(0, dots), "range start"), to_int(range.substr(dots + 2), "range end"));
      return;
    }
    if (selector.starts_with("sweep:")) {
      const auto parts = split(std::string(selector.substr(6)), ':');
      if (parts.size() != 2) fail(ErrorKind::invalid_argument, "expected sweep:M:F_MAX");
      sweep(to_int(parts[0], "multiplicity"), to_int(parts[1], "Frobenius bound"));
      return;
    }
    const bool known = std::any_of(records_.begin(), records_.end(), [&](const Record& r) { return r.selector == selector; });
    if (!known) fail(ErrorKind::invalid_argument, "unknown selector '" + std::string(selector) + "'");
    table(selector);
  }

  VerifyOutcome outcome() {
    std::size_t failed = 0;
    for (const auto& c : checks_) failed += c["pass"].get<bool>() ? 0 : 1;
    VerifyOutcome out;
    out.passed = failed == 0;
    out.result = {{"checks", checks_}, {"passed", checks_.size() - failed}, {"failed", failed}};
    return out;
  }

 private:
  void add(std::string id, Json expected, Json actual, bool pass, std::string detail = {}) {
    checks_.push_back({{"id", std::move(id)},
                       {"expected", std::move(expected)},
                       {"actual", std::move(actual)},
                       {"pass", pass},
                       {"detail", std::move(detail)}});
  }

  const Record* decomposition_record(const std::string& selector, const std::string& label) const {
    for (const auto& r : records_) {
      if (r.kind == "decomposition" && r.selector == selector && r.fields.at(0) == label) return &r;
    }
    fail(ErrorKind::invalid_argument, "expectation table has no decomposition " + label);
  }

  static std::vector<NumericalSemigroup> components_of(const Record& r) {
    std::vector<NumericalSemigroup> out;
    for (const auto& c : split(r.fields.at(3), ';')) out.push_back(parse_semigroup(c));
    return out;
  }

  void table(std::string_view selector) {
    for (const auto& r : records_) {
      if (r.selector != selector) continue;
      const auto id = r.selector + "/" + r.kind + "/" + r.fields.at(0) + (r.kind == "dfamily" ? ":" + r.fields.at(1) : "");
      if (r.kind == "spectrum") {
        const auto s = parse_semigroup(r.fields.at(1));
        const auto expected = to_lengths(r.fields.at(2));
        const auto actual = length_spectrum(s, budget_).lengths;
        add(id, expected, actual, actual == expected);
      } else if (r.kind == "decomposition") {
        const auto target = parse_semigroup(r.fields.at(1));
        const auto length = static_cast<std::size_t>(to_int(r.fields.at(2), "length"));
        const auto parts = components_of(r);
        const auto check = is_decomposition(target, parts);
        const bool pass = check.verdict == Verdict::valid_irredundant && parts.size() == length;
        add(id, {{"verdict", "valid_irredundant"}, {"length", length}},
            {{"verdict", std::string(to_string(check.verdict))}, {"length", parts.size()}}, pass, check.reason);
      } else if (r.kind == "dfamily") {
        const auto m = to_int(r.fields.at(0), "multiplicity");
        const auto ell = to_int(r.fields.at(1), "ell");
        auto expected = components_of(*decomposition_record(r.selector, r.fields.at(2)));
        auto actual = D(m, ell).semigroups();
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        add(id, "same components as " + r.fields.at(2), actual == expected ? "same" : "different", actual == expected);
      } else if (r.kind == "minimum") {
        const auto m = to_int(r.fields.at(0), "multiplicity");
        const auto& cmp = r.fields.at(1);
        const auto value = static_cast<std::size_t>(to_int(r.fields.at(2), "length"));
        const auto found = minimum_decomposition(H(m), budget_).length();
        const auto bound = static_cast<std::size_t>(n_min(m));
        const bool pass = (cmp == "eq" ? found == value : found <= value) && found < bound;
        add(id, cmp + " " + std::to_string(value) + ", below n_m = " + std::to_string(bound), found, pass);
      } else {
        fail(ErrorKind::invalid_argument, "unknown expectation record kind '" + r.kind + "'");
      }
    }
  }

  void theorem_4_3(std::int64_t first, std::int64_t last) {
    if (first < 4 || last < first) fail(ErrorKind::invalid_argument, "theorem-4.3 range must satisfy 4 <= A <= B");
    std::vector<std::int64_t> failures;
    for (auto m = first; m <= last; ++m) {
      const auto lengths = d_family_lengths(m);
      std::set<std::size_t> expected;
      for (auto k = n_min(m); k <= m / 2; ++k) expected.insert(static_cast<std::size_t>(k));
      if (lengths != expected) failures.push_back(m);
    }
    add("theorem-4.3/" + std::to_string(first) + ".." + std::to_string(last), "[n_m, floor(m/2)] for every m",
        {{"mismatched_m", failures}}, failures.empty());
  }

  void sweep(std::int64_t m, std::int64_t f_max) {
    const auto report = check_interval(m, f_max, budget_, threads_);
    Json bad = Json::array();
    for (const auto& [s, lengths] : report.counterexamples) bad.push_back({{"semigroup", generators_json(s)}, {"lengths", lengths}});
    add("sweep/" + std::to_string(m) + ":" + std::to_string(f_max), "no non-interval spectra",
        {{"semigroups", report.semigroups}, {"counterexamples", bad}}, report.counterexamples.empty());
  }

  Budget& budget_;
  unsigned threads_;
  std::vector<Record> records_;
  Json checks_ = Json::array();
};

}  // namespace

VerifyOutcome verify_paper(std::string_view selector, Budget& budget, unsigned threads) {
  Verifier verifier(budget, threads);
  verifier.run(selector);
  return verifier.outcome();
}

}  // namespace nsg::cli
