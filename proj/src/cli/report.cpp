#include "report.hpp"

#include <algorithm>
#include <ostream>

namespace nsg::cli {

Json generators_json(const NumericalSemigroup& s) { return s.minimal_generators(); }

Json semigroup_json(const NumericalSemigroup& s) {
  Json apery = Json::array({0});
  for (auto x : s.apery_vector()) apery.push_back(x);
  return {
      {"multiplicity", s.multiplicity()},
      {"apery", std::move(apery)},
      {"generators", s.minimal_generators()},
      {"gaps", s.gaps()},
      {"frobenius", s.frobenius()},
      {"genus", s.genus()},
  };
}

Json decomposition_json(const Decomposition& d) {
  Json out = Json::array();
  for (const auto& c : d.components) out.push_back(generators_json(c));
  return out;
}

Json spectrum_json(const LengthSpectrum& spectrum) {
  Json witnesses = Json::object();
  for (const auto& [length, d] : spectrum.witnesses) witnesses[std::to_string(length)] = decomposition_json(d);
  return {{"lengths", spectrum.lengths}, {"witnesses", std::move(witnesses)}};
}

Json check_json(const DecompositionCheck& check) {
  return {
      {"verdict", std::string(to_string(check.verdict))},
      {"reason", check.reason},
      {"miss_cover", check.miss_cover},
      {"miss_irredundant", check.miss_irredundant},
      {"sg_union", check.sg_union},
  };
}

Json dfamily_json(const DFamily& family) {
  Json components = Json::array();
  for (const auto& c : family.components) {
    components.push_back({{"kind", c.kind == DComponent::Kind::I ? "I" : "T"},
                          {"F", c.F},
                          {"generators", generators_json(c.semigroup)}});
  }
  Json f_primes = Json::object();
  for (const auto& [j, f] : family.F_primes) f_primes[std::to_string(j)] = f;
  Json step = nullptr;
  if (family.step) {
    step = {{"g", family.step->g}, {"j", family.step->j}};
    step["replaced_by"] = family.step->replaced_by ? Json(*family.step->replaced_by) : Json(nullptr);
  }
  return {
      {"m", family.m},
      {"ell", family.ell},
      {"length", family.components.size()},
      {"components", std::move(components)},
      {"J_prime", family.J_prime},
      {"F_primes", std::move(f_primes)},
      {"step", std::move(step)},
  };
}

namespace {

bool is_scalar_array(const Json& value) {
  if (!value.is_array()) return false;
  for (const auto& x : value) {
    if (x.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  if (is_scalar_array(value)) {
    std::string text = "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) text += ",";
      text += scalar_text(value[i]);
    }
    return text + "]";
  }
  return value.dump();
}

bool is_inline(const Json& value) {
  if (!value.is_structured()) return true;
  if (is_scalar_array(value)) return true;
  // Lists of generator lists stay on one line.
  return value.is_array() && std::all_of(value.begin(), value.end(), is_scalar_array);
}

std::string inline_text(const Json& value) {
  if (!value.is_array() || is_scalar_array(value)) return scalar_text(value);
  std::string text;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i) text += " ";
    text += "<" + scalar_text(value[i]).substr(1, scalar_text(value[i]).size() - 2) + ">";
  }
  return text.empty() ? "[]" : text;
}

}  // namespace

void write_plain(std::ostream& out, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (is_inline(item)) {
        out << pad << key << ": " << inline_text(item) << "\n";
      } else {
        out << pad << key << ":\n";
        write_plain(out, item, indent + 2);
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (is_inline(item)) {
        out << pad << "- " << inline_text(item) << "\n";
      } else {
        out << pad << "-\n";
        write_plain(out, item, indent + 2);
      }
    }
  } else {
    out << pad << inline_text(value) << "\n";
  }
}

}  // namespace nsg::cli
