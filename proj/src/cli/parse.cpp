#include <cctype>
#include <charconv>
#include <vector>

#include "nsg/cli.hpp"
#include "nsg/error.hpp"
#include "nsg/ordinary.hpp"

namespace nsg::cli {
namespace {

class Reader {
 public:
  Reader(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::invalid_argument, "cannot parse semigroup at position " + std::to_string(offset_ + pos_ + 1) +
                                          ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  std::int64_t integer() {
    skip_space();
    std::int64_t value = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) error("integer too large");
    if (ec != std::errc() || ptr == first) error("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::vector<std::int64_t> integer_list(bool allow_empty) {
    std::vector<std::int64_t> values;
    if (allow_empty && done()) return values;
    values.push_back(integer());
    while (!done()) {
      if (text_[pos_] != ',') error("expected ',' or end of input");
      ++pos_;
      values.push_back(integer());
    }
    return values;
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

NumericalSemigroup parse_semigroup(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return NumericalSemigroup::from_generators(Reader(spec, 0).integer_list(false));

  std::string_view tag = spec.substr(0, colon);
  while (!tag.empty() && std::isspace(static_cast<unsigned char>(tag.front()))) tag.remove_prefix(1);
  while (!tag.empty() && std::isspace(static_cast<unsigned char>(tag.back()))) tag.remove_suffix(1);
  Reader body(spec.substr(colon + 1), colon + 1);
  if (tag == "gaps") return NumericalSemigroup::from_gaps(body.integer_list(true));

  const auto single = [&] {
    const auto n = body.integer();
    if (!body.done()) body.error("expected a single integer");
    return n;
  };
  if (tag == "H") return H(single());
  if (tag == "T") return T_irr(single());
  if (tag == "I") return I_irr(single());
  Reader(spec, 0).error("unknown prefix '" + std::string(tag) + "' (expected gaps, H, T or I)");
}

}  // namespace nsg::cli
