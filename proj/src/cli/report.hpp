#pragma once

#include <iosfwd>
#include <json.hpp>

#include "nsg/classify.hpp"
#include "nsg/decompose.hpp"
#include "nsg/ordinary.hpp"
#include "nsg/semigroup.hpp"

namespace nsg::cli {

using Json = nlohmann::json;

Json semigroup_json(const NumericalSemigroup& s);
Json generators_json(const NumericalSemigroup& s);
Json decomposition_json(const Decomposition& d);
Json spectrum_json(const LengthSpectrum& spectrum);
Json check_json(const DecompositionCheck& check);
Json dfamily_json(const DFamily& family);

/// Indented "key: value" rendering of a report, ASCII only.
void write_plain(std::ostream& out, const Json& value, int indent = 0);

}  // namespace nsg::cli
