#pragma once

// JSON encoding/decoding between the command line and the library types,
// plus the word tokenizer for group presentations.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "tsurg/intlat.hpp"
#include "tsurg/invariants.hpp"
#include "tsurg/presentation.hpp"
#include "tsurg/surgery.hpp"
#include "tsurg/threemflds.hpp"
#include "tsurg/unknotted.hpp"

namespace tsurg::cli {

using nlohmann::json;

// Malformed input (bad JSON, unknown tokens, wrong types); exits with 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);

std::int64_t int_field(const json& j, const std::string& key);
std::int64_t int_field_or(const json& j, const std::string& key, std::int64_t fallback);

// Words are written as whitespace-separated letters over the generator
// names; a trailing ' or an exponent ^k (k possibly negative) modifies the
// preceding name. "*" may be used as a separator as well.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);
std::string format_word(const Word& w, const std::vector<std::string>& generators);

GroupPresentation parse_presentation(const json& j);
ExteriorPresentation parse_exterior(const json& j);
DehnSurgeryLink parse_link(const json& j);
IntMatrix parse_matrix(const json& j);

json to_json(const Int& z);
json to_json(const IntMatrix& m);
json to_json(const AbelianGroup& g);
json to_json(const ClosedFourManifoldHomology& h);
json to_json(const SurgeryDescriptor& d);
json to_json(const EmbeddingCertificate& c);

}  // namespace tsurg::cli
