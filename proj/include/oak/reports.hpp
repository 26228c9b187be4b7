#pragma once

// JSON forms of reports and character tables. Key order is fixed, so equal
// inputs serialize to identical bytes.

#include <json.hpp>

#include "oak/characters.hpp"
#include "oak/morphisms.hpp"

namespace oak {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const CharTable& t);
/// Inverse of to_json(CharTable); throws std::invalid_argument on schema errors.
CharTable char_table_from_json(const Json& j, const SymbolSet* allowed = nullptr);

Json to_json(const HomReport& r);
Json to_json(const TwistReport& r);
Json to_json(const FactorizationReport& r);
Json to_json(const FlagSets& f);
Json to_json(const UEAElement& u);      // [{monomial, coefficient}]
Json to_json(const LaurentVector& v);   // [{offset, coefficient}]

}  // namespace oak
