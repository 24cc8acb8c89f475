#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "corrideal/constructions.hpp"

namespace corrideal {

/// Parses an input document (direct or graph form) into a validated
/// correspondence. Errors: ParseError (bad JSON), SchemaError (wrong
/// shape, unknown keys), plus validation errors.
correspondence parse_input(const std::string& text);

/// Emits a correspondence as a direct-form input document; parsing the
/// result yields an identical correspondence.
nlohmann::ordered_json emit_document(const correspondence& x);

/// Parses a comma-separated label list into an ideal set ("" = empty set).
/// Errors: UnknownLabel.
ideal_set parse_label_set(const block_algebra& a, const std::string& csv);

}  // namespace corrideal
