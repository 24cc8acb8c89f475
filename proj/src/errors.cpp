#include "corrideal/errors.hpp"

namespace corrideal {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::fullness_violation: return "FullnessViolation";
    case errc::malformed_number: return "NegativeOrMalformedNumber";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::not_positively_invariant: return "NotPositivelyInvariant";
    case errc::not_t_pair: return "NotTPair";
    case errc::not_o_pair: return "NotOPair";
    case errc::not_a_bimodule: return "NotABimodule";
    case errc::not_compactly_acting: return "NotCompactlyActing";
    case errc::not_row_finite: return "NotRowFinite";
    case errc::not_acyclic: return "NotAcyclic";
    case errc::size_limit: return "SizeLimit";
    case errc::schema_error: return "SchemaError";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IOError";
    case errc::overflow: return "ArithmeticOverflow";
  }
  return "UnknownError";
}

}  // namespace corrideal
