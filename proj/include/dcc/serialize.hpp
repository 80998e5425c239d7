#pragma once

// JSON and plain-text views of cobordisms, sums, matrices and matrix forms.

#include <string>

#include <nlohmann/json.hpp>

#include "dcc/interp.hpp"

namespace dcc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const ObjectSeq& a);
Json to_json(const GCob& f, const Alphabet& al);
Json to_json(const CobSum& x, const Alphabet& al);
/// Includes the "schema" field.
Json to_json(const MatArrow& m, const Alphabet& al);
Json to_json(const MatrixForm& m, const Alphabet& al);

ObjectSeq object_seq_from_json(const Json& j);
GCob gcob_from_json(const Json& j, const Alphabet& al);
CobSum cobsum_from_json(const Json& j, const Alphabet& al);

/// One-line human readable forms, e.g. "s0→t0 b1; ○(b2)" or "0".
std::string describe(const GCob& f, const Alphabet& al);
std::string describe(const CobSum& x, const Alphabet& al);

}  // namespace dcc
