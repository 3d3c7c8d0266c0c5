#pragma once

#include <string>

#include "json.hpp"
#include "tlf/context.hpp"
#include "tlf/gfp_matrix.hpp"

namespace tlf {

// Insertion-ordered documents: field order is part of the output contract,
// since identical runs must emit byte-identical reports.
using Json = nlohmann::ordered_json;

enum class OutputFormat { kJson, kCsv, kText };

// "json" | "csv" | "text"; anything else is a ParseError.
OutputFormat parse_output_format(const std::string& s);

// {"p": .., "e": .., "m": .., "t_window": "lo:hi", "pi_window": "lo:hi",
//  "seed": ..}
Json config_json(const Context& ctx);

// Row-major array of arrays of residues in [0, p).
Json matrix_json(const GfpMat& m);

// Versioned envelope: {"v": 1, "command": cmd, "config": {...}}; callers
// append their payload fields.
Json envelope(const std::string& cmd, const Context& ctx);

// Render a document in the requested format, trailing newline included.
//   json: indented dump.
//   text: "key: value" lines; nested objects indent, matrices print row-wise.
//   csv:  "key,value" lines; an array of arrays becomes bare rows, an array
//         of objects becomes a header line plus one line per object.
std::string emit_doc(const Json& doc, OutputFormat fmt);

}  // namespace tlf
