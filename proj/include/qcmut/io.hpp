#pragma once

#include <string>

#include <json.hpp>

#include "qcmut/int_matrix.hpp"

namespace qcmut {

// Plain-text matrix: one row per line, whitespace-separated integers. Blank
// lines and '#' comments are ignored. Throws on ragged or non-square input.
IntMatrix parse_matrix_text(const std::string& text);

// Structured form {"n": <int>, "entries": [[...], ...]}. Entries are JSON
// numbers when they fit in 64 bits and decimal strings otherwise; the parser
// accepts both, so matrices round-trip losslessly.
IntMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const IntMatrix& m);

// CLI argument: a readable file (or "-" for stdin), a JSON array such as
// [[2,1],[1,2]], or inline rows separated by ';' ("2 1; 1 2").
IntMatrix load_matrix_arg(const std::string& arg);

}  // namespace qcmut
