#include "qcmut/io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qcmut {

namespace {

Int parse_int(const std::string& token) {
  try {
    return Int(token);
  } catch (const std::invalid_argument&) {
    throw ValidationError("BadInteger", "not an integer: '" + token + "'");
  }
}

IntMatrix rows_to_matrix(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) throw ValidationError("EmptyMatrix", "matrix input has no rows");
  const size_t width = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != width)
      throw ValidationError("RaggedRows", "rows have unequal lengths");
  if (width != rows.size())
    throw ValidationError("NotSquare", "matrix must be square: " + std::to_string(rows.size()) +
                                           " rows of length " + std::to_string(width));
  return IntMatrix::from_rows(rows);
}

}  // namespace

IntMatrix parse_matrix_text(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string token;
    while (ls >> token) row.push_back(parse_int(token));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows_to_matrix(rows);
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  const nlohmann::json* entries = nullptr;
  if (j.is_array()) {
    entries = &j;
  } else if (j.is_object() && j.contains("entries")) {
    entries = &j["entries"];
  } else {
    throw ValidationError("BadJson", "expected an array of rows or {\"n\", \"entries\"}");
  }
  std::vector<std::vector<Int>> rows;
  for (const auto& jrow : *entries) {
    if (!jrow.is_array()) throw ValidationError("BadJson", "entries must be an array of rows");
    std::vector<Int> row;
    for (const auto& v : jrow) {
      if (v.is_number_integer())
        row.push_back(Int(static_cast<long>(v.get<int64_t>())));
      else if (v.is_string())
        row.push_back(parse_int(v.get<std::string>()));
      else
        throw ValidationError("BadJson", "entries must be integers or decimal strings");
    }
    rows.push_back(std::move(row));
  }
  IntMatrix m = rows_to_matrix(rows);
  if (j.is_object() && j.contains("n") && j["n"].get<int>() != m.n())
    throw ValidationError("BadJson", "field n disagrees with the entry grid");
  return m;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.n(); ++j) {
      const Int& v = m.at(i, j);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"n", m.n()}, {"entries", std::move(entries)}};
}

IntMatrix load_matrix_arg(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else if (std::error_code ec; std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    if (!file) throw ValidationError("Unreadable", "cannot open file: " + arg);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  } else {
    text = arg;
  }

  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (!trimmed.empty() && (trimmed.front() == '[' || trimmed.front() == '{')) {
    nlohmann::json j = nlohmann::json::parse(trimmed, nullptr, false);
    if (j.is_discarded()) throw ValidationError("BadJson", "malformed JSON matrix");
    return matrix_from_json(j);
  }
  // inline rows may use ';' instead of newlines
  for (char& c : text)
    if (c == ';') c = '\n';
  return parse_matrix_text(text);
}

}  // namespace qcmut
