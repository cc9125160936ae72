#pragma once

// Serialized form of a bigraded table: JSON with sorted keys, CSV, and an
// aligned plain-text table.

#include "hhmf/table.hpp"

#include <string>
#include <vector>

namespace hhmf {

inline constexpr const char* kVersion = "0.1.0";

struct OutputRow {
  std::int64_t t = 0;
  std::int64_t s = 0;
  std::int64_t dim = 0;
  std::vector<std::string> labels;

  friend bool operator==(const OutputRow&, const OutputRow&) = default;
};

struct OutputDocument {
  std::string family;
  int rank = 0;
  int n = 0;
  std::int64_t t_min = 0;
  std::int64_t t_max = 0;
  bool certified = false;
  std::string version = kVersion;
  std::vector<std::string> notes;
  std::vector<OutputRow> rows;  // sorted by (t, s)

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

OutputDocument to_document(const BigradedTable& table, bool with_labels);
// Dimensions only; labels are not reconstructed.
BigradedTable to_table(const OutputDocument& doc);

std::string to_json(const OutputDocument& doc);
// Throws ModelError on malformed input.
OutputDocument document_from_json(const std::string& text);
std::string to_csv(const OutputDocument& doc);
std::string to_pretty(const OutputDocument& doc, const std::string& title = "HH");

}  // namespace hhmf
