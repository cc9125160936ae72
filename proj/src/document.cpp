#include "hhmf/document.hpp"

#include "hhmf/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hhmf {

OutputDocument to_document(const BigradedTable& table, bool with_labels) {
  OutputDocument doc;
  doc.family = table.meta.family;
  doc.rank = table.meta.rank;
  doc.n = table.meta.n;
  doc.t_min = table.meta.window.lo;
  doc.t_max = table.meta.window.hi;
  doc.certified = table.meta.certified;
  doc.notes = table.meta.warnings;
  for (const auto& [k, c] : table.cells()) {
    OutputRow row{k.first, k.second, c.dim, {}};
    if (with_labels) {
      for (const auto& l : c.labels) row.labels.push_back(l.text);
      std::sort(row.labels.begin(), row.labels.end());
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

BigradedTable to_table(const OutputDocument& doc) {
  BigradedTable table;
  table.meta.family = doc.family;
  table.meta.rank = doc.rank;
  table.meta.n = doc.n;
  table.meta.window = {doc.t_min, doc.t_max};
  table.meta.certified = doc.certified;
  for (const auto& r : doc.rows) table.add_dimension(r.t, r.s, r.dim);
  return table;
}

std::string to_json(const OutputDocument& doc) {
  nlohmann::json meta = {{"family", doc.family}, {"rank", doc.rank},       {"n", doc.n},
                         {"t_min", doc.t_min},   {"t_max", doc.t_max},     {"certified", doc.certified},
                         {"version", doc.version}};
  if (!doc.notes.empty()) meta["notes"] = doc.notes;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : doc.rows) rows.push_back({{"t", r.t}, {"s", r.s}, {"dim", r.dim}, {"labels", r.labels}});
  return nlohmann::json{{"meta", meta}, {"rows", rows}}.dump(2) + "\n";
}

OutputDocument document_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    OutputDocument doc;
    const auto& meta = j.at("meta");
    doc.family = meta.at("family").get<std::string>();
    doc.rank = meta.at("rank").get<int>();
    doc.n = meta.at("n").get<int>();
    doc.t_min = meta.at("t_min").get<std::int64_t>();
    doc.t_max = meta.at("t_max").get<std::int64_t>();
    doc.certified = meta.at("certified").get<bool>();
    doc.version = meta.at("version").get<std::string>();
    if (meta.contains("notes")) doc.notes = meta.at("notes").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
      OutputRow row{r.at("t").get<std::int64_t>(), r.at("s").get<std::int64_t>(), r.at("dim").get<std::int64_t>(), {}};
      if (r.contains("labels")) row.labels = r.at("labels").get<std::vector<std::string>>();
      if (row.dim <= 0) throw ModelError("row with nonpositive dimension");
      doc.rows.push_back(std::move(row));
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed table document: ") + e.what());
  }
}

namespace {

std::string joined(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ";" : "") + labels[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string to_csv(const OutputDocument& doc) {
  std::ostringstream os;
  os << "t,s,dim,labels\n";
  for (const auto& r : doc.rows) os << r.t << ',' << r.s << ',' << r.dim << ',' << csv_field(joined(r.labels)) << '\n';
  return os.str();
}

std::string to_pretty(const OutputDocument& doc, const std::string& title) {
  std::ostringstream os;
  os << title << " of " << doc.family;
  if (doc.family == "A" || doc.family == "D") os << "_" << doc.rank;
  os << ", n = " << doc.n << ", t in [" << doc.t_min << ", " << doc.t_max << "]"
     << (doc.certified ? "" : " (uncertified)") << "\n";
  for (const auto& note : doc.notes) os << "note: " << note << "\n";
  os << std::setw(6) << "t" << std::setw(8) << "s" << std::setw(6) << "dim" << "  labels\n";
  for (const auto& r : doc.rows)
    os << std::setw(6) << r.t << std::setw(8) << r.s << std::setw(6) << r.dim << "  " << joined(r.labels) << "\n";
  return os.str();
}

}  // namespace hhmf
