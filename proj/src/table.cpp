#include "hhmf/table.hpp"

#include <algorithm>
#include <sstream>

namespace hhmf {

std::string ClassKey::str() const {
  std::ostringstream os;
  os << (x0_fixed ? "fixed" : "moved") << ",eps=" << epsilon << ",k0=" << k0 << ",m=" << format_monomial(monomial);
  return os.str();
}

void BigradedTable::add(std::int64_t t, std::int64_t s, std::optional<TableEntry> label) {
  Cell& c = cells_[{t, s}];
  ++c.dim;
  if (label) c.labels.push_back(std::move(*label));
}

void BigradedTable::add_dimension(std::int64_t t, std::int64_t s, std::int64_t dim) {
  if (dim <= 0) return;
  cells_[{t, s}].dim += dim;
}

void BigradedTable::merge(const BigradedTable& other) {
  for (const auto& [k, c] : other.cells_) {
    Cell& mine = cells_[k];
    mine.dim += c.dim;
    mine.labels.insert(mine.labels.end(), c.labels.begin(), c.labels.end());
  }
}

std::int64_t BigradedTable::dim(std::int64_t t, std::int64_t s) const {
  auto it = cells_.find({t, s});
  return it == cells_.end() ? 0 : it->second.dim;
}

std::int64_t BigradedTable::total_dimension() const {
  std::int64_t total = 0;
  for (const auto& [k, c] : cells_) total += c.dim;
  return total;
}

bool BigradedTable::has_labels() const {
  return std::any_of(cells_.begin(), cells_.end(), [](const auto& kv) { return !kv.second.labels.empty(); });
}

namespace {

std::vector<ClassKey> sorted_keys(const Cell& c) {
  std::vector<ClassKey> keys;
  for (const auto& l : c.labels) keys.push_back(l.key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

std::vector<std::string> BigradedTable::differences(const BigradedTable& other, bool compare_keys) const {
  std::vector<std::string> out;
  std::map<Key, std::pair<const Cell*, const Cell*>> all;
  for (const auto& [k, c] : cells_) all[k].first = &c;
  for (const auto& [k, c] : other.cells_) all[k].second = &c;
  static const Cell empty;
  for (const auto& [k, pair] : all) {
    const Cell& a = pair.first ? *pair.first : empty;
    const Cell& b = pair.second ? *pair.second : empty;
    std::ostringstream os;
    os << "(t=" << k.first << ", s=" << k.second << "): ";
    if (a.dim != b.dim) {
      os << "dim " << a.dim << " vs " << b.dim;
      out.push_back(os.str());
      continue;
    }
    if (!compare_keys) continue;
    const auto ka = sorted_keys(a), kb = sorted_keys(b);
    if (ka != kb) {
      os << "labels differ:";
      for (const auto& key : ka)
        if (!std::binary_search(kb.begin(), kb.end(), key)) os << " -" << key.str();
      for (const auto& key : kb)
        if (!std::binary_search(ka.begin(), ka.end(), key)) os << " +" << key.str();
      out.push_back(os.str());
    }
  }
  return out;
}

BigradedTable BigradedTable::restricted(TWindow w) const {
  BigradedTable out;
  out.meta = meta;
  out.meta.window = w;
  for (const auto& [k, c] : cells_)
    if (w.contains(k.first)) out.cells_.emplace(k, c);
  return out;
}

}  // namespace hhmf
