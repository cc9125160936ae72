#pragma once

// Bigraded tables (t, s) -> dimension, with optional class labels.

#include "hhmf/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hhmf {

// Closed integer interval of cohomological degrees.
struct TWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t t) const { return lo <= t && t <= hi; }
};

// Sector-independent description of a basis class, used to match labels
// between independent computations: whether x_0 is fixed, whether the class
// carries x_0^dual, the x_0 exponent and the remaining Jacobi monomial
// (full-length, with exponent of x_0 zero).
struct ClassKey {
  bool x0_fixed = true;
  int epsilon = 0;
  std::int64_t k0 = 0;
  Exponents monomial;

  auto operator<=>(const ClassKey&) const = default;
  std::string str() const;
};

struct TableEntry {
  std::string text;
  ClassKey key;
};

struct Cell {
  std::int64_t dim = 0;
  std::vector<TableEntry> labels;
};

struct TableMeta {
  std::string family;
  int rank = 0;
  int n = 0;
  TWindow window;
  bool certified = false;
  std::vector<std::string> warnings;
};

class BigradedTable {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (t, s)

  TableMeta meta;

  void add(std::int64_t t, std::int64_t s, std::optional<TableEntry> label = std::nullopt);
  // Adds a cell with a given dimension and no labels.
  void add_dimension(std::int64_t t, std::int64_t s, std::int64_t dim);
  void merge(const BigradedTable& other);

  std::int64_t dim(std::int64_t t, std::int64_t s) const;
  std::int64_t total_dimension() const;
  const std::map<Key, Cell>& cells() const { return cells_; }
  bool has_labels() const;

  // Human-readable list of disagreements; empty when the tables agree.
  // With compare_keys the class keys must agree as multisets in every cell.
  std::vector<std::string> differences(const BigradedTable& other, bool compare_keys) const;

  // Restriction to t in the window.
  BigradedTable restricted(TWindow w) const;

 private:
  std::map<Key, Cell> cells_;
};

}  // namespace hhmf
