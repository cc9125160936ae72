#pragma once

// Brute-force bigraded Hochschild cohomology of a trivial extension algebra
// from the normalized bar complex relative to the span E of the vertex
// idempotents. Cochains of length r are E-bimodule maps
// Bbar^{(x)_E r} -> B with Bbar = B/E; a basis is given by a composable chain
// of non-idempotent basis elements together with an output basis element with
// the same endpoints. Weight s = wt(output) - sum wt(inputs); t = r + s.

#include "hhmf/dynkin_algebra.hpp"
#include "hhmf/linalg.hpp"
#include "hhmf/table.hpp"

namespace hhmf {

struct Cochain {
  std::vector<Index> inputs;
  Index output;
  auto operator<=>(const Cochain&) const = default;
};

struct RelativeBarComplexSlice {
  int r = 0;
  std::int64_t s = 0;
  std::vector<Cochain> basis;
  std::vector<Cochain> next_basis;  // basis of the (r+1, s) slice
  // Rows: differential of each basis cochain in next_basis coordinates.
  std::vector<SparseRow<Rational>> differential;
};

RelativeBarComplexSlice cochain_slice(const TrivialExtensionAlgebra& B, int r, std::int64_t s);

struct OracleResult {
  int r_max = 0;
  BigradedTable table;  // entries with 0 <= t - s <= r_max - 1
  std::map<std::pair<int, std::int64_t>, Index> cochain_dims;  // (r, s) -> dim C^{r,s}, r <= r_max

  bool certified(std::int64_t t, std::int64_t s) const { return t - s >= 0 && t - s <= r_max - 1; }
};

// Throws ModelError when r_max < 2. `modular_prefilter` computes each rank
// modulo a word-size prime first and skips the rational elimination for
// zero matrices; every reported rank is exact.
OracleResult hh_bigraded_oracle(const Quiver& Q, int n, int r_max, bool modular_prefilter = true);

}  // namespace hhmf
