#pragma once

// Explicit basis families for the simple singularities, encoded as affine
// rows in an integer parameter m.
//
// A row describes the classes with weight index w(m) = w0 + w_step m, weight
// s = -w n, degree t(m) = t0 + t_step m - w(m) n (or without the -w n term for
// rows printed at a fixed n), for m in [m_min, m_max] with m = m_res mod m_mod
// and w(m) >= w_min. Its classes are matched against the sector sum through
// the key (x0 fixed?, eps, k_0 = w + eps + [x_0 moved], monomial).

#include "hhmf/lgmodel.hpp"
#include "hhmf/table.hpp"

#include <limits>

namespace hhmf {

struct FamilyRow {
  std::string name;
  bool x0_fixed = true;
  int epsilon = 0;
  Exponents monomial;  // full-length exponent vector; the x_0 entry is zero
  std::int64_t w0 = 0, w_step = 0;
  std::int64_t t0 = 0, t_step = 0;
  bool weight_shifts_t = true;
  std::int64_t m_min = 0;
  std::int64_t m_max = std::numeric_limits<std::int64_t>::max();
  std::int64_t w_min = std::numeric_limits<std::int64_t>::min();
  std::int64_t m_mod = 1, m_res = 0;
  std::int64_t multiplicity = 1;

  std::int64_t w(std::int64_t m) const { return w0 + w_step * m; }
  std::int64_t t(std::int64_t m, int n) const { return t0 + t_step * m - (weight_shifts_t ? w(m) * n : 0); }
};

struct ClosedFormRows {
  std::vector<FamilyRow> rows;
  std::vector<std::string> warnings;
};

// Rows for the given type; throws ModelError for inadmissible parameters.
ClosedFormRows closed_form_rows(Family family, int rank, int n);

// Every class of every row with t in the window.
BigradedTable enumerate_closed_form(Family family, int rank, int n, TWindow window);

// Number of point classes in degree (n, n) from fully and partially twisted
// sectors with x_0 moved.
std::int64_t closed_form_sh_count(Family family, int rank, int n);

}  // namespace hhmf
