#include "hhmf/closed_forms.hpp"

#include "hhmf/errors.hpp"

#include <array>

namespace hhmf {

namespace {

using i64 = std::int64_t;
constexpr i64 kUnbounded = std::numeric_limits<i64>::min();

Exponents mono(int n, std::initializer_list<std::pair<int, int>> powers) {
  Exponents e(n + 2, 0);
  for (auto [v, k] : powers) e[v] = k;
  return e;
}

FamilyRow row(std::string name, int n, Exponents monomial, i64 w0, i64 w_step, i64 t0, i64 t_step) {
  FamilyRow r;
  r.name = std::move(name);
  r.monomial = monomial.empty() ? Exponents(n + 2, 0) : std::move(monomial);
  r.w0 = w0;
  r.w_step = w_step;
  r.t0 = t0;
  r.t_step = t_step;
  return r;
}

// The x_0^dual partner of a row: same weight, degree one higher.
FamilyRow partner(const FamilyRow& r, std::string name) {
  FamilyRow p = r;
  p.name = std::move(name);
  p.epsilon = 1;
  p.t0 += 1;
  return p;
}

FamilyRow point_class(std::string name, int n, Exponents monomial, i64 multiplicity) {
  FamilyRow r = row(std::move(name), n, std::move(monomial), -1, 0, 0, 0);
  r.x0_fixed = false;
  r.m_max = 0;
  r.multiplicity = multiplicity;
  return r;
}

std::string indexed(const char* family, const char* index, i64 value) {
  return std::string(family) + "[" + index + "=" + std::to_string(value) + "]";
}

void rows_A(int l, int n, ClosedFormRows& out) {
  for (int k = 0; k < l; ++k) {
    if (n % 2 == 1 && l % 2 == 1 && k % 2 == 1) continue;
    FamilyRow a = row(indexed("a", "k", k), n, mono(n, {{1, k}}), k, l + 1, 2 * k, 2 * l);
    if (n % 2 == 1 && l % 2 == 0) {
      a.m_mod = 2;
      a.m_res = k % 2;
    }
    out.rows.push_back(a);
    out.rows.push_back(partner(a, indexed("alpha", "k", k)));
  }
  if (n % 2 == 1 && l % 2 == 1) {
    FamilyRow b = row("b", n, {}, -1, l + 1, -1, 2 * l);
    b.m_min = 1;
    out.rows.push_back(b);
    FamilyRow beta = row("beta", n, {}, -1, l + 1, 0, 2 * l);
    beta.epsilon = 1;
    out.rows.push_back(beta);
  }
  out.rows.push_back(point_class("s", n, {}, (l % 2 == 1 && n % 2 == 1) ? l - 1 : l));
}

void rows_D(int l, int n, ClosedFormRows& out) {
  const i64 period = 2 * l - 2, t_period = 4 * l - 6;
  for (int k = 0; k <= l - 2; ++k) {
    FamilyRow a = row(indexed("a", "k", k), n, mono(n, {{1, 2 * k}}), 2 * k, period, 4 * k, t_period);
    out.rows.push_back(a);
    out.rows.push_back(partner(a, indexed("alpha", "k", k)));
  }
  if (n % 2 == 1) {
    for (int k = 0; k <= 2 * l - 4; ++k) {
      if ((k + l) % 2 != 0) continue;
      FamilyRow b = row(indexed("b", "k", k), n, mono(n, {{1, k}}), k + l - 1, period, 2 * k + 2 * l - 3, t_period);
      b.m_min = kUnbounded;
      b.w_min = 0;
      out.rows.push_back(b);
      FamilyRow beta = partner(b, indexed("beta", "k", k));
      beta.w_min = -1;
      out.rows.push_back(beta);
    }
  }
  if (l % 2 == 0) {
    FamilyRow c = row("c", n, {}, l - 2, period, 2 * l - 4, t_period);
    out.rows.push_back(c);
    out.rows.push_back(partner(c, "gamma"));
    if (n % 2 == 1) {
      FamilyRow d = row("d", n, {}, -1, period, -1, t_period);
      d.m_min = 1;
      out.rows.push_back(d);
      out.rows.push_back(partner(d, "delta"));
      out.rows.back().m_min = 0;
    }
  } else if (n % 2 == 0) {
    FamilyRow e = row("e", n, {}, l - 2, period, 2 * l - 4, t_period);
    out.rows.push_back(e);
    out.rows.push_back(partner(e, "epsilon"));
  }
  const i64 fully_twisted = (l % 2 == 0 && n % 2 == 1) ? l - 2 : l - 1;
  out.rows.push_back(point_class("s", n, {}, fully_twisted));
  if (n % 2 == 0) out.rows.push_back(point_class("s[x1]", n, mono(n, {{1, l - 2}}), 1));
}

struct TableRow {
  int k1, k2;
  i64 k0, t;
};

// Rows x_0^{k0 + period m} x_1^{k1} x_2^{k2} in degree t + t_period m - k0 n,
// each with its x_0^dual partner.
void add_table(const char* name, int n, const std::vector<TableRow>& table, i64 period, i64 t_period,
               bool weight_shifts_t, ClosedFormRows& out) {
  for (const auto& r : table) {
    const std::string label = std::string(name) + "(" + std::to_string(r.k1) + "," + std::to_string(r.k2) + ")";
    FamilyRow f = row(label, n, mono(n, {{1, r.k1}, {2, r.k2}}), r.k0, period, r.t, t_period);
    f.weight_shifts_t = weight_shifts_t;
    out.rows.push_back(f);
    out.rows.push_back(partner(f, label + "'"));
  }
}

// For n = 1 the identity sector contributes x_0^{k0} x_1^{k1} x_2^{k2}
// whenever N divides a0 k0 + a1 k1 + a2 k2, in degree 2 (a0 k0 + ...)/N.
void add_congruence_rows(const char* name, int n, int k1_max, std::array<i64, 3> a, i64 N,
                         ClosedFormRows& out) {
  std::vector<TableRow> table;
  for (int k2 = 0; k2 <= 1; ++k2)
    for (int k1 = 0; k1 <= k1_max; ++k1)
      for (i64 r = 0; r < N; ++r)
        if ((a[0] * r + a[1] * k1 + a[2] * k2) % N == 0) table.push_back({k1, k2, r, 2 * (a[0] * r + a[1] * k1 + a[2] * k2) / N});
  add_table(name, n, table, N, 2 * a[0], false, out);
}

void rows_E6(int n, ClosedFormRows& out) {
  if (n == 1) {
    add_congruence_rows("k", n, 2, {5, 3, 4}, 12, out);
  } else {
    add_table("k", n, {{0, 0, 0, 0}, {0, 1, 4, 8}, {2, 0, 6, 12}, {2, 1, 10, 20}}, 12, 22, true, out);
    if (n % 2 == 1) add_table("k'", n, {{1, 0, 9, 17}, {1, 1, 1, 3}}, 12, 22, true, out);
    else add_table("k''", n, {{0, 0, 3, 6}, {0, 1, 7, 14}}, 12, 22, true, out);
  }
  out.rows.push_back(point_class("s", n, {}, 6));
}

void rows_E7(int n, ClosedFormRows& out) {
  if (n == 1) {
    add_table("k", n,
              {{0, 0, 0, 0}, {1, 0, 4, 4}, {2, 0, 8, 8}, {3, 0, 3, 4}, {4, 0, 7, 8}, {0, 1, 6, 6}, {1, 1, 1, 2}}, 9, 8,
              false, out);
    FamilyRow extra = row("k(2,0)'[m=-1]", n, mono(n, {{1, 2}}), -1, 0, 1, 0);
    extra.epsilon = 1;
    extra.weight_shifts_t = false;
    extra.m_max = 0;
    out.rows.push_back(extra);
  } else {
    add_table("k", n,
              {{0, 0, 0, 0}, {1, 0, 4, 8}, {2, 0, 8, 16}, {3, 0, 12, 24}, {4, 0, 16, 32}, {0, 1, 6, 12},
               {1, 1, 10, 20}},
              18, 34, true, out);
    if (n % 2 == 1) {
      add_table("k'", n,
                {{0, 0, 9, 17}, {1, 0, 13, 25}, {2, 0, 17, 33}, {3, 0, 3, 7}, {4, 0, 7, 15}, {0, 1, 15, 29},
                 {1, 1, 1, 3}},
                18, 34, true, out);
      FamilyRow extra = row("k'(2,0)'[m=-1]", n, mono(n, {{1, 2}}), -1, 0, 0, 0);
      extra.epsilon = 1;
      extra.m_max = 0;
      out.rows.push_back(extra);
    } else {
      // Sector fixing exactly x_1 and x_2: x_1^2 (x) x_0^dual ^ x_3^dual ^ ... has degree 0.
      out.rows.push_back(point_class("s[x1^2]", n, mono(n, {{1, 2}}), 1));
    }
  }
  out.rows.push_back(point_class("s", n, {}, 6));
}

void rows_E8(int n, ClosedFormRows& out) {
  if (n == 1) {
    add_congruence_rows("k", n, 3, {7, 3, 5}, 15, out);
  } else {
    std::vector<TableRow> identity, twisted;
    for (int k2 = 0; k2 <= 1; ++k2)
      for (int k1 = 0; k1 <= 3; ++k1) {
        identity.push_back({k1, k2, 6 * k1 + 10 * k2, 12 * k1 + 20 * k2});
        twisted.push_back({k1, k2, 15 + 6 * k1 + 10 * k2, 29 + 12 * k1 + 20 * k2});
      }
    add_table("k", n, identity, 30, 58, true, out);
    if (n % 2 == 1) {
      const auto first = out.rows.size();
      add_table("k'", n, twisted, 30, 58, true, out);
      for (auto i = first; i < out.rows.size(); ++i) {
        out.rows[i].m_min = kUnbounded;
        out.rows[i].w_min = out.rows[i].epsilon == 0 ? 0 : -1;
      }
    }
  }
  out.rows.push_back(point_class("s", n, {}, 8));
}

i64 ceil_div(i64 a, i64 b) {
  const i64 q = a / b;
  return (a % b != 0 && ((a < 0) == (b < 0))) ? q + 1 : q;
}
i64 floor_div(i64 a, i64 b) {
  const i64 q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

ClosedFormRows closed_form_rows(Family family, int rank, int n) {
  if (n < 1) throw ModelError("n must be at least 1");
  ClosedFormRows out;
  switch (family) {
    case Family::A:
      if (rank < 1) throw ModelError("A_l needs l >= 1");
      if (n == 1) out.warnings.push_back("summary-extrapolated");
      rows_A(rank, n, out);
      break;
    case Family::D:
      if (rank < 4) throw ModelError("D_l needs l >= 4");
      if (n == 1) out.warnings.push_back("summary-extrapolated");
      rows_D(rank, n, out);
      break;
    case Family::E6:
      if (rank != 6) throw ModelError("E6 has rank 6");
      rows_E6(n, out);
      break;
    case Family::E7:
      if (rank != 7) throw ModelError("E7 has rank 7");
      rows_E7(n, out);
      break;
    case Family::E8:
      if (rank != 8) throw ModelError("E8 has rank 8");
      rows_E8(n, out);
      break;
  }
  return out;
}

BigradedTable enumerate_closed_form(Family family, int rank, int n, TWindow window) {
  const ClosedFormRows rows = closed_form_rows(family, rank, n);
  BigradedTable table;
  table.meta.family = to_string(family);
  table.meta.rank = rank;
  table.meta.n = n;
  table.meta.window = window;
  table.meta.certified = true;
  table.meta.warnings = rows.warnings;

  for (const auto& r : rows.rows) {
    const i64 slope = r.t_step - (r.weight_shifts_t ? r.w_step * n : 0);
    i64 lo = r.m_min, hi = r.m_max;
    if (r.w_min != kUnbounded) {
      if (r.w_step > 0) lo = std::max(lo, ceil_div(r.w_min - r.w0, r.w_step));
      else if (r.w0 < r.w_min) continue;
    }
    const i64 t_at_0 = r.t(0, n);
    if (slope > 0) {
      lo = std::max(lo, ceil_div(window.lo - t_at_0, slope));
      hi = std::min(hi, floor_div(window.hi - t_at_0, slope));
    } else if (slope < 0) {
      lo = std::max(lo, ceil_div(t_at_0 - window.hi, -slope));
      hi = std::min(hi, floor_div(t_at_0 - window.lo, -slope));
    } else if (hi == std::numeric_limits<i64>::max() || lo == kUnbounded) {
      throw ModelError("family " + r.name + " is infinite in a single degree");
    }
    for (i64 m = lo; m <= hi; ++m) {
      if (((m - r.m_res) % r.m_mod + r.m_mod) % r.m_mod != 0) continue;
      const i64 t = r.t(m, n);
      if (!window.contains(t)) continue;
      const i64 w = r.w(m);
      const ClassKey key{r.x0_fixed, r.epsilon, w + r.epsilon + (r.x0_fixed ? 0 : 1), r.monomial};
      for (i64 j = 0; j < r.multiplicity; ++j) {
        std::string text = r.name + "(m=" + std::to_string(m) + ")";
        if (r.multiplicity > 1) text = r.name + "[h=" + std::to_string(j + 1) + "]";
        table.add(t, -w * n, TableEntry{std::move(text), key});
      }
    }
  }
  return table;
}

std::int64_t closed_form_sh_count(Family family, int rank, int n) {
  std::int64_t count = 0;
  for (const auto& r : closed_form_rows(family, rank, n).rows)
    if (!r.x0_fixed) count += r.multiplicity;
  return count;
}

}  // namespace hhmf
