#include "hhmf/orbifold_hh.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace hhmf {

ClassKey ContributionLabel::key() const { return ClassKey{x0_fixed, epsilon, k0, monomial}; }

std::string ContributionLabel::text() const {
  Exponents e = monomial;
  e[0] = static_cast<int>(k0);
  return "g" + std::to_string(sector) + fixed_set + ":" + (epsilon ? "x0v*" : "") + format_monomial(e);
}

std::int64_t weight_of(const ContributionLabel& label, int n) {
  return -n * label.k0 + n * (label.epsilon + (label.x0_fixed ? 0 : 1));
}

std::vector<ContributionLabel> sector_contributions(const LGModel& model, const Sector& sector, TWindow window) {
  const JacobiBasis basis = jacobi_basis(model, sector);
  const auto& G = model.lattice();
  const bool x0_fixed = sector.fixes(0);
  const Rational q0 = model.q()[0];
  if (x0_fixed && q0 == 0)
    throw ModelError("log Calabi-Yau direction: q_0 = 0, graded pieces infinite-dimensional");

  std::vector<ContributionLabel> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const GroupElement base = basis.degrees[i] - sector.nu;
    for (int eps = 0; eps <= (x0_fixed ? 1 : 0); ++eps) {
      std::int64_t k_lo = 0, k_hi = 0;
      if (x0_fixed) {
        // t(k_0) = T0 + 2 q_0 k_0 is monotone in k_0.
        const Rational T0 = 2 * (model.q_degree(base) - eps * q0) + eps + sector.codim;
        Rational lo, hi;
        if (q0 < 0) {
          lo = (T0 - window.hi) / (-2 * q0);
          hi = (T0 - window.lo) / (-2 * q0);
        } else {
          lo = (window.lo - T0) / (2 * q0);
          hi = (window.hi - T0) / (2 * q0);
        }
        k_lo = std::max<std::int64_t>(0, to_i64(ceil(lo)));
        k_hi = to_i64(floor(hi));
      }
      for (std::int64_t k0 = k_lo; k0 <= k_hi; ++k0) {
        const GroupElement delta = base + Integer(k0 - eps) * model.chi_i(0);
        const auto c = solve_multiple(G, delta, model.chi());
        if (!c) continue;
        ContributionLabel l;
        l.sector = sector.id;
        l.fixed_set = sector.fixed_set_string();
        l.x0_fixed = x0_fixed;
        l.monomial = basis.monomials[i];
        l.k0 = k0;
        l.epsilon = eps;
        l.c = to_i64(*c);
        l.t = 2 * l.c + eps + sector.codim;
        l.s = weight_of(l, model.n());
        if (window.contains(l.t)) out.push_back(std::move(l));
      }
    }
  }
  return out;
}

BigradedTable hh_table(const LGModel& model, TWindow window, bool with_labels, unsigned threads) {
  const auto secs = sectors(model);
  std::vector<std::vector<ContributionLabel>> results(secs.size());
  std::vector<std::exception_ptr> errors(secs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < secs.size();) {
      try {
        results[i] = sector_contributions(model, secs[i], window);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(secs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  BigradedTable table;
  table.meta.family = model.preset_info() ? to_string(model.preset_info()->family) : "custom";
  table.meta.rank = model.preset_info() ? model.preset_info()->rank : 0;
  table.meta.n = model.n();
  table.meta.window = window;
  table.meta.certified = true;
  for (const auto& rs : results)
    for (const auto& l : rs) {
      if (with_labels)
        table.add(l.t, l.s, TableEntry{l.text(), l.key()});
      else
        table.add(l.t, l.s);
    }
  return table;
}

}  // namespace hhmf
