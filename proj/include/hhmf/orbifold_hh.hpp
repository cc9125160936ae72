#pragma once

// Bigraded Hochschild cohomology of mf(A^{n+2}, Gamma, w) as a sum over the
// sectors gamma in ker chi. A sector with fixed set F contributes
//
//   x_0^dual^eps (x) x_0^{k_0} b (x) Lambda^top N_gamma^dual
//
// for every Jacobi monomial b of w restricted to F \ {0}, eps in {0, 1} and
// k_0 >= 0 (eps = k_0 = 0 unless 0 in F), whenever its degree
//
//   Delta = deg b + (k_0 - eps) chi_0 - sum_{j not in F} chi_j
//
// equals c chi. The class then sits in t = 2c + eps + codim F with weight
// s = -n k_0 + n (eps + [0 not in F]).

#include "hhmf/milnor.hpp"
#include "hhmf/table.hpp"

namespace hhmf {

struct ContributionLabel {
  Index sector = 0;
  std::string fixed_set;
  bool x0_fixed = true;
  Exponents monomial;  // Jacobi monomial on F \ {0}; x_0 exponent is zero
  std::int64_t k0 = 0;
  int epsilon = 0;
  std::int64_t t = 0;
  std::int64_t s = 0;
  std::int64_t c = 0;

  ClassKey key() const;
  std::string text() const;
};

std::int64_t weight_of(const ContributionLabel& label, int n);

// All contributions of one sector with t in the window. Throws ModelError when
// q_0 = 0 and CertificationError when the sector is not isolated.
std::vector<ContributionLabel> sector_contributions(const LGModel& model, const Sector& sector, TWindow window);

// Sum over all sectors. Sectors are processed on `threads` workers; the result
// does not depend on the schedule.
BigradedTable hh_table(const LGModel& model, TWindow window, bool with_labels, unsigned threads = 1);

}  // namespace hhmf
