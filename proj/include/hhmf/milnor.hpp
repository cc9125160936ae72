#pragma once

// Jacobi rings of weighted-homogeneous potentials, computed one q-degree slice
// at a time. Slices above the socle degree sum_i (1 - 2 q_i) are checked to
// vanish, and the total is checked against the Milnor number
// prod_i (1/q_i - 1).

#include "hhmf/lgmodel.hpp"

#include <span>
#include <vector>

namespace hhmf {

struct JacobiBasis {
  std::vector<int> variables;        // variable indices the ring lives on
  std::vector<Exponents> monomials;  // full-length exponent vectors
  std::vector<Rational> q_degrees;
  std::vector<GroupElement> degrees;  // filled when a model is supplied
  Rational top_degree;
  Integer milnor_number;

  std::size_t size() const { return monomials.size(); }
};

std::vector<MonomialPolynomial> partials(const MonomialPolynomial& w, std::span<const int> variables);

// Graded lexicographic order on exponent vectors: q-degree first, then
// lexicographic with x_1 > x_2 > ...; returns true iff a < b.
bool graded_lex_less(const Exponents& a, const Exponents& b, std::span<const Rational> q);

// Monomial basis of C[x_v : v in variables] / (d_v w). Within each slice the
// basis is chosen greedily from the top of the graded lexicographic order.
// Throws CertificationError when the critical point is not isolated.
JacobiBasis jacobi_basis(const MonomialPolynomial& w, std::span<const int> variables,
                         std::span<const Rational> q);

// Jacobi basis of w restricted to the fixed variables of a sector (x_0
// excluded), with Char(Gamma)-degrees attached.
JacobiBasis jacobi_basis(const LGModel& model, const Sector& sector);

// Fixed variables of the sector other than x_0.
std::vector<int> jacobi_variables(const Sector& sector);

// dim H^{-p} of the Koszul complex (Lambda^p V'^dual (x) S', contraction with
// dw) in the Char(Gamma)-degree slice `target`. The term in exterior degree p
// is twisted so that x_J^dual (x) m has degree deg m - sum_J chi_j + p chi.
Index koszul_slice_cohomology(const LGModel& model, const MonomialPolynomial& w,
                              std::span<const int> variables, const GroupElement& target, int p);

}  // namespace hhmf
