#pragma once

// Landau-Ginzburg orbifold models (w, Gamma) on A^{n+2} = Spec C[x_0, ..., x_{n+1}].
//
// The character lattice Char(Gamma) is presented on generators
//   [chi, chi_0, chi_1, ..., chi_{n+1}]
// with one relation per row of the group's exponent matrix,
//   sum_j a_ij chi_j = chi,
// and the anticanonical relation chi_0 + chi_1 + ... + chi_{n+1} = chi.
// The polynomial never involves x_0.

#include "hhmf/abelian.hpp"
#include "hhmf/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hhmf {

enum class Family { A, D, E6, E7, E8 };

std::string to_string(Family f);
Family parse_family(const std::string& name);

struct PresetInfo {
  Family family;
  int rank;
};

class LGModel {
 public:
  // Simple singularity of the given type, with its group. D-type uses the
  // Fermat potential x_1^{2l-2} + sum x_i^2 with the non-maximal group whose
  // relations are (l-1) chi_1 + chi_2 = 2 chi_2 = ... = chi.
  static LGModel preset(Family family, int rank, int n);

  // Invertible polynomial sum_i prod_j x_j^{a_ij} with its maximal group.
  static LGModel from_exponent_matrix(const IntegerMatrix& A, int n);

  // Potential w (in n+2 variables, no x_0) with the group cut out by
  // group_matrix, which must be square of size n+1.
  static LGModel build(MonomialPolynomial w, const IntegerMatrix& group_matrix, int n,
                       std::optional<PresetInfo> preset = std::nullopt);

  int n() const { return n_; }
  int variable_count() const { return n_ + 2; }
  const MonomialPolynomial& polynomial() const { return w_; }
  const IntegerMatrix& group_matrix() const { return group_matrix_; }
  const FgAbelianGroup& lattice() const { return lattice_; }

  GroupElement chi() const { return lattice_.generator(0); }
  GroupElement chi_i(int i) const { return lattice_.generator(i + 1); }
  // q_i = chi_i / chi in Char(Gamma) (x) Q, for i = 0..n+1.
  const std::vector<Rational>& q() const { return q_; }

  GroupElement degree(const Exponents& monomial) const;
  Rational q_degree(const Exponents& monomial) const;
  // Image of a character under chi |-> 1, chi_i |-> q_i.
  Rational q_degree(const GroupElement& x) const;

  // Presets are validated against the closed forms; general models are not.
  bool validated() const { return preset_.has_value(); }
  const std::optional<PresetInfo>& preset_info() const { return preset_; }
  std::string name() const;

 private:
  LGModel() = default;

  int n_ = 0;
  MonomialPolynomial w_;
  IntegerMatrix group_matrix_;
  FgAbelianGroup lattice_{1, IntegerMatrix(0, 1)};
  std::vector<Rational> q_;
  std::optional<PresetInfo> preset_;
};

IntegerMatrix transpose(const IntegerMatrix& A);

// One element gamma of ker chi, as a character of Char(Gamma)/(chi).
struct Sector {
  Index id = 0;
  DualCharacter phi;
  std::vector<bool> fixed;  // fixed[i] iff x_i is gamma-invariant
  int codim = 0;            // dim N_gamma
  GroupElement nu;          // sum of chi_j over non-fixed j

  bool fixes(int i) const { return fixed[i]; }
  bool is_identity() const { return codim == 0; }
  bool fully_twisted() const { return codim == static_cast<int>(fixed.size()); }
  // phi(chi_i) in [0, 1).
  Rational angle(int i) const { return phi.values[i + 1]; }

  std::string fixed_set_string() const;
  // The tuple (t_0, ..., t_{n+1}) with t_i = exp(2 pi i phi(chi_i)).
  std::vector<std::string> display_tuple() const;
};

std::vector<Sector> sectors(const LGModel& model);

// w restricted to the fixed locus of the sector.
MonomialPolynomial restrict(const LGModel& model, const Sector& sector);

}  // namespace hhmf
