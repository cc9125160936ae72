#pragma once

#include "hhmf/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace hhmf {

using Exponents = std::vector<int>;

// Sparse polynomial with rational coefficients in variables x_0, ..., x_{N-1}.
// Terms are kept keyed by exponent vector; zero coefficients are dropped.
class MonomialPolynomial {
 public:
  MonomialPolynomial() = default;
  explicit MonomialPolynomial(int variable_count) : variables_(variable_count) {}

  int variable_count() const { return variables_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Rational& coefficient, const Exponents& exponents);
  Rational coefficient(const Exponents& exponents) const;

  // Drops every term that involves a variable with keep[i] == false.
  MonomialPolynomial restrict_to(const std::vector<bool>& keep) const;
  MonomialPolynomial derivative(int variable) const;
  // Product with a monomial.
  MonomialPolynomial shifted(const Exponents& monomial) const;

  friend bool operator==(const MonomialPolynomial&, const MonomialPolynomial&) = default;

 private:
  int variables_ = 0;
  std::map<Exponents, Rational> terms_;
};

std::string format_monomial(const Exponents& exponents, int first_variable = 0);
std::string format_polynomial(const MonomialPolynomial& p);

}  // namespace hhmf
