#include "hhmf/polynomial.hpp"

#include "hhmf/errors.hpp"

#include <sstream>

namespace hhmf {

void MonomialPolynomial::add_term(const Rational& coefficient, const Exponents& exponents) {
  if (static_cast<int>(exponents.size()) != variables_)
    throw ModelError("monomial has the wrong number of variables");
  for (int e : exponents)
    if (e < 0) throw ModelError("negative exponent");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MonomialPolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

MonomialPolynomial MonomialPolynomial::restrict_to(const std::vector<bool>& keep) const {
  MonomialPolynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    bool ok = true;
    for (int i = 0; i < variables_ && ok; ++i)
      if (e[i] > 0 && !keep[i]) ok = false;
    if (ok) out.terms_.emplace(e, c);
  }
  return out;
}

MonomialPolynomial MonomialPolynomial::derivative(int variable) const {
  MonomialPolynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[variable] == 0) continue;
    Exponents d = e;
    d[variable] -= 1;
    out.add_term(c * e[variable], d);
  }
  return out;
}

MonomialPolynomial MonomialPolynomial::shifted(const Exponents& monomial) const {
  MonomialPolynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    for (int i = 0; i < variables_; ++i) s[i] += monomial[i];
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

std::string format_monomial(const Exponents& exponents, int first_variable) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (any) os << '*';
    os << 'x' << (i + first_variable);
    if (exponents[i] != 1) os << '^' << exponents[i];
    any = true;
  }
  return any ? os.str() : "1";
}

std::string format_polynomial(const MonomialPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first, matching how the potentials are usually written.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const Rational a = c < 0 ? Rational(-c) : c;
    const std::string m = format_monomial(e);
    if (a != 1 || m == "1") os << a.str() << (m == "1" ? "" : "*");
    if (m != "1") os << m;
    first = false;
  }
  return os.str();
}

}  // namespace hhmf
