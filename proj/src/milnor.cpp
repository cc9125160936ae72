#include "hhmf/milnor.hpp"

#include "hhmf/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hhmf {

std::vector<MonomialPolynomial> partials(const MonomialPolynomial& w, std::span<const int> variables) {
  std::vector<MonomialPolynomial> out;
  out.reserve(variables.size());
  for (int v : variables) out.push_back(w.derivative(v));
  return out;
}

bool graded_lex_less(const Exponents& a, const Exponents& b, std::span<const Rational> q) {
  Rational da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += q[i] * a[i];
    db += q[i] * b[i];
  }
  if (da != db) return da < db;
  return a < b;  // index 0 is x_0, which never appears; then x_1 dominates
}

namespace {

// All monomials in `variables` with q-degree <= bound (or == bound if exact).
std::vector<Exponents> monomials_up_to(std::span<const int> variables, std::span<const Rational> q,
                                       int variable_count, const Rational& bound, bool exact) {
  std::vector<Exponents> out;
  if (bound < 0) return out;
  Exponents e(variable_count, 0);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t k, const Rational& used) {
    if (k == variables.size()) {
      if (!exact || used == bound) out.push_back(e);
      return;
    }
    const int v = variables[k];
    for (int a = 0; used + q[v] * a <= bound; ++a) {
      e[v] = a;
      rec(k + 1, used + q[v] * a);
    }
    e[v] = 0;
  };
  rec(0, Rational(0));
  return out;
}

void require_homogeneous(const MonomialPolynomial& w, std::span<const Rational> q) {
  for (const auto& [e, c] : w.terms()) {
    Rational d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += q[i] * e[i];
    if (d != 1) throw ModelError("potential is not weighted homogeneous of q-degree 1");
  }
}

}  // namespace

JacobiBasis jacobi_basis(const MonomialPolynomial& w, std::span<const int> variables,
                         std::span<const Rational> q) {
  const int N = w.variable_count();
  for (int v : variables)
    if (q[v] <= 0 || q[v] > Rational(1, 2))
      throw ModelError("jacobi_basis needs q-degrees in (0, 1/2]");
  require_homogeneous(w, q);

  JacobiBasis out;
  out.variables.assign(variables.begin(), variables.end());
  Rational milnor = 1;
  Rational top = 0;
  Rational max_q = 0;
  for (int v : variables) {
    milnor *= 1 / q[v] - 1;
    top += 1 - 2 * q[v];
    max_q = std::max(max_q, q[v]);
  }
  out.top_degree = top;
  if (!is_integral(milnor))
    throw CertificationError("non-isolated critical point: Milnor number " + milnor.str() + " is not an integer");
  out.milnor_number = numerator(milnor);

  const auto ds = partials(w, variables);
  // Slices up to the socle degree, plus one step above it to certify closure.
  std::map<Rational, std::vector<Exponents>> slices;
  for (auto& m : monomials_up_to(variables, q, N, top + max_q, false)) {
    Rational d = 0;
    for (int v : variables) d += q[v] * m[v];
    slices[d].push_back(std::move(m));
  }

  for (auto& [d, mons] : slices) {
    std::sort(mons.begin(), mons.end(), [&](const auto& a, const auto& b) { return graded_lex_less(a, b, q); });
    std::map<Exponents, Index> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], static_cast<Index>(i));

    std::vector<RationalVector> ideal;
    for (std::size_t k = 0; k < variables.size(); ++k) {
      const Rational shift = d - (1 - q[variables[k]]);
      if (shift < 0 || ds[k].is_zero()) continue;
      auto it = slices.find(shift);
      if (it == slices.end()) continue;
      for (const auto& m : it->second) {
        RationalVector row = RationalVector::Zero(static_cast<Index>(mons.size()));
        const MonomialPolynomial image = ds[k].shifted(m);
        for (const auto& [e, c] : image.terms()) row(index.at(e)) = c;
        ideal.push_back(std::move(row));
      }
    }

    RationalMatrix rel(static_cast<Index>(ideal.size()), static_cast<Index>(mons.size()));
    for (std::size_t r = 0; r < ideal.size(); ++r) rel.row(static_cast<Index>(r)) = ideal[r].transpose();
    const Index quotient = static_cast<Index>(mons.size()) - rank(rel);

    if (d > top) {
      if (quotient != 0)
        throw CertificationError("non-isolated critical point: Jacobi ring is nonzero above degree " + top.str());
      continue;
    }

    IncrementalEchelon<Rational> echelon(static_cast<Index>(mons.size()));
    for (auto& row : ideal) echelon.insert(std::move(row));
    std::vector<Exponents> chosen;
    for (Index i = static_cast<Index>(mons.size()) - 1; i >= 0; --i) {
      RationalVector unit = RationalVector::Zero(static_cast<Index>(mons.size()));
      unit(i) = 1;
      if (echelon.insert(std::move(unit))) chosen.push_back(mons[i]);
    }
    if (static_cast<Index>(chosen.size()) != quotient)
      throw CertificationError("inconsistent Jacobi slice rank in degree " + d.str());
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
      out.monomials.push_back(*it);
      out.q_degrees.push_back(d);
    }
  }

  if (Integer(out.monomials.size()) != out.milnor_number)
    throw CertificationError("non-isolated critical point: Jacobi basis has " + std::to_string(out.monomials.size()) +
                             " elements but the Milnor number is " + out.milnor_number.str());
  return out;
}

std::vector<int> jacobi_variables(const Sector& sector) {
  std::vector<int> vars;
  for (std::size_t i = 1; i < sector.fixed.size(); ++i)
    if (sector.fixed[i]) vars.push_back(static_cast<int>(i));
  return vars;
}

JacobiBasis jacobi_basis(const LGModel& model, const Sector& sector) {
  const auto vars = jacobi_variables(sector);
  JacobiBasis b = jacobi_basis(restrict(model, sector), vars, model.q());
  b.degrees.reserve(b.monomials.size());
  for (const auto& m : b.monomials) b.degrees.push_back(model.degree(m));
  return b;
}

namespace {

struct KoszulBasis {
  std::vector<std::pair<std::vector<int>, Exponents>> elements;  // (J, m)
  std::map<std::pair<std::vector<int>, Exponents>, Index> index;
};

KoszulBasis koszul_slice(const LGModel& model, std::span<const int> variables, const GroupElement& target, int p) {
  KoszulBasis out;
  if (p < 0 || p > static_cast<int>(variables.size())) return out;
  const auto& q = model.q();
  std::vector<int> J;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(J.size()) == p) {
      GroupElement want = target + Integer(-p) * model.chi();
      Rational dq = model.q_degree(target) - p;
      for (int j : J) {
        want += model.chi_i(j);
        dq += q[j];
      }
      for (auto& m : monomials_up_to(variables, q, model.variable_count(), dq, true)) {
        if (!model.lattice().equal(model.degree(m), want)) continue;
        out.index.emplace(std::make_pair(J, m), static_cast<Index>(out.elements.size()));
        out.elements.emplace_back(J, std::move(m));
      }
      return;
    }
    for (std::size_t k = start; k < variables.size(); ++k) {
      J.push_back(variables[k]);
      rec(k + 1);
      J.pop_back();
    }
  };
  rec(0);
  return out;
}

// Matrix of the contraction K^{-p} -> K^{-(p-1)} in the given bases (rows: target).
RationalMatrix contraction(const MonomialPolynomial& w, const KoszulBasis& from, const KoszulBasis& to) {
  RationalMatrix M = RationalMatrix::Zero(static_cast<Index>(to.elements.size()),
                                          static_cast<Index>(from.elements.size()));
  for (std::size_t col = 0; col < from.elements.size(); ++col) {
    const auto& [J, m] = from.elements[col];
    for (std::size_t k = 0; k < J.size(); ++k) {
      std::vector<int> rest = J;
      rest.erase(rest.begin() + static_cast<long>(k));
      const Rational sign = (k % 2 == 0) ? 1 : -1;
      const MonomialPolynomial image = w.derivative(J[k]).shifted(m);
      for (const auto& [e, c] : image.terms()) {
        auto it = to.index.find({rest, e});
        if (it == to.index.end()) throw CertificationError("Koszul differential left its degree slice");
        M(it->second, static_cast<Index>(col)) += sign * c;
      }
    }
  }
  return M;
}

}  // namespace

Index koszul_slice_cohomology(const LGModel& model, const MonomialPolynomial& w,
                              std::span<const int> variables, const GroupElement& target, int p) {
  for (int v : variables)
    if (v == 0 || model.q()[v] <= 0) throw ModelError("Koszul slices need positive q-degrees");
  const KoszulBasis here = koszul_slice(model, variables, target, p);
  const KoszulBasis below = koszul_slice(model, variables, target, p - 1);
  const KoszulBasis above = koszul_slice(model, variables, target, p + 1);
  const Index out_rank = below.elements.empty() || here.elements.empty() ? 0 : rank(contraction(w, here, below));
  const Index in_rank = above.elements.empty() || here.elements.empty() ? 0 : rank(contraction(w, above, here));
  return static_cast<Index>(here.elements.size()) - out_rank - in_rank;
}

}  // namespace hhmf
