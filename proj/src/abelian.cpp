#include "hhmf/abelian.hpp"

#include <algorithm>

namespace hhmf {

Rational DualCharacter::operator()(const GroupElement& x) const {
  if (static_cast<std::size_t>(x.size()) != values.size())
    throw ModelError("dual character: element length mismatch");
  Rational acc = 0;
  for (Index i = 0; i < x.size(); ++i) acc += Rational(x.coordinates()(i)) * values[i];
  return frac(acc);
}

bool DualCharacter::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

FgAbelianGroup::FgAbelianGroup(Index generator_count, IntegerMatrix relations)
    : generators_(generator_count), relations_(std::move(relations)) {
  if (relations_.rows() > 0 && relations_.cols() != generators_)
    throw ModelError("relation matrix has the wrong number of columns");
  if (relations_.rows() == 0) relations_.resize(0, generators_);
  snf_ = smith_normal_form<Integer>(relations_);
}

bool FgAbelianGroup::is_free_index(Index i) const {
  return i >= snf_.D.rows() || snf_.D(i, i) == 0;
}

std::vector<Integer> FgAbelianGroup::torsion_invariants() const {
  std::vector<Integer> out;
  for (Index i = 0; i < generators_; ++i)
    if (!is_free_index(i) && snf_.D(i, i) > 1) out.push_back(snf_.D(i, i));
  return out;
}

Index FgAbelianGroup::free_rank() const {
  Index r = 0;
  for (Index i = 0; i < generators_; ++i)
    if (is_free_index(i)) ++r;
  return r;
}

void FgAbelianGroup::check_length(const GroupElement& x) const {
  if (x.size() != generators_) throw ModelError("group element has the wrong number of coordinates");
}

IntegerVector FgAbelianGroup::smith_coordinates(const GroupElement& x) const {
  check_length(x);
  IntegerVector y = snf_.V.transpose() * x.coordinates();
  for (Index i = 0; i < generators_; ++i) {
    if (is_free_index(i)) continue;
    const Integer& d = snf_.D(i, i);
    y(i) = y(i) - d * floor_div(y(i), d);
  }
  return y;
}

GroupElement FgAbelianGroup::normal_form(const GroupElement& x) const {
  // x = V^{-T} y
  return GroupElement(IntegerVector(snf_.Vinv.transpose() * smith_coordinates(x)));
}

bool FgAbelianGroup::equal(const GroupElement& a, const GroupElement& b) const {
  return smith_coordinates(a) == smith_coordinates(b);
}

bool FgAbelianGroup::is_zero(const GroupElement& x) const {
  return smith_coordinates(x).isZero();
}

bool FgAbelianGroup::has_infinite_order(const GroupElement& x) const {
  const IntegerVector y = smith_coordinates(x);
  for (Index i = 0; i < generators_; ++i)
    if (is_free_index(i) && y(i) != 0) return true;
  return false;
}

std::optional<Integer> solve_multiple(const FgAbelianGroup& G, const GroupElement& rho,
                                      const GroupElement& chi) {
  const IntegerVector yr = G.smith_coordinates(rho);
  const IntegerVector yc = G.smith_coordinates(chi);
  const auto& D = G.smith().D;
  const Index g = G.generator_count();
  auto free_index = [&](Index i) { return i >= D.rows() || D(i, i) == 0; };

  Index pivot = -1;
  for (Index i = 0; i < g && pivot < 0; ++i)
    if (free_index(i) && yc(i) != 0) pivot = i;
  if (pivot < 0) throw ModelError("solve_multiple: chi has finite order");

  if (yr(pivot) % yc(pivot) != 0) return std::nullopt;
  const Integer c = yr(pivot) / yc(pivot);
  for (Index i = 0; i < g; ++i) {
    const Integer diff = yr(i) - c * yc(i);
    if (free_index(i)) {
      if (diff != 0) return std::nullopt;
    } else if (diff % D(i, i) != 0) {
      return std::nullopt;
    }
  }
  return c;
}

namespace {

FgAbelianGroup quotient_group(const FgAbelianGroup& G, const GroupElement& chi) {
  const IntegerMatrix& R = G.relations();
  IntegerMatrix Q(R.rows() + 1, G.generator_count());
  if (R.rows() > 0) Q.topRows(R.rows()) = R;
  Q.row(R.rows()) = chi.coordinates().transpose();
  return FgAbelianGroup(G.generator_count(), std::move(Q));
}

}  // namespace

Integer quotient_order(const FgAbelianGroup& G, const GroupElement& chi) {
  const FgAbelianGroup Q = quotient_group(G, chi);
  if (Q.free_rank() != 0) throw ModelError("quotient is infinite");
  Integer order = 1;
  for (const auto& d : Q.torsion_invariants()) order *= d;
  return order;
}

std::vector<DualCharacter> enumerate_dual_of_quotient(const FgAbelianGroup& G,
                                                      const GroupElement& chi) {
  const FgAbelianGroup Q = quotient_group(G, chi);
  if (Q.free_rank() != 0) throw ModelError("quotient is infinite");

  const Index g = G.generator_count();
  const auto& D = Q.smith().D;
  const auto& V = Q.smith().V;
  std::vector<Index> cyclic;
  for (Index i = 0; i < g; ++i)
    if (D(i, i) > 1) cyclic.push_back(i);

  // A character is a choice of a_i in [0, d_i) on each cyclic factor; on
  // generator j it takes the value sum_i V(j, i) a_i / d_i.
  std::vector<DualCharacter> out;
  std::vector<Integer> digits(cyclic.size(), 0);
  for (;;) {
    DualCharacter phi;
    phi.values.resize(g);
    for (Index j = 0; j < g; ++j) {
      Rational v = 0;
      for (std::size_t k = 0; k < cyclic.size(); ++k)
        v += Rational(V(j, cyclic[k]) * digits[k]) / Rational(D(cyclic[k], cyclic[k]));
      phi.values[j] = frac(v);
    }
    out.push_back(std::move(phi));

    std::size_t k = 0;
    for (; k < cyclic.size(); ++k) {
      digits[k] += 1;
      if (digits[k] < D(cyclic[k], cyclic[k])) break;
      digits[k] = 0;
    }
    if (k == cyclic.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hhmf
