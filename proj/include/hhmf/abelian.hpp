#pragma once

// Finitely generated abelian groups given by integer relation matrices.
//
// A group is Z^g / (row span of R) where R has one relation per row. All
// normal forms go through the Smith decomposition U * R * V = D: an element x
// (a column of generator coefficients) lies in the relation lattice iff
// y = V^T x satisfies y_i = 0 mod d_i for every i.

#include "hhmf/errors.hpp"
#include "hhmf/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hhmf {

template <typename Scalar>
struct SmithDecomposition {
  MatrixX<Scalar> U;     // unimodular, rows x rows
  MatrixX<Scalar> D;     // diagonal, d_0 | d_1 | ..., all d_i >= 0
  MatrixX<Scalar> V;     // unimodular, cols x cols
  MatrixX<Scalar> Vinv;  // V^{-1}, tracked alongside V

  Index rank() const {
    Index r = 0;
    for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i)
      if (D(i, i) != 0) ++r;
    return r;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar floor_quotient(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace detail

// Smith normal form with minimal-absolute-value pivoting.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const MatrixX<Scalar>& M) {
  using detail::abs_value;
  using detail::floor_quotient;

  const Index rows = M.rows();
  const Index cols = M.cols();
  SmithDecomposition<Scalar> s;
  s.D = M;
  s.U = MatrixX<Scalar>::Identity(rows, rows);
  s.V = MatrixX<Scalar>::Identity(cols, cols);
  s.Vinv = MatrixX<Scalar>::Identity(cols, cols);
  auto& A = s.D;

  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    A.row(i).swap(A.row(j));
    s.U.row(i).swap(s.U.row(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    A.col(i).swap(A.col(j));
    s.V.col(i).swap(s.V.col(j));
    s.Vinv.row(i).swap(s.Vinv.row(j));
  };
  // row_i -= q * row_j
  auto sub_row = [&](Index i, Index j, const Scalar& q) {
    if (q == 0) return;
    for (Index c = 0; c < cols; ++c) A(i, c) -= q * A(j, c);
    for (Index c = 0; c < rows; ++c) s.U(i, c) -= q * s.U(j, c);
  };
  // col_i -= q * col_j
  auto sub_col = [&](Index i, Index j, const Scalar& q) {
    if (q == 0) return;
    for (Index r = 0; r < rows; ++r) A(r, i) -= q * A(r, j);
    for (Index r = 0; r < cols; ++r) s.V(r, i) -= q * s.V(r, j);
    for (Index c = 0; c < cols; ++c) s.Vinv(j, c) += q * s.Vinv(i, c);
  };

  const Index diag = std::min(rows, cols);
  for (Index t = 0; t < diag; ++t) {
    for (;;) {
      // Minimal nonzero |entry| of the trailing block goes to (t, t).
      Index pr = -1, pc = -1;
      Scalar best = 0;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (A(i, j) != 0 && (pr < 0 || abs_value<Scalar>(A(i, j)) < best)) {
            best = abs_value<Scalar>(A(i, j));
            pr = i;
            pc = j;
          }
      if (pr < 0) return s;  // trailing block is zero
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (A(i, t) == 0) continue;
        sub_row(i, t, floor_quotient<Scalar>(A(i, t), A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (A(t, j) == 0) continue;
        sub_col(j, t, floor_quotient<Scalar>(A(t, j), A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      sub_row(t, bad, Scalar(-1));
    }
    if (A(t, t) < 0) {
      for (Index c = 0; c < cols; ++c) A(t, c) = -A(t, c);
      for (Index c = 0; c < rows; ++c) s.U(t, c) = -s.U(t, c);
    }
  }
  return s;
}

// An element of a finitely generated abelian group, by generator coefficients.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(IntegerVector coordinates) : coords_(std::move(coordinates)) {}

  static GroupElement zero(Index generator_count) {
    return GroupElement(IntegerVector::Zero(generator_count));
  }
  static GroupElement unit(Index generator_count, Index i) {
    IntegerVector v = IntegerVector::Zero(generator_count);
    v(i) = 1;
    return GroupElement(std::move(v));
  }

  const IntegerVector& coordinates() const { return coords_; }
  Index size() const { return coords_.size(); }

  GroupElement& operator+=(const GroupElement& o) {
    coords_ += o.coords_;
    return *this;
  }
  GroupElement& operator-=(const GroupElement& o) {
    coords_ -= o.coords_;
    return *this;
  }
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator-(const GroupElement& a) { return GroupElement(IntegerVector(-a.coords_)); }
  friend GroupElement operator*(const Integer& k, const GroupElement& a) {
    return GroupElement(IntegerVector(a.coords_ * k));
  }

  // Coordinate-wise identity (not group equality; see FgAbelianGroup::equal).
  bool same_coordinates(const GroupElement& o) const { return coords_ == o.coords_; }

 private:
  IntegerVector coords_;
};

// A homomorphism from a finite quotient into Q/Z, stored by its values on the
// generators, each in [0, 1).
struct DualCharacter {
  std::vector<Rational> values;

  Rational operator()(const GroupElement& x) const;
  bool is_trivial() const;
  friend bool operator==(const DualCharacter&, const DualCharacter&) = default;
  friend bool operator<(const DualCharacter& a, const DualCharacter& b) { return a.values < b.values; }
};

class FgAbelianGroup {
 public:
  // relations: one relation per row, one generator per column.
  FgAbelianGroup(Index generator_count, IntegerMatrix relations);

  Index generator_count() const { return generators_; }
  const IntegerMatrix& relations() const { return relations_; }
  const SmithDecomposition<Integer>& smith() const { return snf_; }

  // Invariant factors d_i > 1 and the free rank.
  std::vector<Integer> torsion_invariants() const;
  Index free_rank() const;

  GroupElement generator(Index i) const { return GroupElement::unit(generators_, i); }
  GroupElement zero() const { return GroupElement::zero(generators_); }

  // Coordinates in the Smith basis, reduced: torsion entries in [0, d_i),
  // free entries untouched, entries with d_i = 1 set to 0.
  IntegerVector smith_coordinates(const GroupElement& x) const;

  GroupElement normal_form(const GroupElement& x) const;
  bool equal(const GroupElement& a, const GroupElement& b) const;
  bool is_zero(const GroupElement& x) const;
  bool has_infinite_order(const GroupElement& x) const;

 private:
  void check_length(const GroupElement& x) const;
  bool is_free_index(Index i) const;

  Index generators_;
  IntegerMatrix relations_;
  SmithDecomposition<Integer> snf_;
};

// The unique c with rho = c * chi in G, if any. Throws ModelError when chi has
// finite order.
std::optional<Integer> solve_multiple(const FgAbelianGroup& G, const GroupElement& rho,
                                      const GroupElement& chi);

// All homomorphisms G/<chi> -> Q/Z, sorted lexicographically by their values
// on the generators. Throws ModelError if the quotient is infinite.
std::vector<DualCharacter> enumerate_dual_of_quotient(const FgAbelianGroup& G,
                                                      const GroupElement& chi);

// Order of G/<chi>, from the Smith form; throws ModelError if infinite.
Integer quotient_order(const FgAbelianGroup& G, const GroupElement& chi);

}  // namespace hhmf
