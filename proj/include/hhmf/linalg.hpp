#pragma once

// Exact dense and sparse elimination over integers and rationals.

#include "hhmf/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hhmf {

// Rank by Bareiss fraction-free elimination; Scalar must be an integral domain
// with exact division (Integer). The argument is taken by value and destroyed.
template <typename Scalar>
Index fraction_free_rank(MatrixX<Scalar> M) {
  const Index rows = M.rows(), cols = M.cols();
  Scalar prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) M.row(p).swap(M.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) M(i, j) = (M(r, c) * M(i, j) - M(i, c) * M(r, j)) / prev;
      M(i, c) = 0;
    }
    prev = M(r, c);
    ++r;
  }
  return r;
}

// Scales each row of a rational matrix by the lcm of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& M);

inline Index rank(const IntegerMatrix& M) { return fraction_free_rank<Integer>(M); }
inline Index rank(const RationalMatrix& M) { return fraction_free_rank<Integer>(clear_denominators(M)); }

Rational determinant(const RationalMatrix& M);

// Unique solution of a square nonsingular system, or nullopt when singular.
std::optional<RationalVector> solve_exact(const RationalMatrix& A, const RationalVector& b);

// Row echelon basis grown one vector at a time over a field. Each stored row
// is normalized to a leading 1 at a distinct pivot column.
template <typename Field>
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(Index dimension) : dim_(dimension) {}

  // Returns true iff v is independent of the rows inserted so far.
  bool insert(VectorX<Field> v) {
    reduce(v);
    Index lead = leading(v);
    if (lead < 0) return false;
    const Field inv = Field(1) / v(lead);
    v *= inv;
    rows_.push_back({lead, std::move(v)});
    return true;
  }

  bool contains(VectorX<Field> v) const {
    reduce(v);
    return leading(v) < 0;
  }

  Index rank() const { return static_cast<Index>(rows_.size()); }
  Index dimension() const { return dim_; }

 private:
  static Index leading(const VectorX<Field>& v) {
    for (Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) return i;
    return -1;
  }
  void reduce(VectorX<Field>& v) const {
    for (const auto& [lead, row] : rows_)
      if (v(lead) != 0) {
        const Field f = v(lead);
        v -= f * row;
      }
  }

  Index dim_;
  std::vector<std::pair<Index, VectorX<Field>>> rows_;
};

// Sparse row with strictly increasing column indices and nonzero entries.
template <typename Scalar>
using SparseRow = std::vector<std::pair<Index, Scalar>>;

// Exact rank of a sparse rational matrix. Rows are reduced shortest-first
// against a growing set of pivot rows.
Index sparse_rank(std::vector<SparseRow<Rational>> rows);

// Rank modulo a word-size prime; never exceeds the rational rank.
Index sparse_rank_mod_p(const std::vector<SparseRow<Rational>>& rows, std::uint64_t prime);

}  // namespace hhmf
