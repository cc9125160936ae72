#include "hhmf/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace hhmf {

IntegerMatrix clear_denominators(const RationalMatrix& M) {
  IntegerMatrix out(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i) {
    Integer l = 1;
    for (Index j = 0; j < M.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(M(i, j)));
    for (Index j = 0; j < M.cols(); ++j) out(i, j) = numerator(M(i, j)) * (l / denominator(M(i, j)));
  }
  return out;
}

namespace {

// In-place Gauss-Jordan on [A | B]; returns false when A is singular.
bool gauss_jordan(RationalMatrix& A, RationalMatrix& B, Rational* det) {
  const Index n = A.rows();
  Rational d = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i)
      if (A(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      if (det) *det = 0;
      return false;
    }
    if (p != c) {
      A.row(p).swap(A.row(c));
      B.row(p).swap(B.row(c));
      d = -d;
    }
    const Rational piv = A(c, c);
    d *= piv;
    A.row(c) /= piv;
    B.row(c) /= piv;
    for (Index i = 0; i < n; ++i) {
      if (i == c || A(i, c) == 0) continue;
      const Rational f = A(i, c);
      A.row(i) -= f * A.row(c);
      B.row(i) -= f * B.row(c);
    }
  }
  if (det) *det = d;
  return true;
}

}  // namespace

Rational determinant(const RationalMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix A = M;
  RationalMatrix B(M.rows(), 0);
  Rational d;
  gauss_jordan(A, B, &d);
  return d;
}

std::optional<RationalVector> solve_exact(const RationalMatrix& A, const RationalVector& b) {
  if (A.rows() != A.cols() || A.rows() != b.size())
    throw std::invalid_argument("solve_exact: shape mismatch");
  RationalMatrix L = A;
  RationalMatrix R = b;
  if (!gauss_jordan(L, R, nullptr)) return std::nullopt;
  return RationalVector(R.col(0));
}

namespace {

template <typename Scalar, typename Sub>
SparseRow<Scalar> axpy_merge(const SparseRow<Scalar>& row, const SparseRow<Scalar>& pivot,
                             const Scalar& factor, Sub&& sub) {
  SparseRow<Scalar> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, sub(Scalar(0), factor, pivot[j].second));
      ++j;
    } else {
      Scalar v = sub(row[i].second, factor, pivot[j].second);
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename Scalar, typename Sub, typename Normalize>
Index sparse_rank_impl(std::vector<SparseRow<Scalar>> rows, Sub&& sub, Normalize&& normalize) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::unordered_map<Index, SparseRow<Scalar>> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const Scalar f = row.front().second;
      row = axpy_merge(row, it->second, f, sub);
    }
    if (row.empty()) continue;
    normalize(row);
    const Index lead = row.front().first;
    pivots.emplace(lead, std::move(row));
  }
  return static_cast<Index>(pivots.size());
}

}  // namespace

Index sparse_rank(std::vector<SparseRow<Rational>> rows) {
  return sparse_rank_impl<Rational>(
      std::move(rows),
      [](const Rational& a, const Rational& f, const Rational& b) { return Rational(a - f * b); },
      [](SparseRow<Rational>& row) {
        const Rational inv = 1 / row.front().second;
        for (auto& [c, v] : row) v *= inv;
      });
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  Integer num = numerator(q) % p;
  if (num < 0) num += p;
  Integer den = denominator(q) % p;
  return mulmod(num.convert_to<std::uint64_t>(), powmod(den.convert_to<std::uint64_t>(), p - 2, p), p);
}

}  // namespace

Index sparse_rank_mod_p(const std::vector<SparseRow<Rational>>& rows, std::uint64_t prime) {
  std::vector<SparseRow<std::uint64_t>> reduced;
  reduced.reserve(rows.size());
  for (const auto& row : rows) {
    SparseRow<std::uint64_t> r;
    for (const auto& [c, v] : row) {
      const std::uint64_t x = reduce_mod(v, prime);
      if (x != 0) r.emplace_back(c, x);
    }
    reduced.push_back(std::move(r));
  }
  return sparse_rank_impl<std::uint64_t>(
      std::move(reduced),
      [prime](std::uint64_t a, std::uint64_t f, std::uint64_t b) {
        const std::uint64_t fb = mulmod(f, b, prime);
        return a >= fb ? a - fb : a + prime - fb;
      },
      [prime](SparseRow<std::uint64_t>& row) {
        const std::uint64_t inv = powmod(row.front().second, prime - 2, prime);
        for (auto& [c, v] : row) v = mulmod(v, inv, prime);
      });
}

}  // namespace hhmf
