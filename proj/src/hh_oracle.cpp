#include "hhmf/hh_oracle.hpp"

#include <algorithm>
#include <functional>

namespace hhmf {

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

struct Context {
  const TrivialExtensionAlgebra& B;
  std::vector<Index> reduced;                              // non-idempotent basis elements
  std::vector<std::vector<std::pair<Index, Index>>> factorizations;  // a -> {(u, v) : u v = a}

  explicit Context(const TrivialExtensionAlgebra& algebra) : B(algebra), factorizations(algebra.dimension()) {
    for (Index i = 0; i < B.dimension(); ++i)
      if (!B.is_idempotent(i)) reduced.push_back(i);
    for (Index u : reduced)
      for (Index v : reduced)
        if (auto a = B.multiply(u, v)) factorizations[*a].emplace_back(u, v);
  }

  int duals(const std::vector<Index>& chain) const {
    return static_cast<int>(std::count_if(chain.begin(), chain.end(), [&](Index i) { return B.is_dual(i); }));
  }

  // Cochains of length r and weight s.
  std::vector<Cochain> basis(int r, std::int64_t s) const {
    std::vector<Cochain> out;
    const int n = B.n();
    if (n == 0 || s % n != 0) return out;
    std::vector<Index> chain;
    std::function<void()> rec = [&] {
      if (static_cast<int>(chain.size()) == r) {
        const int d = duals(chain);
        for (Index b = 0; b < B.dimension(); ++b) {
          const bool endpoints = r == 0 ? B.left(b) == B.right(b)
                                        : B.left(b) == B.left(chain.front()) && B.right(b) == B.right(chain.back());
          if (endpoints && n * ((B.is_dual(b) ? 1 : 0) - d) == s) out.push_back({chain, b});
        }
        return;
      }
      for (Index a : reduced) {
        if (!chain.empty() && B.left(a) != B.right(chain.back())) continue;
        chain.push_back(a);
        rec();
        chain.pop_back();
      }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
  }
};

Index exact_rank(const std::vector<SparseRow<Rational>>& rows, Index columns, bool prefilter) {
  if (rows.empty() || columns == 0) return 0;
  if (prefilter) {
    // The rank modulo p never exceeds the rational rank, so a maximal value
    // modulo p is already exact.
    const Index modular = sparse_rank_mod_p(rows, kPrime);
    if (modular == std::min<Index>(static_cast<Index>(rows.size()), columns)) return modular;
  }
  return sparse_rank(rows);
}

}  // namespace

RelativeBarComplexSlice cochain_slice(const TrivialExtensionAlgebra& B, int r, std::int64_t s) {
  if (r < 0) throw ModelError("cochain length must be nonnegative");
  const Context ctx(B);
  RelativeBarComplexSlice slice;
  slice.r = r;
  slice.s = s;
  slice.basis = ctx.basis(r, s);
  slice.next_basis = ctx.basis(r + 1, s);
  std::map<Cochain, Index> index;
  for (std::size_t i = 0; i < slice.next_basis.size(); ++i) index.emplace(slice.next_basis[i], static_cast<Index>(i));

  const bool odd_f = (s % 2) != 0;
  for (const Cochain& f : slice.basis) {
    std::map<Index, Rational> row;
    auto add = [&](std::vector<Index> inputs, Index output, int sign) {
      row[index.at(Cochain{std::move(inputs), output})] += sign;
    };
    const int left_end = r == 0 ? B.left(f.output) : B.left(f.inputs.front());
    const int right_end = r == 0 ? B.right(f.output) : B.right(f.inputs.back());
    for (Index x : ctx.reduced) {
      if (B.right(x) != left_end) continue;
      if (auto c = B.multiply(x, f.output)) {
        std::vector<Index> in{x};
        in.insert(in.end(), f.inputs.begin(), f.inputs.end());
        add(std::move(in), *c, (B.is_dual(x) && odd_f && B.n() % 2 == 1) ? -1 : 1);
      }
    }
    for (int i = 0; i < r; ++i) {
      for (const auto& [u, v] : ctx.factorizations[f.inputs[i]]) {
        std::vector<Index> in(f.inputs.begin(), f.inputs.begin() + i);
        in.push_back(u);
        in.push_back(v);
        in.insert(in.end(), f.inputs.begin() + i + 1, f.inputs.end());
        add(std::move(in), f.output, (i + 1) % 2 == 0 ? 1 : -1);
      }
    }
    for (Index y : ctx.reduced) {
      if (B.left(y) != right_end) continue;
      if (auto c = B.multiply(f.output, y)) {
        std::vector<Index> in = f.inputs;
        in.push_back(y);
        add(std::move(in), *c, (r + 1) % 2 == 0 ? 1 : -1);
      }
    }
    SparseRow<Rational> sparse;
    for (const auto& [col, v] : row)
      if (v != 0) sparse.emplace_back(col, v);
    slice.differential.push_back(std::move(sparse));
  }
  return slice;
}

OracleResult hh_bigraded_oracle(const Quiver& Q, int n, int r_max, bool modular_prefilter) {
  if (r_max < 2) throw ModelError("r_max must be at least 2 to certify any entry");
  if (n < 1) throw ModelError("n must be at least 1");
  const TrivialExtensionAlgebra B(Q, n);
  OracleResult result;
  result.r_max = r_max;
  result.table.meta.n = n;
  result.table.meta.rank = Q.vertex_count();
  result.table.meta.family = "quiver";
  result.table.meta.certified = true;

  // Weights of cochains of length r lie in n * [-r, 1].
  for (std::int64_t s = -static_cast<std::int64_t>(r_max) * n; s <= n; s += n) {
    std::vector<Index> ranks(r_max, 0);
    std::vector<Index> dims(r_max, 0);
    for (int r = 0; r < r_max; ++r) {
      const RelativeBarComplexSlice slice = cochain_slice(B, r, s);
      dims[r] = static_cast<Index>(slice.basis.size());
      result.cochain_dims[{r, s}] = dims[r];
      if (r + 1 == r_max) result.cochain_dims[{r_max, s}] = static_cast<Index>(slice.next_basis.size());
      ranks[r] = exact_rank(slice.differential, static_cast<Index>(slice.next_basis.size()), modular_prefilter);
    }
    for (int r = 0; r < r_max; ++r) {
      const Index h = dims[r] - ranks[r] - (r > 0 ? ranks[r - 1] : 0);
      if (h > 0) result.table.add_dimension(r + s, s, h);
    }
  }
  return result;
}

}  // namespace hhmf
