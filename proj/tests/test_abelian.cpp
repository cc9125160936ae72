#include <catch_amalgamated.hpp>

#include "hhmf/abelian.hpp"

using namespace hhmf;

namespace {

IntegerMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix M(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (auto r : rows) {
    Index j = 0;
    for (long v : r) M(i, j++) = v;
    ++i;
  }
  return M;
}

GroupElement elem(std::initializer_list<long> c) {
  IntegerVector v(static_cast<Index>(c.size()));
  Index i = 0;
  for (long x : c) v(i++) = x;
  return GroupElement(v);
}

}  // namespace

TEST_CASE("smith form reconstructs the input") {
  const IntegerMatrix M = mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto s = smith_normal_form<Integer>(M);
  CHECK(s.U * M * s.V == s.D);
  CHECK(s.V * s.Vinv == IntegerMatrix::Identity(3, 3));
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(1, 1) == 6);
  CHECK(s.D(2, 2) == 12);
  CHECK(s.rank() == 3);
}

TEST_CASE("smith form of rectangular and singular matrices") {
  const IntegerMatrix M = mat({{3, 6, 9, 12}, {1, 2, 3, 4}});
  const auto s = smith_normal_form<Integer>(M);
  CHECK(s.U * M * s.V == s.D);
  CHECK(s.rank() == 1);
  CHECK(s.D(0, 0) == 1);
}

TEST_CASE("smith diagonal divides down the chain") {
  const IntegerMatrix M = mat({{4, 0, 0}, {0, 6, 0}, {0, 0, 10}});
  const auto s = smith_normal_form<Integer>(M);
  CHECK(s.U * M * s.V == s.D);
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(1, 1) == 2);
  CHECK(s.D(2, 2) == 60);
}

TEST_CASE("finite abelian group membership and normal forms") {
  // Z^2 / <(2, 0), (0, 3)> = Z/2 x Z/3.
  const FgAbelianGroup G(2, mat({{2, 0}, {0, 3}}));
  CHECK(G.free_rank() == 0);
  CHECK(G.torsion_invariants() == std::vector<Integer>{6});
  CHECK(G.is_zero(elem({4, -3})));
  CHECK_FALSE(G.is_zero(elem({1, 0})));
  CHECK(G.equal(elem({5, 7}), elem({1, 1})));
  CHECK(G.equal(G.normal_form(elem({5, 7})), elem({5, 7})));
}

TEST_CASE("infinite order and solving for multiples") {
  // Z^2 / <(1, -2)>: generator 0 equals 2 * generator 1.
  const FgAbelianGroup G(2, mat({{1, -2}}));
  const auto x = G.generator(1);
  CHECK(G.has_infinite_order(x));
  CHECK(solve_multiple(G, G.generator(0), x) == Integer(2));
  CHECK(solve_multiple(G, G.zero(), x) == Integer(0));

  const FgAbelianGroup H(2, mat({{2, 0}}));
  CHECK_FALSE(solve_multiple(H, H.generator(0), H.generator(1)).has_value());
  CHECK_THROWS_AS(solve_multiple(H, H.generator(1), H.generator(0)), ModelError);
}

TEST_CASE("dual of a cyclic quotient") {
  // Z^2 / <(4, -1)> is Z; modulo generator 1 = 4 * generator 0 it is Z/4.
  const FgAbelianGroup G(2, mat({{4, -1}}));
  const auto duals = enumerate_dual_of_quotient(G, G.generator(1));
  REQUIRE(duals.size() == 4);
  CHECK(quotient_order(G, G.generator(1)) == 4);
  CHECK(duals.front().is_trivial());
  for (const auto& phi : duals) {
    CHECK(phi(G.generator(1)) == 0);
    CHECK(phi(elem({4, 0})) == 0);
  }
  CHECK(duals[1](G.generator(0)) == Rational(1, 4));
}

TEST_CASE("infinite quotients are rejected") {
  const FgAbelianGroup G(2, IntegerMatrix(0, 2));
  CHECK_THROWS_AS(enumerate_dual_of_quotient(G, G.generator(0)), ModelError);
}
