#include <catch_amalgamated.hpp>

#include "hhmf/milnor.hpp"

using namespace hhmf;

namespace {

JacobiBasis identity_basis(Family f, int rank, int n) {
  const auto m = LGModel::preset(f, rank, n);
  return jacobi_basis(m, sectors(m).front());
}

}  // namespace

TEST_CASE("Milnor numbers of the identity sectors") {
  CHECK(identity_basis(Family::A, 1, 2).size() == 1);
  CHECK(identity_basis(Family::A, 4, 2).size() == 4);
  CHECK(identity_basis(Family::D, 5, 2).size() == 7);  // Fermat cover x^8
  CHECK(identity_basis(Family::E6, 6, 3).size() == 6);
  CHECK(identity_basis(Family::E7, 7, 2).size() == 7);
  CHECK(identity_basis(Family::E8, 8, 2).size() == 8);
}

TEST_CASE("E7 basis is chosen from the top of the order") {
  const auto b = identity_basis(Family::E7, 7, 1);
  std::vector<std::pair<int, int>> got;
  for (const auto& e : b.monomials) got.emplace_back(e[1], e[2]);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {3, 0}, {4, 0}});
  CHECK(b.top_degree == Rational(8, 9));
}

TEST_CASE("E7 relations in the Jacobi ring") {
  // d1 w = 3 x1^2 x2, d2 w = x1^3 + 3 x2^2, so x2^2 = -x1^3/3 is not in the basis.
  const auto b = identity_basis(Family::E7, 7, 1);
  for (const auto& e : b.monomials) CHECK(e[2] <= 1);
}

TEST_CASE("non-isolated critical points are rejected") {
  MonomialPolynomial w(3);
  w.add_term(1, {0, 2, 2});  // x1^2 x2^2 has a non-isolated critical locus
  const std::vector<int> vars{1, 2};
  const std::vector<Rational> q{0, Rational(1, 4), Rational(1, 4)};
  CHECK_THROWS_AS(jacobi_basis(w, vars, q), CertificationError);
}

TEST_CASE("empty variable set gives the unit") {
  MonomialPolynomial w(3);
  const std::vector<Rational> q{0, Rational(1, 2), Rational(1, 2)};
  const auto b = jacobi_basis(w, std::span<const int>{}, q);
  REQUIRE(b.size() == 1);
  CHECK(b.monomials[0] == Exponents{0, 0, 0});
}

TEST_CASE("Koszul slices are concentrated in degree zero") {
  const auto m = LGModel::preset(Family::A, 2, 2);
  const std::vector<int> vars{1, 2, 3};
  // Degree of the unit and of x1: H^0 is one-dimensional, higher terms vanish.
  for (const Exponents& e : {Exponents{0, 0, 0, 0}, Exponents{0, 1, 0, 0}}) {
    const auto target = m.degree(e);
    CHECK(koszul_slice_cohomology(m, m.polynomial(), vars, target, 0) == 1);
    CHECK(koszul_slice_cohomology(m, m.polynomial(), vars, target, 1) == 0);
    CHECK(koszul_slice_cohomology(m, m.polynomial(), vars, target, 2) == 0);
  }
  // x1^2 is proportional to d1 w: zero in the Jacobi ring.
  CHECK(koszul_slice_cohomology(m, m.polynomial(), vars, m.degree({0, 2, 0, 0}), 0) == 0);
}
