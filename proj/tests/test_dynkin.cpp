#include <catch_amalgamated.hpp>

#include "hhmf/dynkin_algebra.hpp"

using namespace hhmf;

namespace {

// Paths in a tree quiver: ordered pairs (u, v) joined by an oriented path,
// counted by walking the undirected tree.
Index count_paths_by_pairs(const Quiver& Q) {
  const int V = Q.vertex_count();
  std::vector<std::vector<bool>> reach(V, std::vector<bool>(V, false));
  for (int v = 0; v < V; ++v) reach[v][v] = true;
  for (int step = 0; step < V; ++step)
    for (const auto& a : Q.arrows())
      for (int u = 0; u < V; ++u)
        if (reach[u][a.source]) reach[u][a.target] = true;
  Index count = 0;
  for (int u = 0; u < V; ++u)
    for (int v = 0; v < V; ++v) count += reach[u][v] ? 1 : 0;
  return count;
}

const std::vector<std::pair<Family, int>> kTypes{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 5},
                                                 {Family::A, 8}, {Family::D, 4}, {Family::D, 5}, {Family::D, 8},
                                                 {Family::E6, 6}, {Family::E7, 7}, {Family::E8, 8}};

}  // namespace

TEST_CASE("Dynkin quiver shapes") {
  CHECK(dynkin(Family::A, 2).arrows().size() == 1);
  const Quiver d4 = dynkin(Family::D, 4);
  CHECK(d4.vertex_count() == 4);
  std::vector<int> valence(4, 0);
  for (const auto& a : d4.arrows()) {
    ++valence[a.source];
    ++valence[a.target];
  }
  CHECK(*std::max_element(valence.begin(), valence.end()) == 3);
  CHECK(dynkin(Family::E6, 6).arrows().size() == 5);
  CHECK_THROWS_AS(dynkin(Family::D, 3), ModelError);
}

TEST_CASE("path counts match reachability in every orientation") {
  for (auto [f, r] : kTypes) {
    const auto edges = dynkin_edges(f, r).size();
    for (std::uint64_t mask = 0; mask < (1ULL << edges); mask += 1 + (1ULL << edges) / 16) {
      const Quiver Q = dynkin(f, r, mask);
      CHECK(static_cast<Index>(path_basis(Q).size()) == count_paths_by_pairs(Q));
    }
  }
  CHECK(path_basis(dynkin(Family::A, 3)).size() == 6);
}

TEST_CASE("oriented cycles are rejected") {
  const Quiver cycle(2, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(path_basis(cycle), ModelError);
}

TEST_CASE("trivial extension dimensions and gradings") {
  const TrivialExtensionAlgebra b2(dynkin(Family::A, 2), 2);
  CHECK(b2.dimension() == 6);
  const TrivialExtensionAlgebra b3(dynkin(Family::A, 3), 2);
  CHECK(b3.dimension() == 12);
  for (Index i = 0; i < b3.dimension(); ++i) {
    CHECK(b3.degree(i) == (b3.is_dual(i) ? 2 : 0));
    CHECK(b3.weight(i) == b3.degree(i));
  }
}

TEST_CASE("products with duals follow the bimodule action") {
  // A_2: e0, e1, a : 0 -> 1. a a^* = e0^* and a^* a = e1^*.
  const TrivialExtensionAlgebra B(dynkin(Family::A, 2), 2);
  const auto& paths = B.paths();
  const Index P = B.path_count();
  auto find = [&](int s, int t, std::vector<int> arrows) {
    for (Index i = 0; i < P; ++i)
      if (paths[i] == Path{s, t, arrows}) return i;
    return Index(-1);
  };
  const Index e0 = find(0, 0, {}), e1 = find(1, 1, {}), a = find(0, 1, {0});
  CHECK(B.multiply(a, P + a) == P + e0);
  CHECK(B.multiply(P + a, a) == P + e1);
  CHECK(B.multiply(e0, a) == a);
  CHECK_FALSE(B.multiply(e1, a).has_value());
  CHECK_FALSE(B.multiply(P + a, P + a).has_value());
  CHECK(B.left(P + a) == 1);
  CHECK(B.right(P + a) == 0);
}

TEST_CASE("trivial extensions are graded Frobenius") {
  for (auto [f, r] : kTypes) {
    for (int n : {1, 2, 3, 4}) {
      const TrivialExtensionAlgebra B(dynkin(f, r, n == 3 ? 0b101 : 0), n);
      const auto report = frobenius_check(B);
      INFO(to_string(f) << r << " n=" << n);
      CHECK(report.ok());
      CHECK(report.gram_rank == B.dimension());
    }
  }
  const auto report = frobenius_check(TrivialExtensionAlgebra(dynkin(Family::A, 2), 2));
  CHECK(report.gram_rank == 6);
}

TEST_CASE("Ginzburg presentation of A2") {
  const GinzburgPresentation G(dynkin(Family::A, 2), 2);
  REQUIRE(G.generators().size() == 4);
  CHECK(G.generators()[0].degree == 1);
  CHECK(G.generators()[1].degree == -1);
  CHECK(G.generators()[2].degree == -1);
  // dh_0 = a^* a (the arrow leaves 0), dh_1 = -a a^*.
  CHECK(G.differential(2) == GinzburgPresentation::Element{{{1, 0}, Rational(1)}});
  CHECK(G.differential(3) == GinzburgPresentation::Element{{{0, 1}, Rational(-1)}});
  CHECK(G.differential(0).empty());
  std::string why;
  CHECK(G.check(&why));
}

TEST_CASE("Ginzburg differential squares to zero") {
  for (auto [f, r] : kTypes) {
    const auto edges = dynkin_edges(f, r).size();
    for (int n = 1; n <= 6; ++n) {
      for (std::uint64_t mask : std::vector<std::uint64_t>{0, (1ULL << edges) - 1, 0b1010}) {
        const GinzburgPresentation G(dynkin(f, r, mask & ((1ULL << edges) - 1)), n);
        std::string why;
        CHECK(G.check(&why));
        // d^2 on products of loops and arrows, via the Leibniz rule.
        const int m = static_cast<int>(edges);
        for (int v = 0; v < r; ++v) {
          const int h = 2 * m + v;
          for (const auto& [w, c] : G.differential(h)) {
            GinzburgPresentation::Element x{{{h, w.back()}, Rational(1)}};
            if (!G.composable({h, w.back()})) continue;
            CHECK(G.apply(G.apply(x)).empty());
          }
          GinzburgPresentation::Element hh{{{h, h}, Rational(1)}};
          CHECK(G.apply(G.apply(hh)).empty());
          CHECK(G.degree({h}) + 1 == 2 - n);
        }
      }
    }
  }
}
