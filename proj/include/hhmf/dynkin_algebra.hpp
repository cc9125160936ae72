#pragma once

// Dynkin quivers, their path algebras A_Q, the trivial extension algebras
// B = A_Q + A_Q^dual[-n] and the Ginzburg presentation of the derived
// n-preprojective algebra.

#include "hhmf/lgmodel.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hhmf {

struct Arrow {
  int source;
  int target;
};

class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

 private:
  int vertices_;
  std::vector<Arrow> arrows_;
};

// Tree quiver of the given type. Edge k joins the two vertices listed in
// dynkin_edges(); bit k of `orientation` reverses it. The default orientation
// points every edge from the smaller to the larger vertex.
Quiver dynkin(Family family, int rank, std::uint64_t orientation = 0);
std::vector<std::pair<int, int>> dynkin_edges(Family family, int rank);

// A path runs through `arrows` in order, starting at `source`. Lazy paths
// e_v have no arrows.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  bool lazy() const { return arrows.empty(); }
  auto operator<=>(const Path&) const = default;
};

// All paths, sorted by length, then source, then arrow sequence. Throws
// ModelError if the quiver has an oriented cycle.
std::vector<Path> path_basis(const Quiver& Q);

// Basis: paths p_0, ..., p_{P-1} followed by the dual functionals
// p_0^*, ..., p_{P-1}^*. Products of basis elements are zero or a single basis
// element with coefficient 1: p q is concatenation (p first), and with the
// bimodule action (f b)(c) = f(b c), (b f)(c) = f(c b) one gets
// q^* p = c^* when q = p c and p q^* = c^* when q = c p.
class TrivialExtensionAlgebra {
 public:
  TrivialExtensionAlgebra(const Quiver& Q, int n);

  int n() const { return n_; }
  Index dimension() const { return static_cast<Index>(2 * paths_.size()); }
  Index path_count() const { return static_cast<Index>(paths_.size()); }
  const std::vector<Path>& paths() const { return paths_; }
  const Quiver& quiver() const { return quiver_; }

  bool is_dual(Index i) const { return i >= path_count(); }
  bool is_idempotent(Index i) const { return !is_dual(i) && paths_[i].lazy(); }
  // Cohomological degree and weight agree: 0 on paths, n on duals.
  int degree(Index i) const { return is_dual(i) ? n_ : 0; }
  int weight(Index i) const { return degree(i); }
  // Vertices e_L x e_R = x.
  int left(Index i) const;
  int right(Index i) const;

  std::optional<Index> multiply(Index a, Index b) const {
    const Index c = table_[static_cast<std::size_t>(a * dimension() + b)];
    return c < 0 ? std::nullopt : std::optional<Index>(c);
  }
  // Pairing <x, y> on basis elements: 1 when one is the dual of the other.
  int pairing(Index a, Index b) const;
  std::string name(Index i) const;

 private:
  Quiver quiver_;
  int n_;
  std::vector<Path> paths_;
  std::vector<Index> table_;
};

struct FrobeniusReport {
  Index dimension = 0;
  Index gram_rank = 0;
  bool nondegenerate = false;
  bool invariant = false;
  bool graded = false;
  bool associative = false;
  bool unital = false;
  std::vector<std::string> failures;

  bool ok() const { return nondegenerate && invariant && graded && associative && unital; }
};

// Checks associativity, the unit, and that the pairing is nondegenerate,
// invariant and concentrated in total degree n, over all basis triples.
FrobeniusReport frobenius_check(const TrivialExtensionAlgebra& B);

// Ginzburg presentation: arrows g in degree 1, reversed arrows g^* and loops
// h_v in degree 1 - n, dg = dg^* = 0 and
//   d h_v = sum_{s(g) = v} g^* g - sum_{t(g) = v} g g^*,
// with composition written right to left.
class GinzburgPresentation {
 public:
  enum class Kind { Arrow, Reversed, Loop };
  struct Generator {
    Kind kind;
    int index;  // arrow or vertex
    int source;
    int target;
    int degree;
    std::string name;
  };
  // Linear combination of words; a word {a, b} means a after b.
  using Word = std::vector<int>;
  using Element = std::map<Word, Rational>;

  GinzburgPresentation(const Quiver& Q, int n);

  int n() const { return n_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const Element& differential(int generator) const { return d_[generator]; }

  bool composable(const Word& w) const;
  int degree(const Word& w) const;
  // Extension of d as a degree +1 derivation with Koszul signs.
  Element apply(const Element& x) const;

  // Verifies d^2 = 0 and that d raises degree by one and preserves endpoints
  // on every generator; failures are described in `why`.
  bool check(std::string* why = nullptr) const;

 private:
  int n_;
  std::vector<Generator> generators_;
  std::vector<Element> d_;
};

}  // namespace hhmf
