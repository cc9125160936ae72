#include "hhmf/dynkin_algebra.hpp"

#include "hhmf/linalg.hpp"

#include <algorithm>
#include <functional>

namespace hhmf {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : vertices_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count < 1) throw ModelError("a quiver needs at least one vertex");
  for (const auto& a : arrows_)
    if (a.source < 0 || a.target < 0 || a.source >= vertex_count || a.target >= vertex_count)
      throw ModelError("arrow endpoint out of range");
}

std::vector<std::pair<int, int>> dynkin_edges(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::A:
      if (rank < 1) throw ModelError("A_l needs l >= 1");
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (rank < 4) throw ModelError("D_l needs l >= 4");
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const int expected = family == Family::E6 ? 6 : family == Family::E7 ? 7 : 8;
      if (rank != expected) throw ModelError("E" + std::to_string(expected) + " has rank " + std::to_string(expected));
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, rank - 1);
      break;
    }
  }
  return edges;
}

Quiver dynkin(Family family, int rank, std::uint64_t orientation) {
  const auto edges = dynkin_edges(family, rank);
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    if ((orientation >> k) & 1U) std::swap(a, b);
    arrows.push_back({a, b});
  }
  return Quiver(rank, std::move(arrows));
}

std::vector<Path> path_basis(const Quiver& Q) {
  std::vector<Path> out;
  const auto& arrows = Q.arrows();
  std::function<void(Path&)> extend = [&](Path& p) {
    out.push_back(p);
    if (static_cast<int>(p.arrows.size()) > Q.vertex_count())
      throw ModelError("quiver has an oriented cycle: infinite path algebra");
    for (int k = 0; k < static_cast<int>(arrows.size()); ++k) {
      if (arrows[k].source != p.target) continue;
      const int saved = p.target;
      p.arrows.push_back(k);
      p.target = arrows[k].target;
      extend(p);
      p.arrows.pop_back();
      p.target = saved;
    }
  };
  for (int v = 0; v < Q.vertex_count(); ++v) {
    Path p{v, v, {}};
    extend(p);
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    return a < b;
  });
  return out;
}

namespace {

bool starts_with(const std::vector<int>& w, const std::vector<int>& prefix) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}
bool ends_with(const std::vector<int>& w, const std::vector<int>& suffix) {
  return suffix.size() <= w.size() && std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

}  // namespace

TrivialExtensionAlgebra::TrivialExtensionAlgebra(const Quiver& Q, int n)
    : quiver_(Q), n_(n), paths_(path_basis(Q)) {
  std::map<Path, Index> index;
  for (std::size_t i = 0; i < paths_.size(); ++i) index.emplace(paths_[i], static_cast<Index>(i));
  const Index P = path_count(), N = dimension();
  table_.assign(static_cast<std::size_t>(N * N), -1);
  auto set = [&](Index a, Index b, Index c) { table_[static_cast<std::size_t>(a * N + b)] = c; };
  auto find = [&](int s, int t, std::vector<int> arrows) { return index.at(Path{s, t, std::move(arrows)}); };

  for (Index a = 0; a < P; ++a) {
    const Path& p = paths_[a];
    for (Index b = 0; b < P; ++b) {
      const Path& q = paths_[b];
      if (p.target == q.source) {
        std::vector<int> w = p.arrows;
        w.insert(w.end(), q.arrows.begin(), q.arrows.end());
        set(a, b, find(p.source, q.target, std::move(w)));
      }
      // p q^* = c^* with q = c p.
      if (q.target == p.target && ends_with(q.arrows, p.arrows)) {
        std::vector<int> c(q.arrows.begin(), q.arrows.end() - static_cast<long>(p.arrows.size()));
        set(a, P + b, P + find(q.source, p.source, std::move(c)));
      }
      // q^* p = c^* with q = p c.
      if (q.source == p.source && starts_with(q.arrows, p.arrows)) {
        std::vector<int> c(q.arrows.begin() + static_cast<long>(p.arrows.size()), q.arrows.end());
        set(P + b, a, P + find(p.target, q.target, std::move(c)));
      }
    }
  }
}

int TrivialExtensionAlgebra::left(Index i) const {
  return is_dual(i) ? paths_[i - path_count()].target : paths_[i].source;
}

int TrivialExtensionAlgebra::right(Index i) const {
  return is_dual(i) ? paths_[i - path_count()].source : paths_[i].target;
}

int TrivialExtensionAlgebra::pairing(Index a, Index b) const {
  const Index P = path_count();
  if (is_dual(a) != is_dual(b) && (is_dual(a) ? a - P : a) == (is_dual(b) ? b - P : b)) return 1;
  return 0;
}

std::string TrivialExtensionAlgebra::name(Index i) const {
  const Path& p = paths_[is_dual(i) ? i - path_count() : i];
  std::string s;
  if (p.lazy()) {
    s = "e" + std::to_string(p.source);
  } else {
    for (std::size_t k = 0; k < p.arrows.size(); ++k) s += (k ? "." : "") + std::string("a") + std::to_string(p.arrows[k]);
  }
  return is_dual(i) ? "(" + s + ")*" : s;
}

FrobeniusReport frobenius_check(const TrivialExtensionAlgebra& B) {
  FrobeniusReport r;
  const Index N = B.dimension();
  r.dimension = N;
  IntegerMatrix gram(N, N);
  r.graded = true;
  for (Index a = 0; a < N; ++a)
    for (Index b = 0; b < N; ++b) {
      gram(a, b) = B.pairing(a, b);
      if (gram(a, b) != 0 && B.degree(a) + B.degree(b) != B.n()) r.graded = false;
    }
  r.gram_rank = rank(gram);
  r.nondegenerate = r.gram_rank == N;
  if (!r.nondegenerate) r.failures.push_back("pairing is degenerate");
  if (!r.graded) r.failures.push_back("pairing is not concentrated in degree n");

  r.associative = r.invariant = true;
  for (Index x = 0; x < N; ++x)
    for (Index y = 0; y < N; ++y) {
      const auto xy = B.multiply(x, y);
      for (Index z = 0; z < N; ++z) {
        const auto yz = B.multiply(y, z);
        const auto lhs = xy ? B.multiply(*xy, z) : std::nullopt;
        const auto rhs = yz ? B.multiply(x, *yz) : std::nullopt;
        if (lhs != rhs && r.associative) {
          r.associative = false;
          r.failures.push_back("(xy)z != x(yz) for " + B.name(x) + ", " + B.name(y) + ", " + B.name(z));
        }
        const int left = xy ? B.pairing(*xy, z) : 0;
        const int right = yz ? B.pairing(x, *yz) : 0;
        if (left != right && r.invariant) {
          r.invariant = false;
          r.failures.push_back("<xy,z> != <x,yz> for " + B.name(x) + ", " + B.name(y) + ", " + B.name(z));
        }
      }
    }

  r.unital = true;
  for (Index x = 0; x < N && r.unital; ++x) {
    int left_hits = 0, right_hits = 0;
    for (Index e = 0; e < B.path_count(); ++e) {
      if (!B.is_idempotent(e)) continue;
      const auto ex = B.multiply(e, x), xe = B.multiply(x, e);
      if (ex) left_hits += *ex == x ? 1 : 100;
      if (xe) right_hits += *xe == x ? 1 : 100;
    }
    if (left_hits != 1 || right_hits != 1) {
      r.unital = false;
      r.failures.push_back("sum of idempotents is not a unit on " + B.name(x));
    }
  }
  return r;
}

GinzburgPresentation::GinzburgPresentation(const Quiver& Q, int n) : n_(n) {
  const auto& arrows = Q.arrows();
  const int m = static_cast<int>(arrows.size());
  for (int k = 0; k < m; ++k)
    generators_.push_back({Kind::Arrow, k, arrows[k].source, arrows[k].target, 1, "g" + std::to_string(k)});
  for (int k = 0; k < m; ++k)
    generators_.push_back({Kind::Reversed, k, arrows[k].target, arrows[k].source, 1 - n, "g" + std::to_string(k) + "*"});
  for (int v = 0; v < Q.vertex_count(); ++v)
    generators_.push_back({Kind::Loop, v, v, v, 1 - n, "h" + std::to_string(v)});

  d_.assign(generators_.size(), Element{});
  for (int v = 0; v < Q.vertex_count(); ++v) {
    Element& dh = d_[2 * m + v];
    for (int k = 0; k < m; ++k) {
      if (arrows[k].source == v) dh[{m + k, k}] += 1;
      if (arrows[k].target == v) dh[{k, m + k}] -= 1;
    }
    std::erase_if(dh, [](const auto& kv) { return kv.second == 0; });
  }
}

bool GinzburgPresentation::composable(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (generators_[w[i]].source != generators_[w[i + 1]].target) return false;
  return true;
}

int GinzburgPresentation::degree(const Word& w) const {
  int d = 0;
  for (int g : w) d += generators_[g].degree;
  return d;
}

GinzburgPresentation::Element GinzburgPresentation::apply(const Element& x) const {
  Element out;
  for (const auto& [word, coeff] : x) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const Rational sign = (prefix_degree % 2 == 0) ? 1 : -1;
      for (const auto& [dw, c] : d_[word[i]]) {
        Word w(word.begin(), word.begin() + static_cast<long>(i));
        w.insert(w.end(), dw.begin(), dw.end());
        w.insert(w.end(), word.begin() + static_cast<long>(i) + 1, word.end());
        out[w] += sign * coeff * c;
      }
      prefix_degree += generators_[word[i]].degree;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool GinzburgPresentation::check(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const Generator& gen = generators_[g];
    for (const auto& [w, c] : d_[g]) {
      if (!composable(w)) return fail("d" + gen.name + " has a non-composable term");
      if (generators_[w.back()].source != gen.source || generators_[w.front()].target != gen.target)
        return fail("d" + gen.name + " does not preserve endpoints");
      if (degree(w) != gen.degree + 1) return fail("d" + gen.name + " does not have degree " + std::to_string(gen.degree + 1));
    }
    if (!apply(d_[g]).empty()) return fail("d^2 " + gen.name + " is nonzero");
  }
  return true;
}

}  // namespace hhmf
