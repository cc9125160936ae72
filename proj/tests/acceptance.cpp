// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include "hhmf/closed_forms.hpp"
#include "hhmf/document.hpp"
#include "hhmf/dynkin_algebra.hpp"
#include "hhmf/hh_oracle.hpp"
#include "hhmf/milnor.hpp"
#include "hhmf/orbifold_hh.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hhmf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Type = std::pair<Family, int>;

std::string name(Type type) {
  const std::string f = to_string(type.first);
  return f.size() > 1 ? f : f + std::to_string(type.second);
}

std::vector<Type> all_types(int max_rank) {
  std::vector<Type> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  out.push_back({Family::E6, 6});
  out.push_back({Family::E7, 7});
  out.push_back({Family::E8, 8});
  return out;
}

const std::vector<Type> kCriterionTypes = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                           {Family::A, 5}, {Family::D, 4}, {Family::D, 5}, {Family::E6, 6},
                                           {Family::E7, 7}, {Family::E8, 8}};

Outcome closed_form_equivalence() {
  Outcome out;
  int cases = 0;
  for (const Type& type : kCriterionTypes) {
    for (int n : {2, 3}) {
      const TWindow w{-30, n + 1};
      const auto ours = hh_table(LGModel::preset(type.first, type.second, n), w, true);
      const auto theirs = enumerate_closed_form(type.first, type.second, n, w);
      const auto diff = ours.differences(theirs, true);
      if (!diff.empty()) out.fail(name(type) + " n=" + std::to_string(n) + " " + diff.front());
      ++cases;
    }
  }
  out.detail = out.pass ? std::to_string(cases) + " cases agree with labels on t in [-30, n+1]" : out.detail;
  return out;
}

std::int64_t expected_fully_twisted(Type type, int n) {
  const int l = type.second;
  switch (type.first) {
    case Family::A: return l % 2 == 1 && n % 2 == 1 ? l - 1 : l;
    case Family::D: return l % 2 == 0 && n % 2 == 1 ? l - 2 : l - 1;
    case Family::E6: return 6;
    case Family::E7: return 6;
    case Family::E8: return 8;
  }
  return -1;
}

std::int64_t expected_d_point_classes(int l, int n) {
  if (l % 2 == 0 && n % 2 == 1) return l - 2;
  if (l % 2 == 1 && n % 2 == 1) return l - 1;
  return l;
}

Outcome fully_twisted_counts() {
  Outcome out;
  int cases = 0;
  for (const Type& type : all_types(8)) {
    for (int n = 1; n <= 6; ++n) {
      const auto secs = sectors(LGModel::preset(type.first, type.second, n));
      const auto count = std::count_if(secs.begin(), secs.end(), [](const Sector& s) { return s.fully_twisted(); });
      if (count != expected_fully_twisted(type, n))
        out.fail(name(type) + " n=" + std::to_string(n) + ": " + std::to_string(count) + " fully twisted sectors");
      ++cases;
    }
  }
  // For D the quoted l-2 / l-1 / l counts the degree (n, n) classes coming
  // from sectors that move x_0.
  for (int l = 4; l <= 8; ++l) {
    for (int n = 1; n <= 6; ++n) {
      const auto table = hh_table(LGModel::preset(Family::D, l, n), {n, n}, true);
      std::int64_t moved = 0;
      for (const auto& [k, cell] : table.cells())
        if (k.second == n)
          for (const auto& label : cell.labels) moved += label.key.x0_fixed ? 0 : 1;
      if (moved != expected_d_point_classes(l, n) || moved != closed_form_sh_count(Family::D, l, n))
        out.fail("D" + std::to_string(l) + " n=" + std::to_string(n) + ": " + std::to_string(moved) +
                 " x0-moved classes in degree (n, n)");
      ++cases;
    }
  }
  if (out.pass) out.detail = std::to_string(cases) + " (type, n) counts match";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  const int n = 2, r_max = 4;
  std::int64_t cells = 0;
  for (int l = 1; l <= 3; ++l) {
    const auto oracle = hh_bigraded_oracle(dynkin(Family::A, l), n, r_max);
    const auto full = hh_table(LGModel::preset(Family::A, l, n), {-(r_max + 1) * n - 2 * (r_max + 1), n + r_max}, false);
    BigradedTable ours;
    for (const auto& [k, c] : full.cells())
      if (oracle.certified(k.first, k.second)) ours.add_dimension(k.first, k.second, c.dim);
    const auto diff = ours.differences(oracle.table, false);
    if (!diff.empty()) out.fail("A" + std::to_string(l) + " " + diff.front());
    cells += static_cast<std::int64_t>(ours.cells().size());
  }
  if (out.pass) out.detail = "A1, A2, A3 agree on 0 <= t - s <= 3 (" + std::to_string(cells) + " nonzero cells)";
  return out;
}

Outcome cotangent_sphere() {
  Outcome out;
  // n = 2: exactly five one-dimensional classes.
  const auto two = hh_table(LGModel::preset(Family::A, 1, 2), {-2, 2}, true);
  const std::vector<std::pair<std::int64_t, std::int64_t>> expected = {{-2, -4}, {-1, -4}, {0, 0}, {1, 0}, {2, 2}};
  std::vector<std::pair<std::int64_t, std::int64_t>> got;
  for (const auto& [k, c] : two.cells()) {
    if (c.dim != 1) out.fail("n=2 dim " + std::to_string(c.dim) + " at t=" + std::to_string(k.first));
    got.push_back(k);
  }
  if (got != expected) out.fail("n=2 cells differ from the expected five");

  // n = 3: a class in (-2k, -3k) and its partner in (-2k + 1, -3k) for
  // every k >= 1; odd k are the b / beta families from the twisted sector.
  const auto three = hh_table(LGModel::preset(Family::A, 1, 3), {-40, 4}, true);
  std::map<std::pair<std::int64_t, std::int64_t>, std::string> want = {{{0, 0}, ""}, {{1, 0}, ""}, {{3, 3}, "{0}:"}};
  for (std::int64_t k = 1; k <= 20; ++k) {
    const std::string sector = k % 2 == 1 ? "{0}:" : "{0,1,2,3,4}:";
    want[{-2 * k, -3 * k}] = sector;
    want[{-2 * k + 1, -3 * k}] = sector;
  }
  if (three.cells().size() != want.size()) out.fail("n=3 has " + std::to_string(three.cells().size()) + " cells");
  for (const auto& [k, sector] : want) {
    const auto it = three.cells().find(k);
    if (it == three.cells().end() || it->second.dim != 1) {
      out.fail("n=3 missing class at t=" + std::to_string(k.first));
      continue;
    }
    if (!sector.empty() && it->second.labels.front().text.find(sector) == std::string::npos)
      out.fail("n=3 class at t=" + std::to_string(k.first) + " comes from " + it->second.labels.front().text);
  }
  if (out.pass) out.detail = "n=2 five classes; n=3 b/beta families through t=-40";
  return out;
}

Outcome e7_dimension_one() {
  Outcome out;
  const TWindow w{-60, 3};
  const auto ours = hh_table(LGModel::preset(Family::E7, 7, 1), w, true);
  const auto theirs = enumerate_closed_form(Family::E7, 7, 1, w);
  const auto diff = ours.differences(theirs, true);
  if (!diff.empty()) out.fail(diff.front());
  int extra = 0;
  for (const auto& [k, c] : theirs.cells())
    for (const auto& label : c.labels)
      if (label.text.find("[m=-1]") != std::string::npos) {
        ++extra;
        if (k != std::pair<std::int64_t, std::int64_t>{1, 1}) out.fail("m = -1 class at t=" + std::to_string(k.first));
      }
  if (extra != 1) out.fail(std::to_string(extra) + " m = -1 classes");
  if (ours.dim(1, 1) != 7) out.fail("dim HH^1 weight 1 is " + std::to_string(ours.dim(1, 1)));
  if (out.pass) out.detail = "table matches on t in [-60, 3], m = -1 class in (1, 1)";
  return out;
}

Outcome structural_invariants() {
  Outcome out;
  int ginzburg = 0, frobenius = 0, sector_count = 0;
  for (const Type& type : all_types(8)) {
    const auto edges = dynkin_edges(type.first, type.second);
    const std::uint64_t all = (std::uint64_t{1} << edges.size()) - 1;
    std::vector<std::uint64_t> masks = {0, all, 0x5555555555555555ULL & all, 0xAAAAAAAAAAAAAAAAULL & all};
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (std::uint64_t mask : masks) {
      const Quiver Q = dynkin(type.first, type.second, mask);
      for (int n = 1; n <= 6; ++n) {
        std::string why;
        if (!GinzburgPresentation(Q, n).check(&why)) out.fail(name(type) + " Ginzburg: " + why);
        ++ginzburg;
        if (n <= 4) {
          const auto report = frobenius_check(TrivialExtensionAlgebra(Q, n));
          if (!report.ok())
            out.fail(name(type) + " trivial extension: " +
                     (report.failures.empty() ? std::string("failed") : report.failures.front()));
          ++frobenius;
        }
      }
    }
  }
  for (const Type& type : all_types(8)) {
    for (int n = 1; n <= 6; ++n) {
      const LGModel model = LGModel::preset(type.first, type.second, n);
      for (const Sector& s : sectors(model)) {
        Rational mu = 1;
        for (int v : jacobi_variables(s)) mu *= 1 / model.q()[v] - 1;
        const JacobiBasis basis = jacobi_basis(model, s);
        if (Rational(static_cast<long>(basis.size())) != mu)
          out.fail(name(type) + " n=" + std::to_string(n) + " sector " + std::to_string(s.id) + ": basis " +
                   std::to_string(basis.size()) + " vs " + mu.str());
        ++sector_count;
      }
    }
  }
  if (out.pass)
    out.detail = std::to_string(ginzburg) + " Ginzburg, " + std::to_string(frobenius) + " trivial extension, " +
                 std::to_string(sector_count) + " Jacobi checks";
  return out;
}

Outcome determinism() {
  Outcome out;
  int cases = 0;
  for (const Type& type : kCriterionTypes) {
    for (int n : {2, 3}) {
      const LGModel model = LGModel::preset(type.first, type.second, n);
      const TWindow w{-30, n + 1};
      const auto serial = hh_table(model, w, true, 1);
      const auto parallel = hh_table(model, w, true, 4);
      const std::string a = to_json(to_document(serial, true));
      const std::string b = to_json(to_document(parallel, true));
      const std::string c = to_json(to_document(hh_table(model, w, true, 1), true));
      if (a != b) out.fail(name(type) + " n=" + std::to_string(n) + ": serial and parallel differ");
      if (a != c) out.fail(name(type) + " n=" + std::to_string(n) + ": repeated runs differ");
      ++cases;
    }
  }
  if (out.pass) out.detail = std::to_string(cases) + " cases byte-identical across runs and thread counts";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed-form equivalence", closed_form_equivalence},
      {"fully twisted sector counts", fully_twisted_counts},
      {"bar complex oracle equivalence", oracle_equivalence},
      {"A1 cotangent sphere tables", cotangent_sphere},
      {"E7 with n = 1", e7_dimension_one},
      {"structural invariants", structural_invariants},
      {"determinism", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (result.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
         << " - " << result.detail << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
    all = all && result.pass;
  }
  return all ? 0 : 1;
}
