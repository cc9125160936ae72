// Command-line front end: bigraded Hochschild cohomology tables for the
// derived n-preprojective algebras of Dynkin quivers.

#include "hhmf/closed_forms.hpp"
#include "hhmf/document.hpp"
#include "hhmf/hh_oracle.hpp"
#include "hhmf/orbifold_hh.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hhmf;

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUncertified = 2, kModelError = 3, kUsage = 64 };

struct ModelFlags {
  std::string family;
  int rank = 0;
  int n = 2;

  void attach(CLI::App* app) {
    app->add_option("--family", family, "A, D, E6, E7 or E8")->required();
    app->add_option("--rank", rank, "rank l of the Dynkin type")->required();
    app->add_option("--dim-n", n, "Calabi-Yau dimension n")->required();
  }
  LGModel model() const { return LGModel::preset(parse_family(family), rank, n); }
};

std::string render(const OutputDocument& doc, const std::string& format, const std::string& title) {
  if (format == "json") return to_json(doc);
  if (format == "csv") return to_csv(doc);
  return to_pretty(doc, title);
}

std::string family_title(const ModelFlags& m) {
  const Family f = parse_family(m.family);
  return to_string(f) + (f == Family::A || f == Family::D ? "_" + std::to_string(m.rank) : "");
}

// Smallest (t, s) where the tables differ, as a one-line witness.
int report_comparison(const BigradedTable& ours, const BigradedTable& theirs, bool keys, const std::string& what) {
  const auto diffs = ours.differences(theirs, keys);
  if (diffs.empty()) {
    std::cout << "agree: " << ours.cells().size() << " nonzero (t, s) cells match " << what << "\n";
    return kOk;
  }
  std::cout << "mismatch against " << what << " in " << diffs.size() << " cell(s); first witness " << diffs.front()
            << "\n";
  return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of derived preprojective algebras of Dynkin quivers"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ModelFlags hh_flags, cmp_flags, sec_flags, sh_flags;
  std::int64_t t_min = -10, t_max = 4;
  bool labels = false;
  std::string format = "pretty";
  unsigned threads = 1;
  const std::vector<std::string> formats{"json", "csv", "pretty"};

  auto* hh = app.add_subcommand("hh", "bigraded table HH^t(...)^s from the sector sum");
  hh_flags.attach(hh);
  hh->add_option("--t-min", t_min, "smallest degree t");
  hh->add_option("--t-max", t_max, "largest degree t");
  hh->add_flag("--labels", labels, "list a basis label for every class");
  hh->add_option("--format", format)->check(CLI::IsMember(formats));
  hh->add_option("--threads", threads, "worker threads for the sector sum")->check(CLI::PositiveNumber);

  auto* sh = app.add_subcommand("sh", "the same table read as symplectic cohomology of the Milnor fiber");
  sh_flags.attach(sh);
  sh->add_option("--t-min", t_min);
  sh->add_option("--t-max", t_max);
  sh->add_flag("--labels", labels);
  sh->add_option("--format", format)->check(CLI::IsMember(formats));
  sh->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* cmp = app.add_subcommand("compare", "compare the sector sum with an independent table");
  cmp_flags.attach(cmp);
  std::vector<std::int64_t> window{-30, 3};
  std::string against = "closed-form";
  std::string file;
  int r_max = 4;
  int oracle_rank_limit = 6;
  std::uint64_t orientation = 0;
  cmp->add_option("--window", window, "t window LO,HI")->delimiter(',')->expected(2)->allow_extra_args(false);
  cmp->add_option("--against", against)->check(CLI::IsMember({"closed-form", "oracle", "file"}));
  cmp->add_option("--file", file, "JSON table for --against file");
  cmp->add_option("--r-max", r_max, "bar complex length bound for the oracle");
  cmp->add_option("--oracle-rank-limit", oracle_rank_limit, "largest quiver rank accepted by the oracle");
  cmp->add_option("--orientation", orientation, "edge reversal bitmask for the oracle quiver");

  auto* sec = app.add_subcommand("sectors", "list the sectors gamma in ker chi");
  sec_flags.attach(sec);
  sec->add_option("--format", format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (hh->parsed() || sh->parsed()) {
      const ModelFlags& m = hh->parsed() ? hh_flags : sh_flags;
      const BigradedTable table = hh_table(m.model(), {t_min, t_max}, labels, threads);
      OutputDocument doc = to_document(table, labels);
      std::string title = "HH";
      if (sh->parsed()) {
        title = "SH";
        doc.notes.push_back("read as SH^t of the Milnor fiber, isomorphic to HH^t of its wrapped Fukaya category");
        if (parse_family(m.family) == Family::A && m.rank == 1)
          doc.notes.push_back("the A_1 Milnor fiber is T*S^" + std::to_string(m.n));
      }
      std::cout << render(doc, format, title);
      return doc.certified ? kOk : kUncertified;
    }

    if (sec->parsed()) {
      const LGModel model = sec_flags.model();
      const auto secs = sectors(model);
      if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& s : secs)
          rows.push_back({{"id", s.id},
                          {"fixed", s.fixed_set_string()},
                          {"codim", s.codim},
                          {"fully_twisted", s.fully_twisted()},
                          {"t", s.display_tuple()}});
        std::cout << nlohmann::json{{"model", model.name()}, {"sectors", rows}}.dump(2) << "\n";
      } else {
        const char sep = format == "csv" ? ',' : ' ';
        if (format == "csv") std::cout << "id,fixed,codim,fully_twisted,t\n";
        else std::cout << "sectors of " << model.name() << " (" << secs.size() << ")\n";
        for (const auto& s : secs) {
          std::string tuple;
          for (const auto& x : s.display_tuple()) tuple += (tuple.empty() ? "" : ";") + x;
          std::cout << s.id << sep << (format == "csv" ? "\"" + s.fixed_set_string() + "\"" : s.fixed_set_string())
                    << sep << s.codim << sep << (s.fully_twisted() ? "fully-twisted" : "-") << sep << "(" << tuple
                    << ")\n";
        }
      }
      return kOk;
    }

    if (cmp->parsed()) {
      const LGModel model = cmp_flags.model();
      const std::string name = family_title(cmp_flags);
      if (against == "closed-form") {
        const TWindow w{window[0], window[1]};
        const BigradedTable ours = hh_table(model, w, true, threads);
        const BigradedTable theirs = enumerate_closed_form(parse_family(cmp_flags.family), cmp_flags.rank, cmp_flags.n, w);
        for (const auto& note : theirs.meta.warnings) std::cout << "note: closed forms are " << note << "\n";
        return report_comparison(ours, theirs, true, "closed forms for " + name);
      }
      if (against == "file") {
        if (file.empty()) throw CLI::RequiredError("--file");
        std::ifstream in(file);
        if (!in) throw ModelError("cannot read " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        const OutputDocument doc = document_from_json(buf.str());
        const BigradedTable ours = hh_table(model, {doc.t_min, doc.t_max}, false, threads);
        return report_comparison(ours, to_table(doc), false, file);
      }
      if (cmp_flags.rank > oracle_rank_limit)
        throw ModelError("oracle limited to rank <= " + std::to_string(oracle_rank_limit));
      const Quiver Q = dynkin(parse_family(cmp_flags.family), cmp_flags.rank, orientation);
      const OracleResult oracle = hh_bigraded_oracle(Q, cmp_flags.n, r_max);
      // Weights are at most n, so certified cells have t <= n + r_max - 1.
      const std::int64_t n = cmp_flags.n;
      const BigradedTable full = hh_table(model, {-(r_max + 1) * n - 2 * (r_max + 1), n + r_max}, false, threads);
      BigradedTable ours;
      for (const auto& [k, c] : full.cells())
        if (oracle.certified(k.first, k.second)) ours.add_dimension(k.first, k.second, c.dim);
      return report_comparison(ours, oracle.table, false,
                               "bar complex oracle for " + name + " on 0 <= t - s <= " + std::to_string(r_max - 1));
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const CertificationError& e) {
    std::cerr << "uncertified: " << e.what() << "\n";
    return kUncertified;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kModelError;
  }
  return kUsage;
}
