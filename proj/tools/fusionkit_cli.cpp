// fusionkit command-line front end.
//
// Exit status: 0 success, 1 verification failure (or internal error), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fusionkit/diagram.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"
#include "fusionkit/orbits.hpp"
#include "fusionkit/verify.hpp"
#include "fusionkit/weyl.hpp"

using namespace fusionkit;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::string out;
  std::size_t max_dim = kDefaultMaxDim;
  std::size_t max_group_order = kDefaultMaxGroupOrder;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Weight parse_cli_weight(const RootSystem& rs, const std::string& text) {
  if (text.rfind("spin=", 0) == 0) {
    if (rs.algebra() != AlgebraId(Family::A, 1)) throw UsageError("spin= syntax is only accepted for A1");
    return Weight{parse_spin(text.substr(5)).twice};
  }
  Weight w = parse_weight(text);
  rs.check_rank(w);
  return w;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + g.out);
  f << text;
}

void emit(const Globals& g, const Json& doc) { emit(g, doc.dump(2) + "\n"); }

std::string spin_column(const RootSystem& rs, const std::map<Weight, Label>& terms) {
  std::string s = render_terms(terms);
  if (rs.algebra() != AlgebraId(Family::A, 1)) return s;
  std::ostringstream out;
  std::istringstream in(s);
  std::string line;
  std::getline(in, line);
  out << line << "  spin\n";
  for (const auto& [nu, m] : terms) {
    std::getline(in, line);
    out << line << "  " << Spin{nu[0]}.to_string() << '\n';
  }
  return out.str();
}

Json terms_json(const std::map<Weight, Label>& terms) {
  Json arr = Json::array();
  for (const auto& [nu, m] : terms) arr.push_back({{"weight", nu.labels()}, {"mult", m}});
  return arr;
}

int report_suites(const Globals& g, const std::vector<SuiteResult>& results) {
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (g.json) {
    Json doc;
    doc["passed"] = ok;
    doc["suites"] = Json::array();
    for (const auto& r : results) doc["suites"].push_back(to_json(r));
    emit(g, doc);
  } else {
    std::ostringstream out;
    for (const auto& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)\n";
      for (const auto& f : r.failures) out << "  " << f << '\n';
      for (const auto& n : r.notes) out << "  note: " << n << '\n';
    }
    emit(g, out.str());
  }
  return ok ? 0 : kVerifyFailed;
}

std::vector<Label> parse_labels(const std::string& text) { return parse_weight(text).labels(); }

fixtures::FixtureCover fixture_cover(const std::string& name) {
  if (name == "a1-2") return fixtures::a1_level2_cover();
  if (name == "a1-3") return fixtures::a1_level3_cover();
  if (name == "a2-2") return fixtures::a2_level2_cover();
  if (name == "w3") return fixtures::w3_11_cover();
  throw UsageError("unknown fixture cover '" + name + "' (a1-2, a1-3, a2-2, w3)");
}

int run(int argc, char** argv) {
  CLI::App app{"Weight multiplicities, tensor products and level-k fusion rules"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--out", g.out, "Write output to FILE");
  app.add_option("--max-dim", g.max_dim, "Largest module dimension to expand");
  app.add_option("--max-group-order", g.max_group_order, "Largest group order for covers");
  app.fallthrough();

  std::string alg, lam, mu;
  Label level = 0;
  int code = 0;

  auto* tensor = app.add_subcommand("tensor", "Decompose V(lambda) x V(mu)");
  tensor->add_option("algebra", alg)->required();
  tensor->add_option("lambda", lam)->required();
  tensor->add_option("mu", mu)->required();
  tensor->callback([&] {
    const RootSystem rs = build_root_system(parse_algebra(alg));
    const Decomposition d = racah_speiser(rs, parse_cli_weight(rs, lam), parse_cli_weight(rs, mu), g.max_dim);
    if (g.json) {
      Json doc = to_json(d);
      doc["algebra"] = rs.algebra().to_string();
      emit(g, doc);
    } else {
      emit(g, rs.algebra().to_string() + " (" + d.left.to_string() + ") x (" + d.right.to_string() + ")\n" +
                  spin_column(rs, d.terms));
    }
  });

  auto* fusion = app.add_subcommand("fusion", "Level-k fusion product of two weights");
  fusion->add_option("algebra", alg)->required();
  fusion->add_option("level", level)->required();
  fusion->add_option("lambda", lam)->required();
  fusion->add_option("mu", mu)->required();
  fusion->callback([&] {
    const RootSystem rs = build_root_system(parse_algebra(alg));
    const Weight l = parse_cli_weight(rs, lam), m = parse_cli_weight(rs, mu);
    const auto ws = default_weight_cache().get(rs, l, g.max_dim);
    const auto terms = kac_walton(rs, *ws, m, level);
    if (g.json) {
      emit(g, Json{{"algebra", rs.algebra().to_string()},
                   {"level", level},
                   {"left", l.labels()},
                   {"right", m.labels()},
                   {"terms", terms_json(terms)}});
    } else {
      emit(g, rs.algebra().to_string() + " level " + std::to_string(level) + ": (" + l.to_string() + ") x (" +
                  m.to_string() + ")\n" + spin_column(rs, terms));
    }
  });

  auto* table = app.add_subcommand("table", "Full fusion table at level k");
  table->add_option("algebra", alg)->required();
  table->add_option("level", level)->required();
  table->callback([&] {
    const FusionAlgebra fa = build_fusion_algebra(build_root_system(parse_algebra(alg)), level);
    if (g.json)
      emit(g, to_json(fa));
    else
      emit(g, render_fusion_algebra(fa));
  });

  std::string method = "racah";
  auto* weights = app.add_subcommand("weights", "Weights of V(lambda) with multiplicities");
  weights->add_option("algebra", alg)->required();
  weights->add_option("lambda", lam)->required();
  weights->add_option("--method", method, "racah or freudenthal")->check(CLI::IsMember({"racah", "freudenthal"}));
  weights->callback([&] {
    const RootSystem rs = build_root_system(parse_algebra(alg));
    const Weight l = parse_cli_weight(rs, lam);
    const WeightSystem ws = method == "racah" ? *default_weight_cache().get(rs, l, g.max_dim)
                                              : freudenthal_multiplicities(rs, l, g.max_dim);
    if (g.json) {
      Json doc = to_json(ws);
      doc["algebra"] = rs.algebra().to_string();
      emit(g, doc);
    } else {
      emit(g, rs.algebra().to_string() + " V(" + l.to_string() + "), dimension " + std::to_string(dimension(ws)) +
                  "\n" + render_terms(ws.mults()));
    }
  });

  std::string highest, shift;
  std::optional<Label> diagram_level;
  bool no_axes = false, no_mults = false;
  auto* diagram = app.add_subcommand("diagram", "SVG weight diagram for a rank-2 algebra");
  diagram->add_option("algebra", alg)->required();
  diagram->add_option("--highest", highest, "Highest weight of the module to draw");
  diagram->add_option("--shift", shift, "Shift applied to every weight");
  diagram->add_option("--level", diagram_level, "Draw the affine wall for this level");
  diagram->add_flag("--no-axes", no_axes, "Omit reflection lines and chamber");
  diagram->add_flag("--no-mults", no_mults, "Omit multiplicity labels");
  diagram->callback([&] {
    const RootSystem rs = build_root_system(parse_algebra(alg));
    DiagramSpec spec;
    spec.algebra = rs.algebra();
    if (!highest.empty()) spec.highest = parse_cli_weight(rs, highest);
    if (!shift.empty()) spec.shift = parse_cli_weight(rs, shift);
    spec.level = diagram_level;
    spec.show_axes = !no_axes;
    spec.show_mults = !no_mults;
    if (spec.highest) default_weight_cache().get(rs, *spec.highest, g.max_dim);
    emit(g, render_svg(spec));
  });

  std::vector<std::string> orbit_args;
  auto* orbits = app.add_subcommand("orbits", "Orbit counts: M n k r | triple n a b c | compare n k");
  orbits->add_option("args", orbit_args)->required();
  orbits->callback([&] {
    const std::string& what = orbit_args.at(0);
    auto arg = [&](std::size_t i) -> const std::string& {
      if (i >= orbit_args.size()) throw UsageError("orbits " + what + ": missing argument");
      return orbit_args[i];
    };
    auto num = [&](std::size_t i) { return static_cast<Label>(std::stoll(arg(i))); };
    if (what == "M") {
      const Label n = num(1), k = num(2), r = num(3);
      const mpz_class f = count_orbits_formula(n, k, r), b = count_orbits_bruteforce(n, k, r),
                      p = count_orbits_partitions(n, k, r);
      const bool agree = f == b && f == p;
      if (g.json)
        emit(g, Json{{"n", n}, {"k", k}, {"r", r}, {"formula", f.get_str()}, {"enumeration", b.get_str()},
                     {"partitions", p.get_str()}, {"agree", agree}});
      else
        emit(g, f.get_str() + "\n");
      code = agree ? 0 : kVerifyFailed;
    } else if (what == "triple") {
      const Label n = num(1);
      const auto a = parse_labels(arg(2)), b = parse_labels(arg(3)), c = parse_labels(arg(4));
      Label k = 0;
      for (Label x : a) k += x;
      const Label m = count_triple_orbits(make_orbit_label(n, k, a), make_orbit_label(n, k, b), make_orbit_label(n, k, c));
      if (g.json)
        emit(g, Json{{"n", n}, {"k", k}, {"a", a}, {"b", b}, {"c", c}, {"orbits", m}});
      else
        emit(g, std::to_string(m) + "\n");
    } else if (what == "compare") {
      const Label n = num(1), k = num(2);
      const auto rows = orbit_fusion_rows(n, k);
      if (g.json) {
        Json arr = Json::array();
        for (const auto& r : rows)
          arr.push_back({{"a", r.a.occupancy}, {"b", r.b.occupancy}, {"c", r.c.occupancy}, {"orbits", r.orbits},
                         {"fusion", r.fusion}});
        emit(g, Json{{"n", n}, {"k", k}, {"rows", arr}});
      } else {
        std::ostringstream out;
        out << "a b c M N\n";
        for (const auto& r : rows)
          if (r.orbits || r.fusion)
            out << r.a.to_string() << ' ' << r.b.to_string() << ' ' << r.c.to_string() << ' ' << r.orbits << ' '
                << r.fusion << '\n';
        emit(g, out.str());
      }
    } else {
      throw UsageError("unknown orbits query '" + what + "' (M, triple, compare)");
    }
  });

  std::vector<std::string> cover_args;
  auto* cover = app.add_subcommand("cover", "Group covers: sl2 k | hamming k | fixture NAME");
  cover->add_option("args", cover_args)->required();
  cover->callback([&] {
    const std::string& what = cover_args.at(0);
    if (cover_args.size() < 2) throw UsageError("cover " + what + ": missing argument");
    Json doc;
    CoverReport report;
    if (what == "sl2") {
      auto [p, rep] = sl2_cover(std::stoll(cover_args[1]), 16, g.max_group_order);
      doc["partition"] = to_json(p);
      report = rep;
    } else if (what == "hamming") {
      const GroupPartition p = hamming_partition(std::stoll(cover_args[1]), g.max_group_order);
      doc["partition"] = to_json(p);
      report.covers = is_associative(p);
    } else if (what == "fixture") {
      const auto fc = fixture_cover(cover_args[1]);
      doc["partition"] = to_json(fc.partition);
      doc["bijection"] = fc.bijection;
      report = verify_cover(fc.partition, fc.table.table, 0, fc.bijection);
    } else {
      throw UsageError("unknown cover '" + what + "' (sl2, hamming, fixture)");
    }
    doc["report"] = to_json(report);
    if (g.json)
      emit(g, doc);
    else
      emit(g, std::string(report.covers ? "pass" : "fail") + "\n");
    code = report.covers ? 0 : kVerifyFailed;
  });

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->callback([&] {
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
      throw UsageError("unknown suite '" + suite + "'");
    code = report_suites(g, run_suite(suite));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* dir = std::getenv("FUSIONKIT_CACHE_DIR"); dir && *dir) default_weight_cache().set_directory(dir);
  try {
    return run(argc, argv);
  } catch (const LevelError& e) {
    std::cerr << "error: " << e.what() << " (<lambda,theta> = " << e.theta_pairing() << ")\n";
    return kUsage;
  } catch (const AxiomViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const UnsupportedCoefficient& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
