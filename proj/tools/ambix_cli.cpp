#include <CLI11.hpp>
#include <json.hpp>
#include <iostream>

#include "ambix/ambix.hpp"

using namespace ambix;

namespace {

std::vector<std::string> split_selectors(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

int emit(const AmbiguityReport& rep, const std::string& format, bool timings) {
  std::cout << (format == "json" ? render_json(rep, timings) : render_text(rep, timings));
  return rep.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact group-theoretic invariants of equipped finite groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text";
  bool timings = false;
  Config cfg;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", timings, "include wall times in reports");
  app.add_option("--cocycle-cap", cfg.cocycle_cap, "cocycle engine size cap (default 130)");
  app.add_option("--max-cosets", cfg.max_cosets, "coset enumeration row limit (default 2000000)");
  app.add_option("--seed", cfg.seed, "seed for the fuzz suites");

  std::string group, equipment, cover, suite = "desk", tau;
  int grow = 0;
  bool conjugation = false;

  auto* c_h2 = app.add_subcommand("h2", "Schur multiplier divisors");
  c_h2->add_option("--group", group, "group spec")->required();

  auto* c_b0 = app.add_subcommand("b0", "Bogomolov multiplier order");
  c_b0->add_option("--group", group, "group spec")->required();

  auto* c_index = app.add_subcommand("index", "ambiguity index of an equipment");
  c_index->add_option("--group", group, "group spec")->required();
  c_index->add_option("--equipment", equipment, "class selectors, comma separated")->required();

  auto* c_split = app.add_subcommand("split", "class splitting numbers under a cover");
  c_split->add_option("--group", group, "group spec")->required();
  c_split->add_option("--cover", cover, "cover name (2.sym4-, pullback:alt6, stem:SPEC)");

  auto* c_scan = app.add_subcommand("scan", "all generating class subsets");
  c_scan->add_option("--group", group, "group spec")->required();

  auto* c_verify = app.add_subcommand("verify", "theorem-checking suites");
  c_verify->add_option("--suite", suite, "desk | alt6 | alt7 | saltman | all");

  auto* c_hur = app.add_subcommand("hurwitz", "braid orbit counts of monodromy tuples");
  c_hur->add_option("--group", group, "group spec")->required();
  c_hur->add_option("--equipment", equipment, "class selectors")->required();
  c_hur->add_option("--tau", tau, "class multiplicities, comma separated")->required();
  c_hur->add_option("--grow", grow, "scan schedule length (scales tau by 1..N)");
  c_hur->add_flag("--conjugation", conjugation, "also quotient by simultaneous conjugation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_h2) {
      AmbiguityReport rep;
      rep.spec = group;
      rep.order = make_group(group)->order();
      rep.h2_divisors = h2_of(group, cfg);
      return emit(rep, format, timings);
    }
    if (*c_b0) {
      AmbiguityReport rep;
      rep.spec = group;
      rep.order = make_group(group)->order();
      rep.b0 = b0(group, cfg);
      if (group.rfind("saltman:", 0) != 0) rep.h2_divisors = h2_of(group, cfg);
      return emit(rep, format, timings);
    }
    if (*c_index) {
      EquippedGroup eg = equipped(group, split_selectors(equipment), cfg);
      AmbiguityValue v = ambiguity_index(eg, cfg);
      AmbiguityReport rep;
      rep.spec = group;
      rep.order = eg.group->order();
      rep.h2_divisors = h2_of(group, cfg);
      rep.b0 = b0(group, cfg);
      rep.rows.push_back({eg.equipment_names(), v.a, v.k, v.engine});
      auto problems = validate_report(rep);
      for (auto& p : problems) rep.failures.push_back(p);
      return emit(rep, format, timings);
    }
    if (*c_split) {
      return emit(splitting_table(group, cover, cfg), format, timings);
    }
    if (*c_scan) {
      return emit(scan_equipments(group, cfg), format, timings);
    }
    if (*c_verify) {
      VerifyReport rep = verify_suite(suite, cfg);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["checks"] = nlohmann::ordered_json::array();
        for (auto& c : rep.checks)
          j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["all_pass"] = rep.all_pass();
        std::cout << j.dump(2) << "\n";
      } else {
        for (auto& c : rep.checks)
          std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                    << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
        std::cout << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
      }
      return rep.all_pass() ? 0 : 1;
    }
    if (*c_hur) {
      EquippedGroup eg = equipped(group, split_selectors(equipment), cfg);
      std::vector<int> tau_base = split_ints(tau);
      std::vector<int> schedule;
      for (int i = 1; i <= std::max(grow, 1); ++i) schedule.push_back(i);
      auto reports = stabilization_scan(*eg.group, eg.equipment_classes(), tau_base, schedule, 2,
                                        cfg.hurwitz, conjugation);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["spec"] = group;
        j["equipment"] = eg.equipment_names();
        j["rows"] = nlohmann::ordered_json::array();
        for (auto& r : reports)
          j["rows"].push_back({{"tau", r.tau},
                               {"tuples", r.tuple_count},
                               {"orbits", r.orbit_count},
                               {"stabilized", r.stabilized},
                               {"budget_exceeded", r.budget_exceeded}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (auto& r : reports) {
          std::cout << "tau = (";
          for (size_t i = 0; i < r.tau.size(); ++i) std::cout << (i ? "," : "") << r.tau[i];
          std::cout << ")  tuples " << r.tuple_count << "  orbits " << r.orbit_count
                    << (r.stabilized ? "  stabilized" : "")
                    << (r.budget_exceeded ? "  budget-exceeded" : "") << "\n";
        }
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
