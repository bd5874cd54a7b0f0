// Acceptance suite: every release-gating invariant as one pass/fail line.
// All results are exact integers, so every comparison is exact equality;
// the stated wall-clock budgets are asserted too.
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "ambix/ambix.hpp"

using namespace ambix;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& what) {
  if (!pass) ++failures;
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what
            << std::endl;
}

double secs(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

int main() {
  Config cfg;

  // 1. Schur multipliers from the cocycle engine, under 60 s for the list.
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::vector<std::pair<std::string, unsigned long long>> expect = {
        {"sym:4", 2}, {"sym:5", 2}, {"alt:5", 2}, {"quaternion:8", 1}, {"elem_abelian:2^2", 2},
        {"dihedral:4", 2}};
    for (auto& [spec, h2] : expect) {
      auto G = make_group(spec);
      auto pt = PermGroupTable::build(*G);
      auto Gt = std::make_shared<GroupTable>(pt.table);
      unsigned long long got = h2_order(Gt, cfg.cocycle_cap);
      if (got != h2) {
        ok = false;
        detail += spec + " got " + std::to_string(got) + " want " + std::to_string(h2) + "; ";
      }
    }
    double dt = secs(t0);
    if (dt >= 60.0) ok = false;
    line(1, ok, "h2(sym:4)=h2(sym:5)=h2(alt:5)=2, h2(Q8)=1, h2(V4)=h2(D4)=2 via cocycle engine "
                "in " + std::to_string(dt) + "s " + detail);
  }

  // 2. Cover recipes validate; pullbacks are stem with kernel 6; under 10 min.
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::vector<std::pair<std::string, unsigned long long>> recipes = {
        {"2.sym4-", 48}, {"2.sym4+", 48}, {"2.sym5-", 240}, {"2.sym5+", 240}, {"2.alt5", 120},
        {"2.alt6", 720}, {"3.alt6", 1080}, {"2.alt7", 5040}, {"3.alt7", 7560}};
    std::map<std::string, CentralCover> covers;
    for (auto& [name, order] : recipes) {
      try {
        CentralCover c = validate_cover_recipe(load_recipe(name), cfg.max_cosets);
        if (c.cover->order() != order || !c.is_stem) {
          ok = false;
          detail += name + " unexpected; ";
        }
        covers.emplace(name, std::move(c));
      } catch (const Error& e) {
        ok = false;
        detail += name + ": " + e.what() + "; ";
      }
    }
    for (std::string d : {"6", "7"}) {
      try {
        CentralCover p = pullback(covers.at("2.alt" + d), covers.at("3.alt" + d),
                                  reference_h2("alt:" + d));
        if (!p.is_stem || p.kernel_order != 6 || !p.is_maximal) {
          ok = false;
          detail += "pullback alt:" + d + " not a maximal stem cover with kernel 6; ";
        }
      } catch (const Error& e) {
        ok = false;
        detail += "pullback alt:" + d + ": " + e.what() + "; ";
      }
    }
    double dt = secs(t0);
    if (dt >= 600.0) ok = false;
    line(2, ok, "all 9 recipes validate, pullback(2.A6,3.A6) and pullback(2.A7,3.A7) stem with "
                "kernel 6, in " + std::to_string(dt) + "s " + detail);
  }

  // 3. Splitting tables match the cycle-type predicates exactly.
  {
    bool ok = true;
    std::string detail;
    for (std::string spec : {"sym:4", "sym:5", "alt:5"}) {
      EquippedGroup base = group_with_classes(spec, cfg);
      auto cover = catalog_maximal_cover(spec, base.group, cfg);
      if (!cover || !cover->is_maximal) {
        ok = false;
        detail += spec + ": no maximal cover; ";
        continue;
      }
      CoverKind kind = spec[0] == 's' ? CoverKind::Sym : CoverKind::Alt;
      for (size_t i = 0; i < base.classes.size(); ++i) {
        unsigned long long s = splitting_number(*cover, base.classes[i]);
        bool want = split_predicate(kind, CycleType::of(base.classes[i].representative));
        if (s != (want ? 2ULL : 1ULL)) {
          ok = false;
          detail += spec + " class " + base.class_names[i] + " s=" + std::to_string(s) + "; ";
        }
      }
    }
    line(3, ok, "s_f matches the cycle-type splitting rules on every class of sym:4, sym:5, alt:5 " +
                detail);
  }

  // 4. Exhaustive equipment scans match the theorem tables.
  {
    bool ok = true;
    std::string detail;
    for (std::string spec : {"sym:4", "sym:5", "alt:5"}) {
      auto rep = scan_equipments(spec, cfg);
      if (!rep.failures.empty()) {
        ok = false;
        detail += spec + ": " + rep.failures.front() + "; ";
      }
    }
    // the two named values
    auto v1 = ambiguity_index(equipped("sym:4", {"cycles:2"}, cfg), cfg);
    auto v2 = ambiguity_index(equipped("sym:5", {"cycles:2"}, cfg), cfg);
    auto v3 = ambiguity_index(equipped("alt:5", {"cycles:3"}, cfg), cfg);
    if (v1.a != 1 || v2.a != 1) {
      ok = false;
      detail += "transposition equipment must give a=1; ";
    }
    if (v3.a != 2) {
      ok = false;
      detail += "alt:5 3-cycles must give a=2; ";
    }
    line(4, ok, "every generating class subset of sym:4, sym:5, alt:5 matches the theorem table; "
                "a(transpositions)=1, a(alt:5 3-cycles)=2 " + detail);
  }

  // 5. The exceptional table for alt:6 and alt:7 through the pullback covers.
  {
    bool ok = true;
    std::string detail;
    for (int d : {6, 7}) {
      std::string spec = "alt:" + std::to_string(d);
      try {
        CentralCover cover = cover_by_name("pullback:alt" + std::to_string(d), cfg);
        EquippedGroup base = group_with_classes(spec, cfg);
        std::string typeI = d == 6 ? "5#1" : "7#1";
        std::vector<std::pair<std::vector<std::string>, unsigned long long>> cases = {
            {{typeI}, 6}, {{typeI, "3"}, 2}, {{typeI, "2+2"}, 3}, {{"3", "2+2"}, 1}};
        for (auto& [names, expect] : cases) {
          EquippedGroup eg = base;
          for (auto& n : names)
            for (int i = 0; i < static_cast<int>(base.classes.size()); ++i)
              if (base.class_names[i] == n) eg.equipment.push_back(i);
          auto [a, k] = ambiguity_from_cover(cover, eg.equipment_classes());
          if (a != expect) {
            ok = false;
            detail += spec + " category rep {" + names.front() + ",...}: a=" + std::to_string(a) +
                      " want " + std::to_string(expect) + "; ";
          }
        }
      } catch (const Error& e) {
        ok = false;
        detail += spec + ": " + e.what() + "; ";
      }
    }
    line(5, ok, "a(alt:6,O) and a(alt:7,O) equal 6/2/3/1 on a representative equipment per "
                "category " + detail);
  }

  // 6. Bogomolov multipliers.
  {
    bool ok = true;
    std::string detail;
    for (std::string spec : {"alt:5", "elem_abelian:2^2", "elem_abelian:2^3", "elem_abelian:3^2",
                             "cyclic:6", "cyclic:12", "quaternion:8", "dihedral:4"}) {
      auto v = b0(spec, cfg);
      if (v.value != 1 || v.lower_bound) {
        ok = false;
        detail += spec + " b0=" + std::to_string(v.value) + "; ";
      }
    }
    line(6, ok, "b0 = 1 for alt:5, the abelian catalog groups, quaternion:8 and dihedral:4 " + detail);
  }

  // 7. The order-512 central extension pipeline, under 5 min.
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
      auto r = saltman_b0_pipeline(2);
      if (r.inflation_class_count != 64 || r.inflation_kernel_order != 32 || r.b0_lower_bound != 2) {
        ok = false;
        detail = "got {" + std::to_string(r.inflation_class_count) + ", " +
                 std::to_string(r.inflation_kernel_order) + ", " + std::to_string(r.b0_lower_bound) +
                 "}";
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    double dt = secs(t0);
    if (dt >= 300.0) ok = false;
    line(7, ok, "saltman:2 pipeline yields {64, 32, 2}, certifying b0 >= 2, in " +
                std::to_string(dt) + "s " + detail);
  }

  // 8. Property suites: row identities, bounds, monotonicity, pairing
  //    invariance under 100 perturbations per class, cross-engine equality.
  {
    bool ok = true;
    std::string detail;
    for (std::string scope : {"desk", "alt6", "alt7"}) {
      auto rep = verify_suite(scope, cfg);
      for (auto& c : rep.checks)
        if (!c.pass) {
          ok = false;
          detail += c.name + "; ";
        }
    }
    // pairing invariance under fuzzed coboundary/carry perturbations
    for (std::string spec : {"elem_abelian:2^2", "dihedral:4", "sym:4", "alt:5"}) {
      auto G = make_group(spec);
      auto pt = PermGroupTable::build(*G);
      auto Gt = std::make_shared<GroupTable>(pt.table);
      unsigned long long t = G->order();
      for (unsigned long long q = 2; q <= t; ++q) {
        if (t % q != 0) continue;
        while (t % q == 0) t /= q;
        auto basis = h2_primary(Gt, static_cast<std::uint32_t>(q), cfg.cocycle_cap);
        for (auto& w : basis.basis) {
          for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            CocycleTable w2 = perturb_class(w, cfg.seed + seed);
            for (int g = 1; g < Gt->n; ++g)
              for (int h = 1; h < Gt->n; ++h) {
                if (Gt->multiply(g, h) != Gt->multiply(h, g)) continue;
                if (pairing(w2, g, h) != pairing(w, g, h)) {
                  ok = false;
                  detail += spec + " pairing drift; ";
                  goto next_spec;
                }
              }
          }
        }
      }
    next_spec:;
    }
    line(8, ok, "a*k = h2 and b0 <= a <= h2 on every row, monotonicity, 100-fold pairing "
                "invariance, cross-engine (h2, a, s_f) equality " + detail);
  }

  // 9. Hurwitz oracle: experimental, but stabilized counts must never
  //    contradict the engine.
  {
    bool ok = true;
    std::string detail;
    // abelian groups: exactly one orbit whenever tuples exist
    for (std::string spec : {"elem_abelian:2^2", "cyclic:6"}) {
      EquippedGroup eg = equipped(spec, {"all"}, cfg);
      std::vector<int> tau(eg.equipment.size(), 1);
      auto reports = stabilization_scan(*eg.group, eg.equipment_classes(), tau, {2, 3, 4}, 2,
                                        cfg.hurwitz);
      for (auto& r : reports)
        if (!r.budget_exceeded && r.tuple_count > 0 && r.orbit_count != 1) {
          ok = false;
          detail += spec + " gave " + std::to_string(r.orbit_count) + " orbits; ";
        }
    }
    // sym:3 transpositions stabilize at 1
    {
      EquippedGroup eg = equipped("sym:3", {"cycles:2"}, cfg);
      auto reports = stabilization_scan(*eg.group, eg.equipment_classes(), {2}, {1, 2, 3}, 2,
                                        cfg.hurwitz);
      if (reports.empty() || !reports.back().stabilized || reports.back().orbit_count != 1) {
        ok = false;
        detail += "sym:3 transposition scan did not stabilize at 1; ";
      }
    }
    // quaternion:8 and dihedral:4 scans against the engine's a
    {
      struct Scan {
        const char* spec;
        std::vector<std::string> sel;
        std::vector<int> tau;
        std::vector<int> schedule;
      };
      for (Scan sc : {Scan{"quaternion:8", {"cycles:4+4#1", "cycles:4+4#2"}, {1, 1}, {2, 3, 4}},
                      Scan{"dihedral:4", {"cycles:2", "cycles:2+2#2"}, {1, 1}, {2, 3, 4}}}) {
        EquippedGroup eg = equipped(sc.spec, sc.sel, cfg);
        auto v = ambiguity_index(eg, cfg);
        auto reports = stabilization_scan(*eg.group, eg.equipment_classes(), sc.tau, sc.schedule, 2,
                                          cfg.hurwitz);
        bool saw_stable = false;
        for (auto& r : reports)
          if (r.stabilized) {
            saw_stable = true;
            if (r.orbit_count != static_cast<long long>(v.a)) {
              ok = false;
              detail += std::string(sc.spec) + " stabilized at " + std::to_string(r.orbit_count) +
                        " but a=" + std::to_string(v.a) + "; ";
            }
          }
        if (!saw_stable) detail += std::string(sc.spec) + " inconclusive (allowed); ";
      }
    }
    line(9, ok, "abelian scans give one orbit, sym:3 stabilizes at 1, stabilized scans match the "
                "engine " + detail);
  }

  std::cout << (failures ? "ACCEPTANCE: FAILED" : "ACCEPTANCE: ALL CRITERIA PASS") << std::endl;
  return failures ? 1 : 0;
}
