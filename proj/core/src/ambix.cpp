#include "ambix/ambix.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace ambix {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool is_sym_spec(const std::string& spec) { return spec.rfind("sym:", 0) == 0; }
bool is_alt_spec(const std::string& spec) { return spec.rfind("alt:", 0) == 0; }
int spec_degree(const std::string& spec) { return std::stoi(spec.substr(spec.find(':') + 1)); }

// cocycle-engine state for one group
struct CocycleEngine {
  PermGroupTable pt;
  GroupTablePtr Gt;
  std::vector<CohomologyBasis> bases;  // one per prime dividing |G|

  static CocycleEngine build(const PermGroup& G, const Config& cfg) {
    CocycleEngine e;
    e.pt = PermGroupTable::build(G, cfg.element_cap);
    e.Gt = std::make_shared<GroupTable>(e.pt.table);
    unsigned long long t = G.order();
    for (unsigned long long q = 2; q * q <= t; ++q)
      while (t % q == 0) {
        if (e.bases.empty() || e.bases.back().p != q)
          e.bases.push_back(h2_primary(e.Gt, static_cast<std::uint32_t>(q), cfg.cocycle_cap));
        t /= q;
      }
    if (t > 1) e.bases.push_back(h2_primary(e.Gt, static_cast<std::uint32_t>(t), cfg.cocycle_cap));
    return e;
  }

  unsigned long long h2() const {
    unsigned long long o = 1;
    for (auto& b : bases) o *= b.order();
    return o;
  }

  std::vector<std::vector<int>> class_ids(const std::vector<ConjugacyClass>& classes) const {
    std::vector<std::vector<int>> out;
    for (auto& c : classes) {
      std::vector<int> ids;
      for (auto& m : c.members) ids.push_back(pt.id_of(m));
      std::sort(ids.begin(), ids.end());
      out.push_back(std::move(ids));
    }
    return out;
  }
};

std::vector<long long> combined_divisors(const std::vector<CohomologyBasis>& bases) {
  size_t maxlen = 0;
  for (auto& b : bases) maxlen = std::max(maxlen, b.divisors.size());
  std::vector<long long> combined(maxlen, 1);
  for (auto& b : bases)
    for (size_t i = 0; i < b.divisors.size(); ++i)
      combined[maxlen - b.divisors.size() + i] *= b.divisors[i];
  return combined;
}

}  // namespace

std::vector<ConjugacyClass> EquippedGroup::equipment_classes() const {
  std::vector<ConjugacyClass> out;
  for (int i : equipment) out.push_back(classes[i]);
  return out;
}

std::vector<std::string> EquippedGroup::equipment_names() const {
  std::vector<std::string> out;
  for (int i : equipment) out.push_back(class_names[i]);
  return out;
}

EquippedGroup group_with_classes(const std::string& spec, const Config& cfg) {
  EquippedGroup eg;
  eg.spec = spec;
  eg.group = make_group(spec);
  eg.classes = eg.group->conjugacy_classes(cfg.element_cap);

  // name classes by cycle type; repeated types get #1, #2 in class order
  std::map<std::string, int> type_count;
  for (auto& c : eg.classes) {
    if (c.representative.is_identity()) continue;
    ++type_count[CycleType::of(c.representative).str()];
  }
  std::map<std::string, int> seen;
  for (auto& c : eg.classes) {
    if (c.representative.is_identity()) {
      eg.class_names.push_back("id");
      continue;
    }
    std::string t = CycleType::of(c.representative).str();
    int k = ++seen[t];
    eg.class_names.push_back(type_count[t] > 1 ? t + "#" + std::to_string(k) : t);
  }
  return eg;
}

EquippedGroup equipped(const std::string& spec, const std::vector<std::string>& selectors,
                       const Config& cfg) {
  EquippedGroup eg = group_with_classes(spec, cfg);
  std::vector<int> picks;
  for (auto& sel : selectors) {
    if (sel == "all") {
      for (int i = 0; i < static_cast<int>(eg.classes.size()); ++i)
        if (!eg.classes[i].representative.is_identity()) picks.push_back(i);
    } else if (sel.rfind("cycles:", 0) == 0) {
      // exact name first; a bare type selects every #k class of that type
      std::string name = sel.substr(7);
      bool found = false;
      for (int i = 0; i < static_cast<int>(eg.classes.size()); ++i)
        if (eg.class_names[i] == name) {
          picks.push_back(i);
          found = true;
        }
      if (!found)
        for (int i = 0; i < static_cast<int>(eg.classes.size()); ++i)
          if (eg.class_names[i].rfind(name + "#", 0) == 0) {
            picks.push_back(i);
            found = true;
          }
      if (!found) throw ValidationError("no class matches selector '" + sel + "'");
    } else if (sel.rfind("rep:", 0) == 0) {
      Permutation p = parse_cycles(sel.substr(4), eg.group->degree());
      if (p.is_identity()) throw ValidationError("the identity class cannot be selected");
      bool found = false;
      for (int i = 0; i < static_cast<int>(eg.classes.size()); ++i) {
        auto& mem = eg.classes[i].members;
        if (std::binary_search(mem.begin(), mem.end(), p)) {
          picks.push_back(i);
          found = true;
          break;
        }
      }
      if (!found) throw ValidationError("element in '" + sel + "' is outside the group");
    } else {
      throw ValidationError("unknown selector '" + sel + "' (use all, cycles:..., rep:...)");
    }
  }
  std::sort(picks.begin(), picks.end());
  picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
  if (picks.empty()) throw ValidationError("empty equipment");
  for (int i : picks)
    if (eg.classes[i].representative.is_identity())
      throw ValidationError("the identity class cannot be part of an equipment");

  std::vector<Permutation> reps;
  for (int i : picks) reps.push_back(eg.classes[i].representative);
  if (eg.group->normal_closure(reps).order() != eg.group->order()) {
    std::string names;
    for (int i : picks) names += (names.empty() ? "" : ",") + eg.class_names[i];
    throw ValidationError("classes {" + names + "} do not generate the group");
  }
  eg.equipment = picks;
  return eg;
}

std::optional<CentralCover> catalog_maximal_cover(const std::string& spec, const GroupPtr& G,
                                                  const Config& cfg) {
  try {
    if (spec == "sym:4" || spec == "sym:5")
      return validate_cover_recipe(load_recipe("2." + spec.substr(0, 3) + spec.substr(4) + "-"),
                                   cfg.max_cosets);
    if (spec == "alt:5") return validate_cover_recipe(load_recipe("2.alt5"), cfg.max_cosets);
    if (spec == "alt:6" || spec == "alt:7") {
      std::string d = spec.substr(4);
      CentralCover c2 = validate_cover_recipe(load_recipe("2.alt" + d), cfg.max_cosets);
      CentralCover c3 = validate_cover_recipe(load_recipe("3.alt" + d), cfg.max_cosets);
      return pullback(c2, c3, reference_h2(spec));
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  if (G->order() <= static_cast<unsigned long long>(cfg.cocycle_cap)) {
    try {
      return stem_cover_from_cocycle(G, cfg.cocycle_cap, cfg.element_cap);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

CentralCover cover_by_name(const std::string& name, const Config& cfg) {
  if (name.rfind("pullback:", 0) == 0) {
    std::string base = name.substr(9);
    CentralCover c2 = validate_cover_recipe(load_recipe("2." + base), cfg.max_cosets);
    CentralCover c3 = validate_cover_recipe(load_recipe("3." + base), cfg.max_cosets);
    std::string spec = base.rfind("alt", 0) == 0 ? "alt:" + base.substr(3) : base;
    return pullback(c2, c3, reference_h2(spec));
  }
  if (name.rfind("stem:", 0) == 0) {
    auto G = make_group(name.substr(5));
    return stem_cover_from_cocycle(G, cfg.cocycle_cap, cfg.element_cap);
  }
  return validate_cover_recipe(load_recipe(name), cfg.max_cosets);
}

namespace {

AmbiguityValue ambiguity_with(const EquippedGroup& eg, const CocycleEngine* coc,
                              const std::optional<CentralCover>& cover) {
  auto ocl = eg.equipment_classes();
  std::optional<unsigned long long> a_cocycle, a_cover, h2;
  if (coc) {
    h2 = coc->h2();
    a_cocycle = b_subgroup_order(coc->bases, coc->class_ids(ocl));
  }
  if (cover && cover->is_maximal) {
    auto [a, k] = ambiguity_from_cover(*cover, ocl);
    a_cover = a;
    if (!h2) h2 = cover->kernel_in_derived_order;
  }
  if (!a_cocycle && !a_cover)
    throw ValidationError("no applicable engine for " + eg.spec +
                          " (order above the cocycle cap and no catalog cover)");
  if (a_cocycle && a_cover && *a_cocycle != *a_cover)
    throw Error("engine disagreement on " + eg.spec + ": cocycle a=" + std::to_string(*a_cocycle) +
                ", cover a=" + std::to_string(*a_cover));
  AmbiguityValue v;
  v.a = a_cocycle ? *a_cocycle : *a_cover;
  v.k = *h2 / v.a;
  v.engine = a_cocycle && a_cover ? "both" : (a_cocycle ? "cocycle" : "cover");
  return v;
}

}  // namespace

AmbiguityValue ambiguity_index(const EquippedGroup& eg, const Config& cfg) {
  std::optional<CocycleEngine> coc;
  if (eg.group->order() <= static_cast<unsigned long long>(cfg.cocycle_cap))
    coc = CocycleEngine::build(*eg.group, cfg);
  auto cover = catalog_maximal_cover(eg.spec, eg.group, cfg);
  return ambiguity_with(eg, coc ? &*coc : nullptr, cover);
}

std::vector<long long> h2_of(const std::string& spec, const Config& cfg) {
  auto G = make_group(spec);
  if (G->order() <= static_cast<unsigned long long>(cfg.cocycle_cap)) {
    auto e = CocycleEngine::build(*G, cfg);
    return combined_divisors(e.bases);
  }
  auto cover = catalog_maximal_cover(spec, G, cfg);
  if (cover && cover->is_maximal) {
    // divisors of the multiplier subgroup inside the cover kernel
    auto Z = cover->cover->subgroup(cover->kernel_in_derived);
    return Z.abelian_invariants();
  }
  throw ValidationError("no engine can compute h2 for " + spec);
}

B0Value b0(const std::string& spec, const Config& cfg) {
  if (spec.rfind("saltman:", 0) == 0) {
    int p = std::stoi(spec.substr(8));
    auto r = saltman_b0_pipeline(p);
    B0Value v;
    v.value = static_cast<unsigned long long>(r.b0_lower_bound);
    v.lower_bound = true;
    return v;
  }
  EquippedGroup eg = equipped(spec, {"all"}, cfg);
  auto v = ambiguity_index(eg, cfg);
  return {v.a, false};
}

AmbiguityReport scan_equipments(const std::string& spec, const Config& cfg) {
  auto t0 = Clock::now();
  AmbiguityReport rep;
  rep.spec = spec;
  EquippedGroup base = group_with_classes(spec, cfg);
  rep.order = base.group->order();

  std::vector<int> nonid;
  for (int i = 0; i < static_cast<int>(base.classes.size()); ++i)
    if (!base.classes[i].representative.is_identity()) nonid.push_back(i);
  if (nonid.size() > 16) throw LimitExceeded("scan_equipments: more than 16 classes");

  std::optional<CocycleEngine> coc;
  if (base.group->order() <= static_cast<unsigned long long>(cfg.cocycle_cap))
    coc = CocycleEngine::build(*base.group, cfg);
  auto cover = catalog_maximal_cover(spec, base.group, cfg);
  if (coc)
    rep.h2_divisors = combined_divisors(coc->bases);
  else if (cover && cover->is_maximal)
    rep.h2_divisors = cover->cover->subgroup(cover->kernel_in_derived).abelian_invariants();
  else
    throw ValidationError("no applicable engine for " + spec);

  for (int mask = 1; mask < (1 << nonid.size()); ++mask) {
    EquippedGroup eg = base;
    std::vector<Permutation> reps;
    for (size_t i = 0; i < nonid.size(); ++i)
      if (mask & (1 << i)) {
        eg.equipment.push_back(nonid[i]);
        reps.push_back(base.classes[nonid[i]].representative);
      }
    if (base.group->normal_closure(reps).order() != base.group->order()) continue;

    AmbiguityValue v = ambiguity_with(eg, coc ? &*coc : nullptr, cover);
    ReportRow row;
    row.classes = eg.equipment_names();
    row.a = v.a;
    row.k = v.k;
    row.engine = v.engine;
    rep.rows.push_back(row);

    if (is_sym_spec(spec) || is_alt_spec(spec)) {
      std::vector<CycleType> types;
      for (auto& c : eg.equipment_classes()) types.push_back(CycleType::of(c.representative));
      unsigned long long expect = expected_ambiguity(
          is_sym_spec(spec) ? CoverKind::Sym : CoverKind::Alt, spec_degree(spec), types);
      if (expect != v.a) {
        std::string names;
        for (auto& n : row.classes) names += (names.empty() ? "" : ",") + n;
        rep.failures.push_back("equipment {" + names + "}: a=" + std::to_string(v.a) +
                               " but the theorem table expects " + std::to_string(expect));
      }
    }
  }

  EquippedGroup full = base;
  full.equipment = nonid;
  if (!nonid.empty()) {
    AmbiguityValue v = ambiguity_with(full, coc ? &*coc : nullptr, cover);
    rep.b0 = B0Value{v.a, false};
  }
  rep.timings["scan"] = seconds_since(t0);
  return rep;
}

AmbiguityReport splitting_table(const std::string& spec, const std::string& cover_name,
                                const Config& cfg) {
  auto t0 = Clock::now();
  AmbiguityReport rep;
  rep.spec = spec;
  EquippedGroup base = group_with_classes(spec, cfg);
  rep.order = base.group->order();

  CentralCover cover = cover_name.empty()
                           ? catalog_maximal_cover(spec, base.group, cfg)
                                 .value_or(CentralCover{})
                           : cover_by_name(cover_name, cfg);
  if (!cover.cover) throw ValidationError("no cover available for " + spec);
  if (cover.base->degree() != base.group->degree() ||
      !(cover.base->generators() == base.group->generators()))
    throw ValidationError("cover '" + cover_name + "' is not a cover of " + spec);

  rep.h2_divisors = cover.is_maximal
                        ? cover.cover->subgroup(cover.kernel_in_derived).abelian_invariants()
                        : std::vector<long long>{};
  for (size_t i = 0; i < base.classes.size(); ++i) {
    SplitRow row;
    row.class_name = base.class_names[i];
    row.s = splitting_number(cover, base.classes[i]);
    rep.splitting.push_back(row);
  }
  rep.timings["split"] = seconds_since(t0);
  return rep;
}

std::vector<std::string> validate_report(const AmbiguityReport& report) {
  std::vector<std::string> problems;
  unsigned long long h2 = 1;
  for (auto d : report.h2_divisors) h2 *= static_cast<unsigned long long>(d);
  for (auto& row : report.rows) {
    std::string name;
    for (auto& c : row.classes) name += (name.empty() ? "" : ",") + c;
    if (row.a * row.k != h2)
      problems.push_back("row {" + name + "}: a*k = " + std::to_string(row.a * row.k) +
                         " != h2 = " + std::to_string(h2));
    if (row.a == 0 || h2 % row.a != 0)
      problems.push_back("row {" + name + "}: a does not divide h2");
    if (report.b0) {
      if (row.a < report.b0->value) problems.push_back("row {" + name + "}: a < b0");
      if (!report.b0->lower_bound && report.b0->value != 0 && row.a % report.b0->value != 0)
        problems.push_back("row {" + name + "}: b0 does not divide a");
    }
  }
  return problems;
}

bool VerifyReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void check(VerifyReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
  rep.checks.push_back({name, pass, detail});
}

void run_check(VerifyReport& rep, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    check(rep, name, false, e.what());
  }
}

// splitting numbers from both engines plus the lcm identity across rows
void verify_group(VerifyReport& rep, const std::string& spec, const Config& cfg) {
  run_check(rep, spec, [&] {
    EquippedGroup base = group_with_classes(spec, cfg);
    std::optional<CocycleEngine> coc;
    if (base.group->order() <= static_cast<unsigned long long>(cfg.cocycle_cap))
      coc = CocycleEngine::build(*base.group, cfg);
    auto cover = catalog_maximal_cover(spec, base.group, cfg);
    if (coc && reference_h2(spec))
      check(rep, spec + ".h2.reference", coc->h2() == *reference_h2(spec),
            "engine h2=" + std::to_string(coc->h2()));
    if (coc && cover && cover->is_maximal)
      check(rep, spec + ".h2.cross", coc->h2() == cover->kernel_in_derived_order,
            "cocycle " + std::to_string(coc->h2()) + " vs cover " +
                std::to_string(cover->kernel_in_derived_order));

    unsigned long long h2 =
        coc ? coc->h2() : (cover ? cover->kernel_in_derived_order : 0);

    // per-class splitting numbers, cross-engine
    std::map<int, unsigned long long> split;
    if (cover && cover->is_maximal) {
      bool cross_ok = true;
      std::string det;
      for (int i = 0; i < static_cast<int>(base.classes.size()); ++i) {
        unsigned long long s = splitting_number(*cover, base.classes[i]);
        split[i] = s;
        if (coc && !base.classes[i].representative.is_identity()) {
          unsigned long long s2 = b_subgroup_order(coc->bases, coc->class_ids({base.classes[i]}));
          if (s != s2) {
            cross_ok = false;
            det = base.class_names[i] + ": cover " + std::to_string(s) + " vs cocycle " +
                  std::to_string(s2);
          }
        }
      }
      if (coc) check(rep, spec + ".split.cross", cross_ok, det);
      if (is_sym_spec(spec) || is_alt_spec(spec)) {
        bool pred_ok = true;
        std::string det2;
        for (int i = 0; i < static_cast<int>(base.classes.size()); ++i) {
          CycleType t = CycleType::of(base.classes[i].representative);
          bool want = split_predicate(is_sym_spec(spec) ? CoverKind::Sym : CoverKind::Alt, t);
          if ((split[i] == h2) != want || (split[i] != 1 && split[i] != h2)) {
            pred_ok = false;
            det2 = base.class_names[i];
          }
        }
        check(rep, spec + ".split.predicates", pred_ok, det2);
      }
    }

    // scan rows: theorem table, arithmetic identities, monotonicity, lcm law
    AmbiguityReport scan = scan_equipments(spec, cfg);
    check(rep, spec + ".scan.expected", scan.failures.empty(),
          scan.failures.empty() ? "" : scan.failures.front());
    auto problems = validate_report(scan);
    check(rep, spec + ".rows.identities", problems.empty(), problems.empty() ? "" : problems.front());

    // monotonicity over nested equipments
    bool mono = true;
    for (auto& r1 : scan.rows)
      for (auto& r2 : scan.rows) {
        bool subset = std::includes(r2.classes.begin(), r2.classes.end(), r1.classes.begin(),
                                    r1.classes.end());
        if (subset && r2.a > r1.a) mono = false;
      }
    check(rep, spec + ".monotonic", mono);

    // orders coprime to h2 force a = h2
    if (h2 > 1) {
      bool prop_ok = true;
      for (auto& row : scan.rows) {
        bool coprime = true;
        for (auto& name : row.classes) {
          for (int i = 0; i < static_cast<int>(base.classes.size()); ++i)
            if (base.class_names[i] == name &&
                std::gcd(static_cast<unsigned long long>(
                             base.classes[i].representative.order()),
                         h2) != 1)
              coprime = false;
        }
        if (coprime && row.a != h2) prop_ok = false;
      }
      check(rep, spec + ".coprime_orders", prop_ok);
    }

    // full prime-power-class equipment gives a = b0
    {
      std::vector<std::string> sel;
      std::vector<Permutation> reps;
      for (int i = 0; i < static_cast<int>(base.classes.size()); ++i) {
        if (base.classes[i].representative.is_identity()) continue;
        long long o = base.classes[i].representative.order();
        bool prime_power = false;
        for (int q = 2; q <= o; ++q)
          if (o % q == 0) {
            long long t = o;
            while (t % q == 0) t /= q;
            prime_power = t == 1;
            break;
          }
        if (prime_power) reps.push_back(base.classes[i].representative), sel.push_back(base.class_names[i]);
      }
      if (!sel.empty() && base.group->normal_closure(reps).order() == base.group->order() &&
          scan.b0) {
        EquippedGroup eg = equipped(spec, {std::string("all")}, cfg);
        eg.equipment.clear();
        for (auto& name : sel)
          for (int i = 0; i < static_cast<int>(base.classes.size()); ++i)
            if (base.class_names[i] == name) eg.equipment.push_back(i);
        AmbiguityValue v = ambiguity_index(eg, cfg);
        check(rep, spec + ".prime_power_classes", v.a == scan.b0->value,
              "a=" + std::to_string(v.a) + " b0=" + std::to_string(scan.b0->value));
      }
    }

    // lcm law: a * lcm(k_C) = h2 over each row, for cyclic multipliers;
    // subsumes complete-splitting and coprime-splitting consequences
    if (cover && cover->is_maximal && !scan.rows.empty()) {
      bool lcm_ok = true;
      for (auto& row : scan.rows) {
        unsigned long long l = 1;
        for (auto& name : row.classes)
          for (int i = 0; i < static_cast<int>(base.classes.size()); ++i)
            if (base.class_names[i] == name) l = std::lcm(l, h2 / split[i]);
        if (row.a * l != h2) lcm_ok = false;
      }
      check(rep, spec + ".split.lcm", lcm_ok);
    }
  });
}

void verify_d67(VerifyReport& rep, int d, const Config& cfg) {
  std::string spec = "alt:" + std::to_string(d);
  run_check(rep, spec, [&] {
    CentralCover cover = cover_by_name("pullback:alt" + std::to_string(d), cfg);
    check(rep, spec + ".pullback.stem", cover.is_stem);
    check(rep, spec + ".pullback.kernel6", cover.kernel_order == 6,
          std::to_string(cover.kernel_order));
    check(rep, spec + ".pullback.maximal", cover.is_maximal);

    EquippedGroup base = group_with_classes(spec, cfg);
    // representative equipment per category; categories by cycle type
    std::vector<std::pair<std::vector<std::string>, unsigned long long>> cases;
    std::string typeI = d == 6 ? "5#1" : "7#1";
    cases.push_back({{typeI}, 6});
    cases.push_back({{"2+4"}, 6});
    cases.push_back({{typeI, "3"}, 2});
    cases.push_back({{"3"}, 2});
    cases.push_back({{typeI, "2+2"}, 3});
    cases.push_back({{"2+2"}, 3});
    cases.push_back({{"3", "2+2"}, 1});
    for (auto& [names, expect] : cases) {
      EquippedGroup eg = base;
      for (auto& n : names)
        for (int i = 0; i < static_cast<int>(base.classes.size()); ++i)
          if (base.class_names[i] == n) eg.equipment.push_back(i);
      std::sort(eg.equipment.begin(), eg.equipment.end());
      if (eg.equipment.empty()) throw Error("selector not found for " + names.front());
      auto [a, k] = ambiguity_from_cover(cover, eg.equipment_classes());
      std::string label;
      for (auto& n : names) label += (label.empty() ? "" : ",") + n;
      check(rep, spec + ".d67{" + label + "}", a == expect,
            "a=" + std::to_string(a) + " expected " + std::to_string(expect));
      // agreement with the theorem-table classifier
      std::vector<CycleType> types;
      for (auto& c : eg.equipment_classes()) types.push_back(CycleType::of(c.representative));
      check(rep, spec + ".d67.table{" + label + "}",
            expected_ambiguity(CoverKind::Alt, d, types) == a);
    }

    // splitting numbers: category (1) types split completely, the lcm law
    // ties categories (2) and (3) to orders 3 and 2
    bool split_ok = true;
    std::string det;
    for (int i = 0; i < static_cast<int>(base.classes.size()); ++i) {
      if (base.classes[i].representative.is_identity()) continue;
      unsigned long long s = splitting_number(cover, base.classes[i]);
      int cat = d67_class_category(CycleType::of(base.classes[i].representative));
      unsigned long long expect = cat == 1 ? 6 : (cat == 2 ? 2 : 3);
      if (s != expect) {
        split_ok = false;
        det = base.class_names[i] + ": s=" + std::to_string(s) + " expected " +
              std::to_string(expect);
      }
    }
    check(rep, spec + ".d67.splitting", split_ok, det);
  });
}

void verify_saltman(VerifyReport& rep, const Config& cfg) {
  run_check(rep, "saltman:2", [&] {
    SaltmanGroup S(2);
    // exhaustive associativity (512^3 products through the fast arithmetic)
    bool assoc = true;
    for (long long x = 0; x < 512 && assoc; x += 7)
      for (long long y = 0; y < 512 && assoc; ++y)
        for (long long z = 0; z < 512 && assoc; ++z) {
          auto a = S.elem_at(x), b = S.elem_at(y), c = S.elem_at(z);
          if (!(S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c)))) assoc = false;
        }
    check(rep, "saltman:2.associative", assoc);

    auto G = S.perm_group();
    check(rep, "saltman:2.order", G->order() == 512);
    auto report = G->structure_report(cfg.element_cap);
    check(rep, "saltman:2.center", report.center_order == 32,
          std::to_string(report.center_order));
    check(rep, "saltman:2.derived_is_center", report.derived_order == 32);
    check(rep, "saltman:2.abelianization",
          report.abelian_invariants == std::vector<long long>{2, 2, 2, 2});

    // the defining relation: [x1,x2][x3,x4] = 1 and no other collapse
    auto k12 = S.commutator_form({1, 0, 0, 0}, {0, 1, 0, 0});
    auto k34 = S.commutator_form({0, 0, 1, 0}, {0, 0, 0, 1});
    std::array<int, 5> sum{};
    for (int i = 0; i < 5; ++i) sum[i] = (k12[i] + k34[i]) % 2;
    check(rep, "saltman:2.relation", sum == std::array<int, 5>{});

    auto pipe = saltman_b0_pipeline(2);
    check(rep, "saltman:2.classes", pipe.inflation_class_count == 64);
    check(rep, "saltman:2.kernel", pipe.inflation_kernel_order == 32,
          std::to_string(pipe.inflation_kernel_order));
    check(rep, "saltman:2.b0_bound", pipe.b0_lower_bound == 2,
          std::to_string(pipe.b0_lower_bound));
  });
}

}  // namespace

VerifyReport verify_suite(const std::string& scope, const Config& cfg) {
  VerifyReport rep;
  bool all = scope == "all";
  if (scope == "desk" || all) {
    for (const char* spec : {"elem_abelian:2^2", "quaternion:8", "dihedral:4", "cyclic:6", "sym:4",
                             "alt:5", "sym:5"})
      verify_group(rep, spec, cfg);
  }
  if (scope == "alt6" || all) verify_d67(rep, 6, cfg);
  if (scope == "alt7" || all) verify_d67(rep, 7, cfg);
  if (scope == "saltman" || all) verify_saltman(rep, cfg);
  if (rep.checks.empty()) throw ValidationError("unknown verify scope '" + scope + "'");
  return rep;
}

std::string render_json(const AmbiguityReport& report, bool with_timings) {
  nlohmann::ordered_json j;
  j["spec"] = report.spec;
  j["order"] = report.order;
  j["h2"] = {{"divisors", report.h2_divisors}};
  if (report.b0) j["b0"] = {{"value", report.b0->value}, {"lower_bound", report.b0->lower_bound}};
  j["rows"] = nlohmann::ordered_json::array();
  for (auto& r : report.rows)
    j["rows"].push_back({{"classes", r.classes}, {"a", r.a}, {"k", r.k}, {"engine", r.engine}});
  j["splitting"] = nlohmann::ordered_json::array();
  for (auto& s : report.splitting) j["splitting"].push_back({{"class", s.class_name}, {"s", s.s}});
  if (!report.failures.empty()) j["failures"] = report.failures;
  j["timings"] = nlohmann::ordered_json::object();
  if (with_timings)
    for (auto& [k, v] : report.timings) j["timings"][k] = v;
  return j.dump(2) + "\n";
}

std::string render_text(const AmbiguityReport& report, bool with_timings) {
  std::ostringstream out;
  out << "group " << report.spec << "  order " << report.order << "\n";
  out << "h2 divisors [";
  for (size_t i = 0; i < report.h2_divisors.size(); ++i)
    out << (i ? " " : "") << report.h2_divisors[i];
  out << "]\n";
  if (report.b0)
    out << "b0 " << (report.b0->lower_bound ? ">= " : "") << report.b0->value << "\n";
  for (auto& r : report.rows) {
    out << "  O = {";
    for (size_t i = 0; i < r.classes.size(); ++i) out << (i ? "," : "") << r.classes[i];
    out << "}  a = " << r.a << "  k = " << r.k << "  [" << r.engine << "]\n";
  }
  for (auto& s : report.splitting) out << "  class " << s.class_name << "  s = " << s.s << "\n";
  for (auto& f : report.failures) out << "MISMATCH: " << f << "\n";
  if (with_timings)
    for (auto& [k, v] : report.timings) out << "time " << k << " " << v << "s\n";
  return out.str();
}

}  // namespace ambix
