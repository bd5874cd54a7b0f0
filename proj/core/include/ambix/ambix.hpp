#pragma once

#include <map>
#include <optional>
#include <string>

#include "ambix/catalog.hpp"
#include "ambix/cocycle.hpp"
#include "ambix/cover.hpp"
#include "ambix/hurwitz.hpp"
#include "ambix/recipe.hpp"

namespace ambix {

struct Config {
  unsigned long long element_cap = 1000000;
  int cocycle_cap = 130;
  long long max_cosets = 2000000;
  HurwitzBudget hurwitz;
  std::uint64_t seed = 0;  // fuzz suites only
};

/// A group with named conjugacy classes and a chosen generating equipment.
struct EquippedGroup {
  std::string spec;
  GroupPtr group;
  std::vector<ConjugacyClass> classes;   // all classes, canonical order
  std::vector<std::string> class_names;  // cycle-type names, "#k" for repeats
  std::vector<int> equipment;            // class indices, ascending, no identity

  std::vector<ConjugacyClass> equipment_classes() const;
  std::vector<std::string> equipment_names() const;
};

/// Builds the class table with canonical selector names.
EquippedGroup group_with_classes(const std::string& spec, const Config& cfg = {});

/// Selector grammar: "all" (all non-identity classes), "cycles:3",
/// "cycles:2+2", "cycles:5#2" (k-th class of a repeated type),
/// "rep:(1,2)(3,4)" (class of an explicit element).
EquippedGroup equipped(const std::string& spec, const std::vector<std::string>& selectors,
                       const Config& cfg = {});

struct AmbiguityValue {
  unsigned long long a = 0;
  unsigned long long k = 0;
  std::string engine;  // "cocycle", "cover" or "both"
};

/// Both engines run when both apply, and must agree.
AmbiguityValue ambiguity_index(const EquippedGroup& eg, const Config& cfg = {});

struct B0Value {
  unsigned long long value = 0;
  bool lower_bound = false;
};
B0Value b0(const std::string& spec, const Config& cfg = {});

std::vector<long long> h2_of(const std::string& spec, const Config& cfg = {});

/// The maximal stem cover the catalog can produce for this group spec:
/// validated recipes for sym:4/5 and alt:5, recipe pullbacks for alt:6/7,
/// the cocycle-engine construction otherwise (when it applies).
std::optional<CentralCover> catalog_maximal_cover(const std::string& spec, const GroupPtr& G,
                                                  const Config& cfg = {});
/// Loads "2.sym4-", "pullback:alt6", ... by name; validated on load.
CentralCover cover_by_name(const std::string& name, const Config& cfg = {});

struct ReportRow {
  std::vector<std::string> classes;
  unsigned long long a = 0;
  unsigned long long k = 0;
  std::string engine;
};

struct SplitRow {
  std::string class_name;
  unsigned long long s = 0;
};

struct AmbiguityReport {
  std::string spec;
  unsigned long long order = 0;
  std::vector<long long> h2_divisors;
  std::optional<B0Value> b0;
  std::vector<ReportRow> rows;
  std::vector<SplitRow> splitting;
  std::vector<std::string> failures;  // expected-value mismatches
  std::map<std::string, double> timings;
};

/// Every generating class subset; rows checked against the theorem table
/// for sym:d / alt:d. Mismatches land in `failures`.
AmbiguityReport scan_equipments(const std::string& spec, const Config& cfg = {});

/// Splitting numbers of every class under a named cover.
AmbiguityReport splitting_table(const std::string& spec, const std::string& cover_name,
                                const Config& cfg = {});

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

/// Scopes: "desk", "alt6", "alt7", "saltman", "all".
VerifyReport verify_suite(const std::string& scope, const Config& cfg = {});

/// Re-checks the arithmetic identities of a finished report (a*k = h2,
/// b0 | a | h2); verify_suite uses it, and mutation tests corrupt rows
/// to prove failures are detected.
std::vector<std::string> validate_report(const AmbiguityReport& report);

/// Renderers. JSON follows the fixed schema; text is a human layout.
/// Timings are included only when with_timings is set, keeping default
/// reports byte-identical across runs.
std::string render_json(const AmbiguityReport& report, bool with_timings = false);
std::string render_text(const AmbiguityReport& report, bool with_timings = false);

}  // namespace ambix
