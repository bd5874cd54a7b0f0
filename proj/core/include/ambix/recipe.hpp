#pragma once

#include <string>
#include <vector>

#include "ambix/cover.hpp"
#include "ambix/fpgroup.hpp"

namespace ambix {

/// A cover recipe as shipped in the data files. Recipes are never
/// trusted: every load runs the full validation pipeline.
struct CoverRecipe {
  std::string name;
  std::string presentation;              // DSL text
  std::vector<std::string> central;      // words generating the kernel
  unsigned long long expected_order = 0;
  std::string quotient;                  // GroupSpec of the base group
  std::vector<std::string> quotient_images;  // cycle notation per generator
  std::vector<std::string> subgroup;     // optional: coset-basis words for
                                         // the enumeration (smaller faithful
                                         // degree); empty = trivial subgroup
};

/// Parses the key: value format; '#' starts a comment.
CoverRecipe parse_recipe(const std::string& text);
std::string print_recipe(const CoverRecipe& r);

/// Enumerates the presented group, then machine-checks: expected order,
/// centrality of the kernel words, well-definedness and surjectivity of
/// the quotient map, and that its kernel is exactly the span of the
/// central words. Throws ValidationError naming the failed check.
CentralCover validate_cover_recipe(const CoverRecipe& r, long long max_cosets = 2000000);

/// Directory with the shipped recipes: $AMBIX_RECIPE_DIR when set, else
/// the build-time default.
std::string recipe_dir();
CoverRecipe load_recipe_file(const std::string& path);
/// Loads "<name>.recipe" from recipe_dir().
CoverRecipe load_recipe(const std::string& name);
std::vector<std::string> list_recipes();

}  // namespace ambix
