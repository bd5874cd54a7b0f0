#include "ambix/recipe.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ambix/catalog.hpp"

#ifndef AMBIX_DEFAULT_RECIPE_DIR
#define AMBIX_DEFAULT_RECIPE_DIR ""
#endif

namespace ambix {

namespace {

// split on commas that sit outside any bracket pair
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '<') ++depth;
    if (c == ')' || c == ']' || c == '>') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& p : out) {
    while (!p.empty() && std::isspace(static_cast<unsigned char>(p.front()))) p.erase(p.begin());
    while (!p.empty() && std::isspace(static_cast<unsigned char>(p.back()))) p.pop_back();
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](auto& x) { return x.empty(); }), out.end());
  return out;
}

}  // namespace

CoverRecipe parse_recipe(const std::string& text) {
  CoverRecipe r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string val = line.substr(colon + 1);
    auto trim = [](std::string& s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    };
    trim(key);
    trim(val);
    if (key == "name")
      r.name = val;
    else if (key == "presentation")
      r.presentation = val;
    else if (key == "central")
      r.central = split_top_level(val);
    else if (key == "expected_order")
      r.expected_order = std::stoull(val);
    else if (key == "quotient")
      r.quotient = val;
    else if (key == "quotient_images")
      r.quotient_images = split_top_level(val);
    else if (key == "subgroup")
      r.subgroup = split_top_level(val);
    else if (!key.empty())
      throw ParseError("unknown recipe field '" + key + "'");
  }
  if (r.presentation.empty()) throw ParseError("recipe is missing a presentation");
  if (r.central.empty()) throw ParseError("recipe is missing central words");
  if (r.expected_order == 0) throw ParseError("recipe is missing expected_order");
  if (r.quotient.empty()) throw ParseError("recipe is missing the quotient spec");
  return r;
}

std::string print_recipe(const CoverRecipe& r) {
  std::ostringstream out;
  if (!r.name.empty()) out << "name: " << r.name << "\n";
  out << "presentation: " << r.presentation << "\n";
  out << "central: ";
  for (size_t i = 0; i < r.central.size(); ++i) out << (i ? ", " : "") << r.central[i];
  out << "\nexpected_order: " << r.expected_order << "\n";
  out << "quotient: " << r.quotient << "\n";
  out << "quotient_images: ";
  for (size_t i = 0; i < r.quotient_images.size(); ++i) out << (i ? ", " : "") << r.quotient_images[i];
  out << "\n";
  if (!r.subgroup.empty()) {
    out << "subgroup: ";
    for (size_t i = 0; i < r.subgroup.size(); ++i) out << (i ? ", " : "") << r.subgroup[i];
    out << "\n";
  }
  return out.str();
}

CentralCover validate_cover_recipe(const CoverRecipe& r, long long max_cosets) {
  Presentation P = parse_presentation(r.presentation);

  std::vector<Word> subgroup_words;
  for (auto& s : r.subgroup) subgroup_words.push_back(parse_word(s, P));
  CosetTable T = todd_coxeter(P, subgroup_words, max_cosets);
  auto [G, gen_images] = perm_rep(T);
  auto cover = std::make_shared<PermGroup>(std::move(G));

  if (cover->order() != r.expected_order)
    throw ValidationError("recipe '" + r.name + "': order mismatch (enumerated " +
                          std::to_string(cover->order()) + ", expected " +
                          std::to_string(r.expected_order) + ")");

  std::vector<Permutation> central;
  for (auto& zw : r.central)
    central.push_back(parse_word(zw, P).eval(gen_images, T.coset_count()));

  GroupPtr base = make_group(r.quotient);
  if (r.quotient_images.size() != P.generator_names.size())
    throw ValidationError("recipe '" + r.name + "': quotient_images must match the generators");
  std::vector<Permutation> images;
  for (auto& s : r.quotient_images) images.push_back(parse_cycles(s, base->degree()));

  try {
    return build_cover(cover, central, base, images, reference_h2(r.quotient));
  } catch (const ValidationError& e) {
    throw ValidationError("recipe '" + r.name + "': " + e.what());
  }
}

std::string recipe_dir() {
  if (const char* env = std::getenv("AMBIX_RECIPE_DIR"); env && *env) return env;
  return AMBIX_DEFAULT_RECIPE_DIR;
}

CoverRecipe load_recipe_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open recipe file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_recipe(buf.str());
}

CoverRecipe load_recipe(const std::string& name) {
  return load_recipe_file(recipe_dir() + "/" + name + ".recipe");
}

std::vector<std::string> list_recipes() {
  std::vector<std::string> names;
  std::error_code ec;
  for (auto& e : std::filesystem::directory_iterator(recipe_dir(), ec)) {
    if (e.path().extension() == ".recipe") names.push_back(e.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace ambix
