#pragma once

#include <string>
#include <vector>

#include "ambix/perm_group.hpp"

namespace ambix {

/// Freely reducible word in abstract generators: (generator index, +-1).
struct Word {
  std::vector<std::pair<int, int>> letters;

  static Word reduced(Word w);
  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(int e) const;
  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const Word&) const = default;

  /// Evaluates under an assignment of the generators.
  Permutation eval(const std::vector<Permutation>& images, int degree) const;
};

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  int generator_index(const std::string& name) const;  // -1 if absent
};

/// Grammar: < g1, g2, ... | w1, w2, ... > with '*', '^' (integer
/// exponents), parentheses and commutator brackets [a,b] = a^-1 b^-1 a b.
Presentation parse_presentation(const std::string& text);
std::string print_presentation(const Presentation& P);

/// Parses a single word over the presentation's generators.
Word parse_word(const std::string& text, const Presentation& P);
std::string print_word(const Word& w, const Presentation& P);

/// Closed coset table: row 0 is the subgroup coset; entry [c][2g] is c*g,
/// entry [c][2g+1] is c*g^-1; all entries defined; BFS-standardized.
struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> table;
  int coset_count() const { return static_cast<int>(table.size()); }
};

/// HLT coset enumeration with immediate coincidence processing.
/// Throws LimitExceeded when more than max_cosets rows get allocated
/// (the enumeration may simply not have terminated yet).
CosetTable todd_coxeter(const Presentation& P, const std::vector<Word>& subgroup_words,
                        long long max_cosets = 2000000);

/// The permutation action of the presented group on the cosets; the i-th
/// returned image is the action of generator i. The group equals the
/// presented group exactly when the enumerated subgroup has trivial core
/// (always for the trivial subgroup).
std::pair<PermGroup, std::vector<Permutation>> perm_rep(const CosetTable& T);

}  // namespace ambix
