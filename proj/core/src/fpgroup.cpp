#include "ambix/fpgroup.hpp"

#include <algorithm>
#include <cctype>

namespace ambix {

Word Word::reduced(Word w) {
  std::vector<std::pair<int, int>> out;
  for (auto& l : w.letters) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.emplace_back(it->first, -it->second);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return reduced(std::move(w));
}

Word Word::pow(int e) const {
  Word base = e < 0 ? inverse() : *this;
  int n = e < 0 ? -e : e;
  Word out;
  for (int i = 0; i < n; ++i) out = out * base;
  return out;
}

Permutation Word::eval(const std::vector<Permutation>& images, int degree) const {
  Permutation p(degree);
  for (auto& [g, e] : letters) {
    const Permutation& im = images.at(g);
    p = e > 0 ? p * im : p * im.inverse();
  }
  return p;
}

int Presentation::generator_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(generator_names.size()); ++i)
    if (generator_names[i] == name) return i;
  return -1;
}

namespace {

struct WordParser {
  const std::string& s;
  size_t i = 0;
  const Presentation& P;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, static_cast<long>(i)); }

  std::string ident() {
    ws();
    size_t start = i;
    if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      ++i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    }
    if (i == start) fail("expected identifier");
    return s.substr(start, i - start);
  }

  long integer() {
    ws();
    size_t start = i;
    if (i < s.size() && s[i] == '-') ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (s[start] == '-' && i == start + 1)) fail("expected integer exponent");
    return std::stol(s.substr(start, i - start));
  }

  Word factor() {
    ws();
    if (eat('(')) {
      Word w = word();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (eat('[')) {
      Word a = word();
      if (!eat(',')) fail("expected ',' in commutator");
      Word b = word();
      if (!eat(']')) fail("expected ']'");
      return a.inverse() * b.inverse() * a * b;
    }
    size_t at = i;
    std::string name = ident();
    int gi = P.generator_index(name);
    if (gi < 0) throw ParseError("undeclared symbol '" + name + "'", static_cast<long>(at));
    Word w;
    w.letters.emplace_back(gi, 1);
    return w;
  }

  Word term() {
    Word f = factor();
    ws();
    if (eat('^')) {
      long e = integer();
      if (e < -1000000 || e > 1000000) fail("exponent out of range");
      return f.pow(static_cast<int>(e));
    }
    return f;
  }

  Word word() {
    Word w = term();
    while (true) {
      ws();
      if (eat('*'))
        w = w * term();
      else
        break;
    }
    return w;
  }
};

}  // namespace

Word parse_word(const std::string& text, const Presentation& P) {
  WordParser wp{text, 0, P};
  Word w = wp.word();
  wp.ws();
  if (wp.i != text.size()) throw ParseError("trailing input after word", static_cast<long>(wp.i));
  return w;
}

Presentation parse_presentation(const std::string& text) {
  Presentation P;
  size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  ws();
  if (i >= text.size() || text[i] != '<') throw ParseError("presentation must start with '<'", static_cast<long>(i));
  ++i;
  // generator names
  while (true) {
    ws();
    size_t start = i;
    if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      ++i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    }
    if (i == start) throw ParseError("expected generator name", static_cast<long>(i));
    std::string name = text.substr(start, i - start);
    if (P.generator_index(name) >= 0) throw ParseError("duplicate generator '" + name + "'", static_cast<long>(start));
    P.generator_names.push_back(name);
    ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  ws();
  if (i < text.size() && text[i] == '|') {
    ++i;
    ws();
    if (i < text.size() && text[i] != '>') {
      while (true) {
        WordParser wp{text, i, P};
        P.relators.push_back(Word::reduced(wp.word()));
        i = wp.i;
        ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
    }
  }
  ws();
  if (i >= text.size() || text[i] != '>') throw ParseError("presentation must end with '>'", static_cast<long>(i));
  ++i;
  ws();
  if (i != text.size()) throw ParseError("trailing input after presentation", static_cast<long>(i));
  return P;
}

std::string print_word(const Word& w, const Presentation& P) {
  if (w.letters.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    int run = 0;
    while (j < w.letters.size() && w.letters[j].first == w.letters[i].first &&
           w.letters[j].second == w.letters[i].second) {
      run += w.letters[j].second;
      ++j;
    }
    if (!out.empty()) out += '*';
    out += P.generator_names[w.letters[i].first];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string print_presentation(const Presentation& P) {
  std::string out = "< ";
  for (size_t i = 0; i < P.generator_names.size(); ++i) {
    if (i) out += ", ";
    out += P.generator_names[i];
  }
  out += " | ";
  for (size_t i = 0; i < P.relators.size(); ++i) {
    if (i) out += ", ";
    out += print_word(P.relators[i], P);
  }
  out += " >";
  return out;
}

// ---------------------------------------------------------------------------
// HLT Todd-Coxeter
// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
  int ngens;
  int ncols;
  long long max_rows;
  std::vector<std::vector<int>> tab;  // [coset][col], -1 undefined
  std::vector<int> fwd;               // union-find forwarding

  explicit Enumerator(int g, long long maxr) : ngens(g), ncols(2 * g), max_rows(maxr) {
    new_coset();
  }

  static int col(int gen, int exp) { return 2 * gen + (exp < 0 ? 1 : 0); }
  static int inv_col(int c) { return c ^ 1; }

  int find(int a) {
    while (fwd[a] != a) a = fwd[a] = fwd[fwd[a]];
    return a;
  }
  bool alive(int a) { return fwd[a] == a; }

  int new_coset() {
    if (static_cast<long long>(tab.size()) >= max_rows)
      throw LimitExceeded("coset limit exceeded (enumeration may not have terminated)");
    tab.emplace_back(ncols, -1);
    fwd.push_back(static_cast<int>(fwd.size()));
    return static_cast<int>(tab.size()) - 1;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    fwd[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int c = 0; c < ncols; ++c) {
        int x = tab[u][c];
        if (x < 0) continue;
        tab[u][c] = -1;
        if (tab[x][inv_col(c)] == u) tab[x][inv_col(c)] = -1;
        int mu = find(u), nu = find(x);
        if (tab[mu][c] >= 0)
          merge(nu, tab[mu][c], queue);
        else if (tab[nu][inv_col(c)] >= 0)
          merge(mu, tab[nu][inv_col(c)], queue);
        else {
          tab[mu][c] = nu;
          tab[nu][inv_col(c)] = mu;
        }
      }
    }
  }

  // scan word w from coset a, defining new cosets to fill gaps (HLT)
  void scan_and_fill(int a, const Word& w) {
    if (w.letters.empty()) return;
    int n = w.length();
    while (true) {
      a = find(a);
      int f = a, i = 0;
      while (i < n) {
        int c = col(w.letters[i].first, w.letters[i].second);
        if (tab[f][c] < 0) break;
        f = tab[f][c];
        ++i;
      }
      if (i == n) {
        if (f != a) coincidence(f, a);
        return;
      }
      int b = a, j = n - 1;
      while (j >= i) {
        int c = inv_col(col(w.letters[j].first, w.letters[j].second));
        if (tab[b][c] < 0) break;
        b = tab[b][c];
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      int c = col(w.letters[i].first, w.letters[i].second);
      if (j == i) {
        tab[f][c] = b;
        tab[b][inv_col(c)] = f;
        return;
      }
      int n2 = new_coset();
      tab[f][c] = n2;
      tab[n2][inv_col(c)] = f;
      // loop continues: the forward scan resumes past the new coset
    }
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& P, const std::vector<Word>& subgroup_words,
                        long long max_cosets) {
  if (max_cosets < 1) throw Error("todd_coxeter: max_cosets must be >= 1");
  int g = static_cast<int>(P.generator_names.size());
  Enumerator E(g, max_cosets);

  std::vector<Word> rels;
  for (auto& r : P.relators) {
    Word rr = Word::reduced(r);
    if (!rr.empty()) rels.push_back(std::move(rr));
  }

  for (auto& w : subgroup_words) E.scan_and_fill(0, Word::reduced(w));

  for (int a = 0; a < static_cast<int>(E.tab.size()); ++a) {
    if (!E.alive(a)) continue;
    for (auto& r : rels) {
      E.scan_and_fill(a, r);
      if (!E.alive(a)) break;
    }
    if (!E.alive(a)) continue;
    for (int c = 0; c < E.ncols; ++c)
      if (E.tab[a][c] < 0) {
        int n2 = E.new_coset();
        E.tab[a][c] = n2;
        E.tab[n2][Enumerator::inv_col(c)] = a;
      }
  }

  // BFS-standardize the live cosets from the subgroup coset
  int root = E.find(0);
  std::vector<int> order{root};
  std::vector<int> newid(E.tab.size(), -1);
  newid[root] = 0;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int u = order[qi];
    for (int c = 0; c < E.ncols; ++c) {
      int v = E.tab[u][c];
      if (v < 0) throw Error("todd_coxeter internal: open entry after closure");
      if (newid[v] < 0) {
        newid[v] = static_cast<int>(order.size());
        order.push_back(v);
      }
    }
  }

  CosetTable T;
  T.ngens = g;
  T.table.assign(order.size(), std::vector<int>(E.ncols, -1));
  for (size_t u = 0; u < order.size(); ++u)
    for (int c = 0; c < E.ncols; ++c) T.table[u][c] = newid[E.tab[order[u]][c]];
  return T;
}

std::pair<PermGroup, std::vector<Permutation>> perm_rep(const CosetTable& T) {
  int n = T.coset_count();
  std::vector<Permutation> images;
  for (int g = 0; g < T.ngens; ++g) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
      img[i] = T.table[i][2 * g];
      if (img[i] < 0) throw ValidationError("perm_rep: coset table is not closed");
    }
    images.push_back(Permutation(std::move(img)));
  }
  PermGroup G = PermGroup::from_generators(images, n);
  return {std::move(G), std::move(images)};
}

}  // namespace ambix
