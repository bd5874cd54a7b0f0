#include "ambix/perm.hpp"

#include <algorithm>
#include <numeric>

namespace ambix {

Permutation::Permutation(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[x]) throw Error("image table is not a bijection");
    seen[x] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error("degree mismatch in permutation product");
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = rhs.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  // g^-1 * this * g, computed without forming the inverse
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[g.img_[i]] = g.img_[this->img_[i]];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

long long Permutation::order() const {
  long long o = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
      ++len;
    }
    o = std::lcm(o, static_cast<long long>(len));
  }
  return o;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> lens;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
      ++len;
    }
    if (len >= 2) lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

bool Permutation::is_even() const {
  int s = 0;
  for (int len : cycle_lengths()) s += len - 1;
  return s % 2 == 0;
}

int Permutation::first_moved() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return -1;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

namespace {

std::vector<std::vector<int>> parse_cycle_lists(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", static_cast<long>(i));
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) throw ParseError("expected point number in cycle", static_cast<long>(i));
      long v = std::stol(text.substr(start, i - start));
      if (v < 1) throw ParseError("points are 1-based", static_cast<long>(start));
      cyc.push_back(static_cast<int>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", static_cast<long>(i));
    ++i;  // ')'
    if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Permutation parse_cycles(const std::string& text, int degree) {
  auto cycles = parse_cycle_lists(text);
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  for (auto& cyc : cycles) {
    for (size_t j = 0; j < cyc.size(); ++j) {
      int a = cyc[j], b = cyc[(j + 1) % cyc.size()];
      if (a >= degree || b >= degree) throw ParseError("point exceeds degree " + std::to_string(degree));
      if (used[a]) throw ParseError("point " + std::to_string(a + 1) + " repeated");
      used[a] = 1;
      img[a] = b;
    }
  }
  return Permutation(std::move(img));
}

Permutation parse_cycles(const std::string& text) {
  auto cycles = parse_cycle_lists(text);
  int degree = 0;
  for (auto& cyc : cycles)
    for (int p : cyc) degree = std::max(degree, p + 1);
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  for (auto& cyc : cycles) {
    for (size_t j = 0; j < cyc.size(); ++j) {
      int a = cyc[j], b = cyc[(j + 1) % cyc.size()];
      if (used[a]) throw ParseError("point " + std::to_string(a + 1) + " repeated");
      used[a] = 1;
      img[a] = b;
    }
  }
  return Permutation(std::move(img));
}

}  // namespace ambix
