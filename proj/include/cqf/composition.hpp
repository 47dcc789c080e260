#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqf {

// A composition of n: ordered list of positive parts summing to n.
// Canonical ordering of compositions everywhere in this library is
// lexicographic by parts, which is what std::vector's operator< gives us.
using Composition = std::vector<int>;

// Palettes are compositions read as color multiplicities: part i is the
// number of times color i is used.
using Palette = Composition;

inline bool is_valid_composition(const Composition& alpha) {
  if (alpha.empty()) return false;
  for (int p : alpha)
    if (p < 1) return false;
  return true;
}

inline int composition_sum(const Composition& alpha) {
  int s = 0;
  for (int p : alpha) s += p;
  return s;
}

inline void require_composition(const Composition& alpha) {
  if (!is_valid_composition(alpha))
    throw std::invalid_argument("composition must have positive parts and be nonempty");
}

// All 2^(n-1) compositions of n in lexicographic order.
inline std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("compositions_of: n must be >= 1");
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

inline Composition reversed_composition(const Composition& alpha) {
  return Composition(alpha.rbegin(), alpha.rend());
}

// Key identifying the rearrangement class of a composition: its parts sorted.
inline std::vector<int> partition_key(const Composition& alpha) {
  std::vector<int> key(alpha);
  std::sort(key.begin(), key.end());
  return key;
}

inline std::string composition_to_string(const Composition& alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(alpha[i]);
  }
  s += ")";
  return s;
}

// Parses "1,2,1" or "(1,2,1)".
inline Composition composition_from_string(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("bad composition: " + text);
  const std::string body = text.substr(1, text.size() - 2);
  Composition alpha;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(',', pos);
    if (next == std::string::npos) next = body.size();
    std::string tok = body.substr(pos, next - pos);
    if (tok.empty()) throw std::invalid_argument("bad composition: " + text);
    alpha.push_back(std::stoi(tok));
    pos = next + 1;
  }
  require_composition(alpha);
  return alpha;
}

}  // namespace cqf
