#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cqf/qpolynomial.hpp"

namespace cqf {

// Word over {a,d}; entry i records whether a path labeling rises or falls
// between positions i and i+1.
using ADPattern = std::string;

inline bool is_ad_word(const ADPattern& w) {
  for (char ch : w)
    if (ch != 'a' && ch != 'd') return false;
  return true;
}

// Graph on vertex set {1..n}; the vertex names themselves are the labels.
// Edges are kept sorted with i < j and no duplicates.  When the graph is
// built as a path, the order of labels along the path is retained so that
// path-specific operations (ad patterns, ribbon shapes) stay available.
struct LabeledGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> path_positions;  // empty unless built by make_path

  bool is_path() const { return !path_positions.empty(); }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
  friend bool operator!=(const LabeledGraph& a, const LabeledGraph& b) { return !(a == b); }
};

inline void normalize_edges(LabeledGraph& g) {
  for (auto& e : g.edges) {
    if (e.first == e.second) throw std::invalid_argument("graph: self-loop");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > g.n) throw std::invalid_argument("graph: edge endpoint out of range");
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

inline LabeledGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph: n must be >= 1");
  LabeledGraph g;
  g.n = n;
  g.edges = std::move(edges);
  normalize_edges(g);
  return g;
}

// Path whose positions 1..n carry the given labels; n = 1 and n = 2 are fine.
inline LabeledGraph make_path(const std::vector<int>& labeling) {
  const int n = static_cast<int>(labeling.size());
  if (n < 1) throw std::invalid_argument("make_path: empty labeling");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : labeling) {
    if (v < 1 || v > n) throw std::invalid_argument("make_path: label out of range");
    if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("make_path: repeated label");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  LabeledGraph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(labeling[i], labeling[i + 1]);
  normalize_edges(g);
  g.path_positions = labeling;
  return g;
}

// Star K_{1,n-1} with the center carrying a chosen label.  n >= 3 so the
// center is the unique vertex of degree > 1.
inline LabeledGraph make_star(int n, int center) {
  if (n < 3) throw std::invalid_argument("make_star: n must be >= 3");
  if (center < 1 || center > n) throw std::invalid_argument("make_star: center out of range");
  LabeledGraph g;
  g.n = n;
  for (int v = 1; v <= n; ++v)
    if (v != center) g.edges.emplace_back(center, v);
  normalize_edges(g);
  return g;
}

// Relabel every vertex i as n+1-i.  Ascents of the original are descents of
// the image and vice versa.
inline LabeledGraph flip(const LabeledGraph& g) {
  LabeledGraph h;
  h.n = g.n;
  for (auto [i, j] : g.edges) h.edges.emplace_back(g.n + 1 - j, g.n + 1 - i);
  normalize_edges(h);
  if (g.is_path()) {
    h.path_positions.reserve(g.path_positions.size());
    for (int v : g.path_positions) h.path_positions.push_back(g.n + 1 - v);
  }
  return h;
}

inline ADPattern ad_pattern_of(const std::vector<int>& labeling) {
  ADPattern w;
  for (std::size_t i = 0; i + 1 < labeling.size(); ++i)
    w += labeling[i] < labeling[i + 1] ? 'a' : 'd';
  return w;
}

inline ADPattern ad_pattern(const LabeledGraph& g) {
  if (!g.is_path()) throw std::invalid_argument("ad_pattern: graph was not built as a path");
  return ad_pattern_of(g.path_positions);
}

inline std::vector<std::vector<int>> adjacency_lists(const LabeledGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n) + 1);
  for (auto [i, j] : g.edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());
  return adj;
}

inline bool is_connected(const LabeledGraph& g) {
  if (g.n <= 1) return true;
  auto adj = adjacency_lists(g);
  std::vector<char> vis(static_cast<std::size_t>(g.n) + 1, 0);
  std::queue<int> q;
  q.push(1);
  vis[1] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (!vis[static_cast<std::size_t>(v)]) {
        vis[static_cast<std::size_t>(v)] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == g.n;
}

struct Bipartition {
  std::vector<int> side_a;  // the side containing vertex 1
  std::vector<int> side_b;
};

// Two-colors a connected graph.  Returns nullopt when the graph contains an
// odd cycle; rejects disconnected input since the sides would not be
// determined by the graph.
inline std::optional<Bipartition> bipartition(const LabeledGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("bipartition: graph is disconnected");
  auto adj = adjacency_lists(g);
  std::vector<int> side(static_cast<std::size_t>(g.n) + 1, -1);
  std::queue<int> q;
  q.push(1);
  side[1] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (side[static_cast<std::size_t>(v)] == -1) {
        side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
        q.push(v);
      } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (int v = 1; v <= g.n; ++v)
    (side[static_cast<std::size_t>(v)] == 0 ? parts.side_a : parts.side_b).push_back(v);
  return parts;
}

// Number of proper colorings with colors from {1..k}, by deletion-contraction.
// Deliberately independent of the coloring-enumeration engine so the two can
// check each other.
inline Int chromatic_polynomial_value(const LabeledGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("chromatic_polynomial_value: negative k");
  // Work on a vertex-merged copy; vertices are representative ids.
  struct Rec {
    static Int count(int nverts, std::vector<std::pair<int, int>> edges, const Int& k) {
      if (edges.empty()) {
        Int r = 1;
        for (int i = 0; i < nverts; ++i) r *= k;
        return r;
      }
      auto [x, y] = edges.back();
      edges.pop_back();
      // Deleted copy.
      Int del = count(nverts, edges, k);
      // Contracted copy: merge y into x, drop loops, dedupe.
      std::vector<std::pair<int, int>> contracted;
      contracted.reserve(edges.size());
      for (auto [u, v] : edges) {
        if (u == y) u = x;
        if (v == y) v = x;
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        contracted.emplace_back(u, v);
      }
      std::sort(contracted.begin(), contracted.end());
      contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());
      Int con = count(nverts - 1, std::move(contracted), k);
      return del - con;
    }
  };
  return Rec::count(g.n, g.edges, Int(k));
}

// Uniform random labeled tree on n vertices via a random Prufer sequence.
inline LabeledGraph random_labeled_tree(int n, std::mt19937& rng) {
  if (n < 1) throw std::invalid_argument("random_labeled_tree: n must be >= 1");
  LabeledGraph g;
  g.n = n;
  if (n == 1) return g;
  if (n == 2) {
    g.edges.emplace_back(1, 2);
    return g;
  }
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> prufer(static_cast<std::size_t>(n) - 2);
  for (int& x : prufer) x = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int x : prufer) ++degree[static_cast<std::size_t>(x)];
  // Repeatedly join the smallest leaf to the next sequence entry.
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int x : prufer) {
    int leaf = 0;
    for (int v = 1; v <= n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
        leaf = v;
        break;
      }
    g.edges.emplace_back(leaf, x);
    used[static_cast<std::size_t>(leaf)] = 1;
    --degree[static_cast<std::size_t>(x)];
  }
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1) rest.push_back(v);
  g.edges.emplace_back(rest[0], rest[1]);
  normalize_edges(g);
  return g;
}

// Text format accepted by the command-line tool:
//   "n=<int>" on the first line followed by one "<i> <j>" edge per line, or
//   "path: 3 4 1 2", or
//   "star: n=<int> center=<int>".
inline LabeledGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  while (std::getline(in, first)) {
    // Skip blank leading lines.
    if (first.find_first_not_of(" \t\r") != std::string::npos) break;
    first.clear();
  }
  if (first.empty()) throw std::invalid_argument("graph text: empty input");

  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
  };
  first = trim(first);

  if (first.rfind("path:", 0) == 0) {
    std::istringstream rest(first.substr(5));
    std::vector<int> labeling;
    int v;
    while (rest >> v) labeling.push_back(v);
    if (labeling.empty()) throw std::invalid_argument("graph text: path needs labels");
    return make_path(labeling);
  }
  if (first.rfind("star:", 0) == 0) {
    std::istringstream rest(first.substr(5));
    int n = -1, center = -1;
    std::string tok;
    while (rest >> tok) {
      if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
      else if (tok.rfind("center=", 0) == 0) center = std::stoi(tok.substr(7));
      else throw std::invalid_argument("graph text: bad star token '" + tok + "'");
    }
    if (n < 0 || center < 0) throw std::invalid_argument("graph text: star needs n= and center=");
    return make_star(n, center);
  }
  if (first.rfind("n=", 0) == 0) {
    // Edge endpoints may follow on the same line or on subsequent lines.
    std::istringstream all(first.substr(2) + " " + std::string(std::istreambuf_iterator<char>(in), {}));
    int n = 0;
    if (!(all >> n)) throw std::invalid_argument("graph text: bad n= header");
    std::vector<int> ends;
    int v = 0;
    while (all >> v) ends.push_back(v);
    std::string junk;
    all.clear();
    if (all >> junk) throw std::invalid_argument("graph text: bad edge token '" + junk + "'");
    if (ends.size() % 2 != 0) throw std::invalid_argument("graph text: dangling edge endpoint");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t t = 0; t + 1 < ends.size(); t += 2) edges.emplace_back(ends[t], ends[t + 1]);
    return make_graph(n, std::move(edges));
  }
  throw std::invalid_argument("graph text: unrecognized header '" + first + "'");
}

inline std::string graph_to_text(const LabeledGraph& g) {
  if (g.is_path()) {
    std::string s = "path:";
    for (int v : g.path_positions) s += " " + std::to_string(v);
    return s;
  }
  std::string s = "n=" + std::to_string(g.n) + "\n";
  for (auto [i, j] : g.edges) s += std::to_string(i) + " " + std::to_string(j) + "\n";
  return s;
}

}  // namespace cqf
