#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cqf/composition.hpp"
#include "cqf/graph.hpp"
#include "cqf/qsym.hpp"

namespace cqf {

// Proper coloring, stored by vertex: colors_by_vertex[v-1] is the color of v.
using Coloring = std::vector<int>;

// Edges {i,j} with i < j and color(i) < color(j).
inline int ascent_number(const LabeledGraph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.n) throw std::invalid_argument("ascent_number: size mismatch");
  int asc = 0;
  for (auto [i, j] : g.edges)
    if (c[static_cast<std::size_t>(i) - 1] < c[static_cast<std::size_t>(j) - 1]) ++asc;
  return asc;
}

inline int descent_number(const LabeledGraph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.n) throw std::invalid_argument("descent_number: size mismatch");
  int des = 0;
  for (auto [i, j] : g.edges)
    if (c[static_cast<std::size_t>(i) - 1] > c[static_cast<std::size_t>(j) - 1]) ++des;
  return des;
}

namespace detail {

// Vertices are visited in path-position order when the graph is a path
// (positions then line up with ribbon cells) and in breadth-first order from
// vertex 1 otherwise; components beyond the first start at their smallest
// vertex.  Every visited vertex after the first in a component has at least
// one already-visited neighbor, which is what makes properness pruning bite.
inline std::vector<int> enumeration_order(const LabeledGraph& g) {
  if (g.is_path()) return g.path_positions;
  auto adj = adjacency_lists(g);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.n));
  std::vector<char> vis(static_cast<std::size_t>(g.n) + 1, 0);
  for (int start = 1; start <= g.n; ++start) {
    if (vis[static_cast<std::size_t>(start)]) continue;
    std::size_t head = order.size();
    vis[static_cast<std::size_t>(start)] = 1;
    order.push_back(start);
    while (head < order.size()) {
      int u = order[head++];
      for (int v : adj[static_cast<std::size_t>(u)])
        if (!vis[static_cast<std::size_t>(v)]) {
          vis[static_cast<std::size_t>(v)] = 1;
          order.push_back(v);
        }
    }
  }
  return order;
}

// For the vertex at order slot t: earlier slots holding its neighbors, plus
// whether the current vertex carries the smaller label on that edge.
struct BackEdge {
  int slot;
  bool current_is_smaller;
};

inline std::vector<std::vector<BackEdge>> back_edges(const LabeledGraph& g,
                                                     const std::vector<int>& order) {
  std::vector<int> slot_of(static_cast<std::size_t>(g.n) + 1, -1);
  for (int t = 0; t < g.n; ++t) slot_of[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = t;
  std::vector<std::vector<BackEdge>> back(static_cast<std::size_t>(g.n));
  for (auto [i, j] : g.edges) {
    int si = slot_of[static_cast<std::size_t>(i)];
    int sj = slot_of[static_cast<std::size_t>(j)];
    if (si < sj)
      back[static_cast<std::size_t>(sj)].push_back({si, /*current_is_smaller=*/false});
    else
      back[static_cast<std::size_t>(si)].push_back({sj, /*current_is_smaller=*/true});
  }
  return back;
}

inline void require_engine_scale(const LabeledGraph& g) {
  // Per-palette counts live in 64-bit accumulators; n! caps the count of
  // colorings with any one palette, and 20! still fits.
  if (g.n > 20) throw std::invalid_argument("engine: n > 20 exceeds exact counter range");
}

}  // namespace detail

// Streams every proper coloring that uses color i exactly palette[i-1] times,
// colors drawn from {1..len(palette)}, in a fixed deterministic order.
// The sink receives a by-vertex Coloring it must not hold on to.
template <class Sink>
inline void for_each_coloring_with_palette(const LabeledGraph& g, const Palette& palette,
                                           Sink&& sink) {
  require_composition(palette);
  if (composition_sum(palette) != g.n)
    throw std::invalid_argument("colorings_with_palette: palette does not sum to n");
  detail::require_engine_scale(g);
  const int ncolors = static_cast<int>(palette.size());
  const auto order = detail::enumeration_order(g);
  const auto back = detail::back_edges(g, order);
  std::vector<int> remaining(palette.begin(), palette.end());
  std::vector<int> color_at_slot(static_cast<std::size_t>(g.n), 0);
  Coloring by_vertex(static_cast<std::size_t>(g.n), 0);

  auto rec = [&](auto&& self, int t) -> void {
    if (t == g.n) {
      sink(const_cast<const Coloring&>(by_vertex));
      return;
    }
    const auto& be = back[static_cast<std::size_t>(t)];
    for (int col = 1; col <= ncolors; ++col) {
      if (remaining[static_cast<std::size_t>(col) - 1] == 0) continue;
      bool clash = false;
      for (const auto& e : be)
        if (color_at_slot[static_cast<std::size_t>(e.slot)] == col) {
          clash = true;
          break;
        }
      if (clash) continue;
      --remaining[static_cast<std::size_t>(col) - 1];
      color_at_slot[static_cast<std::size_t>(t)] = col;
      by_vertex[static_cast<std::size_t>(order[static_cast<std::size_t>(t)]) - 1] = col;
      self(self, t + 1);
      by_vertex[static_cast<std::size_t>(order[static_cast<std::size_t>(t)]) - 1] = 0;
      color_at_slot[static_cast<std::size_t>(t)] = 0;
      ++remaining[static_cast<std::size_t>(col) - 1];
    }
  };
  rec(rec, 0);
}

inline std::vector<Coloring> colorings_with_palette(const LabeledGraph& g, const Palette& palette) {
  std::vector<Coloring> out;
  for_each_coloring_with_palette(g, palette, [&](const Coloring& c) { out.push_back(c); });
  return out;
}

namespace detail {

// Ascent histogram of all proper colorings with one palette; the heart of the
// fast route.  Backtracks over vertices in enumeration order, pruning on
// exhausted color counts and on properness against earlier neighbors, and
// accumulates the ascent count incrementally as edges close.
inline std::vector<std::uint64_t> palette_histogram(const LabeledGraph& g,
                                                    const std::vector<int>& order,
                                                    const std::vector<std::vector<BackEdge>>& back,
                                                    const Palette& palette) {
  const int n = g.n;
  const int m = static_cast<int>(g.edges.size());
  const int ncolors = static_cast<int>(palette.size());
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> remaining(palette.begin(), palette.end());
  std::vector<int> color_at_slot(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto&& self, int t, int asc) -> void {
    if (t == n) {
      ++hist[static_cast<std::size_t>(asc)];
      return;
    }
    const auto& be = back[static_cast<std::size_t>(t)];
    for (int col = 1; col <= ncolors; ++col) {
      if (remaining[static_cast<std::size_t>(col) - 1] == 0) continue;
      int gained = 0;
      bool clash = false;
      for (const auto& e : be) {
        const int other = color_at_slot[static_cast<std::size_t>(e.slot)];
        if (other == col) {
          clash = true;
          break;
        }
        // Edge closes now; it is an ascent iff the smaller label has the
        // smaller color.
        if (e.current_is_smaller ? (col < other) : (other < col)) ++gained;
      }
      if (clash) continue;
      --remaining[static_cast<std::size_t>(col) - 1];
      color_at_slot[static_cast<std::size_t>(t)] = col;
      self(self, t + 1, asc + gained);
      color_at_slot[static_cast<std::size_t>(t)] = 0;
      ++remaining[static_cast<std::size_t>(col) - 1];
    }
  };
  rec(rec, 0, 0);
  return hist;
}

inline QPolynomial histogram_to_poly(const std::vector<std::uint64_t>& hist) {
  std::vector<Int> c(hist.size());
  for (std::size_t i = 0; i < hist.size(); ++i) c[i] = hist[i];
  return QPolynomial(std::move(c));
}

}  // namespace detail

// Number of workers requested through the environment; 1 when unset or bad.
inline int default_worker_count() {
  const char* env = std::getenv("CQF_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

// Fast route: per-palette pruned backtracking.  Each palette is an
// independent work unit; with workers > 1 the palettes are distributed across
// threads and merged in palette order, so the result is identical to the
// sequential one.
inline QSymExpansion cqf_fast(const LabeledGraph& g, int workers = 1) {
  detail::require_engine_scale(g);
  if (workers < 1) throw std::invalid_argument("cqf_fast: workers must be >= 1");
  const auto order = detail::enumeration_order(g);
  const auto back = detail::back_edges(g, order);
  const auto palettes = compositions_of(g.n);
  std::vector<QPolynomial> per_palette(palettes.size());

  auto run_chunk = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      per_palette[i] = detail::histogram_to_poly(detail::palette_histogram(g, order, back, palettes[i]));
  };

  const std::size_t count = palettes.size();
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  if (nthreads <= 1) {
    run_chunk(0, count);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (count + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      std::size_t b = t * chunk;
      std::size_t e = std::min(count, b + chunk);
      if (b >= e) break;
      pool.emplace_back(run_chunk, b, e);
    }
    for (auto& th : pool) th.join();
  }

  QSymExpansion out(g.n);
  for (std::size_t i = 0; i < palettes.size(); ++i) out.set_coeff(palettes[i], per_palette[i]);
  out.set_edge_count(static_cast<int>(g.edges.size()));
  return out;
}

// Oracle route: for every palette, walk all distinct assignments of the color
// word to vertices 1..n via lexicographic permutation stepping, keep the
// proper ones, and tally ascents from scratch.  No pruning, no sharing with
// the fast route beyond the graph type itself.
inline QSymExpansion cqf_oracle(const LabeledGraph& g) {
  detail::require_engine_scale(g);
  QSymExpansion out(g.n);
  const int m = static_cast<int>(g.edges.size());
  for (const auto& palette : compositions_of(g.n)) {
    Coloring word;
    word.reserve(static_cast<std::size_t>(g.n));
    for (std::size_t col = 0; col < palette.size(); ++col)
      word.insert(word.end(), static_cast<std::size_t>(palette[col]), static_cast<int>(col) + 1);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(m) + 1, 0);
    do {
      bool proper = true;
      for (auto [i, j] : g.edges)
        if (word[static_cast<std::size_t>(i) - 1] == word[static_cast<std::size_t>(j) - 1]) {
          proper = false;
          break;
        }
      if (proper) ++hist[static_cast<std::size_t>(ascent_number(g, word))];
    } while (std::next_permutation(word.begin(), word.end()));
    out.set_coeff(palette, detail::histogram_to_poly(hist));
  }
  out.set_edge_count(m);
  return out;
}

// Coefficient polynomial of a single palette without computing the whole
// expansion.
inline QPolynomial palette_coefficient(const LabeledGraph& g, const Palette& palette) {
  require_composition(palette);
  if (composition_sum(palette) != g.n)
    throw std::invalid_argument("palette_coefficient: palette does not sum to n");
  detail::require_engine_scale(g);
  const auto order = detail::enumeration_order(g);
  const auto back = detail::back_edges(g, order);
  return detail::histogram_to_poly(detail::palette_histogram(g, order, back, palette));
}

// The expansion used everywhere else.
inline QSymExpansion cqf(const LabeledGraph& g, int workers = 1) { return cqf_fast(g, workers); }

// Descent generating function; ascents of the label-flipped graph are
// descents of the original, so this is just the flipped expansion.
inline QSymExpansion cqf_descent(const LabeledGraph& g, int workers = 1) {
  return cqf(flip(g), workers);
}

}  // namespace cqf
