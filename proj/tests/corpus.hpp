#pragma once

// Small graph corpora shared by the test files.

#include <algorithm>
#include <random>
#include <vector>

#include "cqf/graph.hpp"

namespace corpus {

inline std::vector<int> natural_labeling(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  auto p = natural_labeling(n);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every labeled path with up to max_n vertices.
inline std::vector<cqf::LabeledGraph> all_paths_up_to(int max_n) {
  std::vector<cqf::LabeledGraph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& perm : all_permutations(n)) out.push_back(cqf::make_path(perm));
  return out;
}

inline std::vector<cqf::LabeledGraph> all_stars_up_to(int max_n) {
  std::vector<cqf::LabeledGraph> out;
  for (int n = 3; n <= max_n; ++n)
    for (int c = 1; c <= n; ++c) out.push_back(cqf::make_star(n, c));
  return out;
}

inline std::vector<cqf::LabeledGraph> random_trees(int count, int min_n, int max_n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(min_n, max_n);
  std::vector<cqf::LabeledGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(cqf::random_labeled_tree(pick(rng), rng));
  return out;
}

}  // namespace corpus
