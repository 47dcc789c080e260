#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "corpus.hpp"
#include "cqf/engine.hpp"
#include "cqf/qsym.hpp"

using namespace cqf;

namespace {

Coloring flipped_coloring(const Coloring& c) {
  const int n = static_cast<int>(c.size());
  Coloring out(c.size());
  for (int v = 1; v <= n; ++v) out[static_cast<std::size_t>(v) - 1] = c[static_cast<std::size_t>(n - v)];
  return out;
}

}  // namespace

TEST_CASE("ascent and descent counting") {
  const auto p = make_path({3, 5, 1, 4, 2});
  // position colors 1,2,1,2,1 -> by vertex: c(3)=1, c(5)=2, c(1)=1, c(4)=2, c(2)=1
  const Coloring c{1, 1, 1, 2, 2};
  REQUIRE(ascent_number(p, c) == 4);
  REQUIRE(descent_number(p, c) == 0);

  const auto nat = make_path(corpus::natural_labeling(5));
  REQUIRE(ascent_number(nat, {1, 2, 3, 4, 5}) == 4);
  REQUIRE(ascent_number(nat, {5, 4, 3, 2, 1}) == 0);
  REQUIRE(descent_number(nat, {5, 4, 3, 2, 1}) == 4);
  REQUIRE(ascent_number(make_path({1, 2}), {2, 1}) == 0);
  REQUIRE(descent_number(make_path({1, 2}), {2, 1}) == 1);
}

TEST_CASE("ascents plus descents cover every edge of a proper coloring") {
  std::mt19937 rng(77);
  int proper_seen = 0;
  while (proper_seen < 200) {
    const auto t = random_labeled_tree(2 + static_cast<int>(rng() % 7), rng);
    Coloring c(static_cast<std::size_t>(t.n));
    for (auto& x : c) x = 1 + static_cast<int>(rng() % 4);
    bool proper = true;
    for (auto [i, j] : t.edges)
      if (c[static_cast<std::size_t>(i) - 1] == c[static_cast<std::size_t>(j) - 1]) proper = false;
    if (!proper) continue;
    ++proper_seen;
    REQUIRE(ascent_number(t, c) + descent_number(t, c) == static_cast<int>(t.edges.size()));
    // relabeling by flip turns ascents into descents once the coloring moves along
    REQUIRE(descent_number(t, c) == ascent_number(flip(t), flipped_coloring(c)));
  }
}

TEST_CASE("palette-constrained coloring streams") {
  // exactly the two 2-ascent colorings with palette (1,1,2)
  const auto p = make_path({2, 4, 3, 1});
  const auto found = colorings_with_palette(p, {1, 1, 2});
  std::set<Coloring> with_two_ascents;
  for (const auto& c : found)
    if (ascent_number(p, c) == 2) with_two_ascents.insert(c);
  REQUIRE(with_two_ascents == std::set<Coloring>{{3, 1, 2, 3}, {3, 2, 1, 3}});

  // palette counts are exact and colorings proper
  for (const auto& c : found) {
    std::map<int, int> counts;
    for (int x : c) ++counts[x];
    REQUIRE(counts == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}});
    for (auto [i, j] : p.edges)
      REQUIRE(c[static_cast<std::size_t>(i) - 1] != c[static_cast<std::size_t>(j) - 1]);
  }

  REQUIRE(colorings_with_palette(make_path({1, 2, 3}), {3}).empty());
  const auto star_colorings = colorings_with_palette(make_star(5, 3), {1, 4});
  REQUIRE(star_colorings.size() == 1);
  REQUIRE(star_colorings.front() == Coloring{2, 2, 1, 2, 2});

  // no duplicates
  const auto many = colorings_with_palette(make_path({1, 3, 2, 4}), {1, 1, 2});
  REQUIRE(std::set<Coloring>(many.begin(), many.end()).size() == many.size());
}

TEST_CASE("pinned expansions for two labeled 4-paths") {
  const auto q1 = cqf::cqf(make_path({3, 4, 1, 2}));
  REQUIRE(q1.coeff({1, 1, 1, 1}) == QPolynomial::from({5, 7, 7, 5}));
  REQUIRE(q1.coeff({1, 1, 2}) == QPolynomial::from({2, 1, 1, 2}));
  REQUIRE(q1.coeff({1, 2, 1}) == QPolynomial::from({1, 2, 2, 1}));
  REQUIRE(q1.coeff({2, 1, 1}) == QPolynomial::from({2, 1, 1, 2}));
  REQUIRE(q1.coeff({2, 2}) == QPolynomial::from({1, 0, 0, 1}));
  REQUIRE(q1.coeffs().size() == 5);

  const auto q2 = cqf::cqf(make_path({2, 4, 3, 1}));
  REQUIRE(q2.coeff({1, 1, 1, 1}) == QPolynomial::from({3, 9, 9, 3}));
  REQUIRE(q2.coeff({1, 1, 2}) == QPolynomial::from({1, 3, 2}));
  REQUIRE(q2.coeff({1, 2, 1}) == QPolynomial::from({1, 2, 2, 1}));
  REQUIRE(q2.coeff({2, 1, 1}) == QPolynomial::from({0, 2, 3, 1}));
  REQUIRE(q2.coeff({2, 2}) == QPolynomial::from({0, 1, 1}));
  REQUIRE(q2.coeffs().size() == 5);

  REQUIRE(cqf::cqf(make_path({1, 2})).coeff({1, 1}) == QPolynomial::from({1, 1}));
  REQUIRE(cqf::cqf(make_path({1, 2})).coeffs().size() == 1);
}

TEST_CASE("degenerate and disconnected inputs") {
  const auto one = cqf::cqf(make_path({1}));
  REQUIRE(one.coeff({1}) == QPolynomial::from({1}));
  REQUIRE(*one.edge_count() == 0);

  const auto iso = cqf::cqf(make_graph(2, {}));
  REQUIRE(iso.coeff({1, 1}) == QPolynomial::from({2}));
  REQUIRE(iso.coeff({2}) == QPolynomial::from({1}));
  for (int k = 0; k <= 5; ++k)
    REQUIRE(chromatic_from_expansion(iso, k) == chromatic_polynomial_value(make_graph(2, {}), k));

  REQUIRE_THROWS_AS(cqf::cqf(make_path(corpus::natural_labeling(21))), std::invalid_argument);
}

TEST_CASE("oracle and fast engine agree on the small corpus") {
  for (const auto& g : corpus::all_paths_up_to(5)) REQUIRE(cqf_oracle(g) == cqf_fast(g));
  for (const auto& g : corpus::all_stars_up_to(5)) REQUIRE(cqf_oracle(g) == cqf_fast(g));
  for (const auto& g : corpus::random_trees(30, 2, 6, 321)) REQUIRE(cqf_oracle(g) == cqf_fast(g));
  const auto tri = make_graph(3, {{1, 2}, {1, 3}, {2, 3}});
  REQUIRE(cqf_oracle(tri) == cqf_fast(tri));
}

TEST_CASE("worker count never changes the result") {
  for (const auto& g : {make_path({2, 4, 3, 1}), make_star(6, 2), make_path({3, 6, 1, 4, 7, 2, 5})}) {
    const auto base = cqf_fast(g, 1);
    REQUIRE(cqf_fast(g, 2) == base);
    REQUIRE(cqf_fast(g, 3) == base);
    REQUIRE(cqf_fast(g, 8) == base);
  }
}

TEST_CASE("top q-degree reaches the edge count on every path") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& perm : corpus::all_permutations(n)) {
      const auto q = cqf::cqf(make_path(perm));
      int top = -1;
      for (const auto& [alpha, poly] : q.coeffs()) top = std::max(top, *poly.degree());
      REQUIRE(top == n - 1);
    }
}

TEST_CASE("the ad pattern determines a path's expansion") {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::string, QSymExpansion> by_pattern;
    for (const auto& perm : corpus::all_permutations(n)) {
      const auto q = cqf::cqf(make_path(perm));
      auto [it, fresh] = by_pattern.emplace(ad_pattern_of(perm), q);
      if (!fresh) REQUIRE(it->second == q);
    }
    REQUIRE(by_pattern.size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("descent generating function equals the flip's ascent one") {
  for (const auto& g : corpus::random_trees(25, 2, 6, 55)) REQUIRE(cqf_descent(g) == cqf::cqf(flip(g)));
  const auto nat = make_path(corpus::natural_labeling(5));
  REQUIRE(cqf_descent(nat) == cqf::cqf(nat));
  REQUIRE(cqf_descent(make_path({1, 2})) == cqf::cqf(make_path({1, 2})));
}

TEST_CASE("sum with the flipped graph's expansion is palindromic") {
  for (const auto& g : corpus::random_trees(30, 2, 6, 99)) {
    auto sum = cqf::cqf(g);
    sum += cqf::cqf(flip(g));
    REQUIRE(is_palindromic(sum, static_cast<int>(g.edges.size())).palindromic);
  }
}

TEST_CASE("flip-invariant trees have palindromic expansions") {
  const std::vector<LabeledGraph> fixed = {
      make_path({3, 6, 1, 4, 7, 2, 5}),
      make_star(7, 4),
      make_graph(7, {{1, 4}, {4, 7}, {4, 5}, {2, 5}, {3, 4}, {3, 6}}),
  };
  for (const auto& g : fixed) {
    REQUIRE(flip(g) == g);
    REQUIRE(is_palindromic(cqf::cqf(g), static_cast<int>(g.edges.size())).palindromic);
  }
  // all flip-invariant paths up to 7 vertices
  for (int n = 2; n <= 7; ++n)
    for (const auto& perm : corpus::all_permutations(n)) {
      const auto g = make_path(perm);
      if (flip(g) == g)
        REQUIRE(is_palindromic(cqf::cqf(g), n - 1).palindromic);
    }
}
