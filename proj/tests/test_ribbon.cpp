#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "corpus.hpp"
#include "cqf/engine.hpp"
#include "cqf/ribbon.hpp"

using namespace cqf;

TEST_CASE("patterns and compositions are two views of one shape") {
  REQUIRE(composition_from_pattern("adad") == Composition{2, 2, 1});
  REQUIRE(composition_from_pattern("daaa") == Composition{1, 4});
  REQUIRE(composition_from_pattern("") == Composition{1});
  REQUIRE(pattern_from_composition({2, 2, 1}) == "adad");
  REQUIRE(pattern_from_composition({1, 4}) == "daaa");
  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : compositions_of(n)) {
      REQUIRE(composition_from_pattern(pattern_from_composition(alpha)) == alpha);
      REQUIRE(RibbonDiagram::from_composition(alpha).size() == n);
    }
  REQUIRE_THROWS_AS(composition_from_pattern("abc"), std::invalid_argument);
}

TEST_CASE("cell geometry: adjacent rows overlap in exactly one column") {
  const auto r = RibbonDiagram::from_composition({2, 2, 1});
  REQUIRE(r.rows() == 3);
  REQUIRE(r.size() == 5);
  REQUIRE(r.row_start_col(1) == 1);
  REQUIRE(r.row_end_col(1) == 2);
  REQUIRE(r.row_start_col(2) == 2);
  REQUIRE(r.row_end_col(2) == 3);
  REQUIRE(r.row_start_col(3) == 3);
  REQUIRE(r.cell(1) == RibbonCell{1, 1});
  REQUIRE(r.cell(3) == RibbonCell{2, 2});
  REQUIRE(r.cell(5) == RibbonCell{3, 3});
  REQUIRE(r.position_at(2, 2) == 3);
  REQUIRE(r.position_at(2, 9) == 0);

  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : compositions_of(n)) {
      const auto d = RibbonDiagram::from_composition(alpha);
      for (int row = 2; row <= d.rows(); ++row) REQUIRE(d.row_start_col(row) == d.row_end_col(row - 1));
    }

  for (int n = 1; n <= 6; ++n)
    for (const auto& perm : corpus::all_permutations(n))
      REQUIRE(ribbon_from_pattern(ad_pattern_of(perm)).size() == n);
}

TEST_CASE("reflection swaps the pattern letters and is involutive") {
  REQUIRE(reflect(RibbonDiagram::from_composition({2, 1, 1})) == RibbonDiagram::from_composition({1, 3}));
  REQUIRE(reflect(RibbonDiagram::from_composition({1})) == RibbonDiagram::from_composition({1}));
  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : compositions_of(n)) {
      const auto r = RibbonDiagram::from_composition(alpha);
      REQUIRE(reflect(reflect(r)) == r);
    }
}

TEST_CASE("reflection tracks the flip relabeling") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& perm : corpus::all_permutations(n)) {
      std::vector<int> flipped;
      for (int x : perm) flipped.push_back(n + 1 - x);
      REQUIRE(ribbon_from_pattern(ad_pattern_of(flipped)) ==
              reflect(ribbon_from_pattern(ad_pattern_of(perm))));
    }
}

TEST_CASE("corner classification") {
  const auto c221 = corners(RibbonDiagram::from_composition({2, 2, 1}));
  REQUIRE(c221.lu_count() == 3);
  REQUIRE(c221.rl_count() == 2);
  REQUIRE(c221.lu_positions == std::vector<int>{1, 3, 5});
  REQUIRE(c221.rl_positions == std::vector<int>{2, 4});

  const auto c14 = corners(RibbonDiagram::from_composition({1, 4}));
  REQUIRE(c14.lu_count() == 1);
  REQUIRE(c14.rl_count() == 2);

  const auto c2121 = corners(RibbonDiagram::from_composition({2, 1, 2, 1}));
  REQUIRE(c2121.lu_count() == 3);
  REQUIRE(c2121.rl_count() == 2);

  const auto single = corners(RibbonDiagram::from_composition({1}));
  REQUIRE(single.lu_positions == std::vector<int>{1});
  REQUIRE(single.rl_positions == std::vector<int>{1});

  for (int n = 1; n <= 9; ++n)
    for (const auto& alpha : compositions_of(n)) {
      const auto rep = corners(RibbonDiagram::from_composition(alpha));
      const auto [lu, rl] = corner_counts_by_formula(alpha);
      REQUIRE(rep.lu_count() == lu);
      REQUIRE(rep.rl_count() == rl);
      if (n > 1) {
        std::set<int> lus(rep.lu_positions.begin(), rep.lu_positions.end());
        for (int p : rep.rl_positions) REQUIRE(lus.count(p) == 0);
      }
    }
}

TEST_CASE("sub-ribbon matching is a pattern substring test") {
  const auto r = RibbonDiagram::from_composition({3, 2, 4});
  const auto hits = find_subribbon(r, {1, 2, 2});
  REQUIRE(hits.size() == 1);
  REQUIRE(hits.front().start_position == 3);
  REQUIRE(hits.front().positions == std::vector<int>{3, 4, 5, 6, 7});

  const auto r211 = RibbonDiagram::from_composition({2, 1, 1});
  REQUIRE(!contains_subribbon(r211, {1, 1, 3}));
  REQUIRE(!contains_subribbon(r211, {1, 3}, SubribbonAnchor::begins));
  REQUIRE(!contains_subribbon(r211, {1, 1, 2}, SubribbonAnchor::ends));

  // substring semantics: a run of cells inside a longer row still matches
  REQUIRE(contains_subribbon(RibbonDiagram::from_composition({1, 4}), {1, 3}, SubribbonAnchor::begins));
  REQUIRE(contains_subribbon(RibbonDiagram::from_composition({1, 3}), {1, 3}, SubribbonAnchor::begins));
  REQUIRE(!contains_subribbon(RibbonDiagram::from_composition({2, 3}), {1, 3}, SubribbonAnchor::begins));

  // anchored searches pin the run to the first or last cell
  const auto long_ribbon = RibbonDiagram::from_composition({1, 1, 2, 1, 1, 2});
  REQUIRE(contains_subribbon(long_ribbon, {1, 1, 2}, SubribbonAnchor::begins));
  REQUIRE(contains_subribbon(long_ribbon, {1, 1, 2}, SubribbonAnchor::ends));
  REQUIRE(find_subribbon(long_ribbon, {1, 1, 2}).size() == 2);
  REQUIRE(contains_subribbon(long_ribbon, {2}, SubribbonAnchor::ends));
  REQUIRE(!contains_subribbon(long_ribbon, {2}, SubribbonAnchor::begins));

  // a shape never fits in fewer cells
  REQUIRE(find_subribbon(RibbonDiagram::from_composition({2}), {1, 1, 3}).empty());
}

TEST_CASE("regularity witnesses") {
  const auto rep = is_regular(RibbonDiagram::from_composition({1, 2, 2, 1, 2, 1}));
  REQUIRE(rep.regular);
  REQUIRE(rep.witnesses.size() == 2);
  REQUIRE(rep.witnesses[0].lower_row == 2);
  REQUIRE(rep.witnesses[0].positions == std::array<int, 3>{2, 3, 4});
  REQUIRE(rep.witnesses[1].lower_row == 5);
  REQUIRE(rep.witnesses[1].positions == std::array<int, 3>{7, 8, 9});

  REQUIRE(!is_regular(RibbonDiagram::from_composition({1, 4})).regular);
  REQUIRE(is_regular(RibbonDiagram::from_composition({2, 1})).regular);
  REQUIRE(is_regular(RibbonDiagram::from_composition({2, 2, 1})).regular);
  REQUIRE(!is_regular(RibbonDiagram::from_composition({1, 2})).regular);
  // middle length-1 rows do not qualify
  REQUIRE(!is_regular(RibbonDiagram::from_composition({2, 1, 3})).regular);
}

TEST_CASE("tableaux carry path colorings onto the shape") {
  const auto left = make_path({3, 5, 1, 4, 2});
  const auto t = tableau_from_coloring(left, {1, 1, 1, 2, 2});  // by vertex
  REQUIRE(t.shape == RibbonDiagram::from_composition({2, 2, 1}));
  REQUIRE(t.colors == std::vector<int>{1, 2, 1, 2, 1});
  REQUIRE(tableau_is_proper(t));
  REQUIRE(tableau_ascents(t) == 4);
  REQUIRE(is_max_ascent_tableau(t));

  const auto right = make_path({5, 1, 2, 3, 4});
  const auto t2 = tableau_from_coloring(right, {2, 3, 2, 3, 1});
  REQUIRE(t2.shape == RibbonDiagram::from_composition({1, 4}));
  REQUIRE(t2.colors == std::vector<int>{1, 2, 3, 2, 3});
  REQUIRE(!is_max_ascent_tableau(t2));  // the row pair 3,2 fails

  const auto one = tableau_from_coloring(make_path({1}), {7});
  REQUIRE(one.colors == std::vector<int>{7});

  REQUIRE_THROWS_AS(tableau_from_coloring(make_star(5, 3), {1, 2, 3, 2, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_tableau(RibbonDiagram::from_composition({2}), {1, 2, 3}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_tableau(RibbonDiagram::from_composition({2}), {1, 0}), std::invalid_argument);
}

TEST_CASE("max-ascent characterization agrees with edge counting") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& perm : corpus::all_permutations(n)) {
      const auto path = make_path(perm);
      const int colors = 4;
      std::vector<int> c(static_cast<std::size_t>(n), 1);
      while (true) {
        bool proper = true;
        for (auto [i, j] : path.edges)
          if (c[static_cast<std::size_t>(i) - 1] == c[static_cast<std::size_t>(j) - 1]) proper = false;
        if (proper) {
          const auto t = tableau_from_coloring(path, c);
          REQUIRE(tableau_ascents(t) == ascent_number(path, c));
          REQUIRE(is_max_ascent_tableau(t) == (ascent_number(path, c) == n - 1));
        }
        int pos = 0;
        while (pos < n && c[static_cast<std::size_t>(pos)] == colors) {
          c[static_cast<std::size_t>(pos)] = 1;
          ++pos;
        }
        if (pos == n) break;
        ++c[static_cast<std::size_t>(pos)];
      }
    }
}

TEST_CASE("canonical labelings realize their pattern") {
  REQUIRE(labeling_with_pattern("") == std::vector<int>{1});
  REQUIRE(labeling_with_pattern("aa") == std::vector<int>{1, 2, 3});
  REQUIRE(labeling_with_pattern("dd") == std::vector<int>{3, 2, 1});
  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : compositions_of(n)) {
      const auto w = pattern_from_composition(alpha);
      REQUIRE(ad_pattern_of(labeling_with_pattern(w)) == w);
      const auto path = canonical_path_for(RibbonDiagram::from_composition(alpha));
      REQUIRE(ad_pattern(path) == w);
    }
}

TEST_CASE("rendering produces one line per row") {
  const auto r = RibbonDiagram::from_composition({2, 2, 1});
  const auto picture = render_diagram(r);
  REQUIRE(std::count(picture.begin(), picture.end(), '\n') == 3);
  const auto t = make_tableau(r, {1, 2, 1, 2, 1});
  const auto shown = render_tableau(t);
  REQUIRE(std::count(shown.begin(), shown.end(), '\n') == 3);
  REQUIRE(shown.find('2') != std::string::npos);
}
