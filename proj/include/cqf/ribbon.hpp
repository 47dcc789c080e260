#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqf/composition.hpp"
#include "cqf/graph.hpp"

namespace cqf {

// Ribbon diagram built from an a/d word: start with one box, append a box to
// the right for each 'a' and a box above for each 'd'.  Row 1 is the bottom
// row; consecutive rows overlap in exactly one column.  Cells in ribbon order
// (row 1 left to right, then row 2, ...) correspond to path positions 1..n,
// so a diagram with k cells stands for the shape class of every path labeling
// whose a/d word matches.
struct RibbonCell {
  int row = 0;
  int col = 0;
  friend bool operator==(const RibbonCell& a, const RibbonCell& b) {
    return a.row == b.row && a.col == b.col;
  }
};

inline Composition composition_from_pattern(const ADPattern& w) {
  if (!is_ad_word(w)) throw std::invalid_argument("ribbon: pattern letters must be a or d");
  Composition alpha;
  int run = 1;
  for (char ch : w) {
    if (ch == 'a') {
      ++run;
    } else {
      alpha.push_back(run);
      run = 1;
    }
  }
  alpha.push_back(run);
  return alpha;
}

inline ADPattern pattern_from_composition(const Composition& alpha) {
  require_composition(alpha);
  ADPattern w;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) w += 'd';
    w.append(static_cast<std::size_t>(alpha[i]) - 1, 'a');
  }
  return w;
}

class RibbonDiagram {
 public:
  static RibbonDiagram from_pattern(const ADPattern& w) {
    return RibbonDiagram(composition_from_pattern(w));
  }
  static RibbonDiagram from_composition(const Composition& alpha) { return RibbonDiagram(alpha); }

  const Composition& composition() const { return comp_; }
  const ADPattern& pattern() const { return pattern_; }
  int size() const { return n_; }
  int rows() const { return static_cast<int>(comp_.size()); }

  // Cells use 1-based ribbon positions throughout, matching path positions.
  const RibbonCell& cell(int position) const { return cells_.at(static_cast<std::size_t>(position) - 1); }
  const std::vector<RibbonCell>& cells() const { return cells_; }

  int row_start_col(int row) const { return start_.at(static_cast<std::size_t>(row) - 1); }
  int row_end_col(int row) const {
    return row_start_col(row) + comp_.at(static_cast<std::size_t>(row) - 1) - 1;
  }
  // First ribbon position of a row.
  int row_start_position(int row) const { return pos_start_.at(static_cast<std::size_t>(row) - 1); }

  bool has_cell(int row, int col) const {
    return row >= 1 && row <= rows() && col >= row_start_col(row) && col <= row_end_col(row);
  }
  int position_at(int row, int col) const {
    if (!has_cell(row, col)) return 0;
    return row_start_position(row) + (col - row_start_col(row));
  }

  friend bool operator==(const RibbonDiagram& a, const RibbonDiagram& b) {
    return a.comp_ == b.comp_;
  }
  friend bool operator!=(const RibbonDiagram& a, const RibbonDiagram& b) { return !(a == b); }

 private:
  explicit RibbonDiagram(const Composition& alpha) : comp_(alpha) {
    require_composition(alpha);
    n_ = composition_sum(alpha);
    pattern_ = pattern_from_composition(alpha);
    int col = 1;
    int pos = 1;
    for (std::size_t r = 0; r < comp_.size(); ++r) {
      start_.push_back(col);
      pos_start_.push_back(pos);
      for (int c = 0; c < comp_[r]; ++c) cells_.push_back({static_cast<int>(r) + 1, col + c});
      col += comp_[r] - 1;
      pos += comp_[r];
    }
  }

  Composition comp_;
  ADPattern pattern_;
  int n_ = 0;
  std::vector<RibbonCell> cells_;
  std::vector<int> start_;      // leftmost column per row
  std::vector<int> pos_start_;  // first ribbon position per row
};

inline RibbonDiagram ribbon_from_pattern(const ADPattern& w) { return RibbonDiagram::from_pattern(w); }

// Reflection across the diagonal: rows become columns.  On patterns this is
// the a/d swap.
inline RibbonDiagram reflect(const RibbonDiagram& r) {
  ADPattern w = r.pattern();
  for (char& ch : w) ch = (ch == 'a') ? 'd' : 'a';
  return RibbonDiagram::from_pattern(w);
}

struct CornerReport {
  std::vector<int> lu_positions;  // no box to the left, none above
  std::vector<int> rl_positions;  // no box to the right, none below
  int lu_count() const { return static_cast<int>(lu_positions.size()); }
  int rl_count() const { return static_cast<int>(rl_positions.size()); }
};

inline CornerReport corners(const RibbonDiagram& r) {
  CornerReport rep;
  for (int p = 1; p <= r.size(); ++p) {
    const auto& c = r.cell(p);
    if (!r.has_cell(c.row, c.col - 1) && !r.has_cell(c.row + 1, c.col)) rep.lu_positions.push_back(p);
    if (!r.has_cell(c.row, c.col + 1) && !r.has_cell(c.row - 1, c.col)) rep.rl_positions.push_back(p);
  }
  return rep;
}

// Closed-form corner counts; kept separate from the geometric scan so the two
// can be checked against each other.
inline std::pair<int, int> corner_counts_by_formula(const Composition& alpha) {
  const int l = static_cast<int>(alpha.size());
  int lu = l, rl = l;
  for (int i = 0; i < l; ++i) {
    if (alpha[static_cast<std::size_t>(i)] == 1) {
      if (i < l - 1) --lu;
      if (i > 0) --rl;
    }
  }
  return {lu, rl};
}

// Sub-ribbon matching: a contiguous run of cells starting at position p has
// shape beta exactly when the pattern letters between those cells spell
// beta's own pattern.  That is the whole test; cells before and after the run
// are not constrained.
enum class SubribbonAnchor { anywhere, begins, ends };

struct SubribbonMatch {
  int start_position = 0;
  std::vector<int> positions;
};

inline std::vector<SubribbonMatch> find_subribbon(const RibbonDiagram& r, const Composition& beta,
                                                  SubribbonAnchor anchor = SubribbonAnchor::anywhere) {
  require_composition(beta);
  const int len = composition_sum(beta);
  std::vector<SubribbonMatch> out;
  if (len > r.size()) return out;
  const ADPattern want = pattern_from_composition(beta);
  const ADPattern& w = r.pattern();
  int from = 1, to = r.size() - len + 1;
  if (anchor == SubribbonAnchor::begins) to = 1;
  if (anchor == SubribbonAnchor::ends) from = to;
  for (int p = from; p <= to; ++p) {
    if (w.compare(static_cast<std::size_t>(p) - 1, want.size(), want) != 0) continue;
    SubribbonMatch m;
    m.start_position = p;
    for (int q = p; q < p + len; ++q) m.positions.push_back(q);
    out.push_back(std::move(m));
  }
  return out;
}

inline bool contains_subribbon(const RibbonDiagram& r, const Composition& beta,
                               SubribbonAnchor anchor = SubribbonAnchor::anywhere) {
  return !find_subribbon(r, beta, anchor).empty();
}

// A ribbon is regular when some row of length exactly 2 is followed by a row
// of length >= 2 or by a terminal row of length 1.  The witness is the (2,1)
// sub-ribbon sitting in those rows: both cells of the length-2 row plus the
// first cell of the row above.
struct RegularityWitness {
  int lower_row = 0;
  std::array<int, 3> positions{};  // two cells of the length-2 row, then the cell above
};

struct RegularityReport {
  bool regular = false;
  std::vector<RegularityWitness> witnesses;
};

inline RegularityReport is_regular(const RibbonDiagram& r) {
  RegularityReport rep;
  const auto& alpha = r.composition();
  const int l = r.rows();
  for (int i = 1; i < l; ++i) {
    if (alpha[static_cast<std::size_t>(i) - 1] != 2) continue;
    const int next = alpha[static_cast<std::size_t>(i)];
    if (next >= 2 || (i + 1 == l && next == 1)) {
      const int p = r.row_start_position(i);
      rep.witnesses.push_back({i, {p, p + 1, p + 2}});
    }
  }
  rep.regular = !rep.witnesses.empty();
  return rep;
}

// Ribbon shape plus one color per cell, stored in ribbon order.
struct RibbonTableau {
  RibbonDiagram shape;
  std::vector<int> colors;  // colors[p-1] is the color at ribbon position p

  int color_at(int position) const { return colors.at(static_cast<std::size_t>(position) - 1); }

  friend bool operator==(const RibbonTableau& a, const RibbonTableau& b) {
    return a.shape == b.shape && a.colors == b.colors;
  }
  friend bool operator!=(const RibbonTableau& a, const RibbonTableau& b) { return !(a == b); }
};

inline RibbonTableau make_tableau(const RibbonDiagram& shape, std::vector<int> colors) {
  if (static_cast<int>(colors.size()) != shape.size())
    throw std::invalid_argument("tableau: one color per cell required");
  for (int c : colors)
    if (c < 1) throw std::invalid_argument("tableau: colors are positive");
  return RibbonTableau{shape, std::move(colors)};
}

// Consecutive ribbon cells are exactly the adjacent cell pairs, so properness
// and ascent-style statistics only look at consecutive positions: an 'a' step
// counts when the left color is smaller, a 'd' step when the upper color is
// smaller.
inline bool tableau_is_proper(const RibbonTableau& t) {
  for (std::size_t p = 0; p + 1 < t.colors.size(); ++p)
    if (t.colors[p] == t.colors[p + 1]) return false;
  return true;
}

inline int tableau_ascents(const RibbonTableau& t) {
  const ADPattern& w = t.shape.pattern();
  int asc = 0;
  for (std::size_t p = 0; p + 1 < t.colors.size(); ++p) {
    if (w[p] == 'a' ? t.colors[p] < t.colors[p + 1] : t.colors[p + 1] < t.colors[p]) ++asc;
  }
  return asc;
}

// Rows strictly increase left to right and columns strictly increase top to
// bottom; for proper colorings of a path this holds exactly when every edge
// is an ascent.
inline bool is_max_ascent_tableau(const RibbonTableau& t) {
  return tableau_ascents(t) == t.shape.size() - 1;
}

// Transport a path coloring onto the ribbon of the path's a/d word: the cell
// at position p receives the color of the label at position p.
inline RibbonTableau tableau_from_coloring(const LabeledGraph& path, const Coloring& colors_by_vertex) {
  if (!path.is_path()) throw std::invalid_argument("tableau_from_coloring: graph was not built as a path");
  if (static_cast<int>(colors_by_vertex.size()) != path.n)
    throw std::invalid_argument("tableau_from_coloring: coloring size mismatch");
  RibbonDiagram shape = RibbonDiagram::from_pattern(ad_pattern(path));
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(path.n));
  for (int v : path.path_positions) colors.push_back(colors_by_vertex[static_cast<std::size_t>(v) - 1]);
  return make_tableau(shape, std::move(colors));
}

// A canonical path labeling whose a/d word is the given pattern: start from
// the identity and reverse the stretch of positions under each maximal run of
// d's.  Values inside a reversed stretch descend; stretches keep ascending
// across their boundaries.
inline std::vector<int> labeling_with_pattern(const ADPattern& w) {
  if (!is_ad_word(w)) throw std::invalid_argument("labeling_with_pattern: letters must be a or d");
  const int n = static_cast<int>(w.size()) + 1;
  std::vector<int> labeling(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labeling[static_cast<std::size_t>(i)] = i + 1;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == 'd') {
      std::size_t j = i;
      while (j < w.size() && w[j] == 'd') ++j;
      std::reverse(labeling.begin() + static_cast<std::ptrdiff_t>(i),
                   labeling.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      i = j;
    } else {
      ++i;
    }
  }
  return labeling;
}

inline LabeledGraph canonical_path_for(const RibbonDiagram& r) {
  auto path = make_path(labeling_with_pattern(r.pattern()));
  return path;
}

// Plain-text pictures, rows printed top-down.  Purely cosmetic; nothing
// parses these back.
inline std::string render_diagram(const RibbonDiagram& r) {
  std::string out;
  for (int row = r.rows(); row >= 1; --row) {
    std::string line;
    for (int col = 1; col <= r.row_end_col(row); ++col) {
      if (col > 1) line += ' ';
      line += r.has_cell(row, col) ? '#' : ' ';
    }
    out += line;
    out += '\n';
  }
  return out;
}

inline std::string render_tableau(const RibbonTableau& t) {
  std::size_t width = 1;
  for (int c : t.colors) width = std::max(width, std::to_string(c).size());
  std::string out;
  const auto& r = t.shape;
  for (int row = r.rows(); row >= 1; --row) {
    std::string line;
    for (int col = 1; col <= r.row_end_col(row); ++col) {
      if (col > 1) line += ' ';
      if (r.has_cell(row, col)) {
        std::string s = std::to_string(t.color_at(r.position_at(row, col)));
        line += std::string(width - s.size(), ' ') + s;
      } else {
        line += std::string(width, ' ');
      }
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace cqf
