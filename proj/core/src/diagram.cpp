#include "permdiag/diagram.hpp"

#include <algorithm>
#include <deque>

#include "permdiag/error.hpp"

namespace permdiag {

namespace {

std::size_t grid_index(int n, Cell c) {
  return static_cast<std::size_t>(c.row - 1) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(c.col - 1);
}

}  // namespace

Diagram::Diagram(int n, std::vector<Cell> cells)
    : n_(n), cells_(std::move(cells)), grid_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  std::sort(cells_.begin(), cells_.end());
  for (Cell c : cells_) {
    if (c.row < 1 || c.row > n || c.col < 1 || c.col > n) {
      throw Error(ErrorCode::OutOfRange, "diagram cell outside the n x n array");
    }
    grid_[grid_index(n, c)] = 1;
  }
}

bool Diagram::contains(Cell c) const noexcept {
  if (c.row < 1 || c.row > n_ || c.col < 1 || c.col > n_) return false;
  return grid_[grid_index(n_, c)] != 0;
}

int Diagram::row_length(int i) const {
  int count = 0;
  for (int j = 1; j <= n_; ++j) {
    if (contains({i, j})) ++count;
  }
  return count;
}

Diagram Diagram::transpose() const {
  std::vector<Cell> flipped;
  flipped.reserve(cells_.size());
  for (Cell c : cells_) flipped.push_back({c.col, c.row});
  return Diagram(n_, std::move(flipped));
}

std::vector<std::vector<Cell>> Diagram::components() const {
  std::vector<std::vector<Cell>> out;
  std::vector<std::uint8_t> seen(grid_.size(), 0);
  for (Cell start : cells_) {
    if (seen[grid_index(n_, start)]) continue;
    std::vector<Cell> component;
    std::deque<Cell> queue{start};
    seen[grid_index(n_, start)] = 1;
    while (!queue.empty()) {
      const Cell c = queue.front();
      queue.pop_front();
      component.push_back(c);
      for (Cell next : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                        Cell{c.row, c.col + 1}}) {
        if (contains(next) && !seen[grid_index(n_, next)]) {
          seen[grid_index(n_, next)] = 1;
          queue.push_back(next);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

Diagram build_diagram(const Permutation& p) {
  const int n = p.size();
  const Permutation q = inverse(p);
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < p(i); ++j) {
      if (q(j) > i) cells.push_back({i, j});
    }
  }
  return Diagram(n, std::move(cells));
}

int RankedDiagram::rank(Cell c) const {
  const auto cells = base_.cells();
  const auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || *it != c) throw Error(ErrorCode::BadArgs, "cell is not in the diagram");
  return ranks_[static_cast<std::size_t>(it - cells.begin())];
}

RankedDiagram rank_diagram(const Permutation& p) {
  Diagram base = build_diagram(p);
  std::vector<int> ranks;
  std::vector<Cell> essential;
  ranks.reserve(base.size());
  for (Cell c : base.cells()) {
    int northwest = 0;
    for (int i = 1; i < c.row; ++i) {
      if (p(i) < c.col) ++northwest;
    }
    ranks.push_back(northwest);
    if (!base.contains({c.row + 1, c.col}) && !base.contains({c.row, c.col + 1})) essential.push_back(c);
  }
  return RankedDiagram(std::move(base), std::move(ranks), std::move(essential));
}

Dominance dominant_partition(const Permutation& p) {
  const Diagram d = build_diagram(p);
  if (d.size() == 0) return Partition{};
  const auto comps = d.components();
  if (!d.contains({1, 1})) return NotDominant{d.cells().front()};
  // components() is ordered by first cell, so (1,1) heads the first one.
  if (comps.size() > 1) return NotDominant{comps[1].front()};
  std::vector<int> rows;
  for (int i = 1; i <= p.size(); ++i) rows.push_back(d.row_length(i));
  return Partition::from_parts(std::move(rows));
}

bool is_dominant(const Permutation& p) { return std::holds_alternative<Partition>(dominant_partition(p)); }

Partition require_dominant_partition(const Permutation& p) {
  auto result = dominant_partition(p);
  if (auto* lambda = std::get_if<Partition>(&result)) return std::move(*lambda);
  throw Error(ErrorCode::Not132Avoiding, p.to_string() + " contains 132");
}

std::int64_t count_132_by_rank(const Permutation& p) {
  const RankedDiagram ranked = rank_diagram(p);
  std::int64_t total = 0;
  for (int r : ranked.ranks()) total += r;
  return total;
}

std::string render_ascii(const Permutation& p, bool show_ranks) {
  const int n = p.size();
  const RankedDiagram ranked = rank_diagram(p);
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Cell c{i, j};
      char glyph = '.';
      if (p(i) == j) {
        glyph = 'o';
      } else if (ranked.base().contains(c)) {
        glyph = '#';
        if (show_ranks) {
          const int r = ranked.rank(c);
          glyph = r < 10 ? static_cast<char>('0' + r) : r < 36 ? static_cast<char>('a' + r - 10) : '*';
        }
      }
      out += glyph;
    }
    out += '\n';
  }
  return out;
}

}  // namespace permdiag
