#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "permdiag/partition.hpp"
#include "permdiag/permutation.hpp"

namespace permdiag {

/// Rothe diagram: the cells left white after shading everything due south or
/// due east of each dot (i, p(i)). Stored as an n x n grid plus the cell list
/// in row-major order.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int n, std::vector<Cell> cells);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return cells_.size(); }
  std::span<const Cell> cells() const noexcept { return cells_; }

  /// False for cells outside the n x n array.
  bool contains(Cell c) const noexcept;

  /// Cell count in row i.
  int row_length(int i) const;

  Diagram transpose() const;

  /// 4-connected components, each a row-major cell list; ordered by first cell.
  std::vector<std::vector<Cell>> components() const;

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

 private:
  int n_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::uint8_t> grid_;
};

Diagram build_diagram(const Permutation& p);

/// Diagram cells annotated with Fulton ranks (dots strictly northwest) and the
/// essential set (cells whose south and east neighbours are not in the diagram).
class RankedDiagram {
 public:
  RankedDiagram(Diagram base, std::vector<int> ranks, std::vector<Cell> essential)
      : base_(std::move(base)), ranks_(std::move(ranks)), essential_(std::move(essential)) {}

  const Diagram& base() const noexcept { return base_; }
  /// Aligned with base().cells().
  std::span<const int> ranks() const noexcept { return ranks_; }
  std::span<const Cell> essential() const noexcept { return essential_; }

  /// Throws Error{BadArgs} when c is not a diagram cell.
  int rank(Cell c) const;

 private:
  Diagram base_;
  std::vector<int> ranks_;
  std::vector<Cell> essential_;
};

RankedDiagram rank_diagram(const Permutation& p);

/// Classification result for a permutation whose diagram is not a Young
/// diagram anchored at (1,1).
struct NotDominant {
  Cell witness;

  friend bool operator==(const NotDominant&, const NotDominant&) = default;
};

using Dominance = std::variant<Partition, NotDominant>;

/// The partition whose Young diagram is D(p), or a witness cell that is not
/// connected to (1,1). The identity is dominant with the empty partition.
Dominance dominant_partition(const Permutation& p);

bool is_dominant(const Permutation& p);

/// dominant_partition for callers that require a 132-avoider; throws
/// Error{Not132Avoiding} otherwise.
Partition require_dominant_partition(const Permutation& p);

/// Sum of ranks over all diagram cells; equals the number of 132 occurrences.
std::int64_t count_132_by_rank(const Permutation& p);

/// '#' diagram cell, '.' shaded, 'o' dot. With show_ranks the '#' becomes the
/// cell rank (0-9, then a-z for 10-35, '*' beyond). Rows end with '\n'.
std::string render_ascii(const Permutation& p, bool show_ranks);

}  // namespace permdiag
