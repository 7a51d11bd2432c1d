#include "permdiag/bijection.hpp"

#include <algorithm>

#include "permdiag/diagram.hpp"
#include "permdiag/error.hpp"
#include "permdiag/pattern.hpp"

namespace permdiag {

std::vector<Cell> excedance_corners(const Permutation& p) {
  std::vector<Cell> out;
  for (int i : excedances(p)) out.push_back({i, p.size() + 1 - p(i)});
  return out;
}

Permutation permutation_from_partition(const Partition& lambda, int n) {
  if (n < 1) throw Error(ErrorCode::BadArgs, "n must be at least 1");
  if (!fits_staircase(lambda, n)) {
    throw Error(ErrorCode::DoesNotFitStaircase, lambda.to_string() + " does not fit Y_" + std::to_string(n));
  }
  std::vector<bool> used(static_cast<std::size_t>(n) + 2, false);
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int v = lambda.part(i) + 1;
    while (used[static_cast<std::size_t>(v)]) ++v;
    used[static_cast<std::size_t>(v)] = true;
    values.push_back(v);
  }
  return Permutation::from_values(std::move(values));
}

Permutation fill_from_minima(std::span<const Entry> minima, int n) {
  if (n < 1) throw Error(ErrorCode::BadArgs, "n must be at least 1");
  if (minima.empty() || minima.front().position != 1) {
    throw Error(ErrorCode::MalformedMinima, "position 1 must be a left-to-right minimum");
  }
  if (minima.back().value != 1) throw Error(ErrorCode::MalformedMinima, "value 1 must be the last minimum");
  for (std::size_t k = 0; k < minima.size(); ++k) {
    const Entry e = minima[k];
    if (e.position < 1 || e.position > n || e.value < 1 || e.value > n) {
      throw Error(ErrorCode::MalformedMinima, "minimum outside 1..n");
    }
    if (k > 0 && (e.position <= minima[k - 1].position || e.value >= minima[k - 1].value)) {
      throw Error(ErrorCode::MalformedMinima, "positions must increase and values decrease");
    }
  }

  std::vector<int> at(static_cast<std::size_t>(n) + 1, 0);   // position -> value
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);  // value -> position
  for (const Entry& e : minima) {
    at[static_cast<std::size_t>(e.position)] = e.value;
    pos[static_cast<std::size_t>(e.value)] = e.position;
  }
  for (int a = 2; a <= n; ++a) {
    if (pos[static_cast<std::size_t>(a)] != 0) continue;
    int slot = pos[static_cast<std::size_t>(a - 1)] + 1;
    while (slot <= n && at[static_cast<std::size_t>(slot)] != 0) ++slot;
    if (slot > n) throw Error(ErrorCode::Unfillable, "no free position after value " + std::to_string(a - 1));
    at[static_cast<std::size_t>(slot)] = a;
    pos[static_cast<std::size_t>(a)] = slot;
  }
  Permutation result = Permutation::from_values(std::vector<int>(at.begin() + 1, at.end()));
  const auto got = left_to_right_minima(result);
  if (!std::equal(got.begin(), got.end(), minima.begin(), minima.end())) {
    throw Error(ErrorCode::Unfillable, "prescribed minima are not realised by any 132-avoider");
  }
  return result;
}

Permutation phi(const Permutation& p) {
  if (!avoids(p, pattern_321())) throw Error(ErrorCode::Not321Avoiding, p.to_string() + " contains 321");
  const auto corner_cells = excedance_corners(p);
  return permutation_from_partition(partition_from_corners(corner_cells), p.size());
}

Permutation permutation_from_excedances(int n, std::span<const int> positions, std::span<const int> letters) {
  if (positions.size() != letters.size()) throw Error(ErrorCode::BadArgs, "one letter per excedance");
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const int i = positions[k];
    const int letter = letters[k];
    if (i < 1 || i > n || letter <= i || letter > n || values[static_cast<std::size_t>(i - 1)] != 0 ||
        used[static_cast<std::size_t>(letter)]) {
      throw Error(ErrorCode::BadArgs, "inconsistent excedance data");
    }
    values[static_cast<std::size_t>(i - 1)] = letter;
    used[static_cast<std::size_t>(letter)] = true;
  }
  int next_value = 1;
  for (auto& v : values) {
    if (v != 0) continue;
    while (used[static_cast<std::size_t>(next_value)]) ++next_value;
    v = next_value;
    used[static_cast<std::size_t>(next_value)] = true;
  }
  Permutation result = Permutation::from_values(std::move(values));
  if (excedances(result) != std::vector<int>(positions.begin(), positions.end())) {
    throw Error(ErrorCode::BadArgs, "filled positions created extra excedances");
  }
  return result;
}

Permutation phi_inverse(const Permutation& sigma) {
  if (!avoids(sigma, pattern_132())) throw Error(ErrorCode::Not132Avoiding, sigma.to_string() + " contains 132");
  const Partition lambda = require_dominant_partition(sigma);
  const int n = sigma.size();
  std::vector<int> positions;
  std::vector<int> letters;
  for (Cell c : corners(lambda)) {
    positions.push_back(c.row);
    letters.push_back(n + 1 - c.col);
  }
  return permutation_from_excedances(n, positions, letters);
}

}  // namespace permdiag
