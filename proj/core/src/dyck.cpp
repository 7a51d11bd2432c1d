#include "permdiag/dyck.hpp"

#include <algorithm>

#include "permdiag/bijection.hpp"
#include "permdiag/error.hpp"
#include "permdiag/pattern.hpp"

namespace permdiag {

namespace {

struct Run {
  int up = 0;
  int down = 0;
};

// U^{u_1} D^{d_1} ... U^{u_m} D^{d_m} with all u_k, d_k >= 1.
std::vector<Run> peak_runs(const DyckPath& path) {
  std::vector<Run> runs;
  for (Step s : path.steps()) {
    if (s == Step::Up) {
      if (runs.empty() || runs.back().down > 0) runs.push_back({});
      ++runs.back().up;
    } else {
      ++runs.back().down;
    }
  }
  return runs;
}

void append(std::vector<Step>& steps, Step s, int count) { steps.insert(steps.end(), static_cast<std::size_t>(count), s); }

}  // namespace

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
  if (steps.empty()) throw Error(ErrorCode::Empty, "a Dyck path needs at least one step pair");
  int height = 0;
  for (Step s : steps) {
    height += s == Step::Up ? 1 : -1;
    if (height < 0) throw Error(ErrorCode::BelowAxis, "path falls below the axis");
  }
  if (height != 0) throw Error(ErrorCode::Unbalanced, "path does not return to the axis");
  return DyckPath(std::move(steps));
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char ch : text) {
    if (ch == 'U' || ch == 'u') {
      steps.push_back(Step::Up);
    } else if (ch == 'D' || ch == 'd') {
      steps.push_back(Step::Down);
    } else {
      throw Error(ErrorCode::Parse, std::string("unexpected path character '") + ch + "'");
    }
  }
  return from_steps(std::move(steps));
}

DyckPath DyckPath::pyramid(int n) {
  std::vector<Step> steps;
  append(steps, Step::Up, n);
  append(steps, Step::Down, n);
  return from_steps(std::move(steps));
}

DyckPath DyckPath::zigzag(int n) {
  std::vector<Step> steps;
  for (int i = 0; i < n; ++i) {
    steps.push_back(Step::Up);
    steps.push_back(Step::Down);
  }
  return from_steps(std::move(steps));
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += s == Step::Up ? 'U' : 'D';
  return out;
}

HeightProfile heights(const DyckPath& path) {
  HeightProfile out;
  out.w.reserve(path.steps().size());
  int height = 0;
  for (Step s : path.steps()) {
    out.w.push_back(height);
    out.sum_all += height;
    if (s == Step::Down) {
      out.sum_down += height;
      --height;
      if (height == 0) ++out.returns;
    } else {
      ++height;
    }
  }
  out.rank_height = out.w[static_cast<std::size_t>(path.half_length())];
  return out;
}

std::vector<int> down_step_end_heights(const DyckPath& path) {
  std::vector<int> out;
  int height = 0;
  for (Step s : path.steps()) {
    height += s == Step::Up ? 1 : -1;
    if (s == Step::Down) out.push_back(height);
  }
  return out;
}

int max_height(const DyckPath& path) {
  const auto profile = heights(path);
  return *std::max_element(profile.w.begin(), profile.w.end());
}

DyckPath psi_bjs(const Permutation& p) {
  if (!avoids(p, pattern_321())) throw Error(ErrorCode::Not321Avoiding, p.to_string() + " contains 321");
  const int n = p.size();
  std::vector<int> a{0};
  std::vector<int> b{0};
  for (int i : excedances(p)) {
    a.push_back(p(i) - 1);
    b.push_back(i);
  }
  a.push_back(n);
  b.push_back(n);
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  for (std::size_t k = 1; k < a.size(); ++k) {
    append(steps, Step::Up, a[k] - a[k - 1]);
    append(steps, Step::Down, b[k] - b[k - 1]);
  }
  return DyckPath::from_steps(std::move(steps));
}

Permutation psi_bjs_inverse(const DyckPath& path) {
  const auto runs = peak_runs(path);
  std::vector<int> positions;
  std::vector<int> letters;
  int a = 0;
  int b = 0;
  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    a += runs[k].up;
    b += runs[k].down;
    positions.push_back(b);
    letters.push_back(a + 1);
  }
  return permutation_from_excedances(path.half_length(), positions, letters);
}

DyckPath psi_k(const Permutation& p) {
  if (!avoids(p, pattern_132())) throw Error(ErrorCode::Not132Avoiding, p.to_string() + " contains 132");
  const int n = p.size();
  auto minima = left_to_right_minima(p);
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int previous_value = n + 1;
  for (std::size_t k = 0; k < minima.size(); ++k) {
    const int next_position = k + 1 < minima.size() ? minima[k + 1].position : n + 1;
    append(steps, Step::Up, previous_value - minima[k].value);
    append(steps, Step::Down, next_position - minima[k].position);
    previous_value = minima[k].value;
  }
  return DyckPath::from_steps(std::move(steps));
}

Permutation psi_k_inverse(const DyckPath& path) {
  const int n = path.half_length();
  std::vector<Entry> minima;
  int value = n + 1;
  int position = 1;
  for (const Run& run : peak_runs(path)) {
    value -= run.up;
    minima.push_back({position, value});
    position += run.down;
  }
  return fill_from_minima(minima, n);
}

Partition path_partition(const DyckPath& path) {
  const int n = path.half_length();
  const auto ends = down_step_end_heights(path);
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(n - i - ends[static_cast<std::size_t>(i - 1)]);
  return Partition::from_parts(std::move(parts));
}

DyckPath partition_path(const Partition& lambda, int n) {
  if (n < 1) throw Error(ErrorCode::BadArgs, "n must be at least 1");
  if (!fits_staircase(lambda, n)) {
    throw Error(ErrorCode::DoesNotFitStaircase, lambda.to_string() + " does not fit Y_" + std::to_string(n));
  }
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int previous_end = 0;
  for (int i = 1; i <= n; ++i) {
    const int end = n - i - lambda.part(i);
    append(steps, Step::Up, end - previous_end + 1);
    steps.push_back(Step::Down);
    previous_end = end;
  }
  return DyckPath::from_steps(std::move(steps));
}

}  // namespace permdiag
