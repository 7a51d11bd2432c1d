#include "permdiag/partition.hpp"

#include <algorithm>
#include <numeric>

#include "permdiag/error.hpp"

namespace permdiag {

Partition Partition::from_parts(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw Error(ErrorCode::BadArgs, "negative part in partition");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) {
      throw Error(ErrorCode::BadArgs, "partition parts must be weakly decreasing");
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  Partition out;
  out.parts_ = std::move(parts);
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorCode::Parse, "partition must look like [a,b,...]");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string token(trim(text.substr(0, comma)));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "not an integer: '" + token + "'");
    }
    if (used != token.size()) throw Error(ErrorCode::Parse, "not an integer: '" + token + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text = trim(text.substr(comma + 1));
    if (text.empty()) throw Error(ErrorCode::Parse, "trailing comma in partition");
  }
  return from_parts(std::move(parts));
}

Partition Partition::staircase(int m) {
  std::vector<int> parts;
  for (int v = m; v >= 1; --v) parts.push_back(v);
  return from_parts(std::move(parts));
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int len) const {
  std::vector<int> out(static_cast<std::size_t>(std::max(len, 0)), 0);
  for (int i = 1; i <= len && i <= length(); ++i) out[static_cast<std::size_t>(i - 1)] = part(i);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda.largest(); ++j) {
    int count = 0;
    for (int v : lambda.parts()) {
      if (v >= j) ++count;
    }
    parts.push_back(count);
  }
  return Partition::from_parts(std::move(parts));
}

int durfee_rank(const Partition& lambda) {
  int r = 0;
  while (lambda.part(r + 1) >= r + 1) ++r;
  return r;
}

std::vector<Cell> corners(const Partition& lambda) {
  std::vector<Cell> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
  }
  return out;
}

Partition partition_from_corners(std::span<const Cell> corner_cells) {
  std::vector<int> parts;
  int prev_row = 0;
  int prev_col = 0;
  for (std::size_t k = 0; k < corner_cells.size(); ++k) {
    const Cell c = corner_cells[k];
    if (c.row <= prev_row || c.col < 1 || (k > 0 && c.col >= prev_col)) {
      throw Error(ErrorCode::BadArgs, "corner rows must increase and columns decrease");
    }
    parts.resize(static_cast<std::size_t>(c.row), c.col);
    prev_row = c.row;
    prev_col = c.col;
  }
  return Partition::from_parts(std::move(parts));
}

bool fits_staircase(const Partition& lambda, int n) {
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.part(i) > n - i) return false;
  }
  return true;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 1; i <= inner.length(); ++i) {
    if (outer.part(i) < inner.part(i)) return false;
  }
  return true;
}

StaircasePartitions::StaircasePartitions(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::BadArgs, "Y_n needs n >= 1");
}

std::optional<Partition> StaircasePartitions::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition{};
  }
  // Row r (1-based) may hold at most min(previous part, n - r).
  auto cap = [this](std::size_t row) {
    const int bound = n_ - static_cast<int>(row);
    return row == 1 ? bound : std::min(bound, current_[row - 2]);
  };
  // Preorder on the prefix tree: extend first, otherwise bump the deepest
  // part that still has room.
  if (cap(current_.size() + 1) >= 1) {
    current_.push_back(1);
    return Partition::from_parts(current_);
  }
  while (!current_.empty()) {
    const std::size_t row = current_.size();
    if (current_.back() + 1 <= cap(row)) {
      ++current_.back();
      return Partition::from_parts(current_);
    }
    current_.pop_back();
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Partition> staircase_partitions(int n) {
  std::vector<Partition> out;
  for_each_staircase_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace permdiag
