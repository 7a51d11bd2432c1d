#include "permdiag_cli/io.hpp"

#include <string>

#include "permdiag/error.hpp"

namespace permdiag::io {

namespace {

json encode_cells(std::span<const Cell> cells) {
  json out = json::array();
  for (const auto& c : cells) out.push_back({c.row, c.col});
  return out;
}

std::vector<Cell> decode_cells(const json& j) {
  std::vector<Cell> cells;
  for (const auto& pair : j) cells.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
  return cells;
}

std::string cell_key(Cell c) { return std::to_string(c.row) + "," + std::to_string(c.col); }

}  // namespace

json encode(const Permutation& p) { return p.to_string(); }
json encode(const Partition& lambda) { return lambda.to_string(); }

json encode(const DyckPath& path) {
  const auto h = heights(path);
  return {{"n", path.half_length()}, {"steps", path.to_string()}, {"w", h.w}, {"returns", h.returns}};
}

json encode(const RankedDiagram& diagram) {
  json ranks = json::object();
  const auto cells = diagram.base().cells();
  for (std::size_t i = 0; i < cells.size(); ++i) ranks[cell_key(cells[i])] = diagram.ranks()[i];
  return {{"n", diagram.base().n()},
          {"cells", encode_cells(cells)},
          {"ranks", ranks},
          {"essential", encode_cells(diagram.essential())}};
}

json encode(const StatisticTable& table) {
  json counts = json::object();
  for (const auto& [value, count] : table.counts()) counts[std::to_string(value)] = count;
  return {{"counts", counts}, {"total", table.total()}};
}

json encode(const IdentityResult& result) {
  return {{"name", result.name},
          {"n", result.n},
          {"expected", result.expected},
          {"got", result.got},
          {"status", result.pass ? "PASS" : "FAIL"}};
}

json encode(const ABHProfile& profile) {
  return {{"lambda", encode(profile.lambda)},
          {"a", profile.a},
          {"a_bar", profile.a_bar},
          {"b", profile.b},
          {"h", profile.h}};
}

json encode(const ShiftedProfile& profile) {
  json l = json::object();
  for (const auto& [s, value] : profile.l_values) l[std::to_string(s)] = value;
  return {{"l", l}, {"L", encode(profile.L)}};
}

Permutation decode_permutation(const json& j) { return Permutation::parse(j.get<std::string>()); }
Partition decode_partition(const json& j) { return Partition::parse(j.get<std::string>()); }

DyckPath decode_path(const json& j) {
  auto path = DyckPath::parse(j.at("steps").get<std::string>());
  if (path.half_length() != j.at("n").get<int>()) throw Error(ErrorCode::Parse, "path length disagrees with n");
  return path;
}

RankedDiagram decode_diagram(const json& j) {
  Diagram base(j.at("n").get<int>(), decode_cells(j.at("cells")));
  std::vector<int> ranks;
  const auto& table = j.at("ranks");
  for (const auto& c : base.cells()) ranks.push_back(table.at(cell_key(c)).get<int>());
  return RankedDiagram(std::move(base), std::move(ranks), decode_cells(j.at("essential")));
}

StatisticTable decode_table(const json& j) {
  StatisticTable table;
  for (const auto& [key, count] : j.at("counts").items()) table.add(std::stoi(key), count.get<std::uint64_t>());
  if (table.total() != j.at("total").get<std::uint64_t>()) throw Error(ErrorCode::Parse, "table total disagrees");
  return table;
}

IdentityResult decode_identity(const json& j) {
  return {j.at("name").get<std::string>(), j.at("n").get<int>(), j.at("expected").get<std::string>(),
          j.at("got").get<std::string>(), j.at("status").get<std::string>() == "PASS"};
}

ABHProfile decode_abh(const json& j) {
  return {decode_partition(j.at("lambda")), j.at("a").get<std::vector<int>>(), j.at("a_bar").get<std::vector<int>>(),
          j.at("b").get<std::vector<int>>(), j.at("h").get<std::vector<int>>()};
}

ShiftedProfile decode_shifted(const json& j) {
  ShiftedProfile out;
  for (const auto& [key, value] : j.at("l").items()) out.l_values[std::stoi(key)] = value.get<int>();
  out.L = decode_partition(j.at("L"));
  return out;
}

}  // namespace permdiag::io
