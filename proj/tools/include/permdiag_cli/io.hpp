#pragma once

#include "json.hpp"

#include "permdiag/diagram.hpp"
#include "permdiag/dyck.hpp"
#include "permdiag/enumeration.hpp"
#include "permdiag/identities.hpp"
#include "permdiag/partition.hpp"
#include "permdiag/permutation.hpp"
#include "permdiag/shifted.hpp"

// JSON codecs for the CLI. Permutations, partitions and paths travel as their
// textual forms; composite values as objects. Every encoder has a decoder
// that restores an equal value.
namespace permdiag::io {

using nlohmann::json;

json encode(const Permutation& p);
json encode(const Partition& lambda);
/// {"n", "steps", "w", "returns"}
json encode(const DyckPath& path);
/// {"n", "cells", "ranks": {"i,j": r}, "essential"}
json encode(const RankedDiagram& diagram);
/// {"counts": {"value": count}, "total"}
json encode(const StatisticTable& table);
/// {"name", "n", "expected", "got", "status"}
json encode(const IdentityResult& result);
/// {"lambda", "a", "a_bar", "b", "h"}
json encode(const ABHProfile& profile);
/// {"l": {"s": l_s}, "L"}
json encode(const ShiftedProfile& profile);

Permutation decode_permutation(const json& j);
Partition decode_partition(const json& j);
DyckPath decode_path(const json& j);
RankedDiagram decode_diagram(const json& j);
StatisticTable decode_table(const json& j);
IdentityResult decode_identity(const json& j);
ABHProfile decode_abh(const json& j);
ShiftedProfile decode_shifted(const json& j);

}  // namespace permdiag::io
