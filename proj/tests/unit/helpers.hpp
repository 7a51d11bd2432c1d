#pragma once

#include <string>
#include <vector>

#include "permdiag/error.hpp"
#include "permdiag/partition.hpp"
#include "permdiag/permutation.hpp"

namespace permdiag::testing {

inline Permutation perm(const std::string& text) { return Permutation::parse(text); }
inline Partition part(std::vector<int> parts) { return Partition::from_parts(std::move(parts)); }

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected permdiag::Error");
}

}  // namespace permdiag::testing
