#pragma once

#include <stdexcept>
#include <string>

namespace mpc {

// Exact solvers refuse inputs above these sizes unless the caller raises the cap.
inline constexpr int kDefaultEnumCap = 12;        // tree / family enumeration, vertices
inline constexpr int kDefaultPathCoverCap = 22;   // subset-DP path cover, vertices
inline constexpr int kDefaultDominationCap = 24;  // domination search, vertices
inline constexpr int kDefaultVertexBudget = 300;  // generated construction size
inline constexpr unsigned long long kDefaultSeed = 12345;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mpc
