#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mpc/caps.hpp"
#include "mpc/graph.hpp"
#include "mpc/report.hpp"

namespace mpc {

struct VerifyOptions {
  int workers = 1;
  int cap_pc = kDefaultPathCoverCap;
  int cap_dom = kDefaultDominationCap;
  int cap_enum = kDefaultEnumCap;
};

struct InstanceResult {
  std::string id;
  std::vector<std::pair<std::string, long long>> values;
  std::vector<ClaimCheck> checks;
  bool skipped = false;  // some solver refused (cap); remaining claims still reported
  std::string skip_reason;
};

struct VerifySummary {
  std::vector<InstanceResult> results;
  int instances() const { return static_cast<int>(results.size()); }
  int failed_checks() const;
  int skipped_instances() const;
};

// Bound and characterization claims applicable to one graph.
InstanceResult check_graph_claims(const Graph& g, const std::string& id, const VerifyOptions& opt);

// All trees 3..max_n: per-tree claims plus the equality/enumeration/recognizer
// biconditional, plus label checks on every enumerated family member.
VerifySummary verify_trees(int max_n, const VerifyOptions& opt);

// Seeded random connected corpus; min_degree > 0 filters samples.
VerifySummary verify_random(int count, int min_n, int max_n, std::uint64_t seed, int min_degree,
                            const VerifyOptions& opt);

// family is one of gamma-t-tight, gamma-nt-tight, subdivided-star, gnd.
VerifySummary verify_extremal(const std::string& family, int k_min, int k_max, const VerifyOptions& opt);

std::vector<Graph> sample_connected(int count, int min_n, int max_n, std::uint64_t seed, int min_degree);

void write_records(std::ostream& out, const VerifySummary& s);
void write_text(std::ostream& out, const VerifySummary& s);

}  // namespace mpc
