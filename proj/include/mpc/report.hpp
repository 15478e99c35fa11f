#pragma once

#include <string>
#include <vector>

namespace mpc {

struct ClaimCheck {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<ClaimCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const ClaimCheck* find(const std::string& claim) const {
    for (const auto& c : checks)
      if (c.claim == claim) return &c;
    return nullptr;
  }
};

}  // namespace mpc
