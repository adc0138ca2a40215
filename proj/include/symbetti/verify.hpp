#pragma once

// Bundled invariant suite run by `symbetti verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "symbetti/betti.hpp"

namespace symbetti {

struct VerifyOptions {
  int max_n = 4;
  BettiOptions betti;
  /// Characteristics compared at level max_n.
  std::vector<std::uint32_t> compare_characteristics{0, 2, 3};
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> details;  // counterexamples or skip reasons
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Informational lines (rank preservation, characteristic differences).
  std::vector<std::string> notes;

  bool passed() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Runs: Euler identity and d∘d = 0 on every computed upper-Koszul complex,
/// Taylor-oracle equivalence, the support bound i < |supp(a)|, the shift
/// equivalence, the lift property, extrapolation agreement, the segment
/// decomposition and pd increments, for levels 1..max_n. Size-capped items are skipped, not failed.
VerifyReport run_verification(const SymmetricIdeal& ideal,
                              const VerifyOptions& options);

}  // namespace symbetti
