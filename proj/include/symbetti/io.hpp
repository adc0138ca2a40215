#pragma once

// Ideal files, JSON payloads and text rendering.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "symbetti/betti.hpp"
#include "symbetti/stability.hpp"

namespace symbetti {

struct ParsedIdeal {
  SymmetricIdeal ideal;
  std::optional<std::string> name;
  /// One entry per input partition dropped by minimalization.
  std::vector<std::string> warnings;
};

/// {"generators": [[int,...],...], "characteristic": int?, "name": string?}.
/// Throws Error with ParseError, NotWeaklyDecreasing or NotPrime.
ParsedIdeal parse_ideal_text(const std::string& text);
ParsedIdeal parse_ideal_file(const std::filesystem::path& path);

nlohmann::json to_json(const CompactDegree& degree);
CompactDegree compact_from_json(const nlohmann::json& j);

/// {"n", "records": [{"i","degree","rank","compact"}], "table": [{"i","j","beta"}]}
nlohmann::json to_json(const BettiSet& betti, bool with_table = true);
BettiSet betti_from_json(const nlohmann::json& j);

/// {"base": [[i,j],...], "D": [[i,j,c],...], "m": int, "weighted": [[i,j,c,rank],...]}
nlohmann::json to_json(const SegmentSet& segments);
SegmentSet segments_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AsymptoticProfile& profile);

/// Betti table grid: column i, row j holds beta_{i,i+j}; "." for zero.
std::string render_table(const GradedTable& table);

/// "D = {(0,4,1),(0,6,0),(1,6,1)}, m = 2" plus base positions and segment
/// summary lines.
std::string render_segments(const SegmentSet& segments);

/// Extrapolated B(I_n) for possibly huge n.
struct Extrapolation {
  std::int64_t n = 0;
  int m = 0;
  std::uint64_t count = 0;
  /// Zero-padded free parts of I_1..I_{m-1}.
  std::vector<CompactRecord> fixed;
  /// F(I_m); each member produces the records for k = m..n.
  std::vector<BettiRecord> families;
  /// False when direct computation at m+1, m+2 disagreed on ranks; ranks are
  /// then omitted from the output.
  bool ranks_verified = true;
  std::vector<std::string> warnings;
};

/// Ranks are cross-checked against direct computations at levels m+1 and
/// m+2 when those fit the vertex cap.
Extrapolation extrapolate(const Stabilization& data, std::int64_t n,
                          const BettiOptions& options = {});

/// Full record listing is included when n <= kExtrapolationListLimit.
inline constexpr std::int64_t kExtrapolationListLimit = 64;

nlohmann::json to_json(const Extrapolation& extrapolation);
std::string render_extrapolation(const Extrapolation& extrapolation);

}  // namespace symbetti
