#pragma once

// Stabilization of Betti data along the chain I_1 ⊂ I_2 ⊂ ...
//
// With m the maximal generator length, the free part F(I_{n+1}) is obtained
// from F(I_n) by (i, a) -> (i + 1, (a, a_n)) for every n >= m, and B(I_n) is
// the union of the zero-padded free parts of I_1, ..., I_n. Everything past
// level m is therefore determined by the levels 1..m.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symbetti/betti.hpp"

namespace symbetti {

/// Run-length degree prefix ++ value^repeat_count ++ 0^zero_count. Always
/// canonical: the prefix never ends with `repeated_value`.
struct CompactDegree {
  std::vector<int> prefix;
  int repeated_value = 0;
  std::int64_t repeat_count = 0;
  std::int64_t zero_count = 0;

  /// Canonicalizes; repeated_value >= 1 and repeat_count >= 1 required.
  static CompactDegree make(std::vector<int> prefix, int repeated_value,
                            std::int64_t repeat_count, std::int64_t zero_count);
  static CompactDegree from(const Multidegree& sorted_degree);

  std::int64_t length() const noexcept;
  std::int64_t total() const noexcept;
  /// Throws Error(InvalidArgument) when length() exceeds max_length.
  Multidegree expand(std::int64_t max_length = 4096) const;
  std::string to_string() const;

  friend auto operator<=>(const CompactDegree&, const CompactDegree&) = default;
};

struct CompactRecord {
  std::int64_t homological_degree = 0;
  CompactDegree degree;
  std::uint64_t rank = 0;

  friend auto operator<=>(const CompactRecord&, const CompactRecord&) = default;
};

/// Direct Betti data at levels 1..m.
struct Stabilization {
  SymmetricIdeal ideal;
  int m = 0;
  std::vector<BettiSet> levels;  // levels[t-1] = B(I_t)

  const BettiSet& level(int t) const { return levels.at(static_cast<std::size_t>(t - 1)); }
  std::vector<BettiRecord> free_at(int t) const { return level(t).free_part(); }
};

/// Throws UndefinedError for the zero ideal.
Stabilization stabilize(const SymmetricIdeal& ideal,
                        const BettiOptions& options = {});

/// F(I_n) from F(I_m): (i, a) -> (i + n - m, (a, a_m^{n-m})). Ranks are
/// carried unchanged. Throws Error(InvalidArgument) for n < m.
std::vector<CompactRecord> extrapolate_F(const std::vector<BettiRecord>& free_m,
                                         int m, std::int64_t n);

/// B(I_n) for n >= m from F(I_1), ..., F(I_m) (free_levels[t-1] = F(I_t)).
std::vector<CompactRecord> compose_B(
    const std::vector<std::vector<BettiRecord>>& free_levels, std::int64_t n);
std::vector<CompactRecord> compose_B(const Stabilization& data, std::int64_t n);

/// Number of records of B(I_n) without materializing them.
std::uint64_t compose_B_size(const Stabilization& data, std::int64_t n);

BettiRecord to_record(const CompactRecord& record);

/// A triple (i, j, c) of the segment decomposition: the positions
/// {(i + k, j + c k)} in (homological degree, row) coordinates.
struct Segment {
  int i = 0;
  int j = 0;
  int c = 0;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

using Position = std::pair<std::int64_t, std::int64_t>;  // (i, row j)

struct SegmentSet {
  int m = 0;
  std::set<Position> base;            // graded positions of B(I_{m-1})
  std::set<Segment> D;                // collapsed
  std::vector<std::pair<Segment, std::uint64_t>> weighted;  // summed ranks

  /// base ∪ union of L((i,j), c, n - m); requires n >= m.
  std::set<Position> positions(std::int64_t n) const;

  friend bool operator==(const SegmentSet&, const SegmentSet&) = default;
};

SegmentSet segments(const Stabilization& data);

/// Graded positions {(i, j) : beta_{i,i+j} != 0} of a Betti set.
std::set<Position> graded_positions(const BettiSet& betti);

struct RowCountStability {
  /// Number of distinct rows met at homological degree p, for p in
  /// [first_stable_p, n - m] and any n.
  std::size_t rows = 0;
  std::int64_t first_stable_p = 0;
};

/// Distinct lines among the segments, and the first homological degree past
/// every pairwise crossing and every base position.
RowCountStability row_count_stability(const SegmentSet& segments);

struct AsymptoticProfile {
  int m = 0;
  int pd_at_m = 0;
  /// pd(I_n) = n - pd_offset for n >= m.
  int pd_offset = 0;
  /// reg(I_n) = reg_slope * n + reg_intercept for n >= reg_threshold.
  int reg_slope = 0;
  std::int64_t reg_intercept = 0;
  std::int64_t reg_threshold = 0;
  bool cohen_macaulay = false;
  int w = 0;
  int r = 0;
};

/// pd(I_n) and reg(I_n) evaluated from the segment decomposition (n >= m).
PdReg pd_reg_from_segments(const SegmentSet& segments, std::int64_t n);

AsymptoticProfile asymptotics(const Stabilization& data);

/// "pd(I_n) = n − 1 (n ≥ 2); reg(I_n) = n + 4 (n ≥ 2); CM: false"
std::string describe(const AsymptoticProfile& profile);

/// Outcome of a two-level shift check.
struct ShiftReport {
  bool passed = true;
  /// True when, in addition, ranks agree across every checked pair.
  bool ranks_preserved = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> rank_mismatches;
};

/// beta_{i,a}(I_n) != 0 <=> beta_{i+1,(a,b)}(I_{n+1}) != 0 for every
/// full-support sorted a = (a_1..a_t, b..b) with a_t > b >= 1, checked in
/// both directions over the Betti sets at levels n and n+1.
ShiftReport verify_shift_equivalence(const BettiSet& level_n,
                                const BettiSet& level_next, int m);
ShiftReport verify_shift_equivalence(const SymmetricIdeal& ideal, int n,
                                const BettiOptions& options = {});

/// Every full-support record (i, a) at level n has some k in [1, a_n] with
/// beta_{i+1,(a,k)}(I_{n+1}) != 0.
ShiftReport verify_lift(const BettiSet& level_n,
                               const BettiSet& level_next);

/// Betti data of an ideal generated by partitions of length 2, from the
/// closed form. With generators (p_1,q_1), ..., (p_t,q_t), p_1 > ... > p_t:
/// (i, (p_k, q_k^{i+1}, 0...)) for every k, (i+1, (p_k, q_{k+1}^{i+1}, 0...))
/// for k < t, and (i+1, (p_t, p_t^{i+1}, 0...)) when p_t > q_t. Ranks are 1
/// except when p_t = q_t, where (i, (p_t^{i+2}, 0...)) has rank i + 1. Throws Error(InvalidArgument) if any generator
/// has length != 2 or n < 2.
BettiSet length2_closed_form(const SymmetricIdeal& ideal, int n);

/// (m - p, (w^m)) with p = min{k : x_1^w..x_k^w x_{k+1}^{w-1}..x_m^{w-1} ∈ I_m}.
/// This record is always present in B(I_m) and realizes the slope w - 1.
std::pair<int, Multidegree> regularity_witness(const SymmetricIdeal& ideal);

/// Rank carrying check: compares extrapolated F(I_n) against direct level
/// data for each supplied level n > m.
ShiftReport verify_rank_carrying(const Stabilization& data,
                                 const std::vector<BettiSet>& direct_levels);

}  // namespace symbetti
