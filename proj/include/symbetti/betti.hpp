#pragma once

// Multigraded Betti numbers of I_n via upper-Koszul simplicial complexes:
// beta_{i,a}(I_n) = dim H~_{i-1}(Delta_a), where
// Delta_a = {F ⊆ supp(a) : x^a / x^F ∈ I_n}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symbetti/homology.hpp"
#include "symbetti/partition.hpp"

namespace symbetti {

struct BettiRecord {
  int homological_degree = 0;
  Multidegree degree;  // sorted, length n
  std::uint64_t rank = 0;

  friend auto operator<=>(const BettiRecord&, const BettiRecord&) = default;
};

/// Sorted-representative Betti data of I_n. Records are kept ordered by
/// (homological degree, degree) and never carry rank 0.
class BettiSet {
 public:
  BettiSet() = default;
  BettiSet(int n, std::vector<BettiRecord> records);

  int n() const noexcept { return n_; }
  /// B(I_n): every record.
  const std::vector<BettiRecord>& records() const noexcept { return records_; }
  /// F(I_n): records whose degree has no zero entry.
  std::vector<BettiRecord> free_part() const;
  bool empty() const noexcept { return records_.empty(); }

  /// Rank at a degree (sorted on lookup); 0 when absent.
  std::uint64_t rank(int i, const Multidegree& degree) const;

  friend bool operator==(const BettiSet&, const BettiSet&) = default;

 private:
  int n_ = 0;
  std::vector<BettiRecord> records_;
};

/// Delta_a on the vertex set supp(a), vertices relabelled 0..|supp|-1 in
/// increasing order of position. Throws SizeCapError when |supp(a)|
/// exceeds vertex_cap().
SimplicialComplexData upper_koszul_complex(const SymmetricIdeal& ideal,
                                           const Multidegree& a, int n);

/// i -> beta_{i,a}(I_n) over ideal.field(); only nonzero ranks.
std::map<int, std::uint64_t> betti_at_degree(const SymmetricIdeal& ideal,
                                             const Multidegree& a, int n);

struct BettiOptions {
  CandidateOptions candidates;
  /// Worker threads; 0 = hardware concurrency.
  unsigned threads = 0;
};

BettiSet betti_set(const SymmetricIdeal& ideal, int n,
                   const BettiOptions& options = {});

/// (i, j) -> beta_{i,i+j}(I_n), summing rank * orbit size.
using GradedTable = std::map<std::pair<int, int>, std::uint64_t>;

GradedTable graded_table(const BettiSet& betti);

struct PdReg {
  int pd = 0;
  int reg = 0;
  friend bool operator==(const PdReg&, const PdReg&) = default;
};

/// nullopt for an empty Betti set (zero ideal).
std::optional<PdReg> pd_and_reg(const BettiSet& betti);

}  // namespace symbetti
