#pragma once

// Tor of I_n from the Taylor resolution, independently of the upper-Koszul
// route. Used to cross-check betti_at_degree.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "symbetti/homology.hpp"
#include "symbetti/partition.hpp"

namespace symbetti {

/// Largest generator set the subset enumeration accepts.
inline constexpr std::size_t kTaylorCap = 20;

/// Minimal monomial generators G(I_n): exponent vectors of length n,
/// pairwise incomparable under divisibility.
class MonomialGeneratorSet {
 public:
  MonomialGeneratorSet() = default;
  /// Throws Error(InvalidArgument) when lengths differ or one divides another.
  MonomialGeneratorSet(int n, std::vector<std::vector<int>> monomials);

  /// Every permutation of every partition of length <= n.
  static MonomialGeneratorSet expand(const SymmetricIdeal& ideal, int n);

  int n() const noexcept { return n_; }
  const std::vector<std::vector<int>>& monomials() const noexcept {
    return monomials_;
  }
  std::size_t size() const noexcept { return monomials_.size(); }

  /// The generators dividing x^a.
  MonomialGeneratorSet divisors_of(const Multidegree& a) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> monomials_;
};

/// Degree-a strand of Taylor(G) ⊗ k, indexed for the ideal: subsets S with
/// lcm(S) = x^a sit in homological degree |S| - 1. Entry i is the
/// differential from degree i to degree i - 1 (entry 0 maps to the zero
/// module and has no rows). Throws SizeCapError if more than kTaylorCap
/// generators divide x^a.
std::vector<SparseMatrix> taylor_strand_differentials(
    const MonomialGeneratorSet& generators, const Multidegree& a);

/// i -> dim Tor_i(I, k)_a, nonzero entries only.
std::map<int, std::uint64_t> taylor_strand_tor(
    const MonomialGeneratorSet& generators, const Multidegree& a,
    const FieldSpec& field);

/// {(|F| - 1, lcm F) : F nonempty, no other subset has the same lcm}.
/// Throws SizeCapError above kTaylorCap generators.
std::set<std::pair<int, Multidegree>> scarf_degrees(
    const MonomialGeneratorSet& generators);

}  // namespace symbetti
