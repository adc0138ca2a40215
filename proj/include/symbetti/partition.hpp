#pragma once

// Symmetric monomial ideals described by their generating partitions.
//
// A symmetric monomial ideal I of S_infinity is the ideal generated by all
// permutations of the monomials x^lambda for a finite antichain of
// partitions lambda. Its truncation I_n = I ∩ k[x_1..x_n] is generated by the
// orbits of the partitions of length at most n.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbetti/field.hpp"

namespace symbetti {

/// Weakly decreasing sequence of positive integers, length at least one.
class Partition {
 public:
  /// Throws Error(NotWeaklyDecreasing) if parts is empty, has a part < 1, or
  /// increases anywhere.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept;
  int first() const noexcept { return parts_.front(); }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Exponent vector a in Z_{>=0}^n of explicit length n.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> exponents);

  const std::vector<int>& exponents() const noexcept { return exponents_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }

  /// Weakly decreasing rearrangement.
  Multidegree sorted() const;
  bool is_sorted() const noexcept;
  std::vector<std::size_t> support() const;
  std::size_t support_size() const noexcept;
  int total() const noexcept;

  std::string to_string() const;

  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

 private:
  std::vector<int> exponents_;
};

/// True iff some permutation of x^lambda divides x^a, for a weakly decreasing.
/// With both sorted descending this is componentwise lambda_i <= a_i.
bool dominates(std::span<const int> sorted_exponents, const Partition& lambda);

/// Removes every partition dominated-out by another member (and duplicates).
/// The result is sorted and generates the same symmetric ideal.
std::vector<Partition> minimal_generators(std::vector<Partition> partitions);

class SymmetricIdeal {
 public:
  SymmetricIdeal() = default;
  /// Normalizes to the minimal antichain; characteristic validated.
  explicit SymmetricIdeal(std::vector<Partition> generators,
                          FieldSpec field = FieldSpec{});

  const std::vector<Partition>& generators() const noexcept {
    return generators_;
  }
  const FieldSpec& field() const noexcept { return field_; }
  SymmetricIdeal with_field(FieldSpec field) const;

  bool is_zero() const noexcept { return generators_.empty(); }
  /// Max generator length (the stabilization index).
  std::optional<int> m() const noexcept;
  /// Min first part.
  std::optional<int> w() const noexcept;
  /// Min generator length.
  std::optional<int> r() const noexcept;
  int max_part() const noexcept;

  /// I_n as an ideal of its own (generators of length <= n).
  SymmetricIdeal truncated(int n) const;

  std::string to_string() const;

  friend bool operator==(const SymmetricIdeal&, const SymmetricIdeal&) =
      default;

 private:
  std::vector<Partition> generators_;
  FieldSpec field_;
};

/// Lambda(I_n): generators of length <= n.
std::vector<Partition> restrict_to_n(const SymmetricIdeal& ideal, int n);

/// x^a in I_n where n = a.size(); generators longer than n never divide.
bool contains_monomial(const SymmetricIdeal& ideal, const Multidegree& a);

/// Number of distinct rearrangements of a: n! / prod(multiplicity!).
std::uint64_t orbit_size(const Multidegree& a, int n);

struct CandidateOptions {
  /// Drop degrees where a generator divides x^a without shrinking its
  /// support (the upper-Koszul complex is then a full simplex).
  bool prune_same_support = true;
  /// Drop sorted degrees with support t > m and a_m > a_t (cone degrees).
  bool cone_filter = true;
  /// Only degrees with every entry >= 1.
  bool full_support_only = false;
};

/// Sorted degrees that can carry a nonzero Betti number of I_n. Entries are
/// drawn from {0} ∪ {generator parts}. Empty for the zero ideal.
std::vector<Multidegree> candidate_degrees(const SymmetricIdeal& ideal, int n,
                                           const CandidateOptions& options = {});

}  // namespace symbetti
