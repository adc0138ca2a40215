#pragma once

#include <cstdint>
#include <string>

namespace symbetti {

bool is_prime(std::uint32_t value) noexcept;

/// Ground field: characteristic 0 (the rationals) or a prime p (F_p).
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws Error(NotPrime) unless characteristic is 0 or a prime below 2^31.
  explicit FieldSpec(std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool is_rational() const noexcept { return characteristic_ == 0; }

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t characteristic_ = 0;
};

}  // namespace symbetti
