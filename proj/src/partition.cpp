#include "symbetti/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "symbetti/errors.hpp"

namespace symbetti {

bool is_prime(std::uint32_t value) noexcept {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2)
    if (value % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic)
    : characteristic_(characteristic) {
  if (characteristic != 0 &&
      (!is_prime(characteristic) || characteristic >= (1u << 31)))
    throw Error(ErrorCode::NotPrime,
                "characteristic must be 0 or a prime below 2^31, got " +
                    std::to_string(characteristic));
}

std::string FieldSpec::name() const {
  return characteristic_ == 0 ? "QQ" : "ZZ/" + std::to_string(characteristic_);
}

namespace {

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw Error(ErrorCode::NotWeaklyDecreasing, "partition must be nonempty");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw Error(ErrorCode::NotWeaklyDecreasing,
                  "partition parts must be positive: " + join(parts_));
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw Error(ErrorCode::NotWeaklyDecreasing,
                  "partition is not weakly decreasing: " + join(parts_));
  }
}

int Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const { return join(parts_); }

Multidegree::Multidegree(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
  for (int e : exponents_)
    if (e < 0)
      throw Error(ErrorCode::InvalidArgument,
                  "multidegree entries must be non-negative");
}

Multidegree Multidegree::sorted() const {
  auto copy = exponents_;
  std::sort(copy.begin(), copy.end(), std::greater<>());
  return Multidegree(std::move(copy));
}

bool Multidegree::is_sorted() const noexcept {
  return std::is_sorted(exponents_.begin(), exponents_.end(),
                        std::greater<>());
}

std::vector<std::size_t> Multidegree::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > 0) out.push_back(i);
  return out;
}

std::size_t Multidegree::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exponents_.begin(), exponents_.end(),
                    [](int e) { return e > 0; }));
}

int Multidegree::total() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

std::string Multidegree::to_string() const { return join(exponents_); }

bool dominates(std::span<const int> sorted_exponents, const Partition& lambda) {
  const auto& parts = lambda.parts();
  if (parts.size() > sorted_exponents.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] > sorted_exponents[i]) return false;
  return true;
}

std::vector<Partition> minimal_generators(std::vector<Partition> partitions) {
  std::sort(partitions.begin(), partitions.end());
  partitions.erase(std::unique(partitions.begin(), partitions.end()),
                   partitions.end());
  std::vector<Partition> kept;
  for (const auto& lambda : partitions) {
    bool redundant = false;
    for (const auto& mu : partitions) {
      if (mu == lambda) continue;
      if (dominates(lambda.parts(), mu)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(lambda);
  }
  return kept;
}

SymmetricIdeal::SymmetricIdeal(std::vector<Partition> generators,
                               FieldSpec field)
    : generators_(minimal_generators(std::move(generators))), field_(field) {}

SymmetricIdeal SymmetricIdeal::with_field(FieldSpec field) const {
  SymmetricIdeal copy = *this;
  copy.field_ = field;
  return copy;
}

std::optional<int> SymmetricIdeal::m() const noexcept {
  if (generators_.empty()) return std::nullopt;
  std::size_t best = 0;
  for (const auto& g : generators_) best = std::max(best, g.length());
  return static_cast<int>(best);
}

std::optional<int> SymmetricIdeal::w() const noexcept {
  if (generators_.empty()) return std::nullopt;
  int best = generators_.front().first();
  for (const auto& g : generators_) best = std::min(best, g.first());
  return best;
}

std::optional<int> SymmetricIdeal::r() const noexcept {
  if (generators_.empty()) return std::nullopt;
  std::size_t best = generators_.front().length();
  for (const auto& g : generators_) best = std::min(best, g.length());
  return static_cast<int>(best);
}

int SymmetricIdeal::max_part() const noexcept {
  int best = 0;
  for (const auto& g : generators_) best = std::max(best, g.first());
  return best;
}

SymmetricIdeal SymmetricIdeal::truncated(int n) const {
  SymmetricIdeal copy;
  copy.generators_ = restrict_to_n(*this, n);
  copy.field_ = field_;
  return copy;
}

std::string SymmetricIdeal::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + "} over " + field_.name();
}

std::vector<Partition> restrict_to_n(const SymmetricIdeal& ideal, int n) {
  std::vector<Partition> out;
  for (const auto& g : ideal.generators())
    if (static_cast<int>(g.length()) <= n) out.push_back(g);
  return out;
}

bool contains_monomial(const SymmetricIdeal& ideal, const Multidegree& a) {
  const auto sorted = a.sorted();
  for (const auto& g : ideal.generators())
    if (dominates(sorted.exponents(), g)) return true;
  return false;
}

std::uint64_t orbit_size(const Multidegree& a, int n) {
  if (static_cast<int>(a.size()) != n)
    throw Error(ErrorCode::InvalidArgument,
                "orbit_size: degree length differs from n");
  std::map<int, int> multiplicity;
  for (int e : a.exponents()) ++multiplicity[e];
  // Product of binomials: choose positions for each value in turn.
  std::uint64_t result = 1;
  int remaining = n;
  for (const auto& [value, count] : multiplicity) {
    std::uint64_t binom = 1;
    for (int k = 1; k <= count; ++k) {
      binom = binom * static_cast<std::uint64_t>(remaining - count + k) /
              static_cast<std::uint64_t>(k);
    }
    result *= binom;
    remaining -= count;
  }
  return result;
}

std::vector<Multidegree> candidate_degrees(const SymmetricIdeal& ideal, int n,
                                           const CandidateOptions& options) {
  const auto gens = restrict_to_n(ideal, n);
  if (gens.empty() || n <= 0) return {};
  std::size_t m = 0;
  std::set<int, std::greater<>> entry_set{0};
  for (const auto& g : gens) {
    m = std::max(m, g.length());
    entry_set.insert(g.parts().begin(), g.parts().end());
  }
  const std::vector<int> entries(entry_set.begin(), entry_set.end());

  std::vector<Multidegree> out;
  std::vector<int> current(static_cast<std::size_t>(n));
  std::vector<int> reduced;

  auto accept = [&]() {
    std::size_t t = 0;
    while (t < current.size() && current[t] > 0) ++t;
    if (t == 0) return;
    if (options.full_support_only && t != current.size()) return;
    bool member = false;
    for (const auto& g : gens)
      if (dominates(current, g)) {
        member = true;
        break;
      }
    if (!member) return;
    if (options.cone_filter && t > m && current[m - 1] > current[t - 1])
      return;
    if (options.prune_same_support) {
      reduced.assign(current.begin(), current.begin() + t);
      for (int& e : reduced) --e;
      for (const auto& g : gens)
        if (dominates(reduced, g)) return;
    }
    out.emplace_back(current);
  };

  // Weakly decreasing sequences over the entry set, in lexicographically
  // decreasing order of the entry index.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos,
                                                           std::size_t from) {
    if (pos == current.size()) {
      accept();
      return;
    }
    for (std::size_t k = from; k < entries.size(); ++k) {
      current[pos] = entries[k];
      fill(pos + 1, k);
    }
  };
  fill(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symbetti
