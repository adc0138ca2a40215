#include "symbetti/betti.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "symbetti/errors.hpp"

namespace symbetti {

BettiSet::BettiSet(int n, std::vector<BettiRecord> records)
    : n_(n), records_(std::move(records)) {
  std::erase_if(records_, [](const BettiRecord& r) { return r.rank == 0; });
  std::sort(records_.begin(), records_.end());
}

std::vector<BettiRecord> BettiSet::free_part() const {
  std::vector<BettiRecord> out;
  for (const auto& r : records_)
    if (r.degree.support_size() == r.degree.size()) out.push_back(r);
  return out;
}

std::uint64_t BettiSet::rank(int i, const Multidegree& degree) const {
  const auto key = degree.sorted();
  auto it = std::lower_bound(
      records_.begin(), records_.end(), std::make_pair(i, &key),
      [](const BettiRecord& r, const std::pair<int, const Multidegree*>& k) {
        return std::tie(r.homological_degree, r.degree) <
               std::tie(k.first, *k.second);
      });
  if (it != records_.end() && it->homological_degree == i && it->degree == key)
    return it->rank;
  return 0;
}

SimplicialComplexData upper_koszul_complex(const SymmetricIdeal& ideal,
                                           const Multidegree& a, int n) {
  if (static_cast<int>(a.size()) != n)
    throw Error(ErrorCode::InvalidArgument,
                "upper_koszul_complex: degree length differs from n");
  const auto support = a.support();
  const int t = static_cast<int>(support.size());
  if (t > vertex_cap())
    throw SizeCapError("upper-Koszul complex needs " + std::to_string(t) +
                       " vertices; cap is " + std::to_string(vertex_cap()) +
                       " (SYMBETTI_MAX_VERTICES)");
  const auto gens = restrict_to_n(ideal, n);
  std::vector<int> quotient(static_cast<std::size_t>(t));
  return SimplicialComplexData::from_predicate(t, [&](FaceMask face) {
    for (int k = 0; k < t; ++k)
      quotient[static_cast<std::size_t>(k)] =
          a[support[static_cast<std::size_t>(k)]] - ((face >> k) & 1);
    std::sort(quotient.begin(), quotient.end(), std::greater<>());
    for (const auto& g : gens)
      if (dominates(quotient, g)) return true;
    return false;
  });
}

std::map<int, std::uint64_t> betti_at_degree(const SymmetricIdeal& ideal,
                                             const Multidegree& a, int n) {
  const auto complex = upper_koszul_complex(ideal, a, n);
  std::map<int, std::uint64_t> out;
  for (const auto& [i, dim] : reduced_homology_dims(complex, ideal.field()))
    out[i + 1] = dim;
  return out;
}

BettiSet betti_set(const SymmetricIdeal& ideal, int n,
                   const BettiOptions& options) {
  const auto candidates = candidate_degrees(ideal, n, options.candidates);
  std::vector<std::vector<BettiRecord>> per_degree(candidates.size());

  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, candidates.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= candidates.size()) return;
      try {
        for (const auto& [i, rank] : betti_at_degree(ideal, candidates[k], n))
          per_degree[k].push_back({i, candidates[k], rank});
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = candidates.size();
        return;
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<BettiRecord> records;
  for (auto& batch : per_degree)
    for (auto& r : batch) records.push_back(std::move(r));
  return BettiSet(n, std::move(records));
}

GradedTable graded_table(const BettiSet& betti) {
  GradedTable table;
  for (const auto& r : betti.records()) {
    const int j = r.degree.total() - r.homological_degree;
    table[{r.homological_degree, j}] += orbit_size(r.degree, betti.n()) * r.rank;
  }
  return table;
}

std::optional<PdReg> pd_and_reg(const BettiSet& betti) {
  if (betti.empty()) return std::nullopt;
  PdReg out{0, 0};
  bool first = true;
  for (const auto& r : betti.records()) {
    const int j = r.degree.total() - r.homological_degree;
    if (first) {
      out = {r.homological_degree, j};
      first = false;
    } else {
      out.pd = std::max(out.pd, r.homological_degree);
      out.reg = std::max(out.reg, j);
    }
  }
  return out;
}

}  // namespace symbetti
