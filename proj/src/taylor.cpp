#include "symbetti/taylor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "symbetti/errors.hpp"

namespace symbetti {

namespace {

bool divides(const std::vector<int>& g, const std::vector<int>& a) {
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g[k] > a[k]) return false;
  return true;
}

void check_cap(std::size_t count, const char* what) {
  if (count > kTaylorCap)
    throw SizeCapError(std::string(what) + ": " + std::to_string(count) +
                       " generators exceed the cap of " +
                       std::to_string(kTaylorCap));
}

}  // namespace

MonomialGeneratorSet::MonomialGeneratorSet(int n,
                                           std::vector<std::vector<int>> monomials)
    : n_(n), monomials_(std::move(monomials)) {
  std::sort(monomials_.begin(), monomials_.end());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()),
                   monomials_.end());
  for (const auto& g : monomials_)
    if (static_cast<int>(g.size()) != n)
      throw Error(ErrorCode::InvalidArgument, "generator length differs from n");
  for (std::size_t x = 0; x < monomials_.size(); ++x)
    for (std::size_t y = 0; y < monomials_.size(); ++y)
      if (x != y && divides(monomials_[x], monomials_[y]))
        throw Error(ErrorCode::InvalidArgument, "generators are not minimal");
}

MonomialGeneratorSet MonomialGeneratorSet::expand(const SymmetricIdeal& ideal,
                                                  int n) {
  std::vector<std::vector<int>> out;
  for (const auto& lambda : restrict_to_n(ideal, n)) {
    std::vector<int> e = lambda.parts();
    e.resize(static_cast<std::size_t>(n), 0);
    std::sort(e.begin(), e.end());
    do {
      out.push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return MonomialGeneratorSet(n, std::move(out));
}

MonomialGeneratorSet MonomialGeneratorSet::divisors_of(const Multidegree& a) const {
  MonomialGeneratorSet out;
  out.n_ = n_;
  for (const auto& g : monomials_)
    if (divides(g, a.exponents())) out.monomials_.push_back(g);
  return out;
}

std::vector<SparseMatrix> taylor_strand_differentials(
    const MonomialGeneratorSet& generators, const Multidegree& a) {
  if (static_cast<int>(a.size()) != generators.n())
    throw Error(ErrorCode::InvalidArgument, "degree length differs from n");
  const auto relevant = generators.divisors_of(a);
  const auto& gens = relevant.monomials();
  check_cap(gens.size(), "Taylor strand");
  const int count = static_cast<int>(gens.size());
  const auto& target = a.exponents();

  // Subsets of divisors with lcm exactly x^a, grouped by cardinality.
  std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(count) + 1);
  std::vector<int> lcm(target.size(), 0);
  std::function<void(int, std::uint32_t)> walk = [&](int next, std::uint32_t set) {
    if (set && lcm == target) by_size[static_cast<std::size_t>(std::popcount(set))].push_back(set);
    for (int k = next; k < count; ++k) {
      const auto saved = lcm;
      const auto& g = gens[static_cast<std::size_t>(k)];
      for (std::size_t v = 0; v < lcm.size(); ++v) lcm[v] = std::max(lcm[v], g[v]);
      walk(k + 1, set | (std::uint32_t{1} << k));
      lcm = saved;
    }
  };
  walk(0, 0);

  std::size_t top = 0;
  for (std::size_t s = 1; s < by_size.size(); ++s)
    if (!by_size[s].empty()) top = s;
  std::vector<SparseMatrix> differentials;
  if (top == 0) return differentials;
  for (auto& v : by_size) std::sort(v.begin(), v.end());

  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> index(by_size.size());
  for (std::size_t s = 1; s <= top; ++s)
    for (std::size_t k = 0; k < by_size[s].size(); ++k)
      index[s].emplace(by_size[s][k], static_cast<std::uint32_t>(k));

  // Homological degree i <-> subsets of size i + 1.
  for (std::size_t s = 1; s <= top; ++s) {
    SparseMatrix d;
    d.cols = by_size[s].size();
    d.rows = s >= 2 ? by_size[s - 1].size() : 0;
    d.columns.resize(d.cols);
    if (s >= 2) {
      for (std::size_t c = 0; c < d.cols; ++c) {
        const std::uint32_t set = by_size[s][c];
        int position = 0;
        for (std::uint32_t rest = set; rest; rest &= rest - 1, ++position) {
          const std::uint32_t face = set & ~(rest & -rest);
          auto it = index[s - 1].find(face);
          // Faces with a smaller lcm carry a nonconstant coefficient.
          if (it != index[s - 1].end())
            d.columns[c].push_back({it->second, position % 2 == 0 ? 1 : -1});
        }
        std::sort(d.columns[c].begin(), d.columns[c].end(),
                  [](const auto& x, const auto& y) { return x.row < y.row; });
      }
    }
    differentials.push_back(std::move(d));
  }
  return differentials;
}

std::map<int, std::uint64_t> taylor_strand_tor(
    const MonomialGeneratorSet& generators, const Multidegree& a,
    const FieldSpec& field) {
  const auto d = taylor_strand_differentials(generators, a);
  std::vector<std::size_t> ranks(d.size() + 1, 0);
  for (std::size_t i = 1; i < d.size(); ++i) ranks[i] = rank_over_field(d[i], field);
  std::map<int, std::uint64_t> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::size_t dim = d[i].cols - ranks[i] - ranks[i + 1];
    if (dim) out[static_cast<int>(i)] = dim;
  }
  return out;
}

std::set<std::pair<int, Multidegree>> scarf_degrees(
    const MonomialGeneratorSet& generators) {
  const auto& gens = generators.monomials();
  check_cap(gens.size(), "Scarf complex");
  struct Seen {
    std::size_t count = 0;
    int size = 0;
  };
  std::map<std::vector<int>, Seen> by_lcm;
  std::vector<int> lcm(static_cast<std::size_t>(generators.n()), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t next, int size) {
    if (size > 0) {
      auto& s = by_lcm[lcm];
      ++s.count;
      s.size = size;
    }
    for (std::size_t k = next; k < gens.size(); ++k) {
      const auto saved = lcm;
      for (std::size_t v = 0; v < lcm.size(); ++v) lcm[v] = std::max(lcm[v], gens[k][v]);
      walk(k + 1, size + 1);
      lcm = saved;
    }
  };
  walk(0, 0);
  std::set<std::pair<int, Multidegree>> out;
  for (const auto& [degree, seen] : by_lcm)
    if (seen.count == 1) out.emplace(seen.size - 1, Multidegree(degree));
  return out;
}

}  // namespace symbetti
