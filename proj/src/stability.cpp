#include "symbetti/stability.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "symbetti/errors.hpp"

namespace symbetti {

CompactDegree CompactDegree::make(std::vector<int> prefix, int repeated_value,
                                  std::int64_t repeat_count,
                                  std::int64_t zero_count) {
  if (repeated_value < 1 || repeat_count < 1 || zero_count < 0)
    throw Error(ErrorCode::InvalidArgument, "malformed compact degree");
  while (!prefix.empty() && prefix.back() == repeated_value) {
    prefix.pop_back();
    ++repeat_count;
  }
  return {std::move(prefix), repeated_value, repeat_count, zero_count};
}

CompactDegree CompactDegree::from(const Multidegree& sorted_degree) {
  const auto& e = sorted_degree.exponents();
  const std::size_t t = sorted_degree.support_size();
  if (t == 0 || !sorted_degree.is_sorted())
    throw Error(ErrorCode::InvalidArgument,
                "compact form needs a sorted nonzero degree");
  std::vector<int> prefix(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(t - 1));
  return make(std::move(prefix), e[t - 1], 1,
              static_cast<std::int64_t>(e.size() - t));
}

std::int64_t CompactDegree::length() const noexcept {
  return static_cast<std::int64_t>(prefix.size()) + repeat_count + zero_count;
}

std::int64_t CompactDegree::total() const noexcept {
  std::int64_t sum = 0;
  for (int p : prefix) sum += p;
  return sum + repeat_count * repeated_value;
}

Multidegree CompactDegree::expand(std::int64_t max_length) const {
  if (length() > max_length)
    throw Error(ErrorCode::InvalidArgument,
                "compact degree of length " + std::to_string(length()) +
                    " is too long to expand");
  std::vector<int> e = prefix;
  e.insert(e.end(), static_cast<std::size_t>(repeat_count), repeated_value);
  e.insert(e.end(), static_cast<std::size_t>(zero_count), 0);
  return Multidegree(std::move(e));
}

std::string CompactDegree::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out << ',';
    first = false;
  };
  for (int p : prefix) {
    sep();
    out << p;
  }
  sep();
  out << repeated_value << '^' << repeat_count;
  if (zero_count > 0) {
    sep();
    out << "0^" << zero_count;
  }
  out << ')';
  return out.str();
}

Stabilization stabilize(const SymmetricIdeal& ideal,
                        const BettiOptions& options) {
  if (ideal.is_zero()) throw UndefinedError("zero ideal has no stable data");
  Stabilization data;
  data.ideal = ideal;
  data.m = *ideal.m();
  for (int t = 1; t <= data.m; ++t)
    data.levels.push_back(betti_set(ideal, t, options));
  return data;
}

namespace {

void require_at_least_m(std::int64_t n, int m) {
  if (n < m)
    throw Error(ErrorCode::InvalidArgument,
                "extrapolation needs n >= m = " + std::to_string(m) +
                    ", got n = " + std::to_string(n));
}

CompactRecord shifted(const BettiRecord& source, int m, std::int64_t k,
                      std::int64_t n) {
  const auto& e = source.degree.exponents();
  std::vector<int> prefix(e.begin(), e.end() - 1);
  return {source.homological_degree + (k - m),
          CompactDegree::make(std::move(prefix), e.back(), 1 + (k - m), n - k),
          source.rank};
}

}  // namespace

std::vector<CompactRecord> extrapolate_F(const std::vector<BettiRecord>& free_m,
                                         int m, std::int64_t n) {
  require_at_least_m(n, m);
  std::vector<CompactRecord> out;
  for (const auto& r : free_m) out.push_back(shifted(r, m, n, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompactRecord> compose_B(
    const std::vector<std::vector<BettiRecord>>& free_levels, std::int64_t n) {
  const int m = static_cast<int>(free_levels.size());
  require_at_least_m(n, m);
  std::vector<CompactRecord> out;
  for (int t = 1; t < m; ++t)
    for (const auto& r : free_levels[static_cast<std::size_t>(t - 1)]) {
      auto c = CompactDegree::from(r.degree);
      c.zero_count += n - t;
      out.push_back({r.homological_degree, std::move(c), r.rank});
    }
  for (std::int64_t k = m; k <= n; ++k)
    for (const auto& r : free_levels.back()) out.push_back(shifted(r, m, k, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompactRecord> compose_B(const Stabilization& data,
                                     std::int64_t n) {
  std::vector<std::vector<BettiRecord>> free_levels;
  for (int t = 1; t <= data.m; ++t) free_levels.push_back(data.free_at(t));
  return compose_B(free_levels, n);
}

std::uint64_t compose_B_size(const Stabilization& data, std::int64_t n) {
  require_at_least_m(n, data.m);
  std::uint64_t fixed = 0;
  for (int t = 1; t < data.m; ++t) fixed += data.free_at(t).size();
  return fixed + data.free_at(data.m).size() *
                     static_cast<std::uint64_t>(n - data.m + 1);
}

BettiRecord to_record(const CompactRecord& record) {
  return {static_cast<int>(record.homological_degree), record.degree.expand(),
          record.rank};
}

std::set<Position> SegmentSet::positions(std::int64_t n) const {
  require_at_least_m(n, m);
  std::set<Position> out = base;
  for (const auto& s : D)
    for (std::int64_t k = 0; k <= n - m; ++k)
      out.emplace(s.i + k, s.j + static_cast<std::int64_t>(s.c) * k);
  return out;
}

std::set<Position> graded_positions(const BettiSet& betti) {
  std::set<Position> out;
  for (const auto& r : betti.records())
    out.emplace(r.homological_degree, r.degree.total() - r.homological_degree);
  return out;
}

SegmentSet segments(const Stabilization& data) {
  SegmentSet out;
  out.m = data.m;
  if (data.m >= 2) out.base = graded_positions(data.level(data.m - 1));
  std::map<Segment, std::uint64_t> weights;
  for (const auto& r : data.free_at(data.m)) {
    const Segment s{r.homological_degree, r.degree.total() - r.homological_degree,
                    r.degree.exponents().back() - 1};
    out.D.insert(s);
    weights[s] += r.rank;
  }
  out.weighted.assign(weights.begin(), weights.end());
  return out;
}

RowCountStability row_count_stability(const SegmentSet& segments) {
  // Line through a segment: row = c * p + (j - c * i).
  std::set<std::pair<std::int64_t, std::int64_t>> lines;
  std::int64_t start = std::max(segments.m - 1, 0);
  for (const auto& s : segments.D) {
    lines.emplace(s.c, static_cast<std::int64_t>(s.j) -
                           static_cast<std::int64_t>(s.c) * s.i);
    start = std::max<std::int64_t>(start, s.i);
  }
  for (const auto& pos : segments.base) start = std::max(start, pos.first + 1);
  for (auto a = lines.begin(); a != lines.end(); ++a)
    for (auto b = std::next(a); b != lines.end(); ++b) {
      if (a->first == b->first) continue;
      const std::int64_t num = b->second - a->second;
      const std::int64_t den = a->first - b->first;
      if (num % den == 0) start = std::max(start, num / den + 1);
    }
  return {lines.size(), start};
}

PdReg pd_reg_from_segments(const SegmentSet& segments, std::int64_t n) {
  require_at_least_m(n, segments.m);
  std::int64_t pd = -1, reg = std::numeric_limits<std::int64_t>::min();
  for (const auto& [i, j] : segments.base) {
    pd = std::max(pd, i);
    reg = std::max(reg, j);
  }
  for (const auto& s : segments.D) {
    pd = std::max<std::int64_t>(pd, s.i + (n - segments.m));
    reg = std::max<std::int64_t>(reg, s.j + s.c * (n - segments.m));
  }
  if (pd < 0) throw UndefinedError("empty segment set");
  return {static_cast<int>(pd), static_cast<int>(reg)};
}

AsymptoticProfile asymptotics(const Stabilization& data) {
  const auto seg = segments(data);
  if (seg.D.empty()) throw UndefinedError("empty segment set");
  AsymptoticProfile out;
  out.m = data.m;
  out.w = *data.ideal.w();
  out.r = *data.ideal.r();
  out.pd_at_m = pd_and_reg(data.level(data.m)).value().pd;
  out.pd_offset = data.m - out.pd_at_m;

  int slope = 0;
  for (const auto& s : seg.D) slope = std::max(slope, s.c);
  if (slope != out.w - 1)
    throw std::logic_error("regularity slope " + std::to_string(slope) +
                           " differs from w - 1 = " + std::to_string(out.w - 1));
  out.reg_slope = slope;

  // Affine pieces (slope, value at n = m) whose maximum is reg(I_n).
  std::vector<std::pair<int, std::int64_t>> pieces;
  for (const auto& s : seg.D) pieces.emplace_back(s.c, s.j);
  for (const auto& pos : seg.base) pieces.emplace_back(0, pos.second);

  std::int64_t top = std::numeric_limits<std::int64_t>::min();
  for (const auto& [c, v] : pieces)
    if (c == slope) top = std::max(top, v);
  out.reg_intercept = top - static_cast<std::int64_t>(slope) * data.m;

  std::int64_t lag = 0;
  for (const auto& [c, v] : pieces) {
    if (c == slope || v <= top) continue;
    const std::int64_t gap = v - top, rate = slope - c;
    lag = std::max(lag, (gap + rate - 1) / rate);
  }
  out.reg_threshold = data.m + lag;

  for (std::int64_t n = data.m; n <= out.reg_threshold + 5; ++n) {
    const auto reg = pd_reg_from_segments(seg, n).reg;
    const bool linear = reg == slope * n + out.reg_intercept;
    if (linear != (n >= out.reg_threshold))
      throw std::logic_error("regularity threshold check failed at n = " +
                             std::to_string(n));
  }

  out.cohen_macaulay = (out.r - 1) == (data.m - 1 - out.pd_at_m);
  return out;
}

namespace {

std::string linear_in_n(std::int64_t slope, std::int64_t intercept) {
  std::ostringstream out;
  if (slope == 0) {
    out << intercept;
    return out.str();
  }
  if (slope != 1) out << slope;
  out << 'n';
  if (intercept > 0) out << " + " << intercept;
  if (intercept < 0) out << " − " << -intercept;
  return out.str();
}

}  // namespace

std::string describe(const AsymptoticProfile& p) {
  std::ostringstream out;
  out << "pd(I_n) = " << linear_in_n(1, -p.pd_offset) << " (n ≥ " << p.m
      << "); reg(I_n) = " << linear_in_n(p.reg_slope, p.reg_intercept)
      << " (n ≥ " << p.reg_threshold << "); CM: "
      << (p.cohen_macaulay ? "true" : "false");
  return out.str();
}

namespace {

std::string record_string(int i, const Multidegree& a) {
  return "(" + std::to_string(i) + "," + a.to_string() + ")";
}

Multidegree append(const Multidegree& a, int value) {
  auto e = a.exponents();
  e.push_back(value);
  return Multidegree(std::move(e));
}

Multidegree drop_last(const Multidegree& a) {
  auto e = a.exponents();
  e.pop_back();
  return Multidegree(std::move(e));
}

}  // namespace

ShiftReport verify_shift_equivalence(const BettiSet& level_n,
                                const BettiSet& level_next, int m) {
  if (level_n.n() < m || level_next.n() != level_n.n() + 1)
    throw Error(ErrorCode::InvalidArgument,
                "shift check needs levels n >= m and n + 1");
  ShiftReport report;
  for (const auto& r : level_n.free_part()) {
    ++report.checked;
    const auto lifted = append(r.degree, r.degree.exponents().back());
    const auto rank = level_next.rank(r.homological_degree + 1, lifted);
    if (rank == 0) {
      report.passed = false;
      report.counterexamples.push_back(
          "beta" + record_string(r.homological_degree, r.degree) +
          " != 0 at n=" + std::to_string(level_n.n()) + " but beta" +
          record_string(r.homological_degree + 1, lifted) + " = 0");
    } else if (rank != r.rank) {
      report.ranks_preserved = false;
      report.rank_mismatches.push_back(
          record_string(r.homological_degree, r.degree) + " rank " +
          std::to_string(r.rank) + " -> " + std::to_string(rank));
    }
  }
  for (const auto& r : level_next.free_part()) {
    ++report.checked;
    const auto& e = r.degree.exponents();
    const std::size_t n = e.size() - 1;
    if (e[n - 1] != e[n]) {
      report.passed = false;
      report.counterexamples.push_back(
          "beta" + record_string(r.homological_degree, r.degree) +
          " != 0 although its degree is a cone degree");
      continue;
    }
    const auto base = drop_last(r.degree);
    if (r.homological_degree == 0 ||
        level_n.rank(r.homological_degree - 1, base) == 0) {
      report.passed = false;
      report.counterexamples.push_back(
          "beta" + record_string(r.homological_degree, r.degree) +
          " != 0 at n=" + std::to_string(level_next.n()) + " but beta" +
          record_string(r.homological_degree - 1, base) + " = 0");
    }
  }
  return report;
}

ShiftReport verify_shift_equivalence(const SymmetricIdeal& ideal, int n,
                                const BettiOptions& options) {
  if (ideal.is_zero()) return {};
  return verify_shift_equivalence(betti_set(ideal, n, options),
                             betti_set(ideal, n + 1, options), *ideal.m());
}

ShiftReport verify_lift(const BettiSet& level_n,
                               const BettiSet& level_next) {
  ShiftReport report;
  for (const auto& r : level_n.free_part()) {
    ++report.checked;
    const int last = r.degree.exponents().back();
    bool found = false;
    for (int k = 1; k <= last && !found; ++k)
      found = level_next.rank(r.homological_degree + 1, append(r.degree, k)) != 0;
    if (!found) {
      report.passed = false;
      report.counterexamples.push_back(
          "no lift of " + record_string(r.homological_degree, r.degree) +
          " to level " + std::to_string(level_next.n()));
    }
  }
  return report;
}

BettiSet length2_closed_form(const SymmetricIdeal& ideal, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "closed form needs n >= 2");
  std::vector<std::pair<int, int>> gens;
  for (const auto& g : ideal.generators()) {
    if (g.length() != 2)
      throw Error(ErrorCode::InvalidArgument,
                  "closed form needs length-2 generators, got " + g.to_string());
    gens.emplace_back(g.parts()[0], g.parts()[1]);
  }
  // p_1 > ... > p_t and q_1 < ... < q_t.
  std::sort(gens.begin(), gens.end(), std::greater<>());
  auto degree = [n](int p, int q, int i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[0] = p;
    for (int k = 1; k <= i + 1; ++k) e[static_cast<std::size_t>(k)] = q;
    return Multidegree(std::move(e));
  };
  std::vector<BettiRecord> records;
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i <= n - 2; ++i) {
      // For p = q, Delta_a is the (i-1)-skeleton of a simplex on i + 2
      // vertices, whose top reduced homology has rank i + 1.
      const bool square = gens[k].first == gens[k].second;
      records.push_back({i, degree(gens[k].first, gens[k].second, i),
                         square ? static_cast<std::uint64_t>(i + 1) : 1});
      if (k + 1 < gens.size())
        records.push_back({i + 1, degree(gens[k].first, gens[k + 1].second, i), 1});
      // The last generator also meets its own transpose, at (p_t, p_t).
      if (k + 1 == gens.size() && !square)
        records.push_back({i + 1, degree(gens[k].first, gens[k].first, i), 1});
    }
  return BettiSet(n, std::move(records));
}

std::pair<int, Multidegree> regularity_witness(const SymmetricIdeal& ideal) {
  if (ideal.is_zero()) throw UndefinedError("zero ideal");
  const int m = *ideal.m(), w = *ideal.w();
  for (int p = 1; p <= m; ++p) {
    std::vector<int> e(static_cast<std::size_t>(m), w - 1);
    std::fill(e.begin(), e.begin() + p, w);
    if (contains_monomial(ideal, Multidegree(e)))
      return {m - p, Multidegree(std::vector<int>(static_cast<std::size_t>(m), w))};
  }
  throw std::logic_error("x^(w^m) must lie in I_m");
}

ShiftReport verify_rank_carrying(const Stabilization& data,
                                 const std::vector<BettiSet>& direct_levels) {
  ShiftReport report;
  const auto free_m = data.free_at(data.m);
  for (const auto& level : direct_levels) {
    if (level.n() <= data.m) continue;
    std::set<std::pair<int, Multidegree>> seen;
    for (const auto& c : extrapolate_F(free_m, data.m, level.n())) {
      ++report.checked;
      const auto r = to_record(c);
      seen.emplace(r.homological_degree, r.degree);
      const auto direct = level.rank(r.homological_degree, r.degree);
      if (direct == 0) {
        report.passed = false;
        report.counterexamples.push_back(
            "extrapolated " + record_string(r.homological_degree, r.degree) +
            " missing at n=" + std::to_string(level.n()));
      } else if (direct != r.rank) {
        report.ranks_preserved = false;
        report.rank_mismatches.push_back(
            record_string(r.homological_degree, r.degree) + " extrapolated rank " +
            std::to_string(r.rank) + ", direct " + std::to_string(direct));
      }
    }
    for (const auto& r : level.free_part())
      if (!seen.contains({r.homological_degree, r.degree})) {
        report.passed = false;
        report.counterexamples.push_back(
            "direct " + record_string(r.homological_degree, r.degree) +
            " not produced by extrapolation at n=" + std::to_string(level.n()));
      }
  }
  return report;
}

}  // namespace symbetti
