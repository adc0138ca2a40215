#include "symbetti/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "symbetti/errors.hpp"
#include "symbetti/homology.hpp"
#include "symbetti/stability.hpp"
#include "symbetti/taylor.hpp"

namespace symbetti {

namespace {

std::string record_text(int i, const Multidegree& a) {
  return "beta_{" + std::to_string(i) + "," + a.to_string() + "}";
}

void note_detail(CheckResult& check, std::string line) {
  constexpr std::size_t kMaxDetails = 20;
  if (check.details.size() < kMaxDetails) check.details.push_back(std::move(line));
}

void fail(CheckResult& check, std::string line) {
  check.passed = false;
  note_detail(check, std::move(line));
}

CheckResult make_check(std::string name) {
  CheckResult check;
  check.name = std::move(name);
  return check;
}

bool is_zero(const SparseMatrix& matrix) {
  for (const auto& column : matrix.columns)
    if (!column.empty()) return false;
  return true;
}

CheckResult check_complexes(const SymmetricIdeal& ideal, int max_n,
                            const CandidateOptions& candidates) {
  CheckResult check = make_check("euler");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& a : candidate_degrees(ideal, n, candidates)) {
      std::optional<SimplicialComplexData> complex;
      try {
        complex = upper_koszul_complex(ideal, a, n);
      } catch (const SizeCapError& e) {
        ++check.skipped;
        note_detail(check, "skipped " + a.to_string() + ": " + e.what());
        continue;
      }
      ++check.checked;
      const int top = complex->dimension();
      std::int64_t chi_chain = 0;
      for (int i = -1; i <= top; ++i) {
        const auto size = static_cast<std::int64_t>(complex->faces_of_dimension(i).size());
        chi_chain += (i + 1) % 2 == 0 ? -size : size;
        if (i + 1 <= top) {
          const auto product = multiply(complex->boundary_matrix(i),
                                        complex->boundary_matrix(i + 1));
          if (i >= 0 && !is_zero(product))
            fail(check, "boundary composite nonzero at " + a.to_string() +
                            ", dimension " + std::to_string(i + 1));
        }
      }
      std::int64_t chi_homology = 0;
      for (const auto& [i, dim] : reduced_homology_dims(*complex, ideal.field()))
        chi_homology += (i + 1) % 2 == 0 ? -static_cast<std::int64_t>(dim)
                                         : static_cast<std::int64_t>(dim);
      if (chi_chain != chi_homology)
        fail(check, "Euler characteristic mismatch at " + a.to_string() +
                        " for n = " + std::to_string(n));
    }
  }
  return check;
}

CheckResult check_taylor(const SymmetricIdeal& ideal,
                         const std::vector<std::optional<BettiSet>>& levels) {
  CheckResult check = make_check("taylor-oracle");
  CandidateOptions unfiltered;
  unfiltered.prune_same_support = false;
  unfiltered.cone_filter = false;
  for (std::size_t idx = 0; idx < levels.size(); ++idx) {
    const int n = static_cast<int>(idx) + 1;
    if (!levels[idx]) continue;
    const auto generators = MonomialGeneratorSet::expand(ideal, n);
    for (const auto& a : candidate_degrees(ideal, n, unfiltered)) {
      std::map<int, std::uint64_t> taylor;
      try {
        taylor = taylor_strand_tor(generators, a, ideal.field());
      } catch (const SizeCapError& e) {
        ++check.skipped;
        note_detail(check, "skipped " + a.to_string() + ": " + e.what());
        continue;
      }
      ++check.checked;
      std::map<int, std::uint64_t> koszul;
      for (const auto& r : levels[idx]->records())
        if (r.degree == a) koszul[r.homological_degree] = r.rank;
      if (taylor != koszul) {
        for (const auto& [i, rank] : taylor)
          if (!koszul.count(i) || koszul[i] != rank)
            fail(check, record_text(i, a) + ": Taylor " + std::to_string(rank) +
                            ", Koszul " + std::to_string(koszul.count(i) ? koszul[i] : 0));
        for (const auto& [i, rank] : koszul)
          if (!taylor.count(i))
            fail(check, record_text(i, a) + ": Taylor 0, Koszul " + std::to_string(rank));
      }
    }
  }
  return check;
}

CheckResult check_support(const std::vector<std::optional<BettiSet>>& levels) {
  CheckResult check = make_check("support-bound");
  for (const auto& level : levels) {
    if (!level) continue;
    for (const auto& r : level->records()) {
      ++check.checked;
      if (r.homological_degree < 0 ||
          static_cast<std::size_t>(r.homological_degree) >= r.degree.support_size())
        fail(check, record_text(r.homological_degree, r.degree) +
                        " violates i < |supp(a)|");
    }
  }
  return check;
}

void merge(CheckResult& check, const ShiftReport& report, int n,
           std::vector<std::string>& notes, const char* label) {
  check.checked += report.checked;
  for (const auto& line : report.counterexamples)
    fail(check, "n = " + std::to_string(n) + ": " + line);
  if (!report.ranks_preserved)
    for (const auto& line : report.rank_mismatches)
      notes.push_back(std::string(label) + " rank change at n = " +
                      std::to_string(n) + ": " + line);
}

std::vector<BettiRecord> expanded(const std::vector<CompactRecord>& records) {
  std::vector<BettiRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(to_record(r));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (checked " << c.checked;
    if (c.skipped) out << ", skipped " << c.skipped;
    out << ")\n";
    for (const auto& d : c.details) out << "  " << d << '\n';
  }
  for (const auto& n : notes) out << "note: " << n << '\n';
  out << (passed() ? "all checks passed" : "verification failed") << '\n';
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"checked", c.checked},
                           {"skipped", c.skipped},
                           {"details", c.details}});
  j["notes"] = notes;
  return j;
}

VerifyReport run_verification(const SymmetricIdeal& ideal,
                              const VerifyOptions& options) {
  if (ideal.is_zero())
    throw UndefinedError("verification is undefined for the zero ideal");
  if (options.max_n < 1)
    throw Error(ErrorCode::InvalidArgument, "max_n must be at least 1");
  VerifyReport report;
  const int max_n = options.max_n;
  const int m = *ideal.m();

  std::vector<std::optional<BettiSet>> levels(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    try {
      levels[static_cast<std::size_t>(n - 1)] = betti_set(ideal, n, options.betti);
    } catch (const SizeCapError& e) {
      report.notes.push_back("level " + std::to_string(n) + " skipped: " + e.what());
    }
  }
  auto level = [&](int n) -> const std::optional<BettiSet>& {
    return levels[static_cast<std::size_t>(n - 1)];
  };

  report.checks.push_back(check_complexes(ideal, max_n, options.betti.candidates));
  report.checks.push_back(check_taylor(ideal, levels));
  report.checks.push_back(check_support(levels));

  CheckResult shift = make_check("shift-equivalence");
  for (int n = m; n < max_n; ++n) {
    if (!level(n) || !level(n + 1)) {
      ++shift.skipped;
      continue;
    }
    merge(shift, verify_shift_equivalence(*level(n), *level(n + 1), m), n,
          report.notes, "shift");
  }
  report.checks.push_back(shift);

  CheckResult lift = make_check("lift");
  for (int n = 1; n < max_n; ++n) {
    if (!level(n) || !level(n + 1)) {
      ++lift.skipped;
      continue;
    }
    merge(lift, verify_lift(*level(n), *level(n + 1)), n, report.notes, "lift");
  }
  report.checks.push_back(lift);

  CheckResult extrapolation = make_check("extrapolation");
  CheckResult segment_check = make_check("segments");
  CheckResult pd_check = make_check("pd-increment");
  bool have_base = m <= max_n;
  for (int n = 1; n <= std::min(m, max_n); ++n) have_base = have_base && level(n);
  if (!have_base) {
    const std::string reason =
        m > max_n ? "m = " + std::to_string(m) + " exceeds max_n"
                  : std::string("a level up to m was size-capped");
    for (auto* c : {&extrapolation, &segment_check, &pd_check}) {
      ++c->skipped;
      c->details.push_back("skipped: " + reason);
    }
  } else {
    Stabilization data{ideal, m, {}};
    for (int n = 1; n <= m; ++n) data.levels.push_back(*level(n));
    const auto segs = segments(data);
    for (int n = m; n <= max_n; ++n) {
      if (!level(n)) {
        ++extrapolation.skipped;
        ++segment_check.skipped;
        continue;
      }
      const auto& direct = level(n)->records();
      const auto predicted = expanded(compose_B(data, n));
      ++extrapolation.checked;
      std::vector<std::pair<int, Multidegree>> p_pos, d_pos;
      for (const auto& r : predicted) p_pos.emplace_back(r.homological_degree, r.degree);
      for (const auto& r : direct) d_pos.emplace_back(r.homological_degree, r.degree);
      if (p_pos != d_pos) {
        std::vector<std::pair<int, Multidegree>> diff;
        std::set_symmetric_difference(p_pos.begin(), p_pos.end(), d_pos.begin(),
                                      d_pos.end(), std::back_inserter(diff));
        for (const auto& [i, a] : diff)
          fail(extrapolation, "n = " + std::to_string(n) + ": " + record_text(i, a) +
                                  " differs between extrapolation and direct");
      } else if (predicted != direct) {
        for (std::size_t k = 0; k < direct.size(); ++k)
          if (predicted[k].rank != direct[k].rank)
            report.notes.push_back(
                "extrapolated rank differs at n = " + std::to_string(n) + ": " +
                record_text(direct[k].homological_degree, direct[k].degree) +
                " predicted " + std::to_string(predicted[k].rank) + ", direct " +
                std::to_string(direct[k].rank));
      }
      ++segment_check.checked;
      if (segs.positions(n) != graded_positions(*level(n)))
        fail(segment_check, "graded positions differ at n = " + std::to_string(n));
      const auto direct_pr = pd_and_reg(*level(n));
      if (direct_pr && pd_reg_from_segments(segs, n) != *direct_pr)
        fail(segment_check, "pd/reg from segments differ at n = " + std::to_string(n));
    }
    for (int n = m; n < max_n; ++n) {
      if (!level(n) || !level(n + 1)) {
        ++pd_check.skipped;
        continue;
      }
      const auto a = pd_and_reg(*level(n));
      const auto b = pd_and_reg(*level(n + 1));
      ++pd_check.checked;
      if (!a || !b || b->pd != a->pd + 1)
        fail(pd_check, "pd does not increase by one from n = " + std::to_string(n));
    }
  }
  report.checks.push_back(extrapolation);
  report.checks.push_back(segment_check);
  report.checks.push_back(pd_check);

  // Characteristic comparison at the largest computed level.
  int compare_n = max_n;
  while (compare_n >= 1 && !level(compare_n)) --compare_n;
  if (compare_n >= 1 && options.compare_characteristics.size() > 1) {
    std::vector<std::pair<FieldSpec, BettiSet>> sets;
    for (auto p : options.compare_characteristics) {
      const FieldSpec field(p);
      if (field == ideal.field()) {
        sets.emplace_back(field, *level(compare_n));
        continue;
      }
      try {
        sets.emplace_back(field, betti_set(ideal.with_field(field), compare_n, options.betti));
      } catch (const SizeCapError&) {
      }
    }
    std::set<std::pair<int, Multidegree>> keys;
    for (const auto& [field, set] : sets)
      for (const auto& r : set.records()) keys.emplace(r.homological_degree, r.degree);
    for (const auto& [i, a] : keys) {
      bool differs = false;
      std::string line = record_text(i, a) + ":";
      std::uint64_t first = sets.front().second.rank(i, a);
      for (std::size_t k = 0; k < sets.size(); ++k) {
        const auto rank = sets[k].second.rank(i, a);
        differs = differs || rank != first;
        line += std::string(k ? ", " : " ") + "char " +
                std::to_string(sets[k].first.characteristic()) + " → " +
                std::to_string(rank);
      }
      if (differs) report.notes.push_back(line + " (n = " + std::to_string(compare_n) + ")");
    }
  }
  return report;
}

}  // namespace symbetti
