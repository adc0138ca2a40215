// Acceptance suite: one PASS/FAIL line per criterion.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "symbetti/betti.hpp"
#include "symbetti/errors.hpp"
#include "symbetti/homology.hpp"
#include "symbetti/stability.hpp"
#include "symbetti/taylor.hpp"

using namespace symbetti;

namespace {

using PosSet = std::set<std::pair<int, std::vector<int>>>;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << "failed: ";
      else detail << "; ";
      detail << what;
      passed = false;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  if (!out.passed) ++failures;
  std::printf("criterion %2d %s: %s", number, out.passed ? "PASS" : "FAIL", title);
  const auto detail = out.detail.str();
  if (!detail.empty()) std::printf(" [%s]", detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

std::vector<BettiRecord> expanded(const std::vector<CompactRecord>& rs) {
  std::vector<BettiRecord> out;
  for (const auto& r : rs) out.push_back(to_record(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SymmetricIdeal> random_ideals(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  std::vector<SymmetricIdeal> out;
  for (int k = 0; k < count; ++k) out.push_back(oracle::random_ideal(rng, 3, 5));
  return out;
}

std::string positions_text(const PosSet& ps) {
  std::string s;
  for (const auto& [i, a] : ps) {
    if (!s.empty()) s += ",";
    s += "(" + std::to_string(i) + "," + Multidegree(a).to_string() + ")";
  }
  return "{" + s + "}";
}

void criterion1(Outcome& out) {
  const auto J = oracle::J();
  const PosSet f2{{0, {2, 2}}, {0, {5, 1}}, {1, {5, 2}}};
  const PosSet f3{{1, {2, 2, 2}}, {1, {5, 1, 1}}, {2, {5, 2, 2}}};
  const PosSet f4{{2, {2, 2, 2, 2}}, {2, {5, 1, 1, 1}}, {3, {5, 2, 2, 2}}};
  const PosSet b4{{0, {2, 2, 0, 0}}, {0, {5, 1, 0, 0}}, {1, {5, 2, 0, 0}},
                  {1, {2, 2, 2, 0}}, {1, {5, 1, 1, 0}}, {2, {5, 2, 2, 0}},
                  {2, {2, 2, 2, 2}}, {2, {5, 1, 1, 1}}, {3, {5, 2, 2, 2}}};
  const auto j2 = betti_set(J, 2), j3 = betti_set(J, 3), j4 = betti_set(J, 4);
  out.require(oracle::positions(j2.free_part()) == f2, "F(J_2)");
  out.require(oracle::positions(j3.free_part()) == f3, "F(J_3)");
  out.require(oracle::positions(j4.free_part()) == f4, "F(J_4)");
  out.require(oracle::positions(j4.records()) == b4,
              "B(J_4) = " + positions_text(oracle::positions(j4.records())));
  // Ranks are compared against the subset-enumeration oracle.
  for (int n = 2; n <= 4; ++n)
    out.require(betti_set(J, n).records() == oracle::betti_set(J, n, 0),
                "ranks differ from oracle at n = " + std::to_string(n));
  std::string non_unit;
  for (const auto& r : j4.records())
    if (r.rank != 1)
      non_unit += " beta_{" + std::to_string(r.homological_degree) + "," +
                  r.degree.to_string() + "}=" + std::to_string(r.rank);
  if (out.passed)
    out.detail << "positions exact; ranks equal the oracle, which gives rank != 1 at" << non_unit;
}

void criterion2(Outcome& out) {
  const auto J = oracle::J();
  for (int n = 2; n <= 7; ++n) {
    std::set<Position> expected;
    for (int k = 0; k <= n - 2; ++k) {
      expected.emplace(k, 4 + k);
      expected.emplace(k, 6);
      expected.emplace(1 + k, 6 + k);
    }
    out.require(graded_positions(betti_set(J, n)) == expected, "positions at n = " + std::to_string(n));
  }
  const auto segs = segments(stabilize(J));
  out.require(segs.D == std::set<Segment>{{0, 4, 1}, {0, 6, 0}, {1, 6, 1}}, "D");
  out.require(segs.base.empty(), "base");
}

void criterion3(Outcome& out) {
  const PosSet expected{
      {0, {4, 0, 0, 0}}, {0, {3, 3, 0, 0}}, {0, {2, 2, 2, 0}}, {0, {1, 1, 1, 1}},
      {1, {4, 3, 0, 0}}, {1, {4, 2, 2, 0}}, {1, {4, 1, 1, 1}}, {1, {3, 3, 2, 0}},
      {1, {3, 3, 1, 1}}, {1, {2, 2, 2, 1}}, {2, {4, 3, 2, 0}}, {2, {4, 3, 1, 1}},
      {2, {4, 2, 2, 1}}, {2, {3, 3, 2, 1}}, {3, {4, 3, 2, 1}}};
  const auto t4 = betti_set(oracle::T(), 4);
  out.require(oracle::positions(t4.records()) == expected, "B(T_4)");
  out.require(t4.free_part().size() == 8, "|F(T_4)| = " + std::to_string(t4.free_part().size()));
  out.require(t4.records().size() - t4.free_part().size() == 7, "|B \\ F|");
  PosSet scarf;
  for (const auto& [i, a] : scarf_degrees(MonomialGeneratorSet::expand(oracle::T(), 4)))
    scarf.emplace(i, a.sorted().exponents());
  out.require(scarf == expected, "Scarf positions");
}

void criterion4(Outcome& out) {
  const PosSet expected{{0, {4, 3, 2, 1}}, {1, {4, 4, 2, 1}}, {1, {4, 3, 3, 1}},
                        {1, {4, 3, 2, 2}}, {2, {4, 4, 4, 1}}, {2, {4, 4, 2, 2}},
                        {2, {4, 3, 3, 3}}, {3, {4, 4, 4, 4}}};
  const auto p4 = betti_set(oracle::P(), 4);
  out.require(oracle::positions(p4.records()) == expected, "B(P_4)");
  out.require(p4.free_part() == p4.records(), "B = F");
}

void criterion5(Outcome& out) {
  const Multidegree a({6, 5, 4, 3, 2, 1});
  const auto q = betti_set(oracle::RP2(0), 6);
  const auto f2 = betti_set(oracle::RP2(2), 6);
  out.require(q.rank(2, a) == 0, "char 0 rank " + std::to_string(q.rank(2, a)));
  out.require(f2.rank(2, a) == 1, "char 2 rank " + std::to_string(f2.rank(2, a)));
  out.require(graded_positions(q) == graded_positions(f2), "graded positions differ");
  // Multigraded differences are confined to degree a, where Delta_a is RP^2:
  // beta_{2,a} = dim H~_1 and beta_{3,a} = dim H~_2, both 1 over F_2 only.
  const auto pq = oracle::positions(q.records()), p2 = oracle::positions(f2.records());
  PosSet diff;
  std::set_symmetric_difference(pq.begin(), pq.end(), p2.begin(), p2.end(),
                                std::inserter(diff, diff.end()));
  const PosSet expected_diff{{2, a.exponents()}, {3, a.exponents()}};
  out.require(diff == expected_diff, "multigraded difference " + positions_text(diff));
  const auto dims = reduced_homology_dims(upper_koszul_complex(oracle::RP2(), a, 6), FieldSpec(2));
  out.require(dims == HomologyDims{{1, 1}, {2, 1}}, "Delta_a is not a mod-2 RP^2");
  std::size_t rank_diffs = 0;
  for (const auto& r : q.records())
    if (!(r.degree == a) && f2.rank(r.homological_degree, r.degree) != r.rank) ++rank_diffs;
  out.require(rank_diffs == 0, "other ranks differ");
  if (out.passed)
    out.detail << "graded positions agree; multigraded difference is exactly "
               << positions_text(diff) << ", forced by H~_2(RP^2; F_2)";
}

void criterion6(Outcome& out) {
  std::vector<SymmetricIdeal> ideals{oracle::J(), oracle::T(), oracle::P()};
  for (auto& I : random_ideals(606, 25)) ideals.push_back(I);
  std::size_t checks = 0, rank_equal = 0;
  for (const auto& I : ideals) {
    const auto data = stabilize(I);
    for (int n = data.m + 1; n <= data.m + 2; ++n) {
      const auto predicted = expanded(compose_B(data, n));
      const auto direct = betti_set(I, n).records();
      ++checks;
      out.require(oracle::positions(predicted) == oracle::positions(direct),
                  I.to_string() + " n = " + std::to_string(n));
      if (predicted == direct) ++rank_equal;
    }
  }
  if (out.passed)
    out.detail << checks << " level pairs; ranks also equal in " << rank_equal << "/" << checks;
}

void criterion7(Outcome& out) {
  std::vector<SymmetricIdeal> ideals{oracle::J(), oracle::T(), oracle::P()};
  for (auto& I : random_ideals(707, 25)) ideals.push_back(I);
  std::size_t shift_checked = 0, lift_checked = 0;
  for (const auto& I : ideals) {
    const int m = *I.m();
    std::map<int, BettiSet> level;
    for (int n = m; n <= m + 3; ++n) level[n] = betti_set(I, n);
    for (int n = m; n <= m + 2; ++n) {
      const auto shift = verify_shift_equivalence(level[n], level[n + 1], m);
      shift_checked += shift.checked;
      out.require(shift.passed, "shift " + I.to_string() + " n = " + std::to_string(n));
      const auto lift = verify_lift(level[n], level[n + 1]);
      lift_checked += lift.checked;
      out.require(lift.passed, "lift " + I.to_string() + " n = " + std::to_string(n));
    }
  }
  if (out.passed)
    out.detail << shift_checked << " shift and " << lift_checked << " lift checks";
}

void criterion8(Outcome& out) {
  struct Fixture {
    const char* name;
    SymmetricIdeal ideal;
    int slope;
  };
  for (const auto& f : {Fixture{"J", oracle::J(), 1}, Fixture{"T", oracle::T(), 0},
                        Fixture{"P", oracle::P(), 3}}) {
    const int m = *f.ideal.m(), r = *f.ideal.r();
    const auto profile = asymptotics(stabilize(f.ideal));
    out.require(profile.reg_slope == f.slope && profile.reg_slope == *f.ideal.w() - 1,
                std::string(f.name) + " slope");
    std::optional<bool> cm;
    std::optional<PdReg> previous;
    for (int n = m; n <= m + 3; ++n) {
      const auto pr = pd_and_reg(betti_set(f.ideal, n)).value();
      if (previous) out.require(pr.pd == previous->pd + 1, std::string(f.name) + " pd step");
      previous = pr;
      // S/I_n has dimension r - 1, so it is Cohen-Macaulay iff pd(I_n) = n - r.
      const bool flag = pr.pd == n - r;
      if (cm) out.require(*cm == flag, std::string(f.name) + " CM flag changes");
      cm = flag;
      out.require(flag == profile.cohen_macaulay, std::string(f.name) + " CM flag vs profile");
      if (std::string(f.name) == "T") out.require(pr.reg == 7, "reg(T_" + std::to_string(n) + ")");
      if (std::string(f.name) == "P" && n <= 6)
        out.require(pr.reg == 3 * n + 1, "reg(P_" + std::to_string(n) + ")");
      if (n >= profile.reg_threshold)
        out.require(pr.reg == profile.reg_slope * n + profile.reg_intercept,
                    std::string(f.name) + " reg formula");
    }
  }
}

void criterion9(Outcome& out) {
  std::vector<std::pair<SymmetricIdeal, int>> cases;
  for (const auto& I : {oracle::J(), oracle::T(), oracle::P()})
    for (int n = 1; n <= 4; ++n) cases.emplace_back(I, n);
  for (const auto& I : random_ideals(909, 25))
    for (int n = 1; n <= *I.m() + 1; ++n) cases.emplace_back(I, n);
  std::size_t compared = 0, capped = 0;
  std::string capped_text;
  for (const auto& [base, n] : cases)
    for (std::uint32_t p : {0u, 2u, 3u}) {
      const auto I = base.with_field(FieldSpec(p));
      const auto generators = MonomialGeneratorSet::expand(I, n);
      std::map<Multidegree, std::map<int, std::uint64_t>> oracle_box;
      for (const auto& a : candidate_degrees(I, n)) {
        const auto koszul = betti_at_degree(I, a, n);
        if (generators.divisors_of(a).size() > kTaylorCap) {
          // Beyond the Taylor cap: fall back to the subset-enumeration oracle.
          ++capped;
          if (p == 0) capped_text += " " + a.to_string();
          out.require(koszul == oracle::betti_at(I, a.exponents(), p),
                      "capped degree " + a.to_string());
          continue;
        }
        ++compared;
        out.require(taylor_strand_tor(generators, a, I.field()) == koszul,
                    I.to_string() + " " + a.to_string());
      }
    }
  if (out.passed) {
    out.detail << compared << " degrees compared with Taylor";
    if (capped)
      out.detail << "; " << capped << " over the " << kTaylorCap
                 << "-divisor Taylor cap checked by subset enumeration instead:" << capped_text;
  }
}

void criterion10(Outcome& out) {
  std::mt19937 rng(1010);
  std::size_t square = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Partition> gens;
    const int t = 1 + static_cast<int>(rng() % 4);
    for (int g = 0; g < t; ++g) {
      int p = 1 + static_cast<int>(rng() % 7), q = 1 + static_cast<int>(rng() % 7);
      if (p < q) std::swap(p, q);
      gens.emplace_back(std::vector<int>{p, q});
    }
    const SymmetricIdeal I(gens);
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto closed = length2_closed_form(I, n);
    const auto direct = betti_set(I, n);
    out.require(closed == direct, I.to_string() + " n = " + std::to_string(n));
    bool has_square = false;
    for (const auto& g : I.generators()) has_square = has_square || g.parts()[0] == g.parts()[1];
    bool all_unit = true;
    for (const auto& r : direct.records()) all_unit = all_unit && r.rank == 1;
    // Ranks above 1 occur exactly on the family of a generator (p,p).
    if (has_square && n >= 3) {
      ++square;
      out.require(!all_unit, "expected a rank above 1 for " + I.to_string());
    } else {
      out.require(all_unit, "rank above 1 for " + I.to_string());
    }
  }
  if (out.passed)
    out.detail << "closed form equals direct computation with ranks; every rank is 1 except on "
               << "(p,p) families (" << square << " of 50 ideals), where (i,(p^{i+2},0,...)) has rank i+1";
}

void criterion11(Outcome& out) {
  std::mt19937 rng(1111);
  for (int trial = 0; trial < 200; ++trial) {
    const int vertices = 1 + static_cast<int>(rng() % 10);
    std::vector<FaceMask> facets;
    const int count = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < count; ++k) {
      FaceMask f = 0;
      for (int v = 0; v < vertices; ++v)
        if (rng() % 3 == 0) f |= FaceMask{1} << v;
      facets.push_back(f);
    }
    const auto c = SimplicialComplexData::from_facets(vertices, facets);
    std::int64_t chi = 0;
    for (int i = -1; i <= c.dimension(); ++i) {
      const auto size = static_cast<std::int64_t>(c.faces_of_dimension(i).size());
      chi += i % 2 == 0 ? size : -size;
      if (i >= 0 && i + 1 <= c.dimension())
        for (const auto& col : multiply(c.boundary_matrix(i), c.boundary_matrix(i + 1)).columns)
          out.require(col.empty(), "boundary composite");
    }
    for (std::uint32_t p : {0u, 2u}) {
      std::int64_t h = 0;
      for (const auto& [i, d] : reduced_homology_dims(c, FieldSpec(p)))
        h += i % 2 == 0 ? static_cast<std::int64_t>(d) : -static_cast<std::int64_t>(d);
      out.require(h == chi, "Euler identity");
    }
  }
  std::vector<FaceMask> facets;
  for (const auto& f : oracle::rp2_facets()) {
    FaceMask m = 0;
    for (int v : f) m |= FaceMask{1} << v;
    facets.push_back(m);
  }
  const auto rp2 = SimplicialComplexData::from_facets(6, facets);
  out.require(reduced_homology_dims(rp2, FieldSpec(2)) == HomologyDims{{1, 1}, {2, 1}}, "RP^2 over F_2");
  out.require(reduced_homology_dims(rp2, FieldSpec(0)).empty(), "RP^2 over Q");
}

}  // namespace

int main() {
  criterion(1, "Betti data of J at n = 2, 3, 4", criterion1);
  criterion(2, "segment decomposition of J", criterion2);
  criterion(3, "B(T_4) and its Scarf degrees", criterion3);
  criterion(4, "B(P_4) = F(P_4)", criterion4);
  criterion(5, "characteristic dependence in six variables", criterion5);
  criterion(6, "composition agrees with direct computation", criterion6);
  criterion(7, "shift equivalence and lift", criterion7);
  criterion(8, "pd, reg and Cohen-Macaulay behaviour", criterion8);
  criterion(9, "Taylor oracle equivalence in characteristics 0, 2, 3", criterion9);
  criterion(10, "length-two closed form", criterion10);
  criterion(11, "homology backend", criterion11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
