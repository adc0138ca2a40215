#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "symbetti/errors.hpp"
#include "symbetti/partition.hpp"

using namespace symbetti;

namespace {

bool dom(std::vector<int> a, std::vector<int> lambda) {
  std::sort(a.begin(), a.end(), std::greater<>());
  return dominates(a, Partition(lambda));
}

std::vector<std::vector<int>> parts(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

bool has(const std::vector<Multidegree>& ds, std::vector<int> a) {
  return std::find(ds.begin(), ds.end(), Multidegree(a)) != ds.end();
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_NOTHROW(Partition({3, 3, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  try {
    Partition({1, 2});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotWeaklyDecreasing);
  }
  Partition p({4, 2, 2});
  CHECK(p.weight() == 8);
  CHECK(p.length() == 3);
  CHECK(p.first() == 4);
  CHECK(p.to_string() == "(4,2,2)");
}

TEST_CASE("field characteristics") {
  CHECK(FieldSpec().is_rational());
  CHECK(FieldSpec(2).name() == "ZZ/2");
  CHECK(FieldSpec(0).name() == "QQ");
  CHECK_NOTHROW(FieldSpec(2147483647u));
  CHECK_THROWS_AS(FieldSpec(4), Error);
  CHECK_THROWS_AS(FieldSpec(1), Error);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("multidegree helpers") {
  Multidegree a({0, 3, 1, 3});
  CHECK(a.sorted() == Multidegree({3, 3, 1, 0}));
  CHECK_FALSE(a.is_sorted());
  CHECK(a.support_size() == 3);
  CHECK(a.support() == std::vector<std::size_t>{1, 2, 3});
  CHECK(a.total() == 7);
  CHECK_THROWS_AS(Multidegree({1, -1}), Error);
}

TEST_CASE("dominance examples") {
  CHECK(dom({2, 2, 1}, {2, 2}));
  CHECK_FALSE(dom({5, 0, 0}, {5, 1}));
  CHECK(dom({3, 2, 2, 1}, {2, 2}));
  CHECK_FALSE(dom({1}, {1, 1}));
}

TEST_CASE("dominance agrees with permutation brute force") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(1, 4), val(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> a(static_cast<std::size_t>(len(rng)));
    for (auto& x : a) x = val(rng);
    std::vector<int> l(static_cast<std::size_t>(len(rng)));
    for (auto& x : l) x = 1 + val(rng) % 4;
    std::sort(l.begin(), l.end(), std::greater<>());
    CHECK(dom(a, l) == oracle::permuted_divides(l, a));
  }
}

TEST_CASE("minimal generators") {
  using V = std::vector<std::vector<int>>;
  CHECK(parts(minimal_generators({Partition({5, 1}), Partition({2, 2}), Partition({5, 2})})) ==
        V{{2, 2}, {5, 1}});
  CHECK(parts(minimal_generators({Partition({3, 3}), Partition({2, 2, 2})})) ==
        V{{2, 2, 2}, {3, 3}});
  CHECK(minimal_generators({}).empty());
  CHECK(parts(minimal_generators({Partition({2}), Partition({2})})) == V{{2}});
}

TEST_CASE("minimal generators form an antichain generating the same ideal") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Partition> input;
    std::vector<std::vector<int>> raw;
    for (int g = 0; g < 5; ++g) {
      std::vector<int> v(1 + rng() % 3);
      for (auto& x : v) x = 1 + static_cast<int>(rng() % 4);
      std::sort(v.begin(), v.end(), std::greater<>());
      input.emplace_back(v);
      raw.push_back(v);
    }
    const auto kept = minimal_generators(input);
    for (const auto& x : kept)
      for (const auto& y : kept)
        if (!(x == y)) CHECK_FALSE(oracle::permuted_divides(y.parts(), x.parts()));
    for (const auto& v : raw) {
      bool covered = false;
      for (const auto& k : kept) covered = covered || oracle::permuted_divides(k.parts(), v);
      CHECK(covered);
    }
  }
}

TEST_CASE("ideal statistics and truncation") {
  const auto J = oracle::J();
  CHECK(*J.m() == 2);
  CHECK(*J.w() == 2);
  CHECK(*J.r() == 2);
  const auto T = oracle::T();
  CHECK(*T.m() == 4);
  CHECK(*T.w() == 1);
  CHECK(*T.r() == 1);
  const SymmetricIdeal zero;
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.m().has_value());

  using V = std::vector<std::vector<int>>;
  CHECK(parts(restrict_to_n(oracle::ideal({{3, 3}, {2, 2, 2}}), 2)) == V{{3, 3}});
  CHECK(restrict_to_n(J, 1).empty());
  CHECK(restrict_to_n(J, 4).size() == 2);
  CHECK(J.truncated(1).is_zero());
  CHECK(J.to_string() == "{(2,2), (5,1)} over QQ");
}

TEST_CASE("membership") {
  const auto J = oracle::J();
  CHECK(contains_monomial(J, Multidegree({1, 2, 2, 0})));
  CHECK_FALSE(contains_monomial(J, Multidegree({5, 0})));
  CHECK_FALSE(contains_monomial(J, Multidegree({4, 1, 1})));
  std::mt19937 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto I = oracle::random_ideal(rng, 3, 4);
    std::vector<int> a(1 + rng() % 4);
    for (auto& x : a) x = static_cast<int>(rng() % 5);
    CHECK(contains_monomial(I, Multidegree(a)) ==
          oracle::member(oracle::parts_of(I, static_cast<int>(a.size())), a));
  }
}

TEST_CASE("orbit sizes") {
  CHECK(orbit_size(Multidegree({5, 2, 0, 0}), 4) == 12);
  CHECK(orbit_size(Multidegree({2, 2, 2, 2}), 4) == 1);
  CHECK(orbit_size(Multidegree({1, 1, 0}), 3) == 3);
  CHECK_THROWS_AS(orbit_size(Multidegree({1, 1}), 3), Error);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> a(1 + rng() % 7);
    for (auto& x : a) x = static_cast<int>(rng() % 3);
    CHECK(orbit_size(Multidegree(a), static_cast<int>(a.size())) == oracle::orbit_count(a));
  }
}

TEST_CASE("candidate degrees examples") {
  const auto J = oracle::J();
  const auto c3 = candidate_degrees(J, 3);
  for (auto a : std::vector<std::vector<int>>{{5, 2, 2}, {5, 1, 1}, {2, 2, 2},
                                              {5, 2, 0}, {5, 1, 0}, {2, 2, 0}})
    CHECK(has(c3, a));
  CHECK_FALSE(has(c3, {5, 2, 1}));

  CandidateOptions no_prune;
  no_prune.prune_same_support = false;
  CHECK(has(candidate_degrees(J, 2, no_prune), {5, 5}));
  CHECK(candidate_degrees(SymmetricIdeal(), 3).empty());
  CHECK(candidate_degrees(J, 1).empty());

  CandidateOptions full;
  full.full_support_only = true;
  for (const auto& a : candidate_degrees(J, 3, full)) CHECK(a.support_size() == 3);
  for (const auto& a : c3) CHECK(a.is_sorted());
}

TEST_CASE("candidate degrees cover every nonzero Betti degree") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const auto I = oracle::random_ideal(rng, 3, 3);
    for (int n = 1; n <= 3; ++n) {
      const auto cands = candidate_degrees(I, n);
      for (const auto& r : oracle::betti_set(I, n, 0))
        CHECK_MESSAGE(has(cands, r.degree.exponents()),
                      I.to_string() << " n=" << n << " " << r.degree.to_string());
    }
  }
}
