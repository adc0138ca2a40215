#include "doctest.h"

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "symbetti/errors.hpp"
#include "symbetti/homology.hpp"

using namespace symbetti;

namespace {

FaceMask mask(const std::vector<int>& vs) {
  FaceMask m = 0;
  for (int v : vs) m |= FaceMask{1} << v;
  return m;
}

std::set<std::vector<int>> face_lists(const SimplicialComplexData& c) {
  std::set<std::vector<int>> out;
  for (FaceMask f : c.faces()) {
    std::vector<int> vs;
    for (int v = 0; v < c.vertex_count(); ++v)
      if (f >> v & 1) vs.push_back(v);
    out.insert(vs);
  }
  return out;
}

SimplicialComplexData random_complex(std::mt19937& rng, int vertices) {
  std::vector<FaceMask> facets;
  const int count = 1 + static_cast<int>(rng() % 8);
  for (int k = 0; k < count; ++k) {
    FaceMask f = 0;
    for (int v = 0; v < vertices; ++v)
      if (rng() % 3 == 0) f |= FaceMask{1} << v;
    facets.push_back(f);
  }
  return SimplicialComplexData::from_facets(vertices, facets);
}

HomologyDims as_dims(const std::map<int, std::size_t>& m) { return HomologyDims(m.begin(), m.end()); }

}  // namespace

TEST_CASE("rank examples") {
  const auto id = SparseMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rank_over_field(id, FieldSpec(2)) == 3);
  CHECK(rank_over_field(SparseMatrix::from_dense({{2}}), FieldSpec(2)) == 0);
  CHECK(rank_over_field(SparseMatrix::from_dense({{2}}), FieldSpec(0)) == 1);
  CHECK(rank_over_field(SparseMatrix{}, FieldSpec(0)) == 0);
  const auto singular = SparseMatrix::from_dense({{1, 2}, {2, 4}});
  CHECK(rank_over_field(singular, FieldSpec(0)) == 1);
  CHECK(rank_over_field(singular, FieldSpec(3)) == 1);
}

TEST_CASE("dense round trip") {
  const std::vector<std::vector<std::int64_t>> d{{0, 3, 0}, {-1, 0, 2}};
  const auto s = SparseMatrix::from_dense(d);
  CHECK(s.rows == 2);
  CHECK(s.cols == 3);
  CHECK(s.to_dense() == d);
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    std::vector<std::vector<std::int64_t>> d(r, std::vector<std::int64_t>(c));
    for (auto& row : d)
      for (auto& v : row) v = rng() % 3 == 0 ? static_cast<std::int64_t>(rng() % 7) - 3 : 0;
    const auto s = SparseMatrix::from_dense(d);
    for (std::uint32_t p : {0u, 2u, 3u, 5u})
      CHECK(rank_over_field(s, FieldSpec(p)) == oracle::dense_rank(d, p));
  }
}

TEST_CASE("exact rank survives large entries") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 6;
    std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n));
    for (auto& row : d)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 2000000001ULL) - 1000000000;
    // Force a dependency: last row = sum of first two.
    for (std::size_t k = 0; k < n; ++k) d[n - 1][k] = d[0][k] + d[1][k];
    CHECK(rank_over_field(SparseMatrix::from_dense(d), FieldSpec(0)) == oracle::dense_rank(d, 0));
  }
}

TEST_CASE("product and boundary composite") {
  const auto a = SparseMatrix::from_dense({{1, 2}, {0, 1}});
  const auto b = SparseMatrix::from_dense({{3}, {-1}});
  CHECK(multiply(a, b).to_dense() == std::vector<std::vector<std::int64_t>>{{1}, {-1}});
  CHECK_THROWS(multiply(b, b));
}

TEST_CASE("small complexes") {
  const SimplicialComplexData void_complex(3);
  CHECK(void_complex.is_void());
  CHECK(void_complex.dimension() == -2);
  CHECK(reduced_homology_dims(void_complex, FieldSpec(0)).empty());

  const SimplicialComplexData irrelevant(2, {0});
  CHECK(irrelevant.dimension() == -1);
  CHECK(reduced_homology_dims(irrelevant, FieldSpec(0)) == HomologyDims{{-1, 1}});

  const auto circle = SimplicialComplexData::from_facets(3, {mask({0, 1}), mask({0, 2}), mask({1, 2})});
  CHECK(reduced_homology_dims(circle, FieldSpec(0)) == HomologyDims{{1, 1}});
  CHECK(reduced_homology_dims(circle, FieldSpec(2)) == HomologyDims{{1, 1}});

  const auto simplex = SimplicialComplexData::from_facets(3, {mask({0, 1, 2})});
  CHECK(reduced_homology_dims(simplex, FieldSpec(0)).empty());
  CHECK(simplex.faces().size() == 8);

  const auto two_points = SimplicialComplexData::from_facets(2, {mask({0}), mask({1})});
  CHECK(reduced_homology_dims(two_points, FieldSpec(0)) == HomologyDims{{0, 1}});

  CHECK_THROWS_AS(SimplicialComplexData(3, {0, mask({0, 1})}), Error);
  CHECK(circle.contains(mask({0, 1})));
  CHECK_FALSE(circle.contains(mask({0, 1, 2})));
  CHECK(circle.faces_of_dimension(0).size() == 3);
  CHECK(circle.faces_of_dimension(-1) == std::vector<FaceMask>{0});
}

TEST_CASE("real projective plane") {
  std::vector<FaceMask> facets;
  for (const auto& f : oracle::rp2_facets()) facets.push_back(mask(f));
  const auto rp2 = SimplicialComplexData::from_facets(6, facets);
  CHECK(rp2.faces_of_dimension(1).size() == 15);
  CHECK(reduced_homology_dims(rp2, FieldSpec(2)) == HomologyDims{{1, 1}, {2, 1}});
  CHECK(reduced_homology_dims(rp2, FieldSpec(0)).empty());
  CHECK(reduced_homology_dims(rp2, FieldSpec(3)).empty());
  CHECK(reduced_homology_dims(rp2.cone(), FieldSpec(2)).empty());
}

TEST_CASE("predicate construction matches facet construction") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_complex(rng, 6);
    const auto p = SimplicialComplexData::from_predicate(6, [&](FaceMask f) { return c.contains(f); });
    CHECK(p == c);
  }
}

TEST_CASE("random complexes: Euler identity, boundary composite, oracle homology") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const int vertices = 1 + static_cast<int>(rng() % 10);
    const auto c = random_complex(rng, vertices);
    std::int64_t chi = 0;
    for (int i = -1; i <= c.dimension(); ++i) {
      const auto size = static_cast<std::int64_t>(c.faces_of_dimension(i).size());
      chi += (i % 2 == 0) ? size : -size;
      if (i >= 0 && i + 1 <= c.dimension()) {
        const auto prod = multiply(c.boundary_matrix(i), c.boundary_matrix(i + 1));
        for (const auto& col : prod.columns) CHECK(col.empty());
      }
    }
    for (std::uint32_t p : {0u, 2u}) {
      const auto dims = reduced_homology_dims(c, FieldSpec(p));
      std::int64_t h = 0;
      for (const auto& [i, d] : dims) h += (i % 2 == 0) ? static_cast<std::int64_t>(d) : -static_cast<std::int64_t>(d);
      CHECK(h == chi);
      if (vertices <= 7) CHECK(dims == as_dims(oracle::reduced_homology(face_lists(c), p)));
    }
  }
}

TEST_CASE("vertex cap") {
  ::unsetenv("SYMBETTI_MAX_VERTICES");
  CHECK(vertex_cap() == kDefaultVertexCap);
  ::setenv("SYMBETTI_MAX_VERTICES", "99", 1);
  CHECK(vertex_cap() == kHardVertexCap);
  ::setenv("SYMBETTI_MAX_VERTICES", "8", 1);
  CHECK(vertex_cap() == 8);
  ::unsetenv("SYMBETTI_MAX_VERTICES");
  CHECK_THROWS_AS(SimplicialComplexData(kHardVertexCap + 1, {0}), SizeCapError);
}
