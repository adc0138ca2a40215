#pragma once

// Reduced simplicial homology over Q and F_p.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "symbetti/field.hpp"

namespace symbetti {

/// Column-sparse integer matrix. Each column lists (row, value) pairs with
/// strictly increasing row and nonzero value.
struct SparseMatrix {
  struct Entry {
    std::uint32_t row;
    std::int64_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);
  std::vector<std::vector<std::int64_t>> to_dense() const;
};

/// Matrix product over Z (exact, overflow-checked).
SparseMatrix multiply(const SparseMatrix& left, const SparseMatrix& right);

/// Rank over Q (exact fraction-free elimination with GMP fallback) or over F_p.
std::size_t rank_over_field(const SparseMatrix& matrix, const FieldSpec& field);

using FaceMask = std::uint32_t;

/// Hard limit on vertices; faces are 32-bit masks and 2^20 faces is the
/// largest complex the lookup tables are sized for.
inline constexpr int kHardVertexCap = 20;
inline constexpr int kDefaultVertexCap = 14;

/// Vertex cap in force: SYMBETTI_MAX_VERTICES if set (clamped to the hard
/// cap), otherwise the default.
int vertex_cap();

/// Downward-closed family of faces on vertices {0, ..., vertex_count-1}.
class SimplicialComplexData {
 public:
  /// Void complex (no faces at all) on the given vertices.
  explicit SimplicialComplexData(int vertex_count = 0);

  /// Faces are validated for closure under subsets. Throws
  /// Error(InvalidArgument) otherwise, SizeCapError above the hard cap.
  SimplicialComplexData(int vertex_count, std::vector<FaceMask> faces);

  /// All subsets of the given facets.
  static SimplicialComplexData from_facets(int vertex_count,
                                           const std::vector<FaceMask>& facets);

  /// {F : contains(F)} for a predicate that is monotone decreasing; the
  /// predicate is evaluated on every subset of the vertex set.
  static SimplicialComplexData from_predicate(
      int vertex_count, const std::function<bool(FaceMask)>& contains);

  int vertex_count() const noexcept { return vertex_count_; }
  /// Sorted by (cardinality, mask).
  const std::vector<FaceMask>& faces() const noexcept { return faces_; }
  bool is_void() const noexcept { return faces_.empty(); }
  bool contains(FaceMask face) const;
  int dimension() const;

  /// Faces of dimension i (cardinality i+1); i = -1 gives the empty face.
  std::vector<FaceMask> faces_of_dimension(int i) const;

  /// Boundary map C_i -> C_{i-1}, rows and columns indexed in the order
  /// of faces_of_dimension. Sign of removing the vertex at position k of
  /// the increasingly ordered face is (-1)^k.
  SparseMatrix boundary_matrix(int i) const;

  /// Cone with apex a fresh vertex (index vertex_count()).
  SimplicialComplexData cone() const;

  friend bool operator==(const SimplicialComplexData&,
                         const SimplicialComplexData&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<FaceMask> faces_;
};

/// i -> dim H~_i for nonzero dimensions only, i >= -1.
using HomologyDims = std::map<int, std::size_t>;

HomologyDims reduced_homology_dims(const SimplicialComplexData& complex,
                                   const FieldSpec& field);

}  // namespace symbetti
