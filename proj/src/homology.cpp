#include "symbetti/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>

#include <gmpxx.h>

#include "symbetti/errors.hpp"

namespace symbetti {

SparseMatrix SparseMatrix::from_dense(
    const std::vector<std::vector<std::int64_t>>& dense) {
  SparseMatrix m;
  m.rows = dense.size();
  m.cols = dense.empty() ? 0 : dense.front().size();
  m.columns.resize(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (dense[r].size() != m.cols)
      throw Error(ErrorCode::InvalidArgument, "ragged dense matrix");
    for (std::size_t c = 0; c < m.cols; ++c)
      if (dense[r][c] != 0)
        m.columns[c].push_back({static_cast<std::uint32_t>(r), dense[r][c]});
  }
  return m;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> dense(
      rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& e : columns[c]) dense[e.row][c] = e.value;
  return dense;
}

SparseMatrix multiply(const SparseMatrix& left, const SparseMatrix& right) {
  if (left.cols != right.rows)
    throw Error(ErrorCode::InvalidArgument, "multiply: shape mismatch");
  SparseMatrix out;
  out.rows = left.rows;
  out.cols = right.cols;
  out.columns.resize(out.cols);
  std::map<std::uint32_t, std::int64_t> acc;
  for (std::size_t c = 0; c < right.cols; ++c) {
    acc.clear();
    for (const auto& re : right.columns[c]) {
      for (const auto& le : left.columns[re.row]) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(le.value, re.value, &prod) ||
            __builtin_add_overflow(acc[le.row], prod, &acc[le.row]))
          throw Error(ErrorCode::InvalidArgument, "multiply: overflow");
      }
    }
    for (const auto& [row, value] : acc)
      if (value != 0) out.columns[c].push_back({row, value});
  }
  return out;
}

namespace {

// Column reduction keyed on the largest row index of each column. A column
// whose pivot row is already owned is reduced against the owner until it is
// zero or has a fresh pivot; the number of surviving columns is the rank.

struct ModP {
  using Value = std::uint64_t;
  std::uint64_t p;

  Value from(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p);
    return static_cast<Value>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  bool is_zero(const Value& v) const { return v == 0; }
  Value inverse(Value v) const {
    // Fermat: v^(p-2).
    Value result = 1, base = v % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  }
};

template <class Value>
using SparseColumn = std::vector<std::pair<std::uint32_t, Value>>;

std::size_t rank_mod_p(const SparseMatrix& matrix, std::uint64_t p) {
  ModP field{p};
  using Column = SparseColumn<std::uint64_t>;
  std::unordered_map<std::uint32_t, Column> owner;
  Column work, next;
  for (const auto& col : matrix.columns) {
    work.clear();
    for (const auto& e : col) {
      auto v = field.from(e.value);
      if (v) work.emplace_back(e.row, v);
    }
    while (!work.empty()) {
      auto it = owner.find(work.back().first);
      if (it == owner.end()) break;
      const Column& pivot = it->second;  // normalized: pivot entry is 1
      const std::uint64_t factor = p - work.back().second;  // work += factor*pivot
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < work.size() || j < pivot.size()) {
        if (j == pivot.size() ||
            (i < work.size() && work[i].first < pivot[j].first)) {
          next.push_back(work[i++]);
        } else if (i == work.size() || pivot[j].first < work[i].first) {
          next.emplace_back(pivot[j].first, factor * pivot[j].second % p);
          ++j;
        } else {
          auto v = (work[i].second + factor * pivot[j].second) % p;
          if (v) next.emplace_back(work[i].first, v);
          ++i;
          ++j;
        }
      }
      work.swap(next);
    }
    if (!work.empty()) {
      const auto inv = field.inverse(work.back().second);
      for (auto& [row, v] : work) v = v * inv % p;
      owner.emplace(work.back().first, work);
    }
  }
  return owner.size();
}

struct Overflow {};

// Fraction-free integer arithmetic on int64 with overflow detection.
struct CheckedInt {
  using Value = std::int64_t;
  static Value mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static bool is_zero(Value v) { return v == 0; }
  static Value gcd(Value a, Value b) { return std::gcd(a, b); }
  static Value div(Value a, Value b) { return a / b; }
  static Value from(std::int64_t v) { return v; }
  static bool negative(Value v) { return v < 0; }
  static Value neg(Value v) {
    if (v == std::numeric_limits<Value>::min()) throw Overflow{};
    return -v;
  }
};

struct BigInt {
  using Value = mpz_class;
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static Value gcd(const Value& a, const Value& b) {
    Value r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static Value div(const Value& a, const Value& b) {
    Value r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static Value from(std::int64_t v) { return Value(static_cast<long>(v)); }
  static bool negative(const Value& v) { return sgn(v) < 0; }
  static Value neg(const Value& v) { return -v; }
};

template <class Arith>
std::size_t rank_rational(const SparseMatrix& matrix) {
  using Value = typename Arith::Value;
  using Column = SparseColumn<Value>;
  std::unordered_map<std::uint32_t, Column> owner;
  Column work, next;
  for (const auto& col : matrix.columns) {
    work.clear();
    for (const auto& e : col)
      if (e.value != 0) work.emplace_back(e.row, Arith::from(e.value));
    while (!work.empty()) {
      auto it = owner.find(work.back().first);
      if (it == owner.end()) break;
      const Column& pivot = it->second;
      // work <- pivot_lead * work - work_lead * pivot, then strip content.
      const Value pl = pivot.back().second;
      const Value wl = work.back().second;
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < work.size() || j < pivot.size()) {
        if (j == pivot.size() ||
            (i < work.size() && work[i].first < pivot[j].first)) {
          next.emplace_back(work[i].first, Arith::mul(pl, work[i].second));
          ++i;
        } else if (i == work.size() || pivot[j].first < work[i].first) {
          next.emplace_back(pivot[j].first,
                            Arith::neg(Arith::mul(wl, pivot[j].second)));
          ++j;
        } else {
          Value v = Arith::sub(Arith::mul(pl, work[i].second),
                               Arith::mul(wl, pivot[j].second));
          if (!Arith::is_zero(v)) next.emplace_back(work[i].first, v);
          ++i;
          ++j;
        }
      }
      if (!next.empty()) {
        Value g = Arith::from(0);
        for (const auto& [row, v] : next) {
          g = Arith::gcd(g, v);
          if (g == Arith::from(1)) break;
        }
        if (!(g == Arith::from(1)))
          for (auto& [row, v] : next) v = Arith::div(v, g);
      }
      work.swap(next);
    }
    if (!work.empty()) owner.emplace(work.back().first, work);
  }
  return owner.size();
}

}  // namespace

std::size_t rank_over_field(const SparseMatrix& matrix, const FieldSpec& field) {
  if (!field.is_rational())
    return rank_mod_p(matrix, field.characteristic());
  try {
    return rank_rational<CheckedInt>(matrix);
  } catch (const Overflow&) {
    return rank_rational<BigInt>(matrix);
  }
}

int vertex_cap() {
  if (const char* env = std::getenv("SYMBETTI_MAX_VERTICES")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return static_cast<int>(std::min<long>(value, kHardVertexCap));
  }
  return kDefaultVertexCap;
}

namespace {

void check_vertex_count(int vertex_count) {
  if (vertex_count < 0)
    throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  if (vertex_count > kHardVertexCap)
    throw SizeCapError("simplicial complex on " + std::to_string(vertex_count) +
                       " vertices exceeds the hard cap of " +
                       std::to_string(kHardVertexCap));
}

bool face_order(FaceMask a, FaceMask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

SimplicialComplexData::SimplicialComplexData(int vertex_count)
    : vertex_count_(vertex_count) {
  check_vertex_count(vertex_count);
}

SimplicialComplexData::SimplicialComplexData(int vertex_count,
                                             std::vector<FaceMask> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
  check_vertex_count(vertex_count);
  std::sort(faces_.begin(), faces_.end(), face_order);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  const FaceMask universe =
      vertex_count == 32 ? ~FaceMask{0} : (FaceMask{1} << vertex_count) - 1;
  for (FaceMask f : faces_) {
    if (f & ~universe)
      throw Error(ErrorCode::InvalidArgument, "face uses unknown vertex");
    for (FaceMask rest = f; rest; rest &= rest - 1) {
      const FaceMask sub = f & ~(rest & -rest);
      if (!std::binary_search(faces_.begin(), faces_.end(), sub, face_order))
        throw Error(ErrorCode::InvalidArgument,
                    "face family is not closed under subsets");
    }
  }
}

SimplicialComplexData SimplicialComplexData::from_facets(
    int vertex_count, const std::vector<FaceMask>& facets) {
  check_vertex_count(vertex_count);
  std::vector<FaceMask> faces;
  for (FaceMask facet : facets) {
    // Enumerate all submasks, including the empty one.
    FaceMask sub = facet;
    while (true) {
      faces.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  return SimplicialComplexData(vertex_count, std::move(faces));
}

SimplicialComplexData SimplicialComplexData::from_predicate(
    int vertex_count, const std::function<bool(FaceMask)>& contains) {
  check_vertex_count(vertex_count);
  const std::size_t total = std::size_t{1} << vertex_count;
  std::vector<char> member(total, 0);
  SimplicialComplexData out(vertex_count);
  for (std::size_t mask = 0; mask < total; ++mask) {
    const auto face = static_cast<FaceMask>(mask);
    bool boundary_in = true;
    for (FaceMask rest = face; rest; rest &= rest - 1)
      if (!member[face & ~(rest & -rest)]) {
        boundary_in = false;
        break;
      }
    if (boundary_in && contains(face)) {
      member[mask] = 1;
      out.faces_.push_back(face);
    }
  }
  std::sort(out.faces_.begin(), out.faces_.end(), face_order);
  return out;
}

bool SimplicialComplexData::contains(FaceMask face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int SimplicialComplexData::dimension() const {
  return faces_.empty() ? -2 : std::popcount(faces_.back()) - 1;
}

std::vector<FaceMask> SimplicialComplexData::faces_of_dimension(int i) const {
  std::vector<FaceMask> out;
  for (FaceMask f : faces_)
    if (std::popcount(f) == i + 1) out.push_back(f);
  return out;
}

SparseMatrix SimplicialComplexData::boundary_matrix(int i) const {
  const auto targets = faces_of_dimension(i - 1);
  const auto sources = faces_of_dimension(i);
  SparseMatrix m;
  m.rows = targets.size();
  m.cols = sources.size();
  m.columns.resize(sources.size());
  if (i < 0) return m;
  std::unordered_map<FaceMask, std::uint32_t> index;
  index.reserve(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k)
    index.emplace(targets[k], static_cast<std::uint32_t>(k));
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const FaceMask f = sources[c];
    int position = 0;
    auto& column = m.columns[c];
    for (FaceMask rest = f; rest; rest &= rest - 1, ++position) {
      const FaceMask sub = f & ~(rest & -rest);
      column.push_back({index.at(sub), position % 2 == 0 ? 1 : -1});
    }
    std::sort(column.begin(), column.end(),
              [](const auto& a, const auto& b) { return a.row < b.row; });
  }
  return m;
}

SimplicialComplexData SimplicialComplexData::cone() const {
  const FaceMask apex = FaceMask{1} << vertex_count_;
  std::vector<FaceMask> faces = faces_;
  for (FaceMask f : faces_) faces.push_back(f | apex);
  return SimplicialComplexData(vertex_count_ + 1, std::move(faces));
}

HomologyDims reduced_homology_dims(const SimplicialComplexData& complex,
                                   const FieldSpec& field) {
  HomologyDims dims;
  if (complex.is_void()) return dims;
  const int top = complex.dimension();
  // rank of d_i for i = 0..top; d_{-1} and d_{top+1} are zero.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::size_t> sizes(static_cast<std::size_t>(top + 2), 0);
  for (FaceMask f : complex.faces())
    ++sizes[static_cast<std::size_t>(std::popcount(f))];
  for (int i = 0; i <= top; ++i)
    ranks[static_cast<std::size_t>(i)] =
        rank_over_field(complex.boundary_matrix(i), field);
  for (int i = -1; i <= top; ++i) {
    const std::size_t size = sizes[static_cast<std::size_t>(i + 1)];
    const std::size_t out_rank = i >= 0 ? ranks[static_cast<std::size_t>(i)] : 0;
    const std::size_t in_rank =
        i + 1 <= top ? ranks[static_cast<std::size_t>(i + 1)] : 0;
    const std::size_t dim = size - out_rank - in_rank;
    if (dim) dims[i] = dim;
  }
  return dims;
}

}  // namespace symbetti
