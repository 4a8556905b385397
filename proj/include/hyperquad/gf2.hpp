#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperquad {

// Raised when an internal consistency check fails. Indicates a bug in this
// library (or corrupted inputs that bypassed validation), never bad user input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr int kMaxAmbientDim = 64;

/// Vector of V(m,2) stored as a bitmask, m <= 64. Coordinate i (1-indexed,
/// so e1, e2, ...) is bit i-1. The text form is an m-character 0/1 string
/// with coordinate 1 leftmost.
class GF2Vector {
  public:
    GF2Vector() = default;
    GF2Vector(std::uint64_t bits, int dim);

    static GF2Vector zero(int dim) { return GF2Vector(0, dim); }
    /// Basis vector e_coordinate (1-indexed).
    static GF2Vector unit(int coordinate, int dim);

    std::uint64_t bits() const { return bits_; }
    int dim() const { return dim_; }
    bool is_zero() const { return bits_ == 0; }
    /// Coordinate i (1-indexed).
    int coordinate(int i) const;

    friend GF2Vector operator+(const GF2Vector& a, const GF2Vector& b);

    auto operator<=>(const GF2Vector&) const = default;

    std::string to_string() const;
    /// Parses an 0/1 string; the ambient dimension is the string length.
    static GF2Vector parse(std::string_view text);

  private:
    int dim_ = 0;
    std::uint64_t bits_ = 0;
};

/// Subspace of V(m,2) held as a canonical reduced-row-echelon basis: pivot
/// columns strictly increasing, each pivot column zero in every other basis
/// row. Two values denote the same subspace iff they compare equal; the
/// default ordering (ambient, then basis rows as integers) is the canonical
/// order used for all deterministic enumerations.
class Subspace {
  public:
    Subspace() = default;

    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    /// Canonicalizes arbitrary row bitmasks into RREF; the only constructor path.
    static Subspace from_rows(int ambient_dim, std::span<const std::uint64_t> rows);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool is_zero() const { return rows_.empty(); }

    std::span<const std::uint64_t> rows() const { return rows_; }
    std::vector<GF2Vector> basis() const;

    bool contains(const GF2Vector& v) const;
    /// Membership for a raw bitmask already known to live in V(ambient_dim,2).
    bool contains_bits(std::uint64_t bits) const;

    /// The unique nonzero vector of a 1-dimensional subspace.
    GF2Vector point_vector() const;
    std::uint64_t point_bits() const;

    std::string to_string(std::string_view separator = "\n") const;

    auto operator<=>(const Subspace&) const = default;

  private:
    int ambient_dim_ = 0;
    std::vector<std::uint64_t> rows_;
};

Subspace span(std::span<const GF2Vector> vectors, int ambient_dim);
Subspace span(std::initializer_list<GF2Vector> vectors, int ambient_dim);
/// 1-space spanned by a nonzero vector.
Subspace make_point(const GF2Vector& v);

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersection(const Subspace& s, const Subspace& t);

/// Kernel of x -> (<rows[0],x>, <rows[1],x>, ...) where <,> is the GF(2) dot
/// product; rows need not be independent.
Subspace null_space(std::span<const std::uint64_t> functional_rows, int ambient_dim);

bool is_subspace(const Subspace& inner, const Subspace& outer);

/// All nonzero vectors of S in ascending bitmask order.
std::vector<GF2Vector> enumerate_vectors(const Subspace& s);
/// All 2^dim - 1 points of S, ascending by their nonzero vector's bitmask.
std::vector<Subspace> enumerate_points(const Subspace& s);
/// All (dim-1)-subspaces of S: kernels of the nonzero functionals on S,
/// iterated in ascending order of the functional's coefficient mask over
/// the canonical basis.
std::vector<Subspace> hyperplanes_of(const Subspace& s);
/// All subspaces of V(m,2) of the given dimension, deterministic order.
/// Desk-scale only: guarded against combinatorial blowup.
std::vector<Subspace> all_subspaces(int ambient_dim, int dim);

/// Comma-separated list of 0/1 vector strings -> their span.
Subspace parse_subspace(std::string_view text);

} // namespace hyperquad
