#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperquad/gf2.hpp"

namespace hyperquad {

enum class FormKind { hyperbolic, elliptic, parabolic };
enum class BaseKind { hyperbolic, elliptic, parabolic, zero };
enum class LineType { external, tangent, secant, totally_singular };

std::string to_string(FormKind k);
std::string to_string(BaseKind k);
std::string to_string(LineType t);

/// Isomorphism type of a quadratic form: a cone with a totally singular
/// vertex over a nondegenerate base. base_rank is the Witt index of the base.
struct FormClass {
    int total_dim = 0;
    int vertex_dim = 0;
    BaseKind base_kind = BaseKind::zero;
    int base_rank = 0;

    int base_dim() const { return total_dim - vertex_dim; }
    /// Number of nonzero singular vectors this class implies.
    std::uint64_t singular_count() const;
    std::string to_string() const;
    bool operator==(const FormClass&) const = default;
};

/// V(m,2) equipped with a quadratic form given by upper-triangular
/// coefficients: Q(x) = sum c_ij x_i x_j over i <= j. Row i-1 of the
/// coefficient table holds c_ij at bit j-1 for j >= i. The polar form
/// B(x,y) = Q(x+y) + Q(x) + Q(y) is precomputed as Gram matrix rows.
class QuadraticSpace {
  public:
    QuadraticSpace(int dim, std::span<const std::uint64_t> coeff_rows,
                   std::optional<FormKind> kind_hint = std::nullopt);

    int dim() const { return dim_; }
    std::optional<FormKind> kind_hint() const { return kind_hint_; }

    int eval(const GF2Vector& x) const;
    int eval_bits(std::uint64_t x) const;
    int bilinear(const GF2Vector& x, const GF2Vector& y) const;
    int bilinear_bits(std::uint64_t x, std::uint64_t y) const;

    /// Whether the polar form is nondegenerate on the whole space.
    bool nondegenerate() const { return nondegenerate_; }

    std::span<const std::uint64_t> coeff_rows() const { return coeff_; }
    std::span<const std::uint64_t> gram_rows() const { return gram_; }

  private:
    int dim_;
    std::optional<FormKind> kind_hint_;
    std::vector<std::uint64_t> coeff_;
    std::vector<std::uint64_t> gram_;
    bool nondegenerate_ = false;
};

/// The standard form of each kind:
///   hyperbolic (m even):  x1 x2 + x3 x4 + ... + x_{m-1} x_m
///   elliptic   (m even):  x1^2 + x1 x2 + x2^2 + x3 x4 + ... + x_{m-1} x_m
///   parabolic  (m odd):   x1^2 + x2 x3 + x4 x5 + ... + x_{m-1} x_m
QuadraticSpace standard_form(FormKind kind, int dim);

/// Polar subspace S^perp = { y : B(s, y) = 0 for all s in S }.
/// Requires a nondegenerate polar form on the ambient space.
Subspace perp(const QuadraticSpace& qs, const Subspace& s);

/// Points of S with Q = 0 / Q = 1, ascending bitmask order.
std::vector<Subspace> singular_points(const QuadraticSpace& qs, const Subspace& s);
std::vector<Subspace> nonsingular_points(const QuadraticSpace& qs, const Subspace& s);

bool is_totally_singular(const QuadraticSpace& qs, const Subspace& s);

/// Isomorphism type of Q restricted to S, determined by the bilinear radical,
/// the vertex inside it, and singular-vector counting; any mismatch with the
/// implied census aborts loudly.
FormClass classify_restriction(const QuadraticSpace& qs, const Subspace& s);

LineType line_type(const QuadraticSpace& qs, const Subspace& line);

/// All maximal totally singular subspaces through G, for totally singular G
/// of dimension m/2 - 1 in an even-dimensional nondegenerate space. Found by
/// scanning singular points of G^perp outside G; first-appearance order.
std::vector<Subspace> maximal_ts_through(const QuadraticSpace& qs, const Subspace& g);

/// All totally singular subspaces of the given dimension, canonical order.
std::vector<Subspace> totally_singular_subspaces(const QuadraticSpace& qs, int dim);

} // namespace hyperquad
