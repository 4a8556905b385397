#pragma once

#include <string>
#include <vector>

#include "hyperquad/gf2.hpp"
#include "hyperquad/quadric.hpp"

namespace hyperquad {

/// A hyperbolic space V(2n,2) together with an ordered pair (Pi, Sigma) of
/// disjoint maximal totally singular subspaces. Validated on construction.
class Frame {
  public:
    Frame(QuadraticSpace qs, Subspace pi, Subspace sigma);

    int n() const { return n_; }
    const QuadraticSpace& space() const { return qs_; }
    const Subspace& pi() const { return pi_; }
    const Subspace& sigma() const { return sigma_; }

  private:
    int n_;
    QuadraticSpace qs_;
    Subspace pi_;
    Subspace sigma_;
};

/// Standard frame for n >= 2: Q = x1 x2 + ... + x_{2n-1} x_{2n},
/// Pi = <e1, e3, ..., e_{2n-1}>, Sigma = <e2, e4, ..., e_{2n}>.
Frame standard_frame(int n);
/// The same space with Pi and Sigma exchanged.
Frame swapped_frame(const Frame& f);

/// Point-hyperplane antiflag of some space S: a point P and a hyperplane H
/// of S with P not contained in H. The default ordering (point, then
/// hyperplane basis) is the canonical antiflag order.
struct Antiflag {
    Subspace point;
    Subspace hyperplane;

    auto operator<=>(const Antiflag&) const = default;
    /// "P;H" with the hyperplane basis comma-joined.
    std::string to_string() const;
};

/// Validates that (point, hyperplane) is an antiflag of `space` and builds it.
Antiflag make_antiflag(const Subspace& space, Subspace point, Subspace hyperplane);

/// All antiflags of `space` in canonical order.
std::vector<Antiflag> enumerate_antiflags(const Subspace& space);

/// The antiflag attached to a nonsingular point X: with G = X^perp cap Pi,
/// H = X^perp cap Sigma and P = G^perp cap Sigma, maps X to (P, H).
Antiflag forward_map(const Frame& f, const Subspace& x);

/// Inverse of forward_map: recovers G = P^perp cap Pi, forms the line
/// L = (G + H)^perp, and returns its unique nonsingular point.
Subspace inverse_map(const Frame& f, const Antiflag& af);

/// For a singular point Y outside Pi and Sigma: the unique line through Y
/// meeting both Pi and Sigma, namely Y + (G^perp cap Sigma) for
/// G = Y^perp cap Pi.
Subspace crossing_line(const Frame& f, const Subspace& y);

/// Rewrites a subspace of Sigma in coordinates over Sigma's canonical basis,
/// producing a subspace of V(n,2).
Subspace sigma_coordinates(const Frame& f, const Subspace& s);

} // namespace hyperquad
