#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperquad/bitset.hpp"
#include "hyperquad/correspondence.hpp"

namespace hyperquad {

/// A verification run found a counterexample. The witness names the offending
/// objects in their text rendering.
struct verification_error : std::runtime_error {
    verification_error(const std::string& what, std::string witness_text)
        : std::runtime_error(what + (witness_text.empty() ? "" : " [witness: " + witness_text + "]")),
          witness(std::move(witness_text)) {}
    std::string witness;
};

enum class RelFamily { A, B, C };

/// One of the relations A1..A4, B1..B2, C1..C4, or the distinguished EQUAL.
class RelationLabel {
  public:
    static RelationLabel equal() { return RelationLabel(RelFamily::A, 0); }
    static RelationLabel make(RelFamily family, int index);

    bool is_equal() const { return index_ == 0; }
    RelFamily family() const;
    int index() const;

    std::string name() const;
    static std::optional<RelationLabel> parse(std::string_view text);

    auto operator<=>(const RelationLabel&) const = default;

  private:
    RelationLabel(RelFamily family, int index) : family_(family), index_(index) {}
    RelFamily family_;
    int index_;
};

/// Classifies a pair of antiflags of the same space:
///   EQUAL  identical pairs
///   A3     exactly one of P = P', H = H' holds
///   otherwise by the containment bits (P in H', P' in H):
///   A2     both, A1 exactly one, A4 neither.
RelationLabel classify_antiflag_pair(const Antiflag& a, const Antiflag& b);

/// B relation between two distinct nonsingular points: B2 when x + x' is
/// singular (tangent line), B1 otherwise (external line).
RelationLabel classify_nonsingular_pair_b(const Frame& f, const Subspace& x, const Subspace& y);

/// Crossing lines of every singular point outside Pi and Sigma, keyed by the
/// point's bitmask. Read-only in hot loops, hence shareable across workers.
std::map<std::uint64_t, Subspace> all_crossing_lines(const Frame& f);

/// C relation between two distinct nonsingular points:
///   C1  the line XX' is external
///   C3  the line is tangent and its singular point lies in Pi or Sigma
///   C4  the line is tangent, Y is exterior, and Y's crossing line J lies in
///       (X + X')^perp
///   C2  the remaining tangent case.
/// Secant or totally singular lines between nonsingular points are impossible
/// and abort loudly.
RelationLabel classify_nonsingular_pair_c(const Frame& f, const Subspace& x, const Subspace& y);
/// Same, with the crossing lines precomputed by all_crossing_lines.
RelationLabel classify_nonsingular_pair_c(const Frame& f,
                                          const std::map<std::uint64_t, Subspace>& crossing_lines,
                                          std::uint64_t x_bits, std::uint64_t y_bits);

/// Closed-form degree of each relation on its graph over V(2n,2):
///   A1/C1: (2^{n-1}-1) 2^{n-1}      A2/C2: (2^{n-1}-1) 2^{n-2}
///   A3/C3: 2 (2^{n-1}-1)            A4/C4: (2^{n-1}-1)(2^{n-2}-1)
///   B1 = C1's value                 B2: (2^{n-1}+1)(2^{n-1}-1)
std::uint64_t expected_degree(RelationLabel label, int n);

/// Number of vertices of every relation graph at a given n.
std::uint64_t graph_order(int n);

/// A relation graph: vertices in canonical order (antiflags of V(n,2) for the
/// A family, nonsingular points ascending for B and C) with bitset adjacency.
struct RelationGraph {
    RelationLabel label = RelationLabel::equal();
    int n = 0;
    std::vector<std::string> vertex_labels;
    std::vector<Bitset> adjacency;

    std::size_t size() const { return adjacency.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }
    std::uint64_t edge_count() const;
};

/// Exhaustive graph construction; refuses more than 2*10^4 vertices.
RelationGraph build_graph(const Frame& f, RelationLabel label, int threads = 0);

struct SrgParams {
    std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;
    bool identity_holds() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
    bool operator==(const SrgParams&) const = default;
    std::string to_string() const;
};

/// Exhaustive strong-regularity check via common-neighbor counting. Throws
/// verification_error (with a witness pair) if the graph is not strongly
/// regular, or is complete or edgeless.
SrgParams srg_params(const std::vector<Bitset>& adjacency, int threads = 0);
SrgParams srg_params(const RelationGraph& g, int threads = 0);

/// Reference parameters for the B1 graph as tabulated in the literature:
/// v, k from the degree formulas, lambda = (2^{n-2}-1) 2^{n-1},
/// mu = (2^{n-1}-1) 2^{n-2}.
SrgParams b1_reference_params(int n);

struct SrgReport {
    RelationLabel label = RelationLabel::equal();
    SrgParams computed;
    std::optional<SrgParams> reference; // B1 only
    bool matches_reference = true;
};

SrgReport verify_srg(const Frame& f, RelationLabel label, int threads = 0);

/// Per-vertex relation degree counts: for family A one row per antiflag of
/// V(n,2) with counts of A1..A4; for C one row per nonsingular point; for B
/// one row per nonsingular point using slots 0..1.
std::vector<std::array<std::uint64_t, 4>> degree_table(const Frame& f, RelFamily family,
                                                       int threads = 0);

struct TheoremReport {
    int n = 0;
    bool exhaustive = true;
    std::uint64_t pair_count = 0;
    std::array<std::uint64_t, 4> relation_counts{}; // C1..C4
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    bool degrees_checked = false;
};

/// Checks classify_C(X, X') == classify_A(f(X), f(X')) over every unordered
/// pair of nonsingular points, and in exhaustive mode also checks every
/// per-vertex degree against the closed forms. Throws verification_error with
/// the witness pair on any mismatch.
TheoremReport verify_theorem(const Frame& f, int threads = 0);
/// Sampled variant: `samples` pairs drawn with a seeded generator.
TheoremReport verify_theorem_sampled(const Frame& f, std::uint64_t samples, std::uint64_t seed,
                                     int threads = 0);

struct BijectionReport {
    int n = 0;
    std::uint64_t point_count = 0;
    std::uint64_t antiflag_count = 0;
};

/// forward_map is a bijection from nonsingular points onto the antiflags of
/// Sigma, inverse_map inverts it both ways, and every image avoids its
/// hyperplane. Throws verification_error otherwise.
BijectionReport verify_bijection(const Frame& f);

struct FactsReport {
    int n = 0;
    std::uint64_t nonsingular_points = 0;
    std::uint64_t singular_points = 0;
    std::uint64_t tangent_lines = 0;
    std::uint64_t ts_subspaces = 0;
    bool ts_exhaustive = true;
};

struct SampleSpec {
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
};

/// Section-level structural facts:
///   X nonsingular: X^perp is parabolic of rank n-1, no vertex
///   Y singular:    Y^perp is a cone with 1-dim vertex over hyperbolic rank n-1
///   L tangent:     L^perp is a cone with 1-dim vertex over parabolic rank n-2
///   G totally singular of dim n-1: exactly two maximals contain it.
/// Points and lines are checked exhaustively (n <= 5); the G check is
/// exhaustive for n <= 3 and needs a sample spec for n in {4, 5}.
FactsReport verify_facts(const Frame& f, std::optional<SampleSpec> ts_sample = std::nullopt);

struct IsoReport {
    int n = 0;
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
};

/// The tangent graph on nonsingular points (C2) and the antiflag graph on
/// V(n,2) (A2) are isomorphic under X -> f(X) read in Sigma coordinates:
/// checks the map is a bijection matching edge for edge.
IsoReport verify_antiflag_graph_iso(const Frame& f, int threads = 0);

} // namespace hyperquad
