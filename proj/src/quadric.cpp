#include "hyperquad/quadric.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace hyperquad {

namespace {

int parity(std::uint64_t x) {
    return std::popcount(x) & 1;
}

std::uint64_t pow2(int e) {
    return std::uint64_t{1} << e;
}

// Nonzero singular vectors of the standard nondegenerate form of each kind.
std::uint64_t base_singular_count(BaseKind kind, int base_dim) {
    switch (kind) {
    case BaseKind::zero:
        return 0;
    case BaseKind::parabolic:
        return pow2(base_dim - 1) - 1;
    case BaseKind::hyperbolic: {
        const int k = base_dim / 2;
        return (pow2(k - 1) + 1) * (pow2(k) - 1);
    }
    case BaseKind::elliptic: {
        const int k = base_dim / 2;
        return (pow2(k - 1) - 1) * (pow2(k) + 1);
    }
    }
    throw internal_error("unreachable base kind");
}

} // namespace

std::string to_string(FormKind k) {
    switch (k) {
    case FormKind::hyperbolic:
        return "hyperbolic";
    case FormKind::elliptic:
        return "elliptic";
    case FormKind::parabolic:
        return "parabolic";
    }
    throw internal_error("unreachable form kind");
}

std::string to_string(BaseKind k) {
    switch (k) {
    case BaseKind::hyperbolic:
        return "hyperbolic";
    case BaseKind::elliptic:
        return "elliptic";
    case BaseKind::parabolic:
        return "parabolic";
    case BaseKind::zero:
        return "zero";
    }
    throw internal_error("unreachable base kind");
}

std::string to_string(LineType t) {
    switch (t) {
    case LineType::external:
        return "external";
    case LineType::tangent:
        return "tangent";
    case LineType::secant:
        return "secant";
    case LineType::totally_singular:
        return "totally_singular";
    }
    throw internal_error("unreachable line type");
}

std::uint64_t FormClass::singular_count() const {
    return pow2(vertex_dim) * (base_singular_count(base_kind, base_dim()) + 1) - 1;
}

std::string FormClass::to_string() const {
    return "(dim " + std::to_string(total_dim) + ", vertex " + std::to_string(vertex_dim) +
           ", " + hyperquad::to_string(base_kind) + ", rank " + std::to_string(base_rank) + ")";
}

QuadraticSpace::QuadraticSpace(int dim, std::span<const std::uint64_t> coeff_rows,
                               std::optional<FormKind> kind_hint)
    : dim_(dim), kind_hint_(kind_hint) {
    if (dim < 1 || dim > kMaxAmbientDim)
        throw std::invalid_argument("quadratic space dimension must be in [1, 64]");
    if (static_cast<int>(coeff_rows.size()) != dim)
        throw std::invalid_argument("coefficient table must have one row per dimension");
    const std::uint64_t mask = dim == 64 ? ~std::uint64_t{0} : pow2(dim) - 1;
    coeff_.assign(coeff_rows.begin(), coeff_rows.end());
    for (int i = 0; i < dim; ++i) {
        if ((coeff_[static_cast<std::size_t>(i)] & ~mask) != 0)
            throw std::invalid_argument("coefficient row has bits beyond the dimension");
        if (i > 0 && (coeff_[static_cast<std::size_t>(i)] & (pow2(i) - 1)) != 0)
            throw std::invalid_argument("coefficient table must be upper triangular");
    }
    gram_.assign(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if ((coeff_[static_cast<std::size_t>(i)] >> j) & 1) {
                gram_[static_cast<std::size_t>(i)] |= pow2(j);
                gram_[static_cast<std::size_t>(j)] |= pow2(i);
            }
    nondegenerate_ = null_space(gram_, dim).is_zero();
}

int QuadraticSpace::eval_bits(std::uint64_t x) const {
    int acc = 0;
    std::uint64_t t = x;
    while (t) {
        const int i = std::countr_zero(t);
        acc ^= parity(coeff_[static_cast<std::size_t>(i)] & x);
        t &= t - 1;
    }
    return acc;
}

int QuadraticSpace::eval(const GF2Vector& x) const {
    if (x.dim() != dim_)
        throw std::invalid_argument("ambient mismatch in quadratic form evaluation");
    return eval_bits(x.bits());
}

int QuadraticSpace::bilinear_bits(std::uint64_t x, std::uint64_t y) const {
    int acc = 0;
    std::uint64_t t = x;
    while (t) {
        const int i = std::countr_zero(t);
        acc ^= parity(gram_[static_cast<std::size_t>(i)] & y);
        t &= t - 1;
    }
    return acc;
}

int QuadraticSpace::bilinear(const GF2Vector& x, const GF2Vector& y) const {
    if (x.dim() != dim_ || y.dim() != dim_)
        throw std::invalid_argument("ambient mismatch in polar form evaluation");
    return bilinear_bits(x.bits(), y.bits());
}

QuadraticSpace standard_form(FormKind kind, int dim) {
    if (dim < 1 || dim > kMaxAmbientDim)
        throw std::invalid_argument("quadratic space dimension must be in [1, 64]");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(dim), 0);
    switch (kind) {
    case FormKind::hyperbolic:
        if (dim % 2 != 0)
            throw std::invalid_argument("hyperbolic form needs even dimension");
        for (int i = 0; i + 1 < dim; i += 2)
            rows[static_cast<std::size_t>(i)] = pow2(i + 1);
        break;
    case FormKind::elliptic:
        if (dim % 2 != 0)
            throw std::invalid_argument("elliptic form needs even dimension");
        rows[0] = pow2(0) | pow2(1);
        rows[1] = pow2(1);
        for (int i = 2; i + 1 < dim; i += 2)
            rows[static_cast<std::size_t>(i)] = pow2(i + 1);
        break;
    case FormKind::parabolic:
        if (dim % 2 != 1)
            throw std::invalid_argument("parabolic form needs odd dimension");
        rows[0] = pow2(0);
        for (int i = 1; i + 1 < dim; i += 2)
            rows[static_cast<std::size_t>(i)] = pow2(i + 1);
        break;
    }
    return QuadraticSpace(dim, rows, kind);
}

Subspace perp(const QuadraticSpace& qs, const Subspace& s) {
    if (s.ambient_dim() != qs.dim())
        throw std::invalid_argument("ambient mismatch in perp");
    if (!qs.nondegenerate())
        throw std::invalid_argument("perp requires a nondegenerate polar form");
    std::vector<std::uint64_t> functionals;
    functionals.reserve(s.rows().size());
    for (std::uint64_t b : s.rows()) {
        std::uint64_t f = 0;
        std::uint64_t t = b;
        while (t) {
            f ^= qs.gram_rows()[static_cast<std::size_t>(std::countr_zero(t))];
            t &= t - 1;
        }
        functionals.push_back(f);
    }
    return null_space(functionals, qs.dim());
}

std::vector<Subspace> singular_points(const QuadraticSpace& qs, const Subspace& s) {
    if (s.ambient_dim() != qs.dim())
        throw std::invalid_argument("ambient mismatch in singular_points");
    std::vector<Subspace> out;
    for (const GF2Vector& v : enumerate_vectors(s))
        if (qs.eval_bits(v.bits()) == 0)
            out.push_back(make_point(v));
    return out;
}

std::vector<Subspace> nonsingular_points(const QuadraticSpace& qs, const Subspace& s) {
    if (s.ambient_dim() != qs.dim())
        throw std::invalid_argument("ambient mismatch in nonsingular_points");
    std::vector<Subspace> out;
    for (const GF2Vector& v : enumerate_vectors(s))
        if (qs.eval_bits(v.bits()) == 1)
            out.push_back(make_point(v));
    return out;
}

bool is_totally_singular(const QuadraticSpace& qs, const Subspace& s) {
    if (s.ambient_dim() != qs.dim())
        throw std::invalid_argument("ambient mismatch in is_totally_singular");
    const auto rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (qs.eval_bits(rows[i]) != 0)
            return false;
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (qs.bilinear_bits(rows[i], rows[j]) != 0)
                return false;
    }
    return true;
}

FormClass classify_restriction(const QuadraticSpace& qs, const Subspace& s) {
    if (s.ambient_dim() != qs.dim())
        throw std::invalid_argument("ambient mismatch in classify_restriction");
    const int d = s.dim();
    if (d > 20)
        throw std::invalid_argument("classify_restriction is limited to dim <= 20");
    const auto rows = s.rows();

    // Gram matrix of the restriction, in coefficient space V(d,2).
    std::vector<std::uint64_t> gram(static_cast<std::size_t>(d), 0);
    for (int r = 0; r < d; ++r)
        for (int c = r + 1; c < d; ++c)
            if (qs.bilinear_bits(rows[static_cast<std::size_t>(r)],
                                 rows[static_cast<std::size_t>(c)])) {
                gram[static_cast<std::size_t>(r)] |= pow2(c);
                gram[static_cast<std::size_t>(c)] |= pow2(r);
            }
    const Subspace radical_coeffs = null_space(gram, d);

    // Map radical coefficient vectors back into the ambient space.
    std::vector<std::uint64_t> radical_rows;
    for (std::uint64_t c : radical_coeffs.rows()) {
        std::uint64_t v = 0;
        std::uint64_t t = c;
        while (t) {
            v ^= rows[static_cast<std::size_t>(std::countr_zero(t))];
            t &= t - 1;
        }
        radical_rows.push_back(v);
    }

    // Q is linear on the radical; its kernel there is the vertex.
    std::vector<std::uint64_t> vertex_rows;
    int pivot = -1;
    for (std::size_t i = 0; i < radical_rows.size(); ++i)
        if (qs.eval_bits(radical_rows[i]) == 1) {
            pivot = static_cast<int>(i);
            break;
        }
    for (std::size_t i = 0; i < radical_rows.size(); ++i) {
        if (static_cast<int>(i) == pivot)
            continue;
        std::uint64_t v = radical_rows[i];
        if (pivot >= 0 && qs.eval_bits(v) == 1)
            v ^= radical_rows[static_cast<std::size_t>(pivot)];
        vertex_rows.push_back(v);
    }
    const Subspace vertex = Subspace::from_rows(qs.dim(), vertex_rows);
    const int t_invariant = static_cast<int>(radical_rows.size()) - vertex.dim();
    if (t_invariant != 0 && t_invariant != 1)
        throw internal_error("vertex computation produced an impossible codimension");

    FormClass fc;
    fc.total_dim = d;
    fc.vertex_dim = vertex.dim();
    const int base_dim = fc.base_dim();

    std::uint64_t singular = 0;
    for (const GF2Vector& v : enumerate_vectors(s))
        if (qs.eval_bits(v.bits()) == 0)
            ++singular;

    if (base_dim == 0) {
        fc.base_kind = BaseKind::zero;
        fc.base_rank = 0;
    } else if (t_invariant == 1) {
        if (base_dim % 2 != 1)
            throw internal_error("parabolic base with even dimension");
        fc.base_kind = BaseKind::parabolic;
        fc.base_rank = (base_dim - 1) / 2;
    } else {
        if (base_dim % 2 != 0)
            throw internal_error("nondegenerate bilinear part with odd dimension");
        const int k = base_dim / 2;
        const std::uint64_t expect_plus =
            pow2(fc.vertex_dim) * (base_singular_count(BaseKind::hyperbolic, base_dim) + 1) - 1;
        const std::uint64_t expect_minus =
            pow2(fc.vertex_dim) * (base_singular_count(BaseKind::elliptic, base_dim) + 1) - 1;
        if (singular == expect_plus) {
            fc.base_kind = BaseKind::hyperbolic;
            fc.base_rank = k;
        } else if (singular == expect_minus) {
            fc.base_kind = BaseKind::elliptic;
            fc.base_rank = k - 1;
        } else {
            throw internal_error("singular census matches neither even-dimensional type: got " +
                                 std::to_string(singular));
        }
    }

    if (singular != fc.singular_count())
        throw internal_error("singular census mismatch for " + fc.to_string() + ": counted " +
                             std::to_string(singular) + ", class implies " +
                             std::to_string(fc.singular_count()));
    return fc;
}

LineType line_type(const QuadraticSpace& qs, const Subspace& line) {
    if (line.ambient_dim() != qs.dim())
        throw std::invalid_argument("ambient mismatch in line_type");
    if (line.dim() != 2)
        throw std::invalid_argument("line_type requires a 2-dimensional subspace");
    const std::uint64_t a = line.rows()[0];
    const std::uint64_t b = line.rows()[1];
    const int singular =
        (qs.eval_bits(a) == 0) + (qs.eval_bits(b) == 0) + (qs.eval_bits(a ^ b) == 0);
    switch (singular) {
    case 0:
        return LineType::external;
    case 1:
        return LineType::tangent;
    case 2:
        return LineType::secant;
    default:
        return LineType::totally_singular;
    }
}

std::vector<Subspace> maximal_ts_through(const QuadraticSpace& qs, const Subspace& g) {
    if (g.ambient_dim() != qs.dim())
        throw std::invalid_argument("ambient mismatch in maximal_ts_through");
    if (qs.dim() % 2 != 0 || !qs.nondegenerate())
        throw std::invalid_argument(
            "maximal_ts_through needs an even-dimensional nondegenerate space");
    if (!is_totally_singular(qs, g))
        throw std::invalid_argument("maximal_ts_through requires a totally singular subspace");
    if (g.dim() != qs.dim() / 2 - 1)
        throw std::invalid_argument("maximal_ts_through requires dim(G) = m/2 - 1");
    std::vector<Subspace> out;
    for (const GF2Vector& y : enumerate_vectors(perp(qs, g))) {
        if (qs.eval_bits(y.bits()) != 0 || g.contains_bits(y.bits()))
            continue;
        Subspace candidate = sum(g, make_point(y));
        if (candidate.dim() != qs.dim() / 2)
            throw internal_error("extension of G by a perp point has the wrong dimension");
        if (std::find(out.begin(), out.end(), candidate) == out.end())
            out.push_back(candidate);
    }
    return out;
}

std::vector<Subspace> totally_singular_subspaces(const QuadraticSpace& qs, int dim) {
    if (dim < 0 || dim > qs.dim())
        throw std::invalid_argument("dimension out of range");
    if (!qs.nondegenerate())
        throw std::invalid_argument("totally_singular_subspaces needs a nondegenerate space");
    std::set<Subspace> level{Subspace::zero(qs.dim())};
    for (int k = 0; k < dim; ++k) {
        std::set<Subspace> next;
        for (const Subspace& s : level)
            for (const GF2Vector& y : enumerate_vectors(perp(qs, s)))
                if (qs.eval_bits(y.bits()) == 0 && !s.contains_bits(y.bits()))
                    next.insert(sum(s, make_point(y)));
        level = std::move(next);
        if (level.empty())
            break;
    }
    return {level.begin(), level.end()};
}

} // namespace hyperquad
