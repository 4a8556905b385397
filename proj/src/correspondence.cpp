#include "hyperquad/correspondence.hpp"

#include <algorithm>
#include <bit>

namespace hyperquad {

Frame::Frame(QuadraticSpace qs, Subspace pi, Subspace sigma)
    : n_(qs.dim() / 2), qs_(std::move(qs)), pi_(std::move(pi)), sigma_(std::move(sigma)) {
    if (qs_.dim() % 2 != 0 || n_ < 2)
        throw std::invalid_argument("frame needs an even ambient dimension 2n with n >= 2");
    if (!qs_.nondegenerate())
        throw std::invalid_argument("frame needs a nondegenerate polar form");
    if (pi_.ambient_dim() != qs_.dim() || sigma_.ambient_dim() != qs_.dim())
        throw std::invalid_argument("frame subspaces must live in the ambient space");
    if (pi_.dim() != n_ || sigma_.dim() != n_)
        throw std::invalid_argument("frame subspaces must have dimension n");
    if (!is_totally_singular(qs_, pi_) || !is_totally_singular(qs_, sigma_))
        throw std::invalid_argument("frame subspaces must be totally singular");
    if (!intersection(pi_, sigma_).is_zero())
        throw std::invalid_argument("frame subspaces must be disjoint");
}

Frame standard_frame(int n) {
    if (n < 2 || 2 * n > kMaxAmbientDim)
        throw std::invalid_argument("standard_frame needs 2 <= n <= 32");
    QuadraticSpace qs = standard_form(FormKind::hyperbolic, 2 * n);
    std::vector<std::uint64_t> odd, even;
    for (int i = 0; i < n; ++i) {
        odd.push_back(std::uint64_t{1} << (2 * i));
        even.push_back(std::uint64_t{1} << (2 * i + 1));
    }
    return Frame(std::move(qs), Subspace::from_rows(2 * n, odd),
                 Subspace::from_rows(2 * n, even));
}

Frame swapped_frame(const Frame& f) {
    return Frame(f.space(), f.sigma(), f.pi());
}

std::string Antiflag::to_string() const {
    return point.to_string(",") + ";" + hyperplane.to_string(",");
}

Antiflag make_antiflag(const Subspace& space, Subspace point, Subspace hyperplane) {
    if (point.ambient_dim() != space.ambient_dim() ||
        hyperplane.ambient_dim() != space.ambient_dim())
        throw std::invalid_argument("antiflag parts must share the ambient space");
    if (point.dim() != 1 || !is_subspace(point, space))
        throw std::invalid_argument("antiflag needs a point of the space");
    if (hyperplane.dim() != space.dim() - 1 || !is_subspace(hyperplane, space))
        throw std::invalid_argument("antiflag needs a hyperplane of the space");
    if (hyperplane.contains_bits(point.point_bits()))
        throw std::invalid_argument("antiflag point must avoid the hyperplane");
    return Antiflag{std::move(point), std::move(hyperplane)};
}

std::vector<Antiflag> enumerate_antiflags(const Subspace& space) {
    std::vector<Antiflag> out;
    const std::vector<Subspace> hyperplanes = hyperplanes_of(space);
    for (const Subspace& p : enumerate_points(space))
        for (const Subspace& h : hyperplanes)
            if (!h.contains_bits(p.point_bits()))
                out.push_back(Antiflag{p, h});
    std::sort(out.begin(), out.end());
    return out;
}

Antiflag forward_map(const Frame& f, const Subspace& x) {
    const int n = f.n();
    if (x.ambient_dim() != f.space().dim())
        throw std::invalid_argument("ambient mismatch in forward_map");
    if (x.dim() != 1)
        throw std::invalid_argument("forward_map takes a point");
    if (f.space().eval_bits(x.point_bits()) != 1)
        throw std::invalid_argument("forward_map takes a nonsingular point");

    const Subspace xperp = perp(f.space(), x);
    const Subspace g = intersection(xperp, f.pi());
    const Subspace h = intersection(xperp, f.sigma());
    if (g.dim() != n - 1 || h.dim() != n - 1)
        throw internal_error("forward_map: X^perp meets the frame in the wrong dimensions");
    const Subspace p = intersection(perp(f.space(), g), f.sigma());
    if (p.dim() != 1)
        throw internal_error("forward_map: G^perp cap Sigma is not a point");
    if (h.contains_bits(p.point_bits()))
        throw internal_error("forward_map produced a point inside its hyperplane");
    return Antiflag{p, h};
}

Subspace inverse_map(const Frame& f, const Antiflag& af) {
    const int n = f.n();
    // Validates the antiflag against Sigma as a side effect.
    make_antiflag(f.sigma(), af.point, af.hyperplane);

    const Subspace g = intersection(perp(f.space(), af.point), f.pi());
    if (g.dim() != n - 1)
        throw internal_error("inverse_map: P^perp cap Pi has the wrong dimension");
    if (!(intersection(perp(f.space(), g), f.sigma()) == af.point))
        throw internal_error("inverse_map: G does not recover P (corrupted frame)");

    const Subspace line = perp(f.space(), sum(g, af.hyperplane));
    if (line.dim() != 2)
        throw internal_error("inverse_map: (G + H)^perp is not a line");
    const std::uint64_t a = line.rows()[0];
    const std::uint64_t b = line.rows()[1];
    std::vector<std::uint64_t> nonsingular;
    for (std::uint64_t v : {a, b, a ^ b})
        if (f.space().eval_bits(v) == 1)
            nonsingular.push_back(v);
    if (nonsingular.size() != 1)
        throw internal_error("inverse_map: the recovered line does not carry exactly one "
                             "nonsingular point (corrupted frame)");
    return Subspace::from_rows(f.space().dim(), nonsingular);
}

Subspace crossing_line(const Frame& f, const Subspace& y) {
    if (y.ambient_dim() != f.space().dim())
        throw std::invalid_argument("ambient mismatch in crossing_line");
    if (y.dim() != 1)
        throw std::invalid_argument("crossing_line takes a point");
    if (f.space().eval_bits(y.point_bits()) != 0)
        throw std::invalid_argument("crossing_line takes a singular point");
    if (f.pi().contains_bits(y.point_bits()) || f.sigma().contains_bits(y.point_bits()))
        throw std::invalid_argument("crossing_line takes a point outside Pi and Sigma");

    const Subspace g = intersection(perp(f.space(), y), f.pi());
    const Subspace s0 = intersection(perp(f.space(), g), f.sigma());
    if (s0.dim() != 1)
        throw internal_error("crossing_line: G^perp cap Sigma is not a point");
    const Subspace line = sum(y, s0);
    if (line.dim() != 2 || intersection(line, f.pi()).dim() != 1 ||
        intersection(line, f.sigma()).dim() != 1 || !is_totally_singular(f.space(), line))
        throw internal_error("crossing_line construction failed its own checks");
    return line;
}

Subspace sigma_coordinates(const Frame& f, const Subspace& s) {
    if (s.ambient_dim() != f.space().dim())
        throw std::invalid_argument("ambient mismatch in sigma_coordinates");
    if (!is_subspace(s, f.sigma()))
        throw std::invalid_argument("sigma_coordinates takes a subspace of Sigma");
    const auto sigma_rows = f.sigma().rows();
    std::vector<std::uint64_t> coeff_rows;
    for (std::uint64_t v : s.rows()) {
        // With Sigma's basis in reduced echelon form, the coefficient of basis
        // row j is v's bit at that row's pivot.
        std::uint64_t coeffs = 0;
        for (std::size_t j = 0; j < sigma_rows.size(); ++j)
            if ((v >> std::countr_zero(sigma_rows[j])) & 1)
                coeffs |= std::uint64_t{1} << j;
        coeff_rows.push_back(coeffs);
    }
    return Subspace::from_rows(f.n(), coeff_rows);
}

} // namespace hyperquad
