#include "hyperquad/gf2.hpp"

#include <algorithm>
#include <bit>

namespace hyperquad {

namespace {

void check_ambient(int dim) {
    if (dim < 0 || dim > kMaxAmbientDim)
        throw std::invalid_argument("ambient dimension must be in [0, 64], got " +
                                    std::to_string(dim));
}

std::uint64_t mask_for(int dim) {
    return dim == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
}

int pivot_of(std::uint64_t row) {
    return std::countr_zero(row);
}

// Insert rows one at a time, keeping the basis reduced and sorted by pivot.
std::vector<std::uint64_t> rref(std::span<const std::uint64_t> rows) {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t v : rows) {
        for (std::uint64_t b : basis)
            if ((v >> pivot_of(b)) & 1)
                v ^= b;
        if (v == 0)
            continue;
        for (std::uint64_t& b : basis)
            if ((b >> pivot_of(v)) & 1)
                b ^= v;
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(),
              [](std::uint64_t a, std::uint64_t b) { return pivot_of(a) < pivot_of(b); });
    return basis;
}

} // namespace

GF2Vector::GF2Vector(std::uint64_t bits, int dim) : dim_(dim), bits_(bits) {
    check_ambient(dim);
    if ((bits & ~mask_for(dim)) != 0)
        throw std::invalid_argument("vector has bits beyond its ambient dimension");
}

GF2Vector GF2Vector::unit(int coordinate, int dim) {
    if (coordinate < 1 || coordinate > dim)
        throw std::invalid_argument("unit coordinate out of range");
    return GF2Vector(std::uint64_t{1} << (coordinate - 1), dim);
}

int GF2Vector::coordinate(int i) const {
    if (i < 1 || i > dim_)
        throw std::invalid_argument("coordinate index out of range");
    return static_cast<int>((bits_ >> (i - 1)) & 1);
}

GF2Vector operator+(const GF2Vector& a, const GF2Vector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("ambient mismatch in vector addition");
    return GF2Vector(a.bits() ^ b.bits(), a.dim());
}

std::string GF2Vector::to_string() const {
    std::string s(static_cast<std::size_t>(dim_), '0');
    for (int i = 0; i < dim_; ++i)
        if ((bits_ >> i) & 1)
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

GF2Vector GF2Vector::parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxAmbientDim)
        throw std::invalid_argument("vector string must have 1..64 characters");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            bits |= std::uint64_t{1} << i;
        else if (text[i] != '0')
            throw std::invalid_argument("vector string may contain only 0 and 1");
    }
    return GF2Vector(bits, static_cast<int>(text.size()));
}

Subspace Subspace::zero(int ambient_dim) {
    check_ambient(ambient_dim);
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    return s;
}

Subspace Subspace::full(int ambient_dim) {
    check_ambient(ambient_dim);
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    for (int i = 0; i < ambient_dim; ++i)
        s.rows_.push_back(std::uint64_t{1} << i);
    return s;
}

Subspace Subspace::from_rows(int ambient_dim, std::span<const std::uint64_t> rows) {
    check_ambient(ambient_dim);
    for (std::uint64_t r : rows)
        if ((r & ~mask_for(ambient_dim)) != 0)
            throw std::invalid_argument("row has bits beyond the ambient dimension");
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    s.rows_ = rref(rows);
    return s;
}

std::vector<GF2Vector> Subspace::basis() const {
    std::vector<GF2Vector> out;
    out.reserve(rows_.size());
    for (std::uint64_t r : rows_)
        out.emplace_back(r, ambient_dim_);
    return out;
}

bool Subspace::contains_bits(std::uint64_t bits) const {
    for (std::uint64_t r : rows_)
        if ((bits >> pivot_of(r)) & 1)
            bits ^= r;
    return bits == 0;
}

bool Subspace::contains(const GF2Vector& v) const {
    if (v.dim() != ambient_dim_)
        throw std::invalid_argument("ambient mismatch in containment test");
    return contains_bits(v.bits());
}

GF2Vector Subspace::point_vector() const {
    return GF2Vector(point_bits(), ambient_dim_);
}

std::uint64_t Subspace::point_bits() const {
    if (dim() != 1)
        throw std::invalid_argument("point_bits requires a 1-dimensional subspace");
    return rows_[0];
}

std::string Subspace::to_string(std::string_view separator) const {
    if (rows_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0)
            out += separator;
        out += GF2Vector(rows_[i], ambient_dim_).to_string();
    }
    return out;
}

Subspace span(std::span<const GF2Vector> vectors, int ambient_dim) {
    std::vector<std::uint64_t> rows;
    rows.reserve(vectors.size());
    for (const GF2Vector& v : vectors) {
        if (v.dim() != ambient_dim)
            throw std::invalid_argument("dimension mismatch among span inputs");
        rows.push_back(v.bits());
    }
    return Subspace::from_rows(ambient_dim, rows);
}

Subspace span(std::initializer_list<GF2Vector> vectors, int ambient_dim) {
    return span(std::span<const GF2Vector>(vectors.begin(), vectors.size()), ambient_dim);
}

Subspace make_point(const GF2Vector& v) {
    if (v.is_zero())
        throw std::invalid_argument("a point needs a nonzero vector");
    return span({v}, v.dim());
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("ambient mismatch in subspace sum");
    std::vector<std::uint64_t> rows(s.rows().begin(), s.rows().end());
    rows.insert(rows.end(), t.rows().begin(), t.rows().end());
    return Subspace::from_rows(s.ambient_dim(), rows);
}

Subspace null_space(std::span<const std::uint64_t> functional_rows, int ambient_dim) {
    check_ambient(ambient_dim);
    for (std::uint64_t r : functional_rows)
        if ((r & ~mask_for(ambient_dim)) != 0)
            throw std::invalid_argument("functional row has bits beyond the ambient dimension");
    std::vector<std::uint64_t> reduced = rref(functional_rows);
    std::uint64_t pivot_mask = 0;
    for (std::uint64_t r : reduced)
        pivot_mask |= std::uint64_t{1} << pivot_of(r);
    std::vector<std::uint64_t> kernel;
    for (int j = 0; j < ambient_dim; ++j) {
        if ((pivot_mask >> j) & 1)
            continue;
        std::uint64_t v = std::uint64_t{1} << j;
        for (std::uint64_t r : reduced)
            if ((r >> j) & 1)
                v |= std::uint64_t{1} << pivot_of(r);
        kernel.push_back(v);
    }
    return Subspace::from_rows(ambient_dim, kernel);
}

Subspace intersection(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("ambient mismatch in subspace intersection");
    const int m = s.ambient_dim();
    // S cap T is the annihilator of ann(S) + ann(T) under the dot product.
    Subspace ann_s = null_space(s.rows(), m);
    Subspace ann_t = null_space(t.rows(), m);
    std::vector<std::uint64_t> rows(ann_s.rows().begin(), ann_s.rows().end());
    rows.insert(rows.end(), ann_t.rows().begin(), ann_t.rows().end());
    return null_space(rows, m);
}

bool is_subspace(const Subspace& inner, const Subspace& outer) {
    if (inner.ambient_dim() != outer.ambient_dim())
        throw std::invalid_argument("ambient mismatch in subspace comparison");
    for (std::uint64_t r : inner.rows())
        if (!outer.contains_bits(r))
            return false;
    return true;
}

std::vector<GF2Vector> enumerate_vectors(const Subspace& s) {
    const int d = s.dim();
    if (d > 20)
        throw std::invalid_argument("enumerate_vectors is limited to dim <= 20");
    std::vector<std::uint64_t> vecs;
    vecs.reserve((std::size_t{1} << d) - 1);
    std::vector<std::uint64_t> partial(std::size_t{1} << d, 0);
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << d); ++c) {
        partial[c] = partial[c & (c - 1)] ^ s.rows()[static_cast<std::size_t>(std::countr_zero(c))];
        vecs.push_back(partial[c]);
    }
    std::sort(vecs.begin(), vecs.end());
    std::vector<GF2Vector> out;
    out.reserve(vecs.size());
    for (std::uint64_t v : vecs)
        out.emplace_back(v, s.ambient_dim());
    return out;
}

std::vector<Subspace> enumerate_points(const Subspace& s) {
    std::vector<Subspace> out;
    for (const GF2Vector& v : enumerate_vectors(s))
        out.push_back(make_point(v));
    return out;
}

std::vector<Subspace> hyperplanes_of(const Subspace& s) {
    const int d = s.dim();
    if (d < 1)
        throw std::invalid_argument("hyperplanes_of requires a nonzero subspace");
    if (d > 16)
        throw std::invalid_argument("hyperplanes_of is limited to dim <= 16");
    std::vector<Subspace> out;
    out.reserve((std::size_t{1} << d) - 1);
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << d); ++c) {
        // Kernel of the functional with coefficient mask c over the canonical basis.
        const int p = std::countr_zero(c);
        std::vector<std::uint64_t> rows;
        rows.reserve(static_cast<std::size_t>(d) - 1);
        for (int j = 0; j < d; ++j) {
            if (j == p)
                continue;
            std::uint64_t v = s.rows()[static_cast<std::size_t>(j)];
            if ((c >> j) & 1)
                v ^= s.rows()[static_cast<std::size_t>(p)];
            rows.push_back(v);
        }
        out.push_back(Subspace::from_rows(s.ambient_dim(), rows));
    }
    return out;
}

std::vector<Subspace> all_subspaces(int ambient_dim, int dim) {
    check_ambient(ambient_dim);
    if (dim < 0 || dim > ambient_dim)
        throw std::invalid_argument("subspace dimension out of range");
    if (dim * (ambient_dim - dim) > 24)
        throw std::invalid_argument("all_subspaces is limited to desk-scale inputs");
    std::vector<Subspace> out;
    std::vector<int> pivots(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        pivots[static_cast<std::size_t>(i)] = i;
    auto emit_for_pivots = [&]() {
        std::uint64_t pivot_mask = 0;
        for (int p : pivots)
            pivot_mask |= std::uint64_t{1} << p;
        // Free cells: (row r, column c) with c > pivots[r] and c not a pivot.
        std::vector<std::pair<int, int>> free_cells;
        for (int r = 0; r < dim; ++r)
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < ambient_dim; ++c)
                if (!((pivot_mask >> c) & 1))
                    free_cells.emplace_back(r, c);
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_cells.size()); ++fill) {
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(dim));
            for (int r = 0; r < dim; ++r)
                rows[static_cast<std::size_t>(r)] =
                    std::uint64_t{1} << pivots[static_cast<std::size_t>(r)];
            for (std::size_t i = 0; i < free_cells.size(); ++i)
                if ((fill >> i) & 1)
                    rows[static_cast<std::size_t>(free_cells[i].first)] |=
                        std::uint64_t{1} << free_cells[i].second;
            out.push_back(Subspace::from_rows(ambient_dim, rows));
        }
    };
    // Iterate pivot combinations in lexicographic order.
    if (dim == 0) {
        out.push_back(Subspace::zero(ambient_dim));
        return out;
    }
    while (true) {
        emit_for_pivots();
        int i = dim - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == ambient_dim - dim + i)
            --i;
        if (i < 0)
            break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Subspace parse_subspace(std::string_view text) {
    std::vector<GF2Vector> vectors;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (piece == "0" && vectors.empty() && comma == std::string_view::npos) {
            // "0" denotes the zero subspace; ambient cannot be recovered from it.
            throw std::invalid_argument("cannot parse the zero subspace without an ambient hint");
        }
        vectors.push_back(GF2Vector::parse(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (vectors.empty())
        throw std::invalid_argument("empty subspace text");
    return span(vectors, vectors.front().dim());
}

} // namespace hyperquad
