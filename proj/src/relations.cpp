#include "hyperquad/relations.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "hyperquad/parallel.hpp"

namespace hyperquad {

namespace {

std::uint64_t pow2(int e) {
    return std::uint64_t{1} << e;
}

std::string family_letter(RelFamily f) {
    switch (f) {
    case RelFamily::A:
        return "A";
    case RelFamily::B:
        return "B";
    case RelFamily::C:
        return "C";
    }
    throw internal_error("unreachable relation family");
}

std::vector<std::uint64_t> nonsingular_bits(const QuadraticSpace& qs) {
    std::vector<std::uint64_t> out;
    for (const GF2Vector& v : enumerate_vectors(Subspace::full(qs.dim())))
        if (qs.eval_bits(v.bits()) == 1)
            out.push_back(v.bits());
    return out;
}

// Smallest (i, j) lexicographically among per-worker first findings; used to
// keep failure witnesses independent of the worker count.
struct PairWitness {
    std::size_t i = std::numeric_limits<std::size_t>::max();
    std::size_t j = std::numeric_limits<std::size_t>::max();
    bool found() const { return i != std::numeric_limits<std::size_t>::max(); }
    void offer(std::size_t a, std::size_t b) {
        if (!found() || a < i || (a == i && b < j)) {
            i = a;
            j = b;
        }
    }
};

} // namespace

RelationLabel RelationLabel::make(RelFamily family, int index) {
    const int limit = family == RelFamily::B ? 2 : 4;
    if (index < 1 || index > limit)
        throw std::invalid_argument("relation index out of range for its family");
    return RelationLabel(family, index);
}

RelFamily RelationLabel::family() const {
    if (is_equal())
        throw std::logic_error("EQUAL has no relation family");
    return family_;
}

int RelationLabel::index() const {
    return index_;
}

std::string RelationLabel::name() const {
    if (is_equal())
        return "EQUAL";
    return family_letter(family_) + std::to_string(index_);
}

std::optional<RelationLabel> RelationLabel::parse(std::string_view text) {
    if (text == "EQUAL")
        return equal();
    if (text.size() != 2 || text[1] < '1' || text[1] > '9')
        return std::nullopt;
    RelFamily fam;
    switch (text[0]) {
    case 'A':
        fam = RelFamily::A;
        break;
    case 'B':
        fam = RelFamily::B;
        break;
    case 'C':
        fam = RelFamily::C;
        break;
    default:
        return std::nullopt;
    }
    const int index = text[1] - '0';
    if (index > (fam == RelFamily::B ? 2 : 4))
        return std::nullopt;
    return make(fam, index);
}

RelationLabel classify_antiflag_pair(const Antiflag& a, const Antiflag& b) {
    if (a.point.ambient_dim() != b.point.ambient_dim())
        throw std::invalid_argument("antiflag pair must share an ambient space");
    if (a == b)
        return RelationLabel::equal();
    const bool same_point = a.point == b.point;
    const bool same_hyperplane = a.hyperplane == b.hyperplane;
    if (same_point != same_hyperplane)
        return RelationLabel::make(RelFamily::A, 3);
    // a != b rules out same_point && same_hyperplane here.
    const bool p_in_h2 = b.hyperplane.contains_bits(a.point.point_bits());
    const bool p2_in_h = a.hyperplane.contains_bits(b.point.point_bits());
    if (p_in_h2 && p2_in_h)
        return RelationLabel::make(RelFamily::A, 2);
    if (p_in_h2 || p2_in_h)
        return RelationLabel::make(RelFamily::A, 1);
    return RelationLabel::make(RelFamily::A, 4);
}

namespace {

void check_nonsingular_pair(const Frame& f, const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != f.space().dim() || y.ambient_dim() != f.space().dim())
        throw std::invalid_argument("ambient mismatch in pair classification");
    if (x.dim() != 1 || y.dim() != 1)
        throw std::invalid_argument("pair classification takes points");
    if (f.space().eval_bits(x.point_bits()) != 1 || f.space().eval_bits(y.point_bits()) != 1)
        throw std::invalid_argument("pair classification takes nonsingular points");
    if (x == y)
        throw std::invalid_argument("pair classification takes distinct points");
}

} // namespace

RelationLabel classify_nonsingular_pair_b(const Frame& f, const Subspace& x, const Subspace& y) {
    check_nonsingular_pair(f, x, y);
    const std::uint64_t w = x.point_bits() ^ y.point_bits();
    return RelationLabel::make(RelFamily::B, f.space().eval_bits(w) == 0 ? 2 : 1);
}

std::map<std::uint64_t, Subspace> all_crossing_lines(const Frame& f) {
    if (f.space().dim() > 16)
        throw std::invalid_argument("all_crossing_lines is limited to ambient dim <= 16");
    std::map<std::uint64_t, Subspace> out;
    for (const GF2Vector& v : enumerate_vectors(Subspace::full(f.space().dim()))) {
        if (f.space().eval_bits(v.bits()) != 0)
            continue;
        if (f.pi().contains_bits(v.bits()) || f.sigma().contains_bits(v.bits()))
            continue;
        out.emplace(v.bits(), crossing_line(f, make_point(v)));
    }
    return out;
}

RelationLabel classify_nonsingular_pair_c(const Frame& f,
                                          const std::map<std::uint64_t, Subspace>& crossing_lines,
                                          std::uint64_t x_bits, std::uint64_t y_bits) {
    const QuadraticSpace& qs = f.space();
    const std::uint64_t w = x_bits ^ y_bits;
    if (qs.eval_bits(w) == 1)
        return RelationLabel::make(RelFamily::C, 1);
    // The line xy is tangent at Y = <w>; with both inputs nonsingular a
    // secant or totally singular line cannot occur.
    if (f.pi().contains_bits(w) || f.sigma().contains_bits(w))
        return RelationLabel::make(RelFamily::C, 3);
    const auto it = crossing_lines.find(w);
    if (it == crossing_lines.end())
        throw internal_error("crossing line cache is missing an exterior singular point");
    for (std::uint64_t r : it->second.rows())
        if (qs.bilinear_bits(r, x_bits) != 0 || qs.bilinear_bits(r, y_bits) != 0)
            return RelationLabel::make(RelFamily::C, 2);
    return RelationLabel::make(RelFamily::C, 4);
}

RelationLabel classify_nonsingular_pair_c(const Frame& f, const Subspace& x, const Subspace& y) {
    check_nonsingular_pair(f, x, y);
    const QuadraticSpace& qs = f.space();
    const std::uint64_t xb = x.point_bits();
    const std::uint64_t yb = y.point_bits();
    const LineType lt = line_type(qs, sum(x, y));
    if (lt == LineType::secant || lt == LineType::totally_singular)
        throw internal_error("a line through two nonsingular points came out " + to_string(lt));
    if (lt == LineType::external)
        return RelationLabel::make(RelFamily::C, 1);
    const std::uint64_t w = xb ^ yb;
    if (f.pi().contains_bits(w) || f.sigma().contains_bits(w))
        return RelationLabel::make(RelFamily::C, 3);
    const Subspace j = crossing_line(f, make_point(GF2Vector(w, qs.dim())));
    for (std::uint64_t r : j.rows())
        if (qs.bilinear_bits(r, xb) != 0 || qs.bilinear_bits(r, yb) != 0)
            return RelationLabel::make(RelFamily::C, 2);
    return RelationLabel::make(RelFamily::C, 4);
}

std::uint64_t expected_degree(RelationLabel label, int n) {
    if (n < 2)
        throw std::invalid_argument("expected_degree needs n >= 2");
    if (label.is_equal())
        throw std::invalid_argument("EQUAL has no degree");
    if (label.family() == RelFamily::B && label.index() == 2)
        return (pow2(n - 1) + 1) * (pow2(n - 1) - 1);
    switch (label.index()) {
    case 1:
        return (pow2(n - 1) - 1) * pow2(n - 1);
    case 2:
        return (pow2(n - 1) - 1) * pow2(n - 2);
    case 3:
        return 2 * (pow2(n - 1) - 1);
    case 4:
        return (pow2(n - 1) - 1) * (pow2(n - 2) - 1);
    }
    throw internal_error("unreachable relation index");
}

std::uint64_t graph_order(int n) {
    if (n < 2)
        throw std::invalid_argument("graph_order needs n >= 2");
    return (pow2(n) - 1) * pow2(n - 1);
}

std::uint64_t RelationGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (const Bitset& row : adjacency)
        twice += row.count();
    return twice / 2;
}

RelationGraph build_graph(const Frame& f, RelationLabel label, int threads) {
    if (label.is_equal())
        throw std::invalid_argument("cannot build a graph for EQUAL");
    const int n = f.n();
    const std::uint64_t v64 = graph_order(n);
    if (v64 > 20000)
        throw std::invalid_argument("exhaustive graph construction is limited to 2*10^4 vertices");
    const std::size_t v = static_cast<std::size_t>(v64);

    RelationGraph g;
    g.label = label;
    g.n = n;
    g.adjacency.assign(v, Bitset(v));

    if (label.family() == RelFamily::A) {
        const std::vector<Antiflag> afs = enumerate_antiflags(Subspace::full(n));
        if (afs.size() != v)
            throw internal_error("antiflag census disagrees with the graph order");
        for (const Antiflag& af : afs)
            g.vertex_labels.push_back(af.to_string());
        const int want = label.index();
        parallel_blocks(v, threads, [&](int, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                for (std::size_t j = i + 1; j < v; ++j) {
                    const RelationLabel got = classify_antiflag_pair(afs[i], afs[j]);
                    if (!got.is_equal() && got.index() == want)
                        g.adjacency[i].set(j);
                }
        });
    } else {
        const std::vector<std::uint64_t> xs = nonsingular_bits(f.space());
        if (xs.size() != v)
            throw internal_error("nonsingular census disagrees with the graph order");
        for (std::uint64_t x : xs)
            g.vertex_labels.push_back(GF2Vector(x, f.space().dim()).to_string());
        const int want = label.index();
        if (label.family() == RelFamily::B) {
            parallel_blocks(v, threads, [&](int, std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i)
                    for (std::size_t j = i + 1; j < v; ++j) {
                        const int got = f.space().eval_bits(xs[i] ^ xs[j]) == 0 ? 2 : 1;
                        if (got == want)
                            g.adjacency[i].set(j);
                    }
            });
        } else {
            const std::map<std::uint64_t, Subspace> lines = all_crossing_lines(f);
            parallel_blocks(v, threads, [&](int, std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i)
                    for (std::size_t j = i + 1; j < v; ++j)
                        if (classify_nonsingular_pair_c(f, lines, xs[i], xs[j]).index() == want)
                            g.adjacency[i].set(j);
            });
        }
    }

    // Mirror the upper triangle; single-threaded output assembly.
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (g.adjacency[i].test(j))
                g.adjacency[j].set(i);
    return g;
}

std::string SrgParams::to_string() const {
    return "(" + std::to_string(v) + ", " + std::to_string(k) + ", " + std::to_string(lambda) +
           ", " + std::to_string(mu) + ")";
}

SrgParams srg_params(const std::vector<Bitset>& adjacency, int threads) {
    const std::size_t v = adjacency.size();
    if (v < 2)
        throw std::invalid_argument("strong regularity needs at least two vertices");

    const std::size_t k = adjacency[0].count();
    for (std::size_t i = 1; i < v; ++i)
        if (adjacency[i].count() != k)
            throw verification_error("graph is not regular", "vertices 0 and " + std::to_string(i));
    if (k == 0)
        throw verification_error("edgeless graph has no strong regularity parameters", "");
    if (k == v - 1)
        throw verification_error("complete graph has no strong regularity parameters", "");

    // Fix the candidates from vertex 0, then verify every pair against them.
    std::optional<std::uint64_t> lambda, mu;
    for (std::size_t j = 1; j < v && (!lambda || !mu); ++j) {
        const std::size_t c = adjacency[0].count_and(adjacency[j]);
        if (adjacency[0].test(j)) {
            if (!lambda)
                lambda = c;
        } else if (!mu) {
            mu = c;
        }
    }
    if (!lambda || !mu)
        throw internal_error("lambda/mu candidates must exist for 0 < k < v-1");

    std::vector<PairWitness> worker_bad(static_cast<std::size_t>(resolve_threads(threads)) + 1);
    parallel_blocks(v, threads, [&](int w, std::size_t begin, std::size_t end) {
        PairWitness& bad = worker_bad[static_cast<std::size_t>(w)];
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = i + 1; j < v; ++j) {
                const std::uint64_t c = adjacency[i].count_and(adjacency[j]);
                const std::uint64_t want = adjacency[i].test(j) ? *lambda : *mu;
                if (c != want) {
                    bad.offer(i, j);
                    break;
                }
            }
            if (bad.found())
                break;
        }
    });
    PairWitness bad;
    for (const PairWitness& w : worker_bad)
        if (w.found())
            bad.offer(w.i, w.j);
    if (bad.found())
        throw verification_error("common-neighbor count is not constant",
                                 "vertices " + std::to_string(bad.i) + " and " +
                                     std::to_string(bad.j));

    SrgParams p{v, k, *lambda, *mu};
    if (!p.identity_holds())
        throw internal_error("verified parameters violate the counting identity " + p.to_string());
    return p;
}

SrgParams srg_params(const RelationGraph& g, int threads) {
    return srg_params(g.adjacency, threads);
}

SrgParams b1_reference_params(int n) {
    if (n < 2)
        throw std::invalid_argument("b1_reference_params needs n >= 2");
    return SrgParams{graph_order(n), expected_degree(RelationLabel::make(RelFamily::B, 1), n),
                     (pow2(n - 2) - 1) * pow2(n - 1), (pow2(n - 1) - 1) * pow2(n - 2)};
}

SrgReport verify_srg(const Frame& f, RelationLabel label, int threads) {
    if (label.is_equal() || label.family() != RelFamily::B)
        throw std::invalid_argument("strong regularity checks cover the B relations");
    SrgReport report;
    report.label = label;
    const RelationGraph g = build_graph(f, label, threads);
    report.computed = srg_params(g, threads);

    if (report.computed.v != graph_order(f.n()) ||
        report.computed.k != expected_degree(label, f.n()))
        throw verification_error("graph order or degree disagrees with the closed form",
                                 report.computed.to_string());
    if (label.index() == 1) {
        report.reference = b1_reference_params(f.n());
        report.matches_reference = report.computed == *report.reference;
    }
    return report;
}

std::vector<std::array<std::uint64_t, 4>> degree_table(const Frame& f, RelFamily family,
                                                       int threads) {
    const std::uint64_t v64 = graph_order(f.n());
    if (v64 > 20000)
        throw std::invalid_argument("exhaustive degree tables are limited to 2*10^4 vertices");
    const std::size_t v = static_cast<std::size_t>(v64);
    std::vector<std::array<std::uint64_t, 4>> table(v, {0, 0, 0, 0});

    if (family == RelFamily::A) {
        const std::vector<Antiflag> afs = enumerate_antiflags(Subspace::full(f.n()));
        parallel_blocks(v, threads, [&](int, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                for (std::size_t j = 0; j < v; ++j) {
                    if (i == j)
                        continue;
                    const RelationLabel got = classify_antiflag_pair(afs[i], afs[j]);
                    if (got.is_equal())
                        throw internal_error("distinct antiflags classified EQUAL");
                    ++table[i][static_cast<std::size_t>(got.index() - 1)];
                }
        });
        return table;
    }

    const std::vector<std::uint64_t> xs = nonsingular_bits(f.space());
    if (family == RelFamily::B) {
        parallel_blocks(v, threads, [&](int, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                for (std::size_t j = 0; j < v; ++j) {
                    if (i == j)
                        continue;
                    const int idx = f.space().eval_bits(xs[i] ^ xs[j]) == 0 ? 2 : 1;
                    ++table[i][static_cast<std::size_t>(idx - 1)];
                }
        });
        return table;
    }

    const std::map<std::uint64_t, Subspace> lines = all_crossing_lines(f);
    parallel_blocks(v, threads, [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < v; ++j) {
                if (i == j)
                    continue;
                const RelationLabel got = classify_nonsingular_pair_c(f, lines, xs[i], xs[j]);
                ++table[i][static_cast<std::size_t>(got.index() - 1)];
            }
    });
    return table;
}

namespace {

struct TheoremScan {
    std::array<std::uint64_t, 4> counts{};
    PairWitness mismatch;
};

std::string theorem_witness(const Frame& f, const std::vector<std::uint64_t>& xs,
                            const std::vector<Antiflag>& images, std::size_t i, std::size_t j) {
    const int m = f.space().dim();
    const Subspace xi = make_point(GF2Vector(xs[i], m));
    const Subspace xj = make_point(GF2Vector(xs[j], m));
    const RelationLabel c = classify_nonsingular_pair_c(f, xi, xj);
    const RelationLabel a = classify_antiflag_pair(images[i], images[j]);
    return "X=" + xi.to_string(",") + " X'=" + xj.to_string(",") + " got " + c.name() + " vs " +
           a.name() + " for f(X)=" + images[i].to_string() + " f(X')=" + images[j].to_string();
}

} // namespace

TheoremReport verify_theorem(const Frame& f, int threads) {
    const std::uint64_t v64 = graph_order(f.n());
    if (v64 > 20000)
        throw std::invalid_argument("exhaustive theorem verification is limited to 2*10^4 "
                                    "vertices; use the sampled variant");
    const std::size_t v = static_cast<std::size_t>(v64);
    const int m = f.space().dim();

    const std::vector<std::uint64_t> xs = nonsingular_bits(f.space());
    if (xs.size() != v)
        throw internal_error("nonsingular census disagrees with the graph order");
    std::vector<Antiflag> images;
    images.reserve(v);
    for (std::uint64_t x : xs)
        images.push_back(forward_map(f, make_point(GF2Vector(x, m))));
    const std::map<std::uint64_t, Subspace> lines = all_crossing_lines(f);

    const std::size_t workers = static_cast<std::size_t>(resolve_threads(threads));
    std::vector<TheoremScan> scans(workers + 1);
    std::vector<std::vector<std::array<std::uint64_t, 4>>> worker_rows(
        workers + 1, std::vector<std::array<std::uint64_t, 4>>(v, {0, 0, 0, 0}));

    parallel_blocks(v, threads, [&](int w, std::size_t begin, std::size_t end) {
        TheoremScan& scan = scans[static_cast<std::size_t>(w)];
        auto& rows = worker_rows[static_cast<std::size_t>(w)];
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < v; ++j) {
                const RelationLabel c = classify_nonsingular_pair_c(f, lines, xs[i], xs[j]);
                const RelationLabel a = classify_antiflag_pair(images[i], images[j]);
                if (a.is_equal() || a.index() != c.index()) {
                    scan.mismatch.offer(i, j);
                    continue;
                }
                ++scan.counts[static_cast<std::size_t>(c.index() - 1)];
                ++rows[i][static_cast<std::size_t>(c.index() - 1)];
                ++rows[j][static_cast<std::size_t>(c.index() - 1)];
            }
    });

    PairWitness mismatch;
    TheoremReport report;
    report.n = f.n();
    report.exhaustive = true;
    report.pair_count = v64 * (v64 - 1) / 2;
    for (const TheoremScan& s : scans) {
        if (s.mismatch.found())
            mismatch.offer(s.mismatch.i, s.mismatch.j);
        for (std::size_t r = 0; r < 4; ++r)
            report.relation_counts[r] += s.counts[r];
    }
    if (mismatch.found())
        throw verification_error("relation labels disagree across the correspondence",
                                 theorem_witness(f, xs, images, mismatch.i, mismatch.j));

    for (std::size_t i = 0; i < v; ++i) {
        std::array<std::uint64_t, 4> row{};
        for (const auto& rows : worker_rows)
            for (std::size_t r = 0; r < 4; ++r)
                row[r] += rows[i][r];
        for (std::size_t r = 0; r < 4; ++r)
            if (row[r] !=
                expected_degree(RelationLabel::make(RelFamily::C, static_cast<int>(r) + 1),
                                f.n()))
                throw verification_error(
                    "a per-vertex degree disagrees with its closed form",
                    "vertex " + GF2Vector(xs[i], m).to_string() + " relation C" +
                        std::to_string(r + 1) + " has degree " + std::to_string(row[r]));
    }
    report.degrees_checked = true;
    return report;
}

TheoremReport verify_theorem_sampled(const Frame& f, std::uint64_t samples, std::uint64_t seed,
                                     int threads) {
    const std::uint64_t v64 = graph_order(f.n());
    const std::size_t v = static_cast<std::size_t>(v64);
    const int m = f.space().dim();
    if (v64 < 2)
        throw std::invalid_argument("sampled verification needs at least two vertices");

    const std::vector<std::uint64_t> xs = nonsingular_bits(f.space());
    std::vector<Antiflag> images;
    images.reserve(v);
    for (std::uint64_t x : xs)
        images.push_back(forward_map(f, make_point(GF2Vector(x, m))));

    std::optional<std::map<std::uint64_t, Subspace>> lines;
    if (m <= 16)
        lines = all_crossing_lines(f);

    // Pairs are drawn up front so the result is independent of the worker count.
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(samples);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto i = static_cast<std::uint32_t>(rng() % v64);
        auto j = static_cast<std::uint32_t>(rng() % (v64 - 1));
        if (j >= i)
            ++j;
        pairs.emplace_back(i, j);
    }

    const std::size_t workers = static_cast<std::size_t>(resolve_threads(threads));
    std::vector<TheoremScan> scans(workers + 1);
    parallel_blocks(pairs.size(), threads, [&](int w, std::size_t begin, std::size_t end) {
        TheoremScan& scan = scans[static_cast<std::size_t>(w)];
        for (std::size_t s = begin; s < end; ++s) {
            const std::size_t i = pairs[s].first;
            const std::size_t j = pairs[s].second;
            const RelationLabel c =
                lines ? classify_nonsingular_pair_c(f, *lines, xs[i], xs[j])
                      : classify_nonsingular_pair_c(f, make_point(GF2Vector(xs[i], m)),
                                                    make_point(GF2Vector(xs[j], m)));
            const RelationLabel a = classify_antiflag_pair(images[i], images[j]);
            if (a.is_equal() || a.index() != c.index()) {
                scan.mismatch.offer(s, s);
                break;
            }
            ++scan.counts[static_cast<std::size_t>(c.index() - 1)];
        }
    });

    TheoremReport report;
    report.n = f.n();
    report.exhaustive = false;
    report.pair_count = samples;
    report.sample = samples;
    report.seed = seed;
    PairWitness mismatch;
    for (const TheoremScan& s : scans) {
        if (s.mismatch.found())
            mismatch.offer(s.mismatch.i, s.mismatch.j);
        for (std::size_t r = 0; r < 4; ++r)
            report.relation_counts[r] += s.counts[r];
    }
    if (mismatch.found())
        throw verification_error(
            "relation labels disagree across the correspondence",
            theorem_witness(f, xs, images, pairs[mismatch.i].first, pairs[mismatch.i].second));
    return report;
}

BijectionReport verify_bijection(const Frame& f) {
    const int m = f.space().dim();
    const std::vector<std::uint64_t> xs = nonsingular_bits(f.space());

    std::vector<Antiflag> images;
    images.reserve(xs.size());
    for (std::uint64_t x : xs) {
        const Subspace point = make_point(GF2Vector(x, m));
        const Antiflag af = forward_map(f, point);
        if (af.hyperplane.contains_bits(af.point.point_bits()))
            throw verification_error("image point lies in its hyperplane", point.to_string());
        if (!(inverse_map(f, af) == point))
            throw verification_error("inverse_map does not undo forward_map", point.to_string());
        images.push_back(af);
    }

    std::vector<Antiflag> sorted_images = images;
    std::sort(sorted_images.begin(), sorted_images.end());
    if (std::adjacent_find(sorted_images.begin(), sorted_images.end()) != sorted_images.end())
        throw verification_error("forward_map is not injective", "");

    const std::vector<Antiflag> afs = enumerate_antiflags(f.sigma());
    if (!(sorted_images == afs))
        throw verification_error("the image of forward_map is not the full antiflag set",
                                 "expected " + std::to_string(afs.size()) + " antiflags, got " +
                                     std::to_string(sorted_images.size()));

    for (const Antiflag& af : afs)
        if (!(forward_map(f, inverse_map(f, af)) == af))
            throw verification_error("forward_map does not undo inverse_map", af.to_string());

    BijectionReport report;
    report.n = f.n();
    report.point_count = xs.size();
    report.antiflag_count = afs.size();
    return report;
}

FactsReport verify_facts(const Frame& f, std::optional<SampleSpec> ts_sample) {
    const int n = f.n();
    const int m = f.space().dim();
    if (n > 5)
        throw std::invalid_argument("verify_facts is limited to n <= 5");
    const QuadraticSpace& qs = f.space();
    FactsReport report;
    report.n = n;

    const FormClass nonsingular_expected{m - 1, 0, BaseKind::parabolic, n - 1};
    const FormClass singular_expected{m - 1, 1, BaseKind::hyperbolic, n - 1};
    const FormClass tangent_expected{m - 2, 1, BaseKind::parabolic, n - 2};

    for (const GF2Vector& x : enumerate_vectors(Subspace::full(m))) {
        const Subspace p = make_point(x);
        const FormClass got = classify_restriction(qs, perp(qs, p));
        const FormClass& want = qs.eval_bits(x.bits()) == 0 ? singular_expected
                                                            : nonsingular_expected;
        if (!(got == want))
            throw verification_error("a point's polar hyperplane has the wrong type",
                                     p.to_string() + " gave " + got.to_string());
        ++(qs.eval_bits(x.bits()) == 0 ? report.singular_points : report.nonsingular_points);
    }

    for (const Subspace& line : all_subspaces(m, 2)) {
        if (line_type(qs, line) != LineType::tangent)
            continue;
        const FormClass got = classify_restriction(qs, perp(qs, line));
        if (!(got == tangent_expected))
            throw verification_error("a tangent line's perp has the wrong type",
                                     line.to_string(",") + " gave " + got.to_string());
        ++report.tangent_lines;
    }

    std::vector<Subspace> gs;
    if (n <= 3) {
        gs = totally_singular_subspaces(qs, n - 1);
        report.ts_exhaustive = true;
    } else {
        if (!ts_sample || ts_sample->count == 0)
            throw std::invalid_argument(
                "verify_facts needs a sample spec for the totally singular scan when n > 3");
        report.ts_exhaustive = false;
        std::mt19937_64 rng(ts_sample->seed);
        for (std::uint64_t s = 0; s < ts_sample->count; ++s) {
            Subspace g = Subspace::zero(m);
            while (g.dim() < n - 1) {
                std::vector<std::uint64_t> candidates;
                for (const GF2Vector& y : enumerate_vectors(perp(qs, g)))
                    if (qs.eval_bits(y.bits()) == 0 && !g.contains_bits(y.bits()))
                        candidates.push_back(y.bits());
                if (candidates.empty())
                    throw internal_error("a totally singular subspace could not be extended");
                const std::uint64_t pick = candidates[rng() % candidates.size()];
                g = sum(g, make_point(GF2Vector(pick, m)));
            }
            gs.push_back(std::move(g));
        }
    }
    for (const Subspace& g : gs) {
        const std::vector<Subspace> maximals = maximal_ts_through(qs, g);
        if (maximals.size() != 2)
            throw verification_error("a totally singular (n-1)-space is not on exactly two "
                                     "maximals",
                                     g.to_string(",") + " lies on " +
                                         std::to_string(maximals.size()));
        ++report.ts_subspaces;
    }
    return report;
}

IsoReport verify_antiflag_graph_iso(const Frame& f, int threads) {
    const int n = f.n();
    const int m = f.space().dim();
    const RelationGraph gc = build_graph(f, RelationLabel::make(RelFamily::C, 2), threads);
    const RelationGraph ga = build_graph(f, RelationLabel::make(RelFamily::A, 2), threads);

    const std::vector<Antiflag> afs = enumerate_antiflags(Subspace::full(n));
    std::map<Antiflag, std::size_t> index_of;
    for (std::size_t i = 0; i < afs.size(); ++i)
        index_of.emplace(afs[i], i);

    const std::vector<std::uint64_t> xs = nonsingular_bits(f.space());
    std::vector<std::size_t> to_antiflag(xs.size());
    std::vector<bool> hit(afs.size(), false);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Antiflag image = forward_map(f, make_point(GF2Vector(xs[i], m)));
        const Antiflag small{sigma_coordinates(f, image.point),
                             sigma_coordinates(f, image.hyperplane)};
        const auto it = index_of.find(small);
        if (it == index_of.end())
            throw internal_error("an image antiflag is missing from the canonical census");
        if (hit[it->second])
            throw verification_error("the vertex map is not injective",
                                     small.to_string());
        hit[it->second] = true;
        to_antiflag[i] = it->second;
    }

    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (gc.adjacent(i, j) != ga.adjacent(to_antiflag[i], to_antiflag[j]))
                throw verification_error(
                    "tangency and the antiflag graph disagree on an edge",
                    gc.vertex_labels[i] + " / " + gc.vertex_labels[j]);

    if (gc.edge_count() != ga.edge_count())
        throw internal_error("edge counts diverge after an edge-for-edge match");

    IsoReport report;
    report.n = n;
    report.vertex_count = xs.size();
    report.edge_count = gc.edge_count();
    return report;
}

} // namespace hyperquad
