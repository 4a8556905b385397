#include "hyperquad/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperquad/correspondence.hpp"
#include "hyperquad/graph6.hpp"
#include "hyperquad/relations.hpp"
#include "hyperquad/report.hpp"

namespace hyperquad::cli {

namespace {

class Timer {
  public:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Frame build_frame(int n, bool swap) {
    const Frame f = standard_frame(n);
    return swap ? swapped_frame(f) : f;
}

int parity_bits(std::uint64_t x) {
    return std::popcount(x) & 1;
}

int cmd_enumerate(int n, const std::string& what, std::ostream& out) {
    if (n < 2 || n > 14)
        throw std::invalid_argument("enumerate supports 2 <= n <= 14");
    const bool listing = n <= 12;
    std::uint64_t count = 0;

    if (what == "nonsingular" || what == "singular") {
        const int m = 2 * n;
        const QuadraticSpace qs = standard_form(FormKind::hyperbolic, m);
        const int want = what == "singular" ? 0 : 1;
        for (std::uint64_t x = 1; x < (std::uint64_t{1} << m); ++x) {
            if (qs.eval_bits(x) != want)
                continue;
            ++count;
            if (listing)
                out << GF2Vector(x, m).to_string() << "\n";
        }
    } else if (what == "antiflags") {
        if (listing) {
            const Subspace full = Subspace::full(n);
            std::vector<Subspace> hyperplanes = hyperplanes_of(full);
            std::sort(hyperplanes.begin(), hyperplanes.end());
            for (const GF2Vector& p : enumerate_vectors(full))
                for (const Subspace& h : hyperplanes) {
                    if (h.contains_bits(p.bits()))
                        continue;
                    ++count;
                    out << p.to_string() << ";" << h.to_string(",") << "\n";
                }
        } else {
            // P lies outside ker(c) iff <p, c> = 1.
            for (std::uint64_t p = 1; p < (std::uint64_t{1} << n); ++p)
                for (std::uint64_t c = 1; c < (std::uint64_t{1} << n); ++c)
                    count += static_cast<std::uint64_t>(parity_bits(p & c));
        }
    } else {
        throw std::invalid_argument("--what must be nonsingular, singular, or antiflags");
    }
    out << "count " << count << "\n";
    return 0;
}

int cmd_map(int n, const std::optional<std::string>& forward_arg,
            const std::optional<std::string>& inverse_arg, bool trace, bool swap,
            std::ostream& out) {
    const Frame f = build_frame(n, swap);
    const int m = 2 * n;

    if (forward_arg) {
        const GF2Vector x = GF2Vector::parse(*forward_arg);
        if (x.dim() != m)
            throw std::invalid_argument("forward input must have length 2n = " +
                                        std::to_string(m));
        if (x.is_zero())
            throw std::invalid_argument("forward input must be nonzero");
        const Subspace point = make_point(x);
        const Antiflag af = forward_map(f, point);
        if (trace) {
            const Subspace xperp = perp(f.space(), point);
            out << "X " << point.to_string(",") << "\n";
            out << "G " << intersection(xperp, f.pi()).to_string(",") << "\n";
            out << "H " << af.hyperplane.to_string(",") << "\n";
            out << "P " << af.point.to_string(",") << "\n";
        }
        out << af.to_string() << "\n";
        return 0;
    }

    const std::string& text = *inverse_arg;
    const std::size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("inverse input must look like P;H");
    const Subspace p = parse_subspace(text.substr(0, semi));
    const Subspace h = parse_subspace(text.substr(semi + 1));
    if (p.ambient_dim() != m || h.ambient_dim() != m)
        throw std::invalid_argument("inverse input vectors must have length 2n = " +
                                    std::to_string(m));
    const Antiflag af{p, h};
    const Subspace x = inverse_map(f, af);
    if (trace) {
        const Subspace g = intersection(perp(f.space(), p), f.pi());
        out << "G " << g.to_string(",") << "\n";
        out << "L " << perp(f.space(), sum(g, h)).to_string(",") << "\n";
    }
    out << x.to_string(",") << "\n";
    return 0;
}

struct VerifyOptions {
    int n = 0;
    std::string suite;
    std::optional<std::uint64_t> sample;
    std::optional<std::uint64_t> seed;
    std::string relation; // srg suite; empty = both B1 and B2
    std::string report_path;
    bool swap = false;
};

void append_counts(RunReport& rep, const char* prefix,
                   const std::array<std::uint64_t, 4>& values) {
    for (int i = 0; i < 4; ++i)
        rep.counts.emplace_back(prefix + std::to_string(i + 1), values[static_cast<std::size_t>(i)]);
}

void run_theorem_suite(const Frame& f, const VerifyOptions& opt, RunReport& rep,
                       std::ostream& out) {
    if (opt.sample) {
        if (!opt.seed)
            throw std::invalid_argument("--sample needs --seed for a reproducible run");
        try {
            const TheoremReport tr = verify_theorem_sampled(f, *opt.sample, *opt.seed);
            append_counts(rep, "C", tr.relation_counts);
            out << "pairs sampled " << tr.pair_count << "\n";
            rep.add_verdict("theorem-sampled", true);
        } catch (const verification_error& e) {
            rep.add_verdict("theorem-sampled", false, e.what());
        }
        return;
    }
    if (graph_order(opt.n) > 20000)
        throw std::invalid_argument("exhaustive theorem verification needs n <= 7; pass "
                                    "--sample and --seed instead");
    try {
        const TheoremReport tr = verify_theorem(f);
        append_counts(rep, "C", tr.relation_counts);
        out << "pairs " << tr.pair_count << "\n";
        rep.add_verdict("theorem", true);
    } catch (const verification_error& e) {
        rep.add_verdict("theorem", false, e.what());
    }
    if (graph_order(opt.n) <= 496) {
        try {
            const IsoReport iso = verify_antiflag_graph_iso(f);
            out << "antiflag graph edges " << iso.edge_count << "\n";
            rep.add_verdict("antiflag-graph-iso", true);
        } catch (const verification_error& e) {
            rep.add_verdict("antiflag-graph-iso", false, e.what());
        }
    }
}

void run_bijection_suite(const Frame& f, const VerifyOptions& opt, RunReport& rep,
                         std::ostream& out) {
    if (graph_order(opt.n) > 20000)
        throw std::invalid_argument("bijection verification needs n <= 7");
    try {
        const BijectionReport br = verify_bijection(f);
        out << "points " << br.point_count << " antiflags " << br.antiflag_count << "\n";
        rep.add_verdict("bijection", true);
    } catch (const verification_error& e) {
        rep.add_verdict("bijection", false, e.what());
    }
}

void run_facts_suite(const Frame& f, const VerifyOptions& opt, RunReport& rep,
                     std::ostream& out) {
    std::optional<SampleSpec> spec;
    if (opt.n > 3) {
        if (!opt.sample || !opt.seed)
            throw std::invalid_argument(
                "the facts suite needs --sample and --seed for n > 3 (and supports n <= 5)");
        spec = SampleSpec{*opt.sample, *opt.seed};
    }
    try {
        const FactsReport fr = verify_facts(f, spec);
        out << "facts: " << fr.nonsingular_points << " nonsingular points, "
            << fr.singular_points << " singular points, " << fr.tangent_lines
            << " tangent lines, " << fr.ts_subspaces
            << (fr.ts_exhaustive ? " totally singular subspaces (exhaustive)"
                                 : " totally singular subspaces (sampled)")
            << "\n";
        rep.add_verdict("facts", true);
    } catch (const verification_error& e) {
        rep.add_verdict("facts", false, e.what());
    }
}

void run_srg_suite(const Frame& f, const VerifyOptions& opt, RunReport& rep, std::ostream& out) {
    if (graph_order(opt.n) > 20000)
        throw std::invalid_argument("the srg suite needs n <= 7");
    std::vector<RelationLabel> labels;
    if (opt.relation.empty()) {
        labels.push_back(RelationLabel::make(RelFamily::B, 1));
        labels.push_back(RelationLabel::make(RelFamily::B, 2));
    } else {
        const auto parsed = RelationLabel::parse(opt.relation);
        if (!parsed || parsed->is_equal() || parsed->family() != RelFamily::B)
            throw std::invalid_argument("--relation must be B1 or B2 for the srg suite");
        labels.push_back(*parsed);
    }
    for (const RelationLabel label : labels) {
        try {
            const SrgReport sr = verify_srg(f, label);
            out << label.name() << " strongly regular " << sr.computed.to_string() << "\n";
            rep.counts.emplace_back(label.name(), sr.computed.v * sr.computed.k / 2);
            rep.add_verdict("srg-" + label.name(), true);
            if (sr.reference) {
                const std::string comparison =
                    "computed " + sr.computed.to_string() + "; reference " +
                    sr.reference->to_string() +
                    (sr.matches_reference ? "; match" : "; lambda/mu differ");
                out << label.name() << " reference comparison: " << comparison << "\n";
                rep.add_verdict("srg-" + label.name() + "-reference-comparison", true,
                                comparison);
            }
        } catch (const verification_error& e) {
            rep.add_verdict("srg-" + label.name(), false, e.what());
        }
    }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const Frame f = build_frame(opt.n, opt.swap);
    RunReport rep;
    rep.command = "verify";
    rep.suite = opt.suite;
    rep.n = opt.n;
    rep.frame = opt.swap ? "swapped" : "standard";
    rep.seed = opt.seed;
    rep.sample = opt.sample;

    Timer timer;
    out << "suite " << opt.suite << " n " << opt.n << " frame " << rep.frame << "\n";
    if (opt.suite == "theorem" || opt.suite == "all")
        run_theorem_suite(f, opt, rep, out);
    if (opt.suite == "bijection" || opt.suite == "all")
        run_bijection_suite(f, opt, rep, out);
    if (opt.suite == "facts" || opt.suite == "all")
        run_facts_suite(f, opt, rep, out);
    if (opt.suite == "srg" || opt.suite == "all")
        run_srg_suite(f, opt, rep, out);
    rep.wall_time = timer.elapsed();

    for (const auto& [key, value] : rep.counts)
        out << key << " " << value << "\n";
    for (const VerdictEntry& v : rep.verdicts) {
        if (v.pass)
            out << "ok " << v.name << (v.witness.empty() ? "" : " (" + v.witness + ")") << "\n";
        else
            out << "FAIL " << v.name << ": " << v.witness << "\n";
    }
    if (!opt.report_path.empty()) {
        std::ofstream file(opt.report_path);
        if (!file)
            throw std::invalid_argument("cannot write report file " + opt.report_path);
        file << rep.to_json();
    }
    out << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_graph(int n, const std::string& relation, const std::string& format,
              const std::string& out_path, bool swap, std::ostream& out) {
    const auto label = RelationLabel::parse(relation);
    if (!label || label->is_equal())
        throw std::invalid_argument("--relation must be one of A1..A4, B1, B2, C1..C4");
    const Frame f = build_frame(n, swap);
    const RelationGraph g = build_graph(f, *label);

    std::ofstream file(out_path);
    if (!file)
        throw std::invalid_argument("cannot write output file " + out_path);

    if (format == "graph6") {
        file << graph6_encode(g.adjacency) << "\n";
    } else if (format == "edges") {
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (g.adjacent(i, j))
                    file << i << " " << j << "\n";
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = g.n;
        j["relation"] = g.label.name();
        j["frame"] = swap ? "swapped" : "standard";
        j["vertex_count"] = g.size();
        j["edge_count"] = g.edge_count();
        j["vertices"] = g.vertex_labels;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t k = i + 1; k < g.size(); ++k)
                if (g.adjacent(i, k))
                    edges.push_back({i, k});
        j["edges"] = edges;
        file << j.dump(2) << "\n";
    } else {
        throw std::invalid_argument("--format must be graph6, edges, or json");
    }
    out << "wrote " << out_path << " (" << g.size() << " vertices, " << g.edge_count()
        << " edges)\n";
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"antiflag correspondence toolkit for hyperbolic quadrics over GF(2)"};
    app.require_subcommand(1);

    int n = 0;

    auto* enumerate = app.add_subcommand("enumerate", "list points or antiflags with a count");
    std::string what;
    enumerate->add_option("--n", n, "half the ambient dimension")->required();
    enumerate->add_option("--what", what, "nonsingular | singular | antiflags")->required();

    auto* map_cmd = app.add_subcommand("map", "apply the correspondence to one element");
    std::string forward_text, inverse_text;
    bool trace = false, map_swap = false;
    map_cmd->add_option("--n", n, "half the ambient dimension")->required();
    auto* fwd_opt = map_cmd->add_option("--forward", forward_text,
                                        "nonsingular point as a 0/1 string of length 2n");
    auto* inv_opt = map_cmd->add_option("--inverse", inverse_text,
                                        "antiflag as P;H with comma-joined basis vectors");
    fwd_opt->excludes(inv_opt);
    inv_opt->excludes(fwd_opt);
    map_cmd->add_flag("--trace", trace, "print intermediate subspaces");
    map_cmd->add_flag("--swap-frame", map_swap, "exchange Pi and Sigma");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    VerifyOptions vopt;
    verify->add_option("--n", vopt.n, "half the ambient dimension")->required();
    verify->add_option("--suite", vopt.suite, "theorem | facts | bijection | srg | all")
        ->required();
    std::uint64_t sample_value = 0, seed_value = 0;
    auto* sample_opt = verify->add_option("--sample", sample_value, "number of sampled pairs");
    auto* seed_opt = verify->add_option("--seed", seed_value, "sample seed");
    verify->add_option("--relation", vopt.relation, "B1 or B2 (srg suite only)");
    verify->add_option("--report", vopt.report_path, "write a JSON report to this file");
    verify->add_flag("--swap-frame", vopt.swap, "exchange Pi and Sigma");

    auto* graph = app.add_subcommand("graph", "export one relation graph");
    std::string relation, format, out_path;
    bool graph_swap = false;
    graph->add_option("--n", n, "half the ambient dimension")->required();
    graph->add_option("--relation", relation, "A1..A4, B1, B2, or C1..C4")->required();
    graph->add_option("--format", format, "graph6 | edges | json")->required();
    graph->add_option("--out", out_path, "output file")->required();
    graph->add_flag("--swap-frame", graph_swap, "exchange Pi and Sigma");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(n, what, out);
        if (map_cmd->parsed()) {
            if (fwd_opt->count() == 0 && inv_opt->count() == 0)
                throw std::invalid_argument("map needs --forward or --inverse");
            return cmd_map(n,
                           fwd_opt->count() ? std::optional<std::string>(forward_text)
                                            : std::nullopt,
                           inv_opt->count() ? std::optional<std::string>(inverse_text)
                                            : std::nullopt,
                           trace, map_swap, out);
        }
        if (verify->parsed()) {
            if (sample_opt->count())
                vopt.sample = sample_value;
            if (seed_opt->count())
                vopt.seed = seed_value;
            if (vopt.suite != "theorem" && vopt.suite != "facts" && vopt.suite != "bijection" &&
                vopt.suite != "srg" && vopt.suite != "all")
                throw std::invalid_argument(
                    "--suite must be theorem, facts, bijection, srg, or all");
            return cmd_verify(vopt, out);
        }
        if (graph->parsed())
            return cmd_graph(n, relation, format, out_path, graph_swap, out);
        throw std::invalid_argument("no subcommand given");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hyperquad::cli
