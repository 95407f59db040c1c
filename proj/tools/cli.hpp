/*
 * Copyright 2026 The logsymp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "logsymp/golden_p4.hpp"
#include "logsymp/json_io.hpp"
#include "logsymp/logsymp.hpp"

namespace logsymp::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kParse = 2, kUnsupported = 3, kSizeGuard = 4, kPrecondition = 5 };

inline int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return kParse;
        case ErrorCode::UnsupportedComplex: return kUnsupported;
        case ErrorCode::SizeGuard: return kSizeGuard;
        default: return kPrecondition;
    }
}

namespace detail {

inline io::json read_json(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return io::json::parse(buf.str());
    } catch (const io::json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
}

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw Error(ErrorCode::Parse, "format '" + format + "' is not available for this command");
}

inline std::string simplex_text(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

inline std::string orders_text(const OrderMap& orders) {
    std::string out;
    for (const auto& [k, m] : orders) out += (out.empty() ? "" : " ") + std::to_string(m) + "@" + std::to_string(k);
    return out;
}

inline std::string diagram_text(const SmoothingDiagram& d) {
    std::string out;
    for (const auto& [e, orders] : d.decorated_edges()) {
        if (!out.empty()) out += "; ";
        out += std::to_string(e.i) + "-" + std::to_string(e.j) + " [" + orders_text(orders) + "]";
    }
    return out.empty() ? "(empty)" : out;
}

struct Options {
    std::string input;
    std::string format = "json";
    std::string space = "P4";
    bool no_pruning = false;
    bool parallel = false;
    bool verify_golden = false;
    bool chains = false;
    unsigned max_order = 3;
    std::size_t chart_vertex = 0;
};

inline int cmd_analyze(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "text"});
    LogClass cls = io::class_from_json(read_json(o.input));
    if (o.chart_vertex >= cls.num_vertices()) throw Error(ErrorCode::BadVertex, "chart vertex out of range");
    AnalysisReport r = analyze(cls, o.chart_vertex);
    if (o.format == "json") {
        out << io::to_json(r).dump(2) << "\n";
        return kOk;
    }
    out << "nondegenerate: " << (r.nondegenerate ? "yes" : "no") << "\n";
    out << "holonomic: " << (r.holonomic ? "yes" : "no") << "\n";
    for (const auto& s : r.violating_simplices) out << "  violator " << simplex_text(s) << "\n";
    out << "characteristic:";
    for (const auto& s : r.characteristic) out << " " << simplex_text(s);
    out << "\n";
    for (const auto& e : r.edges) {
        out << "edge " << e.edge.i << "-" << e.edge.j << " B=" << e.biresidue;
        for (const auto& [k, m] : e.orders) out << " m@" << k << "=" << m;
        out << (e.resonant ? " resonant" : "") << (e.smoothable ? " smoothable" : "") << "\n";
    }
    out << "diagram: " << diagram_text(r.diagram) << "\n";
    return kOk;
}

inline std::size_t parse_space(const std::string& space) {
    if (space == "P2") return 1;
    if (space == "P4") return 2;
    if (space == "P6") return 3;
    if (space.size() >= 2 && space[0] == 'P') {
        try {
            const unsigned long dim = std::stoul(space.substr(1));
            if (dim % 2 == 0 && dim > 0) throw Error(ErrorCode::SizeGuard, "classification supports P2, P4 and P6");
        } catch (const std::logic_error&) {
        }
    }
    throw Error(ErrorCode::Parse, "unknown space '" + space + "'");
}

inline bool verify_golden(const std::vector<ClassEntry>& entries, std::ostream& err) {
    std::set<std::pair<std::string, std::size_t>> got, want;
    for (const auto& e : entries) got.emplace(e.canonical.encoding, e.dimension);
    for (const auto& g : golden::p4_table()) want.emplace(canonical_form(golden::to_diagram(g)).encoding, g.dimension);
    if (got == want) {
        err << "golden verification: " << want.size() << " classes match\n";
        return true;
    }
    for (const auto& w : want)
        if (!got.count(w)) err << "missing: " << w.first << " dim " << w.second << "\n";
    for (const auto& g : got)
        if (!want.count(g)) err << "unexpected: " << g.first << " dim " << g.second << "\n";
    return false;
}

inline int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
    require_format(o.format, {"json", "csv", "dot", "text"});
    const std::size_t n = parse_space(o.space);
    if (o.verify_golden && n != 2) throw Error(ErrorCode::Parse, "--verify-golden applies to P4 only");
    EnumerationOptions opts;
    opts.use_combinatorial_pruning = !o.no_pruning;
    opts.parallel = o.parallel;
    auto entries = enumerate_smoothing_diagrams(n, opts);
    if (o.format == "json") {
        io::json arr = io::json::array();
        for (const auto& e : entries) arr.push_back(io::to_json(e));
        out << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "encoding,edges,dimension,orbit_size\n";
        for (const auto& e : entries)
            out << e.canonical.encoding << "," << e.representative.size() << "," << e.dimension << "," << e.orbit_size << "\n";
    } else if (o.format == "dot") {
        for (std::size_t i = 0; i < entries.size(); ++i) out << to_dot(entries[i].representative, "class_" + std::to_string(i));
    } else {
        out << "classes: " << entries.size() << "\n";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            out << i + 1 << ". dim " << e.dimension << ", orbit " << e.orbit_size << ": " << diagram_text(e.representative)
                << "\n";
        }
    }
    if (o.verify_golden && !verify_golden(entries, err)) return kMismatch;
    return kOk;
}

inline int cmd_triple_points(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "csv", "text"});
    if (o.chains) {
        std::vector<ChainRecord> records;
        for (unsigned n = 0; n <= o.max_order; ++n)
            for (unsigned m = 0; m <= n; ++m) records.push_back(two_edge_chain_family(m, n));
        std::sort(records.begin(), records.end(),
                  [](const ChainRecord& a, const ChainRecord& b) { return std::tie(a.m, a.n) < std::tie(b.m, b.n); });
        if (o.format == "json") {
            io::json arr = io::json::array();
            for (const auto& r : records) arr.push_back(io::to_json(r));
            out << arr.dump(2) << "\n";
        } else {
            if (o.format == "csv") out << "m,n,b1,b2,b3,third_edge_smoothable\n";
            for (const auto& r : records) {
                const char* sep = o.format == "csv" ? "," : " ";
                out << r.m << sep << r.n << sep << r.biresidues[0] << sep << r.biresidues[1] << sep << r.biresidues[2]
                    << sep << (r.third_edge_smoothable ? "true" : "false") << "\n";
            }
        }
        return kOk;
    }
    auto points = triple_points_c4();
    if (o.format == "json") {
        io::json arr = io::json::array();
        for (const auto& p : points) arr.push_back(io::to_json(p));
        out << arr.dump(2) << "\n";
        return kOk;
    }
    if (o.format == "csv") out << "b1,b2,b3,m1,m2,m3,label,orbit_size\n";
    for (const auto& p : points) {
        const char* sep = o.format == "csv" ? "," : " ";
        out << p.biresidues[0] << sep << p.biresidues[1] << sep << p.biresidues[2] << sep << p.orders[0] << sep
            << p.orders[1] << sep << p.orders[2] << sep << to_string(p.label) << sep << p.orbit_size << "\n";
    }
    return kOk;
}

inline int cmd_cohomology(const Options& o, std::ostream& out, std::ostream& err) {
    require_format(o.format, {"json", "text"});
    GermClass g = io::germ_from_json(read_json(o.input));
    try {
        CohomologyReport r = cohomology_report(g);
        if (o.format == "json") {
            out << io::to_json(r).dump(2) << "\n";
        } else {
            out << "poincare:";
            for (auto c : r.poincare) out << " " << c;
            out << "\nhp2: " << r.hp2 << "\n";
            for (const auto& c : r.contributing) out << "  " << simplex_text(c.simplex) << "\n";
        }
        return kOk;
    } catch (const NotHolonomicError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& v : e.violators()) err << "violator " << simplex_text(v) << "\n";
        return kPrecondition;
    }
}

inline int cmd_render(const Options& o, std::ostream& out) {
    require_format(o.format, {"dot"});
    out << to_dot(io::diagram_from_json(read_json(o.input)));
    return kOk;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smoothing diagrams and invariants of log symplectic structures"};
    app.require_subcommand(1);
    detail::Options o;

    auto* analyze = app.add_subcommand("analyze", "Leaf, holonomicity and smoothability report for a class");
    analyze->add_option("class", o.input, "class JSON file ('-' for stdin)")->required();
    analyze->add_option("--format", o.format, "json|text");
    analyze->add_option("--chart-vertex", o.chart_vertex, "vertex deleted for the nondegeneracy chart");

    auto* classify = app.add_subcommand("classify", "Isomorphism classes of smoothing diagrams on P^{2n}");
    classify->add_option("--space", o.space, "P2|P4|P6");
    classify->add_option("--format", o.format, "json|csv|dot|text");
    classify->add_flag("--no-pruning", o.no_pruning, "decide every candidate by linear algebra alone");
    classify->add_flag("--parallel", o.parallel, "use worker threads (LOGSYMP_THREADS)");
    classify->add_flag("--verify-golden", o.verify_golden, "compare against the embedded P4 table");

    auto* triple = app.add_subcommand("triple-points", "Points of the affine triangle with three smoothable edges");
    triple->add_option("--format", o.format, "json|csv|text");
    triple->add_flag("--chains", o.chains, "emit two-edge chain records instead");
    triple->add_option("--max-order", o.max_order, "largest order for --chains");

    auto* cohomology = app.add_subcommand("cohomology", "Poisson cohomology of a toric germ");
    cohomology->add_option("germ", o.input, "germ JSON file ('-' for stdin)")->required();
    cohomology->add_option("--format", o.format, "json|text");

    auto* render = app.add_subcommand("render", "Graphviz rendering of a diagram");
    render->add_option("diagram", o.input, "diagram JSON file ('-' for stdin)")->required();
    render->add_option("--format", o.format, "dot");

    try {
        // CLI11 reads the program name from argv[0].
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    }
    if (render->parsed() && render->get_option("--format")->count() == 0) o.format = "dot";

    try {
        if (analyze->parsed()) return detail::cmd_analyze(o, out);
        if (classify->parsed()) return detail::cmd_classify(o, out, err);
        if (triple->parsed()) return detail::cmd_triple_points(o, out);
        if (cohomology->parsed()) return detail::cmd_cohomology(o, out, err);
        return detail::cmd_render(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace logsymp::cli
