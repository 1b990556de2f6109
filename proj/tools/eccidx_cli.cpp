/*
Copyright 2026 The eccidx Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// eccidx command-line front end: compute, family, transform, enumerate, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eccidx/eccidx.hpp"

using namespace eccidx;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kError = 2 };

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    return read_all(in);
}

std::vector<Graph> parse_graphs(const std::string& text, const std::string& format) {
    if (format == "edgelist") return {parse_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
        if (!detail::trim(line).empty()) out.push_back(parse_graph6(line));
    return out;
}

std::string format_graph(const Graph& g, const std::string& format) {
    return format == "edgelist" ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

ordered_json trace_json(const TransformTrace& t) {
    ordered_json j;
    j["before"] = to_json(t.before);
    j["after"] = to_json(t.after);
    j["delta_xi_d"] = t.delta_xi_d;
    j["delta_xi_c"] = t.delta_xi_c;
    j["gap"] = t.gap();
    j["moved_set_size"] = t.moved_set_size;
    return j;
}

struct ComputeArgs {
    std::string input = "-";
    std::string format = "graph6";
    bool json = false;
};

int run_compute(const ComputeArgs& a) {
    const auto graphs = parse_graphs(read_input(a.input), a.format);
    if (!a.json) std::cout << csv_header() << '\n';
    for (const Graph& g : graphs) {
        const IndexReport r = index_report(g);
        std::cout << (a.json ? to_json(r).dump() : to_csv_row(r)) << '\n';
    }
    return kOk;
}

struct FamilyArgs {
    std::string kind;
    std::size_t n = 0, k = 0;
    std::vector<std::size_t> leaves;
    std::string base;
    std::size_t w = 0, p = 0, q = 0;
    std::string format = "graph6";
};

int run_family(const FamilyArgs& a) {
    FamilySpec spec;
    spec.kind = parse_family_kind(a.kind);
    switch (spec.kind) {
        case FamilyKind::CocktailParty: spec.params = {a.k}; break;
        case FamilyKind::CPJoinComplete: spec.params = {a.k, a.n}; break;
        case FamilyKind::Caterpillar: spec.params = a.leaves; break;
        case FamilyKind::PendantPathGraph:
            if (a.base.empty()) throw Error(ErrorKind::InvalidArgument, "pendant-paths needs --base");
            spec.params = {a.w, a.p, a.q};
            spec.base = parse_graph6(a.base);
            break;
        default: spec.params = {a.n}; break;
    }
    std::cout << format_graph(build_family(spec), a.format);
    return kOk;
}

struct TransformArgs {
    std::string name;
    std::string input;
    int u = -1, v = -1, w = -1, z = -1;
    std::int64_t p = 0, q = 0;
};

int run_transform(const TransformArgs& a) {
    const Graph g = parse_graph6(a.input);
    ordered_json out;
    out["transform"] = a.name;
    out["input"] = emit_graph6(g);
    if (a.name == "shift-leaves" || a.name == "star-ward") {
        const auto res = a.name == "shift-leaves" ? shift_leaves_toward_spine(g, a.u, a.v) : star_ward_shift(g, a.w, a.z);
        out["output"] = emit_graph6(res.graph);
        out["trace"] = trace_json(res.trace);
        if (a.name == "star-ward")
            out["gap_bound"] = star_ward_gap_bound(static_cast<std::int64_t>(g.order()), res.trace.moved_set_size);
    } else if (a.name == "merge-paths") {
        const MergeTrace m = merge_paths_delta(g, a.w, a.p, a.q);
        out["p"] = m.p;
        out["q"] = m.q;
        out["r"] = m.r;
        out["trace"] = trace_json(m.trace);
        out["xi_d_increase"] = m.xi_d_increase;
        out["xi_c_increase"] = m.xi_c_increase;
        out["xi_d_bound_times6"] = m.xi_d_bound_times6;
        out["xi_c_bound"] = m.xi_c_bound;
        out["xi_d_bound_holds"] = m.xi_d_bound_holds();
        out["xi_c_bound_holds"] = m.xi_c_bound_holds();
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown transform '" + a.name + "'");
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

GraphStream universe_stream(const std::string& universe, std::size_t n, std::optional<std::int64_t> diameter) {
    const GraphStream all = universe == "trees" ? all_trees(n) : all_connected_graphs(n);
    if (!diameter) return all;
    return filtered_stream(all, GraphFilter{.diameter = diameter});
}

struct EnumerateArgs {
    std::string universe;
    std::size_t n = 0;
    std::string out;
    std::optional<std::int64_t> diameter;
};

int run_enumerate(const EnumerateArgs& a) {
    const GraphStream s = universe_stream(a.universe, a.n, a.diameter);
    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.out);
    }
    std::ostream& os = a.out.empty() ? std::cout : file;
    for (const Graph& g : s) os << emit_graph6(g) << '\n';
    return kOk;
}

struct VerifyArgs {
    std::string theorem = "all";
    std::string universe = "graphs";
    std::size_t n = 0;
    std::optional<std::int64_t> diameter;
    std::string csv;
    std::size_t threads = 0;
    std::int64_t max_path_sum = 5;
    std::size_t max_failures = 50;
};

int run_verify(const VerifyArgs& a) {
    SuiteOptions opt;
    opt.workers = a.threads ? a.threads : default_parallelism();
    opt.max_path_sum = a.max_path_sum;
    opt.keep_verdicts = !a.csv.empty();
    const SuiteReport rep = run_suite(parse_theorems(a.theorem), universe_stream(a.universe, a.n, a.diameter), opt);
    if (!a.csv.empty()) {
        std::ofstream csv(a.csv);
        if (!csv) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.csv);
        csv << verdict_csv_header() << '\n';
        for (const auto& v : rep.verdicts) csv << to_csv_row(v) << '\n';
    }
    ordered_json out;
    out["universe"] = a.universe;
    out["n"] = a.n;
    if (a.diameter) out["diameter"] = *a.diameter;
    out.update(to_json(rep, a.max_failures));
    std::cout << out.dump(2) << '\n';
    return rep.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eccentricity-based topological indices of small connected graphs"};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"graph6", "edgelist"};

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Print the index report of every input graph");
    c->add_option("--input,-i", compute.input, "Input file, '-' for stdin")->capture_default_str();
    c->add_option("--format", compute.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
    c->add_flag("--json", compute.json, "One JSON object per graph instead of CSV");

    FamilyArgs family;
    auto* f = app.add_subcommand("family", "Build a member of a named graph family");
    f->add_option("kind", family.kind, "path, star, complete, cycle, cocktail-party, cp-join-complete, caterpillar, pendant-paths")
        ->required();
    f->add_option("--n", family.n, "Order");
    f->add_option("--k", family.k, "Cocktail-party half order");
    f->add_option("--leaves", family.leaves, "Caterpillar leaf counts along the spine")->delimiter(',');
    f->add_option("--base", family.base, "Base graph (graph6) for pendant-paths");
    f->add_option("--w", family.w, "Attachment vertex");
    f->add_option("--p", family.p, "Length of the first pendant path");
    f->add_option("--q", family.q, "Length of the second pendant path");
    f->add_option("--format", family.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();

    TransformArgs transform;
    auto* t = app.add_subcommand("transform", "Apply one rewrite and print its trace as JSON");
    t->add_option("name", transform.name, "shift-leaves, star-ward or merge-paths")
        ->required()
        ->check(CLI::IsMember({"shift-leaves", "star-ward", "merge-paths"}));
    t->add_option("--input", transform.input, "Graph in graph6")->required();
    t->add_option("--u", transform.u, "shift-leaves: vertex whose leaves move");
    t->add_option("--v", transform.v, "shift-leaves: receiving neighbour");
    t->add_option("--w", transform.w, "star-ward: vertex whose neighbours move; merge-paths: attachment vertex");
    t->add_option("--z", transform.z, "star-ward: receiving neighbour");
    t->add_option("--p", transform.p, "merge-paths: first path length");
    t->add_option("--q", transform.q, "merge-paths: second path length");

    EnumerateArgs enumerate;
    auto* e = app.add_subcommand("enumerate", "List all trees or connected graphs of one order as graph6");
    e->add_option("universe", enumerate.universe, "trees or graphs")->required()->check(CLI::IsMember({"trees", "graphs"}));
    e->add_option("--n", enumerate.n, "Order")->required();
    e->add_option("--out,-o", enumerate.out, "Output file (default stdout)");
    e->add_option("--diameter", enumerate.diameter, "Keep only graphs of this diameter");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check the bounds exhaustively and print a JSON summary");
    v->add_option("--theorem", verify.theorem, "Theorem id, T4sum or all")->capture_default_str();
    v->add_option("--universe", verify.universe, "trees or graphs")
        ->check(CLI::IsMember({"trees", "graphs"}))
        ->capture_default_str();
    v->add_option("--n", verify.n, "Order")->required();
    v->add_option("--diameter", verify.diameter, "Restrict to one diameter");
    v->add_option("--csv", verify.csv, "Also write every verdict to this CSV file");
    v->add_option("--threads", verify.threads, "Worker count (default: ECCIDX_THREADS or hardware)");
    v->add_option("--max-path-sum", verify.max_path_sum, "Largest p + q for the pendant-path lemmas")
        ->capture_default_str();
    v->add_option("--max-failures", verify.max_failures, "Failing verdicts listed in the summary")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kError;
    }

    try {
        if (*c) return run_compute(compute);
        if (*f) return run_family(family);
        if (*t) return run_transform(transform);
        if (*e) return run_enumerate(enumerate);
        if (*v) return run_verify(verify);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kError;
    }
    return kError;
}
