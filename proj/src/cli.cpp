#include "prframe/cli.hpp"

#include "prframe/construct.hpp"
#include "prframe/io.hpp"
#include "prframe/lifting.hpp"
#include "prframe/reference_frames.hpp"
#include "prframe/subspaces.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>

namespace prframe::cli {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotPRSubspace:
    case ErrorKind::RetriesExhausted: return exit_check_failed;
    default: return exit_usage;
    }
}

namespace {

struct GenArgs {
    std::size_t n = 0;
    std::size_t len = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t retries = 5;
    std::string kind = "exact";
    std::string out;
};

struct VerifyArgs {
    std::string file;
    std::vector<std::string> checks{"pr", "exact"};
};

struct AnalyzeArgs {
    std::string file;
    std::vector<std::string> what{"dmax", "spark", "redundancy"};
    std::size_t cap = 16;
};

struct SubspaceArgs {
    std::string file;
    std::string action;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    std::string basis;
    std::string vector;
    std::size_t probes = 32;
    std::string out;
};

void emit(std::ostream& out, const std::string& path, const Json& j) {
    if (path.empty())
        out << dump(j);
    else
        write_json_file(path, j);
}

// Returns the JSON report and whether every requested check passed.
std::pair<Json, bool> cmd_gen(const GenArgs& a, std::ostream& out) {
    const Seed seed{a.seed};
    Json meta;
    meta["kind"] = a.kind;
    meta["seed"] = a.seed;
    std::optional<Frame> frame;
    if (a.kind == "exact") {
        GeneratedFrame g = generate_exact_pr(a.n, a.len, seed, a.retries);
        meta["certificate"] = certificate_to_json(g.certificate);
        frame = std::move(g.frame);
    } else if (a.kind == "dmax") {
        GeneratedFrame g = generate_with_dmax(a.n, a.k, a.len, seed, a.retries);
        meta["k"] = a.k;
        meta["certificate"] = certificate_to_json(g.certificate);
        frame = std::move(g.frame);
    } else {
        BasisWithSubspace b = basis_with_maximal_subspace(a.n, a.k, seed, a.retries);
        meta["k"] = a.k;
        meta["subspace"] = subspace_to_json(b.subspace);
        meta["certificate"] = {{"pr_subspace", true}, {"maximal", true}};
        frame = std::move(b.basis);
    }
    Json file = frame_to_json(*frame, meta);
    emit(out, a.out, file);
    Json report;
    if (!a.out.empty()) report = {{"written", a.out}, {"n", frame->dim()}, {"length", frame->size()}};
    return {report, true};
}

std::pair<Json, bool> cmd_verify(const VerifyArgs& a) {
    const Frame f = frame_from_json(read_json_file(a.file));
    Json results = Json::object();
    bool all = true;
    for (const auto& check : a.checks) {
        Json r;
        bool pass = false;
        if (check == "pr") {
            const ComplementResult cp = has_complement_property(f);
            pass = cp.holds;
            r["failing"] = cp.failing ? indices_to_json(*cp.failing) : Json(nullptr);
        } else if (check == "exact") {
            const ExactnessReport rep = is_exact_pr_frame(f);
            pass = rep.exact;
            r["phase_retrievable"] = rep.phase_retrievable;
            r["removable"] = indices_to_json(rep.removable);
            if (rep.failing) r["failing"] = indices_to_json(*rep.failing);
        } else if (check == "redundancy") {
            std::vector<std::size_t> lacking;
            if (f.size() > 1) {
                const IndexSet all_idx = IndexSet::full(f.size());
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (!find_s2_witness(f, all_idx.without(i))) lacking.push_back(i);
            }
            pass = lacking.empty();
            r["without_witness"] = indices_to_json(lacking);
        } else {
            pass = lifted_independent(f);
        }
        r["pass"] = pass;
        results[check] = std::move(r);
        all = all && pass;
    }
    return {Json{{"file", a.file}, {"results", results}}, all};
}

std::pair<Json, bool> cmd_analyze(const AnalyzeArgs& a) {
    const Frame f = frame_from_json(read_json_file(a.file));
    Json results = Json::object();
    for (const auto& w : a.what) {
        if (w == "dmax")
            results["dmax"] = d_max(f);
        else if (w == "spark")
            results["spark"] = spark(f);
        else
            results["redundancy"] = rational_to_json(pr_redundancy(f, a.cap));
    }
    return {Json{{"file", a.file}, {"results", results}}, true};
}

std::pair<Json, bool> cmd_subspace(const SubspaceArgs& a) {
    const Frame f = frame_from_json(read_json_file(a.file));
    const Seed seed{a.seed};
    auto load_basis = [&] {
        if (a.basis.empty()) throw Error(ErrorKind::ParseError, "--basis is required for --action " + a.action);
        return subspace_from_json(read_json_file(a.basis));
    };
    Json results;
    bool pass = true;
    if (a.action == "random") {
        const Subspace m = random_pr_subspace(f, a.dim, seed);
        results["pr"] = true;
        results["subspace"] = subspace_to_json(m);
        if (!a.out.empty()) write_json_file(a.out, subspace_to_json(m));
    } else if (a.action == "check") {
        const Subspace m = load_basis();
        pass = is_pr_subspace(f, m);
        results["pr"] = pass;
        if (f.size() == f.dim()) results["min_support"] = min_support(m, f);
    } else if (a.action == "maximal") {
        const Subspace m = load_basis();
        results["verdict"] = verdict_to_json(is_maximal_pr_subspace(f, m, a.probes, seed));
    } else {
        if (a.vector.empty()) throw Error(ErrorKind::ParseError, "--vector is required for --action extend");
        const RatVector x = parse_vector_list(a.vector);
        const Subspace m = extend_to_maximal(f, x, seed);
        results["subspace"] = subspace_to_json(m);
        results["min_support"] = min_support(m, f);
        results["verdict"] = verdict_to_json(is_maximal_pr_subspace(f, m, a.probes, seed));
        if (!a.out.empty()) write_json_file(a.out, subspace_to_json(m));
    }
    return {Json{{"file", a.file}, {"action", a.action}, {"results", results}}, pass};
}

std::pair<Json, bool> cmd_reference_suite() {
    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool pass, Json detail = Json::object()) {
        detail["name"] = name;
        detail["pass"] = pass;
        checks.push_back(std::move(detail));
        all = all && pass;
    };

    for (auto len : reference_lengths()) {
        const Frame f = reference_matrix(len);
        const ExactnessReport rep = is_exact_pr_frame(f);
        record("5x" + std::to_string(len) + " matrix is an exact PR frame", rep.exact,
               {{"removable", indices_to_json(rep.removable)}});
    }

    const Frame r3 = example_r3_frame();
    const std::size_t d = d_max(r3);
    record("R^3 five-vector frame has d = 2", d == 2, {{"d", d}});
    record("R^3 five-vector frame has exact PR-redundancy", has_exact_pr_redundancy(r3));
    for (const auto& w : example_r3_witnesses()) {
        const IndexSet kept = IndexSet::full(r3.size()).without(w.removed);
        const bool ok = validate_witness(r3, kept, S2Witness{w.x, w.y, w.removed});
        record("published witness for removing vector " + std::to_string(w.removed + 1), ok,
               {{"x", vector_to_json(w.x)}, {"y", vector_to_json(w.y)}});
    }

    const Frame e4(RatMatrix::identity(4));
    const Subspace m = example_r4_subspace();
    const bool pr = is_pr_subspace(e4, m);
    record("R^4 subspace is PR for the standard basis", pr);
    const std::size_t s = min_support(m, e4);
    record("R^4 subspace has minimal support 3", s == 3, {{"min_support", s}});
    if (pr) {
        const MaximalityVerdict v = is_maximal_pr_subspace(e4, m);
        record("R^4 subspace is maximal", v.status == MaximalityStatus::Maximal, {{"verdict", verdict_to_json(v)}});
    }
    return {Json{{"checks", checks}, {"all_pass", all}}, all};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact phase-retrievable frames: construction, verification and PR subspaces", "prframe"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Add wall-clock time to reports");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a certified frame");
    g->add_option("--n", gen.n, "Dimension")->required();
    g->add_option("--len", gen.len, "Frame length");
    g->add_option("--k", gen.k, "d(F) for dmax, subspace dimension for basis-subspace");
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--retries", gen.retries, "Redraws allowed after a failed certification");
    g->add_option("--kind", gen.kind, "exact | dmax | basis-subspace")
        ->check(CLI::IsMember({"exact", "dmax", "basis-subspace"}));
    g->add_option("--out", gen.out, "Output file (default: standard output)");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Check phase retrievability and exactness");
    v->add_option("file", ver.file, "Frame JSON file")->required();
    v->add_option("--checks", ver.checks, "pr, exact, redundancy, lifted-independence")
        ->delimiter(',')
        ->check(CLI::IsMember({"pr", "exact", "redundancy", "lifted-independence"}));

    AnalyzeArgs ana;
    auto* a = app.add_subcommand("analyze", "Compute d(F), spark and PR-redundancy");
    a->add_option("file", ana.file, "Frame JSON file")->required();
    a->add_option("--what", ana.what, "dmax, spark, redundancy")
        ->delimiter(',')
        ->check(CLI::IsMember({"dmax", "spark", "redundancy"}));
    a->add_option("--cap", ana.cap, "Largest frame length for the redundancy search");

    SubspaceArgs sub;
    auto* s = app.add_subcommand("subspace", "Phase-retrievable subspaces of a frame");
    s->add_option("file", sub.file, "Frame JSON file")->required();
    s->add_option("--action", sub.action, "random | check | maximal | extend")
        ->required()
        ->check(CLI::IsMember({"random", "check", "maximal", "extend"}));
    s->add_option("--dim", sub.dim, "Subspace dimension for random");
    s->add_option("--seed", sub.seed, "Random seed");
    s->add_option("--basis", sub.basis, "Subspace JSON file for check and maximal");
    s->add_option("--vector", sub.vector, "Comma-separated vector for extend");
    s->add_option("--probes", sub.probes, "Random extension attempts for maximal");
    s->add_option("--out", sub.out, "Write the resulting subspace here");

    auto* r = app.add_subcommand("reference-suite", "Re-check the published example matrices and subspaces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        std::pair<Json, bool> result;
        std::string command;
        if (g->parsed()) {
            command = "gen";
            if (gen.kind != "basis-subspace" && gen.len == 0) throw Error(ErrorKind::OutOfRange, "--len is required");
            if (gen.kind == "basis-subspace") gen.len = gen.n;
            if (gen.kind != "exact" && gen.k == 0) throw Error(ErrorKind::OutOfRange, "--k is required");
            result = cmd_gen(gen, out);
            if (gen.out.empty()) return exit_ok;  // the frame itself went to standard output
        } else if (v->parsed()) {
            command = "verify";
            result = cmd_verify(ver);
        } else if (a->parsed()) {
            command = "analyze";
            result = cmd_analyze(ana);
        } else if (s->parsed()) {
            command = "subspace";
            result = cmd_subspace(sub);
        } else if (r->parsed()) {
            command = "reference-suite";
            result = cmd_reference_suite();
        }
        Json report;
        report["command"] = command;
        for (auto& [key, value] : result.first.items()) report[key] = value;
        if (timing) {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            report["timing_ms"] = ms.count();
        }
        out << dump(report);
        return result.second ? exit_ok : exit_check_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace prframe::cli
