// Command-line front end: construction, validation, invariants, the main
// verification pipeline, and the bounded search. Verbs are thin adapters
// over the library; output is byte-stable for fixed inputs and seeds
// (timing_ms in JSON output is the one field that varies).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "qtoric/report.hpp"

namespace {

using namespace qtoric;

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " component '" + tok + "'");
        }
    }
    if (out.empty()) throw ParseError(std::string("empty ") + what);
    return out;
}

struct MatrixArgs {
    std::string name;    // one of the named constructors, or empty
    int l = 0;
    std::string dims;    // comma list, for file input
    std::string file;    // matrix file path
};

CharMatrix resolve_matrix(const MatrixArgs& a) {
    if (!a.name.empty()) {
        if (a.name == "n7") return lambda2_n7();
        if (a.name == "n8") return lambda2_n8();
        if (a.name == "n12") return lambda2_n12();
        if (a.name == "type-a") return lambda2_stong_type_a(a.l);
        if (a.name == "type-b") return lambda2_stong_type_b(a.l);
        throw ParseError("unknown matrix name '" + a.name +
                         "' (expected n7, n8, n12, type-a, type-b)");
    }
    if (a.file.empty()) throw ParseError("either a matrix name or --dims/--matrix is required");
    SimplexProduct P(parse_int_list(a.dims, "dims"));
    std::ifstream in(a.file);
    if (!in) throw ParseError("cannot open matrix file '" + a.file + "'");
    return char_matrix_from_stream(in, P);
}

void add_matrix_options(CLI::App* cmd, MatrixArgs& args) {
    cmd->add_option("name", args.name, "named matrix: n7, n8, n12, type-a, type-b");
    cmd->add_option("--l", args.l, "family parameter for type-a/type-b")->default_val(0);
    cmd->add_option("--dims", args.dims, "polytope factor dimensions, e.g. 4,3");
    cmd->add_option("--matrix", args.file, "matrix file (text format)");
}

json wrap(const std::string& command, json inputs, json results, json verdicts, double ms) {
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"results", std::move(results)},
            {"verdicts", std::move(verdicts)},
            {"timing_ms", ms}};
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int run(int argc, char** argv) {
    CLI::App app{"exact invariants of quasitoric manifolds and small covers over products of "
                 "simplices"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured JSON output");

    // build
    auto* build = app.add_subcommand("build", "print a named characteristic matrix");
    MatrixArgs build_args;
    add_matrix_options(build, build_args);

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "check the vertex-basis condition");
    MatrixArgs validate_args;
    add_matrix_options(validate_cmd, validate_args);

    // special
    auto* special_cmd =
        app.add_subcommand("special", "check that every column sums to 1 (and c1 = 0)");
    MatrixArgs special_args;
    add_matrix_options(special_cmd, special_args);

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "print the quotient ring presentation");
    MatrixArgs coh_args;
    add_matrix_options(coh, coh_args);

    // chern
    auto* chern = app.add_subcommand("chern", "Chern numbers (one partition or the full table)");
    MatrixArgs chern_args;
    add_matrix_options(chern, chern_args);
    std::string chern_partition;
    chern->add_option("--partition", chern_partition, "partition, e.g. 4,3");

    // sw
    auto* sw = app.add_subcommand("sw", "Stiefel-Whitney numbers of the mod-2 reduction");
    MatrixArgs sw_args;
    add_matrix_options(sw, sw_args);
    std::string sw_partition;
    sw->add_option("--partition", sw_partition, "partition, e.g. 2,2,1");

    // stong
    auto* stong = app.add_subcommand("stong", "Stong manifold RP(n_1,...,n_k) computations");
    std::string stong_params;
    stong->add_option("--params", stong_params, "parameters, e.g. 2,0,0,0")->required();
    bool stong_indec = false, stong_orient = false, stong_dim = false, stong_sw = false,
         stong_matrix = false, stong_cross = false;
    stong->add_flag("--indecomposable", stong_indec, "indecomposability criterion");
    stong->add_flag("--orientable", stong_orient, "orientability criterion");
    stong->add_flag("--dimension", stong_dim, "manifold dimension");
    stong->add_flag("--sw-class", stong_sw, "total Stiefel-Whitney class");
    stong->add_flag("--char-matrix", stong_matrix, "small-cover characteristic matrix");
    stong->add_flag("--cross-check", stong_cross, "compare the two SW-number engines");
    int stong_cap = 12;
    stong->add_option("--cap", stong_cap, "dimension cap for --cross-check")->default_val(12);

    // verify-main
    auto* verify = app.add_subcommand("verify-main", "run the full verification pipeline");
    int lmax = 0;
    verify->add_option("--lmax", lmax, "verify families for l = 0..lmax")->default_val(0);
    int verify_cap = 12;
    verify->add_option("--cap", verify_cap, "SW enumeration dimension cap")->default_val(12);

    // search
    auto* search = app.add_subcommand("search", "bounded search for special matrices with a "
                                                "nonzero Chern number");
    std::string search_dims;
    search->add_option("--dims", search_dims, "polytope factor dimensions")->required();
    int bound = 1;
    search->add_option("--bound", bound, "entry bound B")->default_val(1);
    std::uint64_t seed = 0;
    search->add_option("--seed", seed, "seed for randomized mode")->default_val(0);
    long budget = 1000000;
    search->add_option("--budget", budget, "max candidates examined")->default_val(1000000);
    std::string mode = "exhaustive";
    search->add_option("--mode", mode, "exhaustive or random")->default_val("exhaustive");
    std::string resume;
    search->add_option("--resume", resume, "checkpoint file for resumable runs");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }
    Timer timer;

    if (build->parsed()) {
        CharMatrix m = resolve_matrix(build_args);
        if (as_json)
            std::cout << wrap("build", {{"name", build_args.name}, {"l", build_args.l}},
                              matrix_to_json(m), json::object(), timer.ms())
                             .dump(2)
                      << '\n';
        else
            std::cout << to_text(m);
        return 0;
    }
    if (validate_cmd->parsed()) {
        CharMatrix m = resolve_matrix(validate_args);
        ValidationReport rep = validate(m);
        if (as_json) {
            json res{{"valid", rep.valid}};
            if (rep.failing_vertex) res["failing_vertex"] = rep.failing_vertex->excluded;
            if (rep.determinant) res["determinant"] = rep.determinant->str();
            std::cout << wrap("validate", matrix_to_json(m), res, json::object(), timer.ms())
                             .dump(2)
                      << '\n';
        } else if (rep.valid) {
            std::cout << "valid\n";
        } else {
            std::cout << "invalid at vertex " << rep.failing_vertex->str() << " det="
                      << *rep.determinant << '\n';
        }
        return 0;
    }
    if (special_cmd->parsed()) {
        CharMatrix m = resolve_matrix(special_args);
        bool cols = is_special(m);
        bool c1 = first_chern_class_vanishes(m.polytope(), m);
        if (as_json)
            std::cout << wrap("special", matrix_to_json(m),
                              {{"column_sums_one", cols}, {"c1_vanishes", c1}, {"agree", cols == c1}},
                              json::object(), timer.ms())
                             .dump(2)
                      << '\n';
        else
            std::cout << (cols ? "true" : "false") << '\n';
        return 0;
    }
    if (coh->parsed()) {
        CharMatrix m = resolve_matrix(coh_args);
        if (m.ring() == Ring::Int) {
            auto q = eliminate<ZInt>(m.polytope(), m);
            if (as_json)
                std::cout << wrap("cohomology", matrix_to_json(m), presentation_to_json(q),
                                  json::object(), timer.ms())
                                 .dump(2)
                          << '\n';
            else
                std::cout << presentation_to_text(q);
        } else {
            auto q = eliminate<F2>(m.polytope(), m);
            if (as_json)
                std::cout << wrap("cohomology", matrix_to_json(m), presentation_to_json(q),
                                  json::object(), timer.ms())
                                 .dump(2)
                          << '\n';
            else
                std::cout << presentation_to_text(q);
        }
        return 0;
    }
    if (chern->parsed()) {
        CharMatrix m = resolve_matrix(chern_args);
        ChernEngine engine(m.polytope(), m);
        if (!chern_partition.empty()) {
            ZInt v = engine.number(parse_partition(chern_partition));
            if (as_json)
                std::cout << wrap("chern",
                                  {{"matrix", matrix_to_json(m)}, {"partition", chern_partition}},
                                  {{"value", v.str()}}, json::object(), timer.ms())
                                 .dump(2)
                          << '\n';
            else
                std::cout << v << '\n';
        } else {
            InvariantTable t = engine.all_numbers();
            BordismVerdict v = verdict(t);
            if (as_json)
                std::cout << wrap("chern", matrix_to_json(m), table_to_json(t), verdict_to_json(v),
                                  timer.ms())
                                 .dump(2)
                          << '\n';
            else
                std::cout << table_to_text(t) << verdict_to_text(v);
        }
        return 0;
    }
    if (sw->parsed()) {
        CharMatrix m = resolve_matrix(sw_args);
        CharMatrix m2 = m.ring() == Ring::Mod2 ? m : mod2_reduce(m);
        SwEngine engine(m2.polytope(), m2);
        if (!sw_partition.empty()) {
            int v = engine.number(parse_partition(sw_partition));
            if (as_json)
                std::cout << wrap("sw",
                                  {{"matrix", matrix_to_json(m2)}, {"partition", sw_partition}},
                                  {{"value", v}}, json::object(), timer.ms())
                                 .dump(2)
                          << '\n';
            else
                std::cout << v << '\n';
        } else {
            InvariantTable t = engine.all_numbers();
            BordismVerdict v = verdict(t);
            if (as_json)
                std::cout << wrap("sw", matrix_to_json(m2), table_to_json(t), verdict_to_json(v),
                                  timer.ms())
                                 .dump(2)
                          << '\n';
            else
                std::cout << table_to_text(t) << verdict_to_text(v);
        }
        return 0;
    }
    if (stong->parsed()) {
        StongParams s(parse_int_list(stong_params, "params"));
        json results = json::object();
        std::ostringstream text;
        int asked = int(stong_dim) + int(stong_indec) + int(stong_orient) + int(stong_sw) +
                    int(stong_matrix) + int(stong_cross);
        // single-flag invocations answer bare; multi-flag ones are labeled
        auto line = [&](const char* label, const std::string& value) {
            if (asked > 1) text << label << ": ";
            text << value << '\n';
        };
        if (stong_dim || asked == 0) {
            results["dimension"] = s.dimension();
            text << "dimension: " << s.dimension() << '\n';
        }
        if (stong_indec) {
            bool v = is_indecomposable(s);
            results["indecomposable"] = v;
            line("indecomposable", v ? "true" : "false");
        }
        if (stong_orient) {
            bool v = is_orientable(s);
            results["orientable"] = v;
            line("orientable", v ? "true" : "false");
        }
        if (stong_sw) {
            auto sp = stong_presentation(s);
            auto w = sw_class_formula(s);
            json comps = json::array();
            for (int d = 0; d <= w.top(); ++d) {
                comps.push_back(poly_to_string(w[d], sp.pres.var_names()));
                text << "w" << d << ": " << poly_to_string(w[d], sp.pres.var_names()) << '\n';
            }
            results["sw_class"] = comps;
        }
        if (stong_matrix) {
            CharMatrix m = stong_char_matrix(s);
            results["char_matrix"] = matrix_to_json(m);
            text << to_text(m);
        }
        if (stong_cross) {
            bool ok = sw_numbers_cross_check(s, stong_cap);
            results["cross_check"] = ok;
            line("cross_check", ok ? "true" : "false");
        }
        if (as_json)
            std::cout << wrap("stong", {{"params", s.parts()}}, results, json::object(), timer.ms())
                             .dump(2)
                      << '\n';
        else
            std::cout << text.str();
        return 0;
    }
    if (verify->parsed()) {
        MainTheoremReport rep = verify_main_theorem(lmax, {verify_cap, 64});
        if (as_json)
            std::cout << wrap("verify-main", {{"lmax", lmax}, {"cap", verify_cap}},
                              report_to_json(rep), {{"all_passed", rep.all_passed()}}, timer.ms())
                             .dump(2)
                      << '\n';
        else
            std::cout << report_to_text(rep);
        return 0;
    }
    if (search->parsed()) {
        SearchConfig cfg;
        cfg.dims = parse_int_list(search_dims, "dims");
        cfg.bound = bound;
        cfg.seed = seed;
        cfg.budget = budget;
        if (mode == "exhaustive") cfg.mode = SearchMode::Exhaustive;
        else if (mode == "random") cfg.mode = SearchMode::Randomized;
        else throw ParseError("unknown search mode '" + mode + "'");
        cfg.checkpoint_path = resume;
        SearchResult res = search_special(cfg);
        if (as_json) {
            std::cout << wrap("search",
                              {{"dims", cfg.dims},
                               {"bound", cfg.bound},
                               {"seed", cfg.seed},
                               {"budget", cfg.budget},
                               {"mode", mode}},
                              search_result_to_json(res), json::object(), timer.ms())
                             .dump(2)
                      << '\n';
        } else {
            std::cout << "examined: " << res.examined << '\n'
                      << "complete: " << (res.complete ? "true" : "false") << '\n'
                      << "hits: " << res.hits.size() << '\n';
            for (const auto& h : res.hits) {
                std::cout << to_text(h.matrix) << verdict_to_text(h.verdict);
            }
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qtoric::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
