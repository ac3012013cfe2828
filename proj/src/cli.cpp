#include "ccolor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccolor/approx.hpp"
#include "ccolor/bench.hpp"
#include "ccolor/exact.hpp"
#include "ccolor/gen.hpp"
#include "ccolor/greedy.hpp"
#include "ccolor/io.hpp"

namespace ccolor {

namespace {

Instance load_instance(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return parse_instance(in);
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    return parse_instance(f);
}

CnfFormula load_cnf(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return parse_dimacs(in);
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    return parse_dimacs(f);
}

std::string fixed4(double x) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(4) << x;
    return ss.str();
}

void print_report(const ApproxReport& r, int n, int m, std::ostream& out) {
    out << "algo " << r.algo << '\n';
    out << "n " << n << '\n';
    out << "m " << m << '\n';
    out << "value " << r.value << '\n';
    out << "bound " << fixed4(r.bound) << '\n';
    if (r.oracle) {
        out << "oracle " << *r.oracle << '\n';
        if (*r.oracle > 0)
            out << "ratio " << fixed4(static_cast<double>(r.value) / *r.oracle) << '\n';
    }
    if (r.coloring) out << "coloring " << format_coloring(*r.coloring) << '\n';
    if (r.set) out << "multitransversal " << format_vertex_set(*r.set) << '\n';
}

int cmd_solve(const std::string& pipeline, const std::string& path, bool with_oracle,
              int uniform_k, std::istream& in, std::ostream& out) {
    Instance inst = load_instance(path, in);
    const Hypergraph& h = inst.hg;
    ApproxReport r;
    r.algo = pipeline;

    if (pipeline == "general") {
        DecApproxResult res = approx_decrement_general(h);
        r.value = decrement_of_coloring(res.coloring);
        r.bound = res.bound;
        r.coloring = std::move(res.coloring);
        if (with_oracle) r.oracle = exact_upper_chromatic(h).decrement;
    } else if (pipeline == "hypertree") {
        if (!inst.tree) throw InvalidInput("instance has no host section");
        DecApproxResult res = approx_decrement_hypertree(h, *inst.tree);
        r.value = decrement_of_coloring(res.coloring);
        r.bound = res.bound;
        r.coloring = std::move(res.coloring);
        if (with_oracle) r.oracle = exact_decrement_hypertree(h, *inst.tree).decrement;
    } else if (pipeline == "hyperstar") {
        StripResult stripped = strip_center(h);
        SetResult indep = exact_independence(stripped.reduced);
        std::vector<int> s;
        for (int v : indep.witness) s.push_back(stripped.original_ids[v]);
        CColoring coloring = hyperstar_coloring_from_independent_set(h, s);
        r.value = decrement_of_coloring(coloring);
        r.bound = 1.0;  // center stripping solves hyperstars exactly
        r.coloring = std::move(coloring);
        if (with_oracle) r.oracle = exact_upper_chromatic(h).decrement;
    } else {  // multitransversal
        DemandVector d;
        if (uniform_k > 0) d = make_demands(h, std::vector<int>(h.m(), uniform_k));
        else if (inst.demands) d = *inst.demands;
        else throw InvalidInput("multitransversal needs a demands section or --k");
        std::vector<int> s = greedy_multitransversal(h, d);
        r.value = static_cast<long long>(s.size());
        r.bound = harmonic_sum(static_cast<int>(d.total));
        r.set = std::move(s);
        if (with_oracle) r.oracle = exact_multitransversal(h, d).size;
    }
    print_report(r, h.n, h.m(), out);
    return 0;
}

int cmd_exact(const std::string& oracle, const std::string& path, int uniform_k,
              std::istream& in, std::ostream& out) {
    if (oracle == "min-del") {
        CnfFormula f = load_cnf(path, in);
        DeletionResult res = min_variable_deletion(f);
        out << "oracle min-del\n";
        out << "vars " << f.num_vars << '\n';
        out << "clauses " << f.clauses.size() << '\n';
        out << "value " << res.count << '\n';
        out << "variables";
        for (int v : res.variables) out << ' ' << v;
        out << '\n';
        return 0;
    }

    Instance inst = load_instance(path, in);
    const Hypergraph& h = inst.hg;
    out << "oracle " << oracle << '\n';
    out << "n " << h.n << '\n';
    out << "m " << h.m() << '\n';
    if (oracle == "tau") {
        SetResult res = exact_transversal(h);
        out << "value " << res.size << '\n';
        out << "transversal " << format_vertex_set(res.witness) << '\n';
    } else if (oracle == "alpha") {
        SetResult res = exact_independence(h);
        out << "value " << res.size << '\n';
        out << "independent-set " << format_vertex_set(res.witness) << '\n';
    } else if (oracle == "tau-k") {
        DemandVector d;
        if (uniform_k > 0) d = make_demands(h, std::vector<int>(h.m(), uniform_k));
        else if (inst.demands) d = *inst.demands;
        else throw InvalidInput("tau-k needs a demands section or --k");
        SetResult res = exact_multitransversal(h, d);
        out << "value " << res.size << '\n';
        out << "multitransversal " << format_vertex_set(res.witness) << '\n';
    } else if (oracle == "chibar") {
        ChiBarResult res = exact_upper_chromatic(h);
        out << "value " << res.chi_bar << '\n';
        out << "dec " << res.decrement << '\n';
        out << "coloring " << format_coloring(res.witness) << '\n';
    } else {  // dec-hypertree
        if (!inst.tree) throw InvalidInput("instance has no host section");
        LineSetResult res = exact_decrement_hypertree(h, *inst.tree);
        out << "value " << res.decrement << '\n';
        out << "lines " << format_lines(res.witness) << '\n';
    }
    return 0;
}

long long param_int(const std::vector<std::string>& params, std::size_t i,
                    const char* name) {
    if (i >= params.size()) throw InvalidInput(std::string("missing parameter ") + name);
    try {
        std::size_t used = 0;
        long long v = std::stoll(params[i], &used);
        if (used != params[i].size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("parameter " + std::string(name) + " must be an integer, got '" +
                           params[i] + "'");
    }
}

void check_param_count(const std::vector<std::string>& params, std::size_t expected,
                       const char* usage) {
    if (params.size() != expected)
        throw InvalidInput(std::string("expected parameters: ") + usage);
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            int uniform_demands, std::istream& in, std::ostream& out) {
    Instance inst;
    std::ostringstream head;
    if (family == "single-edge") {
        check_param_count(params, 1, "single-edge <n>");
        inst.hg = gen_single_edge(static_cast<int>(param_int(params, 0, "n")));
        head << "# single-edge n=" << inst.hg.n << '\n';
    } else if (family == "prop3-upper") {
        check_param_count(params, 2, "prop3-upper <n> <s>");
        int n = static_cast<int>(param_int(params, 0, "n"));
        int s = static_cast<int>(param_int(params, 1, "s"));
        inst.hg = gen_prop3_upper_family(n, s);
        head << "# prop3-upper n=" << n << " s=" << s << '\n';
    } else if (family == "prop3-lower") {
        check_param_count(params, 1, "prop3-lower <k>");
        int k = static_cast<int>(param_int(params, 0, "k"));
        HypertreeInstance g = gen_prop3_lower_family(k);
        inst.hg = std::move(g.hg);
        inst.tree = std::move(g.tree);
        head << "# prop3-lower k=" << k << '\n';
    } else if (family == "sat-gadget") {
        if (params.size() > 1) throw InvalidInput("expected parameters: sat-gadget [cnf-file]");
        CnfFormula f = load_cnf(params.empty() ? "-" : params[0], in);
        GadgetInstance g = gen_sat_gadget(f);
        head << "# sat-gadget vars=" << f.num_vars << " clauses=" << f.clauses.size() << '\n';
        head << "# center " << g.center + 1 << '\n';
        for (int i = 0; i < f.num_vars; ++i)
            head << "# variable " << i + 1 << ": x'=" << g.var_vertex[i] + 1
                 << " t=" << g.true_vertex[i] + 1 << " f=" << g.false_vertex[i] + 1 << '\n';
        head << "# edges 1.." << g.variable_edge_count << " variable-edges, "
             << g.variable_edge_count + 1 << ".." << g.hg.m() << " clause-edges\n";
        inst.hg = std::move(g.hg);
        inst.tree = std::move(g.tree);
    } else if (family == "random-hypertree") {
        check_param_count(params, 4, "random-hypertree <n> <m> <max-size> <seed>");
        HypertreeInstance g = gen_random_hypertree(
            static_cast<int>(param_int(params, 0, "n")),
            static_cast<int>(param_int(params, 1, "m")),
            static_cast<int>(param_int(params, 2, "max-size")),
            static_cast<std::uint64_t>(param_int(params, 3, "seed")));
        inst.hg = std::move(g.hg);
        inst.tree = std::move(g.tree);
        head << "# random-hypertree " << params[0] << ' ' << params[1] << ' ' << params[2]
             << " seed=" << params[3] << '\n';
    } else if (family == "random-hypergraph") {
        check_param_count(params, 5, "random-hypergraph <n> <m> <min-size> <max-size> <seed>");
        inst.hg = gen_random_hypergraph(static_cast<int>(param_int(params, 0, "n")),
                                        static_cast<int>(param_int(params, 1, "m")),
                                        static_cast<int>(param_int(params, 2, "min-size")),
                                        static_cast<int>(param_int(params, 3, "max-size")),
                                        static_cast<std::uint64_t>(param_int(params, 4, "seed")));
        head << "# random-hypergraph " << params[0] << ' ' << params[1] << ' ' << params[2]
             << ' ' << params[3] << " seed=" << params[4] << '\n';
    } else {
        throw InvalidInput("unknown family '" + family +
                           "' (single-edge, prop3-upper, prop3-lower, sat-gadget, "
                           "random-hypertree, random-hypergraph)");
    }
    if (uniform_demands > 0)
        inst.demands = make_demands(inst.hg, std::vector<int>(inst.hg.m(), uniform_demands));
    out << head.str() << render_instance(inst);
    return 0;
}

int cmd_verify(const std::string& path, const std::string& witness_path, int uniform_k,
               bool cnf_mode, std::istream& in, std::ostream& out) {
    bool witness_from_stdin = witness_path.empty() || witness_path == "-";
    if (witness_from_stdin && (path.empty() || path == "-"))
        throw InvalidInput("instance and witness cannot both come from stdin");

    std::optional<Instance> inst;
    std::optional<CnfFormula> cnf;
    if (cnf_mode) cnf = load_cnf(path, in);
    else inst = load_instance(path, in);

    std::vector<WitnessItem> items;
    if (witness_from_stdin) {
        items = parse_witness(in);
    } else {
        std::ifstream f(witness_path);
        if (!f) throw InvalidInput("cannot open " + witness_path);
        items = parse_witness(f);
    }
    if (items.empty()) throw InvalidInput("no witness lines found");

    bool all_ok = true;
    auto report = [&](const char* kind, bool ok, const std::string& detail) {
        out << kind << (ok ? " ok" : " invalid") << (detail.empty() ? "" : " ") << detail
            << '\n';
        all_ok = all_ok && ok;
    };

    for (const auto& item : items) {
        try {
            switch (item.kind) {
                case WitnessKind::Coloring: {
                    if (!inst) throw InvalidInput("coloring witness needs an HGX instance");
                    CColoring c = normalize_coloring(item.values);
                    bool ok = verify_c_coloring(inst->hg, c);
                    report("coloring", ok,
                           ok ? "dec " + std::to_string(decrement_of_coloring(c)) : "");
                    break;
                }
                case WitnessKind::Transversal: {
                    if (!inst) throw InvalidInput("transversal witness needs an HGX instance");
                    DemandVector d = make_demands(
                        inst->hg, std::vector<int>(inst->hg.m(), std::max(uniform_k, 1)));
                    bool ok = verify_multitransversal(inst->hg, d, item.values);
                    report("transversal", ok,
                           ok ? "size " + std::to_string(item.values.size()) : "");
                    break;
                }
                case WitnessKind::Multitransversal: {
                    if (!inst)
                        throw InvalidInput("multitransversal witness needs an HGX instance");
                    DemandVector d;
                    if (uniform_k > 0)
                        d = make_demands(inst->hg, std::vector<int>(inst->hg.m(), uniform_k));
                    else if (inst->demands) d = *inst->demands;
                    else
                        throw InvalidInput(
                            "multitransversal witness needs a demands section or --k");
                    bool ok = verify_multitransversal(inst->hg, d, item.values);
                    report("multitransversal", ok,
                           ok ? "size " + std::to_string(item.values.size()) : "");
                    break;
                }
                case WitnessKind::IndependentSet: {
                    if (!inst)
                        throw InvalidInput("independent-set witness needs an HGX instance");
                    std::vector<char> in_s(inst->hg.n, 0);
                    for (int v : item.values) {
                        if (v < 0 || v >= inst->hg.n)
                            throw InvalidInput("vertex " + std::to_string(v + 1) +
                                               " out of range");
                        in_s[v] = 1;
                    }
                    bool ok = true;
                    for (const auto& e : inst->hg.edges) {
                        bool outside = false;
                        for (int v : e)
                            if (!in_s[v]) {
                                outside = true;
                                break;
                            }
                        if (!outside) {
                            ok = false;
                            break;
                        }
                    }
                    report("independent-set", ok,
                           ok ? "size " + std::to_string(item.values.size()) : "");
                    break;
                }
                case WitnessKind::Lines: {
                    if (!inst || !inst->tree)
                        throw InvalidInput("lines witness needs an instance with a host section");
                    std::vector<Line> ls;
                    for (std::size_t i = 0; i + 1 < item.values.size(); i += 2) {
                        int u = item.values[i], v = item.values[i + 1];
                        ls.emplace_back(std::min(u, v), std::max(u, v));
                    }
                    CColoring c = coloring_from_line_set(inst->hg, *inst->tree, ls);
                    report("lines", true,
                           "dec " + std::to_string(decrement_of_coloring(c)));
                    break;
                }
                case WitnessKind::Variables: {
                    if (!cnf) throw InvalidInput("variables witness needs --cnf");
                    bool ok = cnf_satisfiable_after_deletion(*cnf, item.values);
                    report("variables", ok, ok ? "remaining formula satisfiable" : "");
                    break;
                }
            }
        } catch (const InvalidInput& e) {
            out << "invalid: " << e.what() << '\n';
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"C-coloring toolkit: approximation pipelines, exact oracles, generators"};
    app.name("ccolor");
    app.require_subcommand(1);

    std::string pipeline, oracle, family, path, witness_path;
    std::vector<std::string> params;
    bool with_oracle = false, cnf_mode = false, json = false;
    int uniform_k = 0, uniform_demands = 0, threads = 1;
    std::string bench_dir;

    auto* solve = app.add_subcommand("solve", "run an approximation pipeline");
    solve->add_option("pipeline", pipeline, "general|hypertree|hyperstar|multitransversal")
        ->required()
        ->check(CLI::IsMember({"general", "hypertree", "hyperstar", "multitransversal"}));
    solve->add_option("instance", path, "HGX file ('-' or omitted: stdin)");
    solve->add_flag("--oracle", with_oracle, "also run the exact oracle and print the ratio");
    solve->add_option("-k,--k", uniform_k, "uniform demand for multitransversal");

    auto* exact = app.add_subcommand("exact", "run a brute-force oracle");
    exact->add_option("oracle", oracle, "tau|alpha|tau-k|chibar|dec-hypertree|min-del")
        ->required()
        ->check(CLI::IsMember({"tau", "alpha", "tau-k", "chibar", "dec-hypertree", "min-del"}));
    exact->add_option("instance", path, "HGX file, or DIMACS CNF for min-del");
    exact->add_option("-k,--k", uniform_k, "uniform demand for tau-k");

    auto* gen = app.add_subcommand("gen", "generate an instance on stdout");
    gen->add_option("family", family,
                    "single-edge|prop3-upper|prop3-lower|sat-gadget|"
                    "random-hypertree|random-hypergraph")
        ->required();
    gen->add_option("params", params, "family parameters (see README)");
    gen->add_option("--uniform-demands", uniform_demands, "attach demands w_i = K");

    auto* verify = app.add_subcommand("verify", "check witnesses against an instance");
    verify->add_option("instance", path, "HGX file (DIMACS with --cnf)");
    verify->add_option("witness", witness_path, "witness file ('-' or omitted: stdin)");
    verify->add_option("-k,--k", uniform_k, "uniform demand for transversal witnesses");
    verify->add_flag("--cnf", cnf_mode, "instance is a DIMACS CNF; verifies 'variables'");

    auto* bench = app.add_subcommand("bench", "run all pipelines over a corpus directory");
    bench->add_option("corpus", bench_dir, "directory of .hgx files")->required();
    bench->add_flag("--json", json, "JSON report instead of TSV");
    bench->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (app.got_subcommand(solve))
            return cmd_solve(pipeline, path, with_oracle, uniform_k, in, out);
        if (app.got_subcommand(exact)) return cmd_exact(oracle, path, uniform_k, in, out);
        if (app.got_subcommand(gen)) return cmd_gen(family, params, uniform_demands, in, out);
        if (app.got_subcommand(verify))
            return cmd_verify(path, witness_path, uniform_k, cnf_mode, in, out);
        BenchOptions opt{json, threads};
        auto records = run_bench(bench_dir, opt);
        if (json) write_bench_json(records, out);
        else write_bench_tsv(records, out);
        return 0;
    } catch (const SizeLimit& e) {
        err << "size limit: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ccolor
