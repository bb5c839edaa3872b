#include "qc/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qc/report.hpp"

namespace qc::cli {

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// inline graph6 string, or a file containing graph6 / an edge list
SmallGraph load_graph(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::string text = slurp(arg);
        // a file holding a single graph6 line, or an edge list
        std::string first = text.substr(0, text.find('\n'));
        try {
            return parse_graph6(first);
        } catch (const parse_error&) {
            return parse_edge_list(text);
        }
    }
    return parse_graph6(arg);
}

void write_json(const nlohmann::ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    return out;
}

int verdict_exit(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::Good: return 0;
        case VerdictKind::Bad: return 1;
        case VerdictKind::Inconclusive: return 2;
    }
    return kExitInput;
}

void print_verdict(const Verdict& v) {
    std::cout << v.graph6 << ": " << verdict_kind_name(v.kind);
    if (v.method) std::cout << " (" << good_method_name(*v.method) << ")";
    if (v.witness)
        std::cout << " witness (u,v,s)=(" << rat_to_string(v.witness->u) << ","
                  << rat_to_string(v.witness->v) << "," << rat_to_string(v.witness->s) << ")";
    if (v.roots_01 >= 0)
        std::cout << " roots_01=" << v.roots_01 << " roots_1inf=" << v.roots_1inf;
    if (!v.diagnostic.empty()) std::cout << " [" << v.diagnostic << "]";
    std::cout << "\n";
}

std::string poly_pretty(const IntPoly& p, const std::string& var) {
    if (p.zero_poly()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Int c = p.at(i);
        if (is_zero(c)) continue;
        if (!first) out << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) out << "-";
        Int a = abs(c);
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

struct CountOptions {
    std::string pattern, host, parts_path, mults;
    bool symmetrize = false, summed = false;
};

int run_count(const CountOptions& opt) {
    SmallGraph f = load_graph(opt.pattern);
    SmallGraph g = load_graph(opt.host);
    auto parts_json = nlohmann::json::parse(slurp(opt.parts_path));
    std::vector<std::vector<int>> parts;
    for (const auto& arr : parts_json.at("parts")) parts.push_back(arr.get<std::vector<int>>());

    if (opt.summed) {
        Rat r = count_summed(f, g, parts);
        std::cout << rat_to_string(r) << "\n";
        return 0;
    }
    if (!opt.mults.empty()) {
        std::vector<int> mults;
        std::stringstream ss(opt.mults);
        std::string item;
        while (std::getline(ss, item, ',')) mults.push_back(std::stoi(item));
        Rat r = count_multiplicity_averaged(f, g, parts, mults);
        std::cout << rat_to_string(r) << "\n";
        return 0;
    }

    PartitionSpec spec;
    spec.parts = parts;
    if (parts_json.contains("assignment")) {
        spec.assignment = parts_json.at("assignment").get<std::vector<int>>();
    } else {
        if (static_cast<int>(parts.size()) != f.n)
            throw std::invalid_argument(
                "count: without an explicit assignment, need exactly |F| parts");
        for (int i = 0; i < f.n; ++i) spec.assignment.push_back(i);
    }
    if (opt.symmetrize) {
        std::cout << rat_to_string(count_symmetrized(f, g, spec)) << "\n";
    } else {
        std::cout << count_constrained(f, g, spec).get_str() << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{
        "qcert: exact certifier for equal-parts restricted subgraph-count properties\n"
        "Decides whether a pattern graph's equal-parts count property forces\n"
        "quasi-randomness, and verifies the count formulas on sampled graphs."};
    app.require_subcommand(1);

    // certify
    std::string graph_arg, json_out;
    bool force_resultant = false;
    auto* c_cert = app.add_subcommand(
        "certify", "Good/Bad verdict for a graph (fast paths, then resultant + Sturm + interval exclusion)");
    c_cert->add_option("graph", graph_arg, "graph6 string or file (graph6 or edge list)")->required();
    c_cert->add_option("--json", json_out, "write the JSON evidence report here ('-' for stdout only)");
    c_cert->add_flag("--force-resultant", force_resultant,
                     "compute resultant evidence even on fast-path verdicts");

    // survey
    int survey_m = 4;
    std::string survey_file;
    int threads = 1;
    std::string survey_json;
    auto* c_survey = app.add_subcommand("survey", "certify every isomorphism class on m vertices");
    c_survey->add_option("--m", survey_m, "vertex count (internal enumeration for m <= 6)");
    c_survey->add_option("--file", survey_file, "graph6 list file (one graph per line)");
    c_survey->add_option("--threads", threads, "worker cap (does not change output)");
    c_survey->add_option("--json", survey_json, "write the JSON table here");

    // bipartite
    int bip_a = 2, bip_b = 2;
    std::string bip_json;
    auto* c_bip = app.add_subcommand("bipartite", "certify the complete bipartite graph K_{a,b}");
    c_bip->add_option("--a", bip_a, "first part size")->required();
    c_bip->add_option("--b", bip_b, "second part size")->required();
    c_bip->add_option("--json", bip_json, "write the JSON evidence report here");

    // lambda
    std::string lam_graph, lam_u = "3/4", lam_v = "1/4", lam_s = "1/2";
    auto* c_lambda = app.add_subcommand(
        "lambda", "subset-profile polynomial of F at block weights (u,v,s), power and Bernstein bases");
    c_lambda->add_option("graph", lam_graph, "graph6 string or file")->required();
    c_lambda->add_option("--u", lam_u, "high-block weight (rational)");
    c_lambda->add_option("--v", lam_v, "low-block weight (rational)");
    c_lambda->add_option("--s", lam_s, "cross weight (rational)");

    // resultant
    int path_m = 0, res_a = 0, res_b = 0;
    std::string res_graph;
    auto* c_res = app.add_subcommand(
        "resultant", "eliminate v from the degree-sequence equations and count real roots");
    c_res->add_option("--path", path_m, "use the path on m vertices");
    c_res->add_option("--a", res_a, "complete bipartite: first part size");
    c_res->add_option("--b", res_b, "complete bipartite: second part size");
    c_res->add_option("graph", res_graph, "graph6 string or file");

    // count
    CountOptions count_opt;
    auto* c_count = app.add_subcommand(
        "count", "exact restricted embedding counts N(F,G;U_1,...) and variants");
    c_count->add_option("--pattern", count_opt.pattern, "pattern graph F")->required();
    c_count->add_option("--host", count_opt.host, "host graph G")->required();
    c_count->add_option("--parts", count_opt.parts_path,
                        "JSON file: {\"parts\": [[host vertex ids], ...], \"assignment\": [part per pattern vertex]}")
        ->required();
    c_count->add_flag("--symmetrize", count_opt.symmetrize, "average over all labelings of F");
    c_count->add_flag("--summed", count_opt.summed, "sum the symmetrized count over all m-subsets of the parts");
    c_count->add_option("--mults", count_opt.mults,
                        "multiplicities per part, e.g. 2,1 (averaged over arrangements)");

    // sample
    int sample_n = 0;
    std::uint64_t sample_seed = 0;
    std::string sample_p = "1/2", sample_u = "1/2", sample_v = "1/2", sample_s = "1/2", sample_out;
    auto* c_sample = app.add_subcommand("sample", "generate a seeded random graph (graph6 on stdout)");
    auto* c_gnp = c_sample->add_subcommand("gnp", "G(n,p): every edge independently with probability p");
    c_gnp->add_option("--n", sample_n, "vertices")->required();
    c_gnp->add_option("--p", sample_p, "edge probability (rational)");
    c_gnp->add_option("--seed", sample_seed, "seed");
    c_gnp->add_option("--out", sample_out, "output file");
    auto* c_two = c_sample->add_subcommand(
        "twotype", "two-block model: probabilities v (low-low), u (high-high), s (across)");
    c_two->add_option("--n", sample_n, "vertices (first half low, second half high)")->required();
    c_two->add_option("--u", sample_u, "high-high probability");
    c_two->add_option("--v", sample_v, "low-low probability");
    c_two->add_option("--s", sample_s, "cross probability");
    c_two->add_option("--seed", sample_seed, "seed");
    c_two->add_option("--out", sample_out, "output file");
    c_sample->require_subcommand(1);

    // experiment
    std::string exp_pattern, exp_gen = "gnp", exp_alphas, exp_out;
    int exp_n = 0, exp_trials = 10;
    std::uint64_t exp_seed = 0;
    std::string exp_p = "1/2", exp_u = "1/2", exp_v = "1/2", exp_s = "1/2";
    int exp_threads = 1;
    auto* c_exp = app.add_subcommand(
        "experiment",
        "sample random parts and compare restricted counts with the p^e(F) * prod |U_i| prediction");
    c_exp->add_option("--pattern", exp_pattern, "pattern graph F")->required();
    c_exp->add_option("--gen", exp_gen, "generator: gnp or twotype");
    c_exp->add_option("--n", exp_n, "host vertices")->required();
    c_exp->add_option("--p", exp_p, "gnp edge probability");
    c_exp->add_option("--u", exp_u, "twotype high-high probability");
    c_exp->add_option("--v", exp_v, "twotype low-low probability");
    c_exp->add_option("--s", exp_s, "twotype cross probability");
    c_exp->add_option("--alphas", exp_alphas, "part fractions, e.g. 1/3,1/3,1/3")->required();
    c_exp->add_option("--trials", exp_trials, "trials");
    c_exp->add_option("--seed", exp_seed, "seed");
    c_exp->add_option("--threads", exp_threads, "worker cap (does not change output)");
    c_exp->add_option("--out", exp_out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_cert->parsed()) {
            CertifyOptions opts;
            opts.force_resultant = force_resultant;
            Verdict v = certify(load_graph(graph_arg), opts);
            print_verdict(v);
            if (!json_out.empty()) write_json(verdict_report(v), json_out == "-" ? "" : json_out);
            return verdict_exit(v);
        }
        if (c_survey->parsed()) {
            std::vector<SurveyRow> rows;
            if (!survey_file.empty()) {
                std::istringstream in(slurp(survey_file));
                std::vector<std::string> lines;
                std::string line;
                while (std::getline(in, line)) {
                    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
                    if (!line.empty()) lines.push_back(line);
                }
                rows = survey_list(lines, threads);
            } else {
                rows = survey(survey_m, threads);
            }
            long long good = 0, bad = 0, inconclusive = 0;
            for (const auto& row : rows) {
                std::cout << row.graph6 << "  e=" << row.edges << "  "
                          << verdict_kind_name(row.verdict.kind);
                if (row.verdict.method) std::cout << " (" << good_method_name(*row.verdict.method) << ")";
                std::cout << "\n";
                switch (row.verdict.kind) {
                    case VerdictKind::Good: ++good; break;
                    case VerdictKind::Bad: ++bad; break;
                    case VerdictKind::Inconclusive: ++inconclusive; break;
                }
            }
            std::cout << rows.size() << " graphs: " << good << " good, " << bad << " bad, "
                      << inconclusive << " inconclusive\n";
            if (!survey_json.empty()) write_json(survey_report(rows), survey_json);
            return 0;
        }
        if (c_bip->parsed()) {
            Verdict v = certify_bipartite(bip_a, bip_b);
            print_verdict(v);
            if (!bip_json.empty()) write_json(verdict_report(v), bip_json);
            return verdict_exit(v);
        }
        if (c_lambda->parsed()) {
            SmallGraph f = load_graph(lam_graph);
            WitnessTriple w{rat_from_string(lam_u), rat_from_string(lam_v), rat_from_string(lam_s)};
            RatPoly lam = lambda_q(f, w);
            auto sums = level_sums(subset_profile(f), w);
            std::cout << "power basis (lowest degree first):";
            for (const auto& s : coeff_strings(lam)) std::cout << " " << s;
            std::cout << "\nbernstein coefficients (level averages):";
            for (int k = 0; k <= f.n; ++k)
                std::cout << " " << rat_to_string(sums[static_cast<size_t>(k)] / Rat(binomial(f.n, k)));
            std::cout << "\n";
            if (auto pair = degree_le1_check(f, w))
                std::cout << "degree <= 1: lambda(q) = " << rat_to_string(pair->a) << " + "
                          << rat_to_string(pair->b) << "*" << f.n << "*q\n";
            return 0;
        }
        if (c_res->parsed()) {
            SmallGraph f;
            if (path_m > 0) f = path_graph(path_m);
            else if (res_a > 0 && res_b > 0) f = complete_bipartite(res_a, res_b);
            else if (!res_graph.empty()) f = load_graph(res_graph);
            else throw std::invalid_argument("resultant: give --path, --a/--b, or a graph");
            SmallGraph core = strip_isolated(f);
            auto [f1, f2] = degree_seq_equations(core);
            if (f1 == f2) throw std::invalid_argument("resultant: degenerate system (f1 = f2)");
            IntPoly res = resultant_v(f1, f2);
            if (res.zero_poly()) throw std::invalid_argument("resultant: vanishes identically");
            IntPoly prim = primitive_positive(res);
            std::cout << "R(u) = " << poly_pretty(prim, "u") << "\n";
            std::cout << "roots in (0,1): " << sturm_count(prim, Rat(0), Rat(1))
                      << ", roots in (1,inf): " << sturm_count(prim, Rat(1), std::nullopt) << "\n";
            return 0;
        }
        if (c_count->parsed()) return run_count(count_opt);
        if (c_sample->parsed()) {
            SmallGraph g;
            if (c_gnp->parsed()) {
                g = gen_gnp(sample_n, rat_from_string(sample_p), sample_seed);
            } else {
                WitnessTriple w{rat_from_string(sample_u), rat_from_string(sample_v),
                                rat_from_string(sample_s)};
                g = gen_two_type(sample_n, w, sample_seed);
            }
            // graph6 short form caps at 62 vertices; bigger hosts go out as an
            // edge list ("n m" header, 1-based labels)
            std::string text;
            if (g.n <= 62) {
                text = encode_graph6(g) + "\n";
            } else {
                std::ostringstream ss;
                ss << g.n << " " << g.edge_count() << "\n";
                for (int v = 0; v < g.n; ++v)
                    for (int w : g.adj[static_cast<size_t>(v)])
                        if (v < w) ss << v + 1 << " " << w + 1 << "\n";
                text = ss.str();
            }
            if (sample_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(sample_out, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot write file: " + sample_out);
                out << text;
            }
            return 0;
        }
        if (c_exp->parsed()) {
            SmallGraph f = load_graph(exp_pattern);
            GeneratorParams gen;
            gen.n = exp_n;
            if (exp_gen == "gnp") {
                gen.kind = GeneratorParams::Kind::Gnp;
                gen.p = rat_from_string(exp_p);
            } else if (exp_gen == "twotype") {
                gen.kind = GeneratorParams::Kind::TwoType;
                gen.w = WitnessTriple{rat_from_string(exp_u), rat_from_string(exp_v),
                                      rat_from_string(exp_s)};
            } else {
                throw std::invalid_argument("experiment: --gen must be gnp or twotype");
            }
            ExperimentReport rep = qr_experiment(f, gen, parse_rat_list(exp_alphas), exp_trials,
                                                 exp_seed, exp_threads);
            std::cout << "mean relative deviation: " << rat_to_string(rep.mean_deviation) << " ~ "
                      << rep.mean_deviation.get_d() << "\n";
            if (!exp_out.empty()) write_json(experiment_report(rep), exp_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}

}  // namespace qc::cli
