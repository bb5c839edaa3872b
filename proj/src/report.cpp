#include "qc/report.hpp"

namespace qc {

using nlohmann::ordered_json;

namespace {

ordered_json interval_json(const RootInterval& r) {
    return ordered_json{{"lo", rat_to_string(r.lo)}, {"hi", rat_to_string(r.hi)}};
}

ordered_json intervals_json(const std::vector<RootInterval>& rs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) arr.push_back(interval_json(r));
    return arr;
}

ordered_json header() {
    return ordered_json{{"schema_version", kSchemaVersion}, {"library_version", kLibraryVersion}};
}

}  // namespace

ordered_json verdict_report(const Verdict& v) {
    ordered_json j = header();
    j["graph"] = v.graph6;
    j["verdict"] = verdict_kind_name(v.kind);
    if (v.method) j["method"] = good_method_name(*v.method);
    if (!v.resultant.zero_poly()) {
        j["resultant_coeffs"] = coeff_strings(v.resultant);
        j["roots_01"] = v.roots_01;
        j["roots_1inf"] = v.roots_1inf;
    }
    if (!v.intervals_01.empty()) j["intervals_01"] = intervals_json(v.intervals_01);
    if (!v.intervals_1inf.empty()) j["intervals_1inf"] = intervals_json(v.intervals_1inf);
    if (!v.pairs.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& p : v.pairs) {
            ordered_json pj;
            pj["u_box"] = interval_json(p.u_box);
            pj["v_box"] = interval_json(p.v_box);
            pj["excluded_by"] = p.excluded_by == 0 ? "none" : (p.excluded_by == 1 ? "f1" : "f2");
            if (p.excluded_by != 0)
                pj["enclosure"] = ordered_json{{"lo", rat_to_string(p.enclosure.lo)},
                                               {"hi", rat_to_string(p.enclosure.hi)}};
            arr.push_back(std::move(pj));
        }
        j["pairs"] = arr;
    }
    if (v.witness)
        j["witness"] = ordered_json{{"u", rat_to_string(v.witness->u)},
                                    {"v", rat_to_string(v.witness->v)},
                                    {"s", rat_to_string(v.witness->s)}};
    if (v.pair)
        j["pair"] = ordered_json{{"a", rat_to_string(v.pair->a)}, {"b", rat_to_string(v.pair->b)}};
    if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
    return j;
}

ordered_json experiment_report(const ExperimentReport& rep) {
    ordered_json j = header();
    ordered_json gen;
    if (rep.gen.kind == GeneratorParams::Kind::Gnp) {
        gen["kind"] = "gnp";
        gen["n"] = rep.gen.n;
        gen["p"] = rat_to_string(rep.gen.p);
    } else {
        gen["kind"] = "twotype";
        gen["n"] = rep.gen.n;
        gen["u"] = rat_to_string(rep.gen.w.u);
        gen["v"] = rat_to_string(rep.gen.w.v);
        gen["s"] = rat_to_string(rep.gen.w.s);
    }
    j["generator"] = gen;
    j["seed"] = rep.seed;
    j["trials"] = rep.trials;
    ordered_json alphas = ordered_json::array();
    for (const auto& a : rep.alphas) alphas.push_back(rat_to_string(a));
    j["alphas"] = alphas;
    j["host_edges"] = rep.host_edges;
    j["reference_density"] = rat_to_string(rep.gen.reference_density());
    ordered_json recs = ordered_json::array();
    for (const auto& r : rep.records) {
        ordered_json rj;
        rj["constrained"] = r.constrained.get_str();
        rj["symmetrized"] = rat_to_string(r.symmetrized);
        rj["expected"] = rat_to_string(r.expected);
        rj["deviation"] = rat_to_string(r.deviation);
        rj["part_sizes"] = r.part_sizes;
        recs.push_back(std::move(rj));
    }
    j["records"] = recs;
    j["mean_deviation"] = rat_to_string(rep.mean_deviation);
    return j;
}

ordered_json survey_report(const std::vector<SurveyRow>& rows) {
    ordered_json j = header();
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json rj;
        rj["graph"] = row.graph6;
        rj["edges"] = row.edges;
        rj["verdict"] = verdict_kind_name(row.verdict.kind);
        if (row.verdict.method) rj["method"] = good_method_name(*row.verdict.method);
        if (row.verdict.roots_01 >= 0) {
            rj["roots_01"] = row.verdict.roots_01;
            rj["roots_1inf"] = row.verdict.roots_1inf;
        }
        arr.push_back(std::move(rj));
    }
    j["rows"] = arr;
    return j;
}

}  // namespace qc
