// Command-line front end: classification, pair criteria, constructions,
// certification, limit sets, Nielsen search and SVG rendering.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schottky/classicalize.hpp"
#include "schottky/constructions.hpp"
#include "schottky/io.hpp"
#include "schottky/pair_criteria.hpp"
#include "schottky/render.hpp"

namespace {

using namespace schottky;
using io::json;

enum Exit : int { kPass = 0, kNegative = 1, kInputError = 2, kBudget = 3 };

struct Globals {
    double tol = kDefaultTol;
    std::uint64_t seed = 7;
    std::string out;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

MoebiusMap parse_matrix_arg(const std::string& text, double tol) {
    std::vector<double> v;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            v.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidInput, "bad matrix entry '" + tok + "'");
        }
    }
    if (v.size() != 4) throw Error(ErrorCode::InvalidInput, "matrix needs four entries a,b,c,d");
    return MoebiusMap::normalize(v[0], v[1], v[2], v[3], tol);
}

// Generators from {"pair":[..]} or {"generators":[..]}.
std::vector<MoebiusMap> load_generators(const json& j, double tol) {
    const char* key = j.contains("pair") ? "pair" : "generators";
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw Error(ErrorCode::InvalidInput, "expected a 'pair' or 'generators' array");
    }
    std::vector<MoebiusMap> out;
    for (const json& m : j.at(key)) out.push_back(io::matrix_from_json(m, tol));
    return out;
}

double file_tol(const json& j, double fallback) {
    return j.contains("tol") && j.at("tol").is_number() ? j.at("tol").get<double>() : fallback;
}

json fixed_points_json(const MoebiusMap& m, double tol) {
    if (classify(m, tol) != Kind::Hyperbolic) return nullptr;
    const FixedPoints fp = fixed_points(m, tol);
    return {{"attracting", io::to_json(fp.attracting)}, {"repelling", io::to_json(fp.repelling)}};
}

int cmd_classify(const Globals& g, const std::string& matrix, const std::string& in) {
    MoebiusMap m;
    if (!matrix.empty()) {
        m = parse_matrix_arg(matrix, g.tol);
    } else {
        m = io::matrix_from_json(io::read_json_file(in), g.tol);
    }
    const Kind kind = classify(m, g.tol);
    json j{{"matrix", io::to_json(m)}, {"kind", std::string(to_string(kind))}, {"trace", m.trace()}};
    if (kind == Kind::Hyperbolic) {
        j["fixed_points"] = fixed_points_json(m, g.tol);
        j["translation_length"] = translation_length(m, g.tol);
    }
    io::write_text(g.out, dump(j));
    return kPass;
}

int cmd_pair_test(const Globals& g, const std::string& in, const std::string& a_arg, const std::string& b_arg) {
    std::vector<MoebiusMap> gens;
    double tol = g.tol;
    if (!in.empty()) {
        const json doc = io::read_json_file(in);
        tol = file_tol(doc, tol);
        gens = load_generators(doc, tol);
    } else {
        gens = {parse_matrix_arg(a_arg, tol), parse_matrix_arg(b_arg, tol)};
    }
    if (gens.size() != 2) throw Error(ErrorCode::InvalidInput, "pair test needs exactly two generators");
    const MoebiusMap& a = gens[0];
    const MoebiusMap& b = gens[1];
    for (const MoebiusMap& m : gens) {
        if (classify(m, tol) != Kind::Hyperbolic) throw Error(ErrorCode::NotHyperbolic, "pair test needs hyperbolic maps");
    }

    const PairCase pc = pair_case(a, b, tol);
    json j;
    j["case"] = std::string(to_string(pc.kind));
    j["fixed_points"] = {{"A", fixed_points_json(a, tol)}, {"B", fixed_points_json(b, tol)}};
    j["labeling"] = nullptr;
    int code = kNegative;

    if (pc.kind == PairCaseKind::Degenerate) {
        j["schottky"] = false;
        j["classical_on_pair"] = false;
        j["violation"] = {{"reason", pc.reason}};
    } else if (pc.kind == PairCaseKind::Intersecting) {
        const CommutatorVerdict v = intersecting_pair_schottky_test(a, b, tol);
        j["commutator_trace"] = v.commutator_trace;
        j["schottky"] = v.schottky;
        j["classical_on_pair"] = v.schottky;
        if (v.schottky) {
            j["quotient_surface"] = std::string(CommutatorVerdict::quotient_surface);
            if (auto sys = certify_tuple(gens, g.seed, tol)) {
                j["verification"] = io::to_json(verify_classical(*sys, tol));
                j["circles"] = io::to_json(*sys, tol)["circles"];
            }
            code = kPass;
        } else {
            j["violation"] = {{"reason", v.reason}};
        }
    } else {
        const OrientedPair pair = orient_pair_standard(a, b, tol);
        j["orientation"] = {{"inverted_first", pair.inverted_first}, {"inverted_second", pair.inverted_second}};
        try {
            const Lemma3Result res = lemma3_classical_test(pair, tol);
            j["fixed_points"]["test_element"] = {{"attracting", io::to_json(res.test_fixed_points.attracting)},
                                                 {"repelling", io::to_json(res.test_fixed_points.repelling)}};
            j["classical_on_pair"] = res.classical;
            if (res.classical) {
                j["schottky"] = true;
                try {
                    const SchottkySystem sys = restore_marking(pair, lemma3_build_circles(pair, tol), tol);
                    j["verification"] = io::to_json(verify_classical(sys, tol));
                    j["circles"] = io::to_json(sys, tol)["circles"];
                } catch (const Error& e) {
                    j["violation"] = {{"reason", e.what()}};
                }
                code = kPass;
            } else {
                // Not classical on this pair; Schottky-ness is not decided here.
                j["schottky"] = nullptr;
                if (auto cert = theorem4_separation_certificate(a, b, tol)) {
                    j["labeling"] = cert->labeling();
                    j["separation_point"] = io::to_json(cert->separation_point);
                }
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TestElementNotHyperbolic) throw;
            j["schottky"] = false;
            j["classical_on_pair"] = false;
            j["violation"] = {{"reason", e.what()}};
        }
    }
    io::write_text(g.out, dump(j));
    return code;
}

int cmd_build(const Globals& g, int n, int h, const std::string& tlen) {
    std::optional<double> length;
    if (tlen != "auto") {
        try {
            length = std::stod(tlen);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidInput, "--tlen must be a number or 'auto'");
        }
    }
    const SchottkySystem sys = standard_group(n, h, length, g.tol);
    io::write_text(g.out, dump(io::to_json(sys, g.tol)));
    return kPass;
}

io::GroupFile load_group(const std::string& in, const Globals& g) {
    json doc = io::read_json_file(in);
    if (!doc.contains("tol")) doc["tol"] = g.tol;
    // A nonclassical pair file carries its certified group as "witness".
    if (!doc.contains("generators") && doc.contains("witness")) doc = doc.at("witness");
    return io::group_from_json(doc);
}

int cmd_verify(const Globals& g, const std::string& in) {
    const io::GroupFile file = load_group(in, g);
    const Verification v = verify_classical(file.system(), file.tol);
    io::write_text(g.out, dump(io::to_json(v)));
    return passed(v) ? kPass : kNegative;
}

int cmd_boundaries(const Globals& g, const std::string& in) {
    const io::GroupFile file = load_group(in, g);
    const QuotientTopology topo = count_quotient_boundaries(file.system(), file.tol);
    io::write_text(g.out, dump(json{{"rank", topo.rank}, {"genus", topo.genus}, {"boundaries", topo.boundaries}}));
    return kPass;
}

int cmd_limitset(const Globals& g, const std::string& in, int depth) {
    const io::GroupFile file = load_group(in, g);
    io::write_text(g.out, io::limit_set_csv(limit_set_sample(file.system(), depth, file.tol)));
    return kPass;
}

int cmd_nonclassical(const Globals& g, const std::string& tlen) {
    std::optional<double> length;
    if (!tlen.empty()) length = std::stod(tlen);
    const NonclassicalExample ex = nonclassical_pair_example(length, g.tol);
    json j{{"tol", g.tol},
           {"length", ex.length},
           {"pair", json::array({io::to_json(ex.a), io::to_json(ex.ab)})},
           {"witness", io::to_json(ex.witness, g.tol)}};
    io::write_text(g.out, dump(j));
    return kPass;
}

int cmd_classicalize(const Globals& g, const std::string& in, std::size_t budget) {
    const json doc = io::read_json_file(in);
    const double tol = file_tol(doc, g.tol);
    const std::vector<MoebiusMap> gens = load_generators(doc, tol);
    const ClassicalizeResult res = find_classical_generators(gens, budget, g.seed, tol);
    if (const auto* ex = std::get_if<BudgetExhausted>(&res)) {
        io::write_text(g.out, dump(json{{"found", false}, {"visited", ex->visited}}));
        return kBudget;
    }
    const Found& found = std::get<Found>(res);
    json j = io::to_json(found.system, tol);
    j["found"] = true;
    j["visited"] = found.visited;
    j["distance"] = found.path.size();
    j["nielsen_path"] = json::array();
    for (const NielsenMove& m : found.path) j["nielsen_path"].push_back(io::to_json(m));
    j["words"] = json::array();
    for (const Word& w : found.words) j["words"].push_back(w.str());
    j["input_generators"] = json::array();
    for (const MoebiusMap& m : gens) j["input_generators"].push_back(io::to_json(m));
    j["verification"] = io::to_json(verify_classical(found.system, tol));
    io::write_text(g.out, dump(j));
    return kPass;
}

int cmd_render(const Globals& g, const std::string& in, int depth, int width) {
    const io::GroupFile file = load_group(in, g);
    io::write_text(g.out, render_svg(file.system(), RenderOptions{depth, width}, file.tol));
    return kPass;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSchottky:
        case ErrorCode::NotCertified:
            return kNegative;
        default:
            return kInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuchsian Schottky groups: certification, criteria and constructions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--tol", g.tol, "comparison tolerance")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for frame sampling")->capture_default_str();
    app.add_option("--out", g.out, "output file (default stdout)");

    auto* mob = app.add_subcommand("mob", "single Möbius maps")->fallthrough()->require_subcommand(1);
    auto* classify_cmd = mob->add_subcommand("classify", "classify a map")->fallthrough();
    std::string matrix, in, a_arg, b_arg;
    auto* matrix_opt = classify_cmd->add_option("--matrix", matrix, "entries a,b,c,d");
    classify_cmd->add_option("--in", in, "matrix JSON file")->excludes(matrix_opt);

    auto* pair = app.add_subcommand("pair", "two-generator criteria")->fallthrough()->require_subcommand(1);
    auto* pair_test = pair->add_subcommand("test", "decide the case and classicality of a pair")->fallthrough();
    pair_test->add_option("--in", in, "JSON with 'pair' or 'generators'");
    pair_test->add_option("--a", a_arg, "first generator a,b,c,d");
    pair_test->add_option("--b", b_arg, "second generator a,b,c,d");

    int n = 1, h = 1, depth = 4, width = 800;
    std::string tlen = "auto";
    std::size_t budget = 10000;
    auto* build = app.add_subcommand("build", "standard classical group G_{n,h}")->fallthrough();
    build->set_help_flag("--help", "print this help message and exit");
    build->add_option("--n", n, "genus")->required();
    build->add_option("--h", h, "boundary count")->required();
    build->add_option("--tlen", tlen, "translation length or 'auto'")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "check the classical Schottky certificate")->fallthrough();
    verify->add_option("--in", in, "group file")->required();

    auto* boundaries = app.add_subcommand("boundaries", "quotient genus and boundary count")->fallthrough();
    boundaries->add_option("--in", in, "group file")->required();

    auto* limitset = app.add_subcommand("limitset", "nested-circle limit-set samples as CSV")->fallthrough();
    limitset->add_option("--in", in, "group file")->required();
    limitset->add_option("--depth", depth, "word length")->capture_default_str();

    std::string nc_tlen;
    auto* nonclassical = app.add_subcommand("nonclassical", "Schottky pair that is not classical")->fallthrough();
    nonclassical->add_option("--tlen", nc_tlen, "translation length (default 2 ln 10)");

    auto* classicalize = app.add_subcommand("classicalize", "Nielsen search for classical generators")->fallthrough();
    classicalize->add_option("--in", in, "group or pair file")->required();
    classicalize->add_option("--budget", budget, "tuples to examine")->capture_default_str();

    int render_depth = 0;
    auto* render = app.add_subcommand("render", "SVG picture of a group file")->fallthrough();
    render->add_option("--in", in, "group file")->required();
    render->add_option("--depth", render_depth, "limit-set depth")->capture_default_str();
    render->add_option("--width", width, "width in pixels")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kInputError;
    }

    try {
        if (*classify_cmd) {
            if (matrix.empty() && in.empty()) throw Error(ErrorCode::InvalidInput, "give --matrix or --in");
            return cmd_classify(g, matrix, in);
        }
        if (*pair_test) {
            if (in.empty() && (a_arg.empty() || b_arg.empty())) {
                throw Error(ErrorCode::InvalidInput, "give --in or both --a and --b");
            }
            return cmd_pair_test(g, in, a_arg, b_arg);
        }
        if (*build) return cmd_build(g, n, h, tlen);
        if (*verify) return cmd_verify(g, in);
        if (*boundaries) return cmd_boundaries(g, in);
        if (*limitset) return cmd_limitset(g, in, depth);
        if (*nonclassical) return cmd_nonclassical(g, nc_tlen);
        if (*classicalize) return cmd_classicalize(g, in, budget);
        if (*render) return cmd_render(g, in, render_depth, width);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
