#include "schottky/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace schottky::io {

namespace {

double number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw Error(ErrorCode::InvalidInput, std::string("missing numeric field '") + key + "'");
    }
    return j.at(key).get<double>();
}

}  // namespace

json to_json(const MoebiusMap& m) { return {{"a", m.a()}, {"b", m.b()}, {"c", m.c()}, {"d", m.d()}}; }

MoebiusMap matrix_from_json(const json& j, double tol) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "matrix must be an object");
    return MoebiusMap::normalize(number(j, "a"), number(j, "b"), number(j, "c"), number(j, "d"), tol);
}

json to_json(const BoundaryPoint& p) {
    if (p.is_infinity()) return "inf";
    return p.value();
}

BoundaryPoint point_from_json(const json& j) {
    if (j.is_number()) return BoundaryPoint::real(j.get<double>());
    if (j.is_string() && j.get<std::string>() == "inf") return BoundaryPoint::infinity();
    throw Error(ErrorCode::InvalidInput, "boundary point must be a number or \"inf\"");
}

json to_json(const CircleOnAxis& c) { return {{"center", c.center()}, {"radius", c.radius()}}; }

CircleOnAxis circle_from_json(const json& j, double tol) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "circle must be an object");
    return CircleOnAxis(number(j, "center"), number(j, "radius"), tol);
}

SchottkySystem GroupFile::system() const {
    if (!pairs) throw Error(ErrorCode::InvalidInput, "group file has no circles");
    return SchottkySystem{generators, *pairs};
}

json to_json(const SchottkySystem& sys, double tol) {
    json gens = json::array();
    for (const MoebiusMap& g : sys.generators) gens.push_back(to_json(g));
    json circles = json::array();
    for (const CirclePair& p : sys.pairs) {
        circles.push_back(to_json(p.source));
        circles.push_back(to_json(p.target));
    }
    return {{"tol", tol}, {"generators", gens}, {"circles", circles}};
}

GroupFile group_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "group file must be an object");
    GroupFile out;
    if (j.contains("tol")) out.tol = number(j, "tol");
    if (!j.contains("generators") || !j.at("generators").is_array()) {
        throw Error(ErrorCode::InvalidInput, "group file needs a 'generators' array");
    }
    for (const json& g : j.at("generators")) out.generators.push_back(matrix_from_json(g, out.tol));
    if (j.contains("circles")) {
        const json& cs = j.at("circles");
        if (!cs.is_array() || cs.size() != 2 * out.generators.size()) {
            throw Error(ErrorCode::InvalidInput, "'circles' must hold two circles per generator");
        }
        std::vector<CirclePair> pairs;
        for (std::size_t i = 0; i < out.generators.size(); ++i) {
            pairs.push_back({circle_from_json(cs[2 * i], out.tol), circle_from_json(cs[2 * i + 1], out.tol)});
        }
        out.pairs = std::move(pairs);
    }
    return out;
}

json to_json(const Certificate& c) {
    return {{"margin", c.margin}, {"pairing_residual", c.pairing_residual}};
}

json to_json(const Violation& v) {
    return {{"kind", std::string(to_string(v.kind))}, {"index", v.index + 1}, {"detail", v.detail}};
}

json to_json(const Verification& v) {
    if (const auto* c = std::get_if<Certificate>(&v)) return {{"pass", true}, {"certificate", to_json(*c)}};
    return {{"pass", false}, {"violation", to_json(std::get<Violation>(v))}};
}

json to_json(const NielsenMove& m) {
    static constexpr const char* kNames[] = {"invert", "swap", "multiply_right", "multiply_left"};
    return {{"type", kNames[static_cast<int>(m.type)]},
            {"i", m.i + 1},
            {"j", m.j + 1},
            {"exponent", m.exponent},
            {"text", m.str()}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    out << text;
}

std::string format_real(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string limit_set_csv(const std::vector<LimitSample>& samples) {
    std::ostringstream out;
    out << "word,point,center,radius\n";
    for (const LimitSample& s : samples) {
        out << s.word.str() << ',' << format_real(s.point.value()) << ',' << format_real(s.circle.center())
            << ',' << format_real(s.circle.radius()) << '\n';
    }
    return out.str();
}

}  // namespace schottky::io
