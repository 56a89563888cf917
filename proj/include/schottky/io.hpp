#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schottky/classicalize.hpp"
#include "schottky/halfplane.hpp"
#include "schottky/moebius.hpp"
#include "schottky/schottky_system.hpp"

namespace schottky::io {

using nlohmann::json;

json to_json(const MoebiusMap& m);
/// Accepts any positive-determinant matrix and stores it normalized.
MoebiusMap matrix_from_json(const json& j, double tol = kDefaultTol);

/// A real number, or the string "inf".
json to_json(const BoundaryPoint& p);
BoundaryPoint point_from_json(const json& j);

json to_json(const CircleOnAxis& c);
CircleOnAxis circle_from_json(const json& j, double tol = kDefaultTol);

/// Group file: {"tol":..,"generators":[..],"circles":[C_1, C'_1, C_2, C'_2, ..]}.
/// "circles" may be absent when only the generators are known.
struct GroupFile {
    double tol = kDefaultTol;
    std::vector<MoebiusMap> generators;
    std::optional<std::vector<CirclePair>> pairs;

    SchottkySystem system() const;  // throws InvalidInput without circles
};

json to_json(const SchottkySystem& sys, double tol);
GroupFile group_from_json(const json& j);

json to_json(const Certificate& c);
json to_json(const Violation& v);
json to_json(const Verification& v);
json to_json(const NielsenMove& m);

/// Reads a JSON document; throws InvalidInput on unreadable files or bad syntax.
json read_json_file(const std::string& path);
/// Writes `text` to `path`, or to stdout when `path` is empty.
void write_text(const std::string& path, const std::string& text);

/// CSV rows "word,point,center,radius" with a header line.
std::string limit_set_csv(const std::vector<LimitSample>& samples);

/// Shortest round-trip decimal form of a double.
std::string format_real(double x);

}  // namespace schottky::io
