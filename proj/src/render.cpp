#include "schottky/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace schottky {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#17becf", "#8c564b", "#e377c2", "#bcbd22"};
constexpr const char* kViolationColor = "#d62728";

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    // Avoid "-0.000" so equal pictures stay byte-identical.
    if (std::string(buf) == "-0.000") return "0.000";
    return buf;
}

// Round-trip form for the recorded viewport transform.
std::string exact(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void semicircle(std::ostringstream& out, const Viewport& vp, double left, double right,
                const char* cls, const std::string& color, const char* extra) {
    const double x1 = vp.to_svg_x(left);
    const double x2 = vp.to_svg_x(right);
    const double r = 0.5 * (x2 - x1);
    out << "<path class=\"" << cls << "\" d=\"M " << fmt(x1) << ' ' << fmt(vp.baseline) << " A " << fmt(r)
        << ' ' << fmt(r) << " 0 0 1 " << fmt(x2) << ' ' << fmt(vp.baseline) << "\" fill=\"none\" stroke=\""
        << color << "\"" << extra << "/>\n";
}

}  // namespace

Viewport fit_viewport(const SchottkySystem& sys, int width_px) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const CirclePair& p : sys.pairs) {
        for (const CircleOnAxis& c : {p.source, p.target}) {
            lo = std::min(lo, c.left());
            hi = std::max(hi, c.right());
        }
    }
    const double span = hi - lo;
    Viewport vp;
    vp.width = width_px;
    vp.height = width_px / 2;
    vp.scale = width_px / (1.2 * span);
    vp.x0 = lo - 0.1 * span;
    vp.baseline = 0.9 * vp.height;
    return vp;
}

std::string render_svg(const SchottkySystem& sys, const RenderOptions& options, double tol) {
    if (sys.generators.empty() || sys.pairs.size() != sys.generators.size()) {
        throw Error(ErrorCode::EmptySystem, "nothing to render");
    }
    if (options.width_px <= 0 || options.depth < 0) {
        throw Error(ErrorCode::InvalidInput, "width must be positive and depth non-negative");
    }
    const Viewport vp = fit_viewport(sys, options.width_px);
    const Verification check = verify_classical(sys, tol);
    const Violation* bad = std::get_if<Violation>(&check);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << vp.width << "\" height=\"" << vp.height
        << "\" viewBox=\"0 0 " << vp.width << ' ' << vp.height << "\" data-x0=\"" << exact(vp.x0)
        << "\" data-scale=\"" << exact(vp.scale) << "\" data-baseline=\"" << exact(vp.baseline) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line class=\"real-axis\" x1=\"0\" y1=\"" << fmt(vp.baseline) << "\" x2=\"" << vp.width
        << "\" y2=\"" << fmt(vp.baseline) << "\" stroke=\"black\"/>\n";

    for (std::size_t i = 0; i < sys.pairs.size(); ++i) {
        const bool violating = bad != nullptr && bad->index == i;
        const std::string color = violating ? kViolationColor : kPalette[i % std::size(kPalette)];
        for (const CircleOnAxis& c : {sys.pairs[i].source, sys.pairs[i].target}) {
            semicircle(out, vp, c.left(), c.right(), "circle", color, " stroke-width=\"1.5\"");
        }
    }

    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        const std::string color = kPalette[i % std::size(kPalette)];
        if (classify(sys.generators[i], tol) != Kind::Hyperbolic) continue;
        const FixedPoints fp = fixed_points(sys.generators[i], tol);
        if (fp.attracting.is_infinity(tol) || fp.repelling.is_infinity(tol)) {
            const BoundaryPoint& finite = fp.attracting.is_infinity(tol) ? fp.repelling : fp.attracting;
            out << "<path class=\"axis\" d=\"M " << fmt(vp.to_svg_x(finite.value())) << ' ' << fmt(vp.baseline)
                << " V 0\" fill=\"none\" stroke=\"" << color << "\" stroke-dasharray=\"4 3\"/>\n";
            continue;
        }
        const double u = std::min(fp.attracting.value(), fp.repelling.value());
        const double v = std::max(fp.attracting.value(), fp.repelling.value());
        semicircle(out, vp, u, v, "axis", color, " stroke-dasharray=\"4 3\"");
    }

    if (options.depth > 0 && bad == nullptr) {
        for (const LimitSample& s : limit_set_sample(sys, options.depth, tol)) {
            if (static_cast<int>(s.word.size()) != options.depth) continue;
            out << "<circle class=\"limit-point\" cx=\"" << fmt(vp.to_svg_x(s.point.value())) << "\" cy=\""
                << fmt(vp.baseline) << "\" r=\"1.5\" fill=\"black\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace schottky
