#pragma once

#include <string>

#include "schottky/schottky_system.hpp"

namespace schottky {

struct RenderOptions {
    int depth = 0;        // limit-set dots for words of exactly this length
    int width_px = 800;
};

/// Affine map from the real axis to SVG user space: X = (x - x0)·scale,
/// Y = baseline - y·scale. Recorded on the <svg> element as data-* attributes.
struct Viewport {
    double x0 = 0.0;
    double scale = 1.0;
    double baseline = 0.0;
    int width = 0;
    int height = 0;

    double to_svg_x(double x) const { return (x - x0) * scale; }
    double from_svg_x(double px) const { return px / scale + x0; }
};

/// Fits the hull of all circles with a 10% margin on each side.
Viewport fit_viewport(const SchottkySystem& sys, int width_px);

/// SVG drawing of the upper half-plane picture: the real axis, one semicircle
/// per circle (paired circles share a color, circles of a violating pair are
/// red), one dashed arc per generator axis, and limit-set dots when the
/// system certifies. Output is byte-stable. Throws EmptySystem.
std::string render_svg(const SchottkySystem& sys, const RenderOptions& options,
                       double tol = kDefaultTol);

}  // namespace schottky
