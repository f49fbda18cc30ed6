#pragma once

// Figure generation: the overview of P and Q^3 squares, the zoom into one
// Q square with its 16 R cells, and tree levels. Scenes hold exact geometry;
// floating point never enters, coordinates are serialized as decimals of the
// exact rationals at a configurable precision. Rendering feeds nothing back
// into certified computations.

#include <string>
#include <vector>

#include "fjl/geometry.hpp"

namespace fjl {

enum class ShapeClass {
    POutline,
    Q3Fill,
    Q3Outline,
    Q2Fill,
    Q1Fill,
    R3Outline,
    R2Outline,
    R1Outline,
    TreeFill,
    RootOutline,
};

struct Shape {
    QRect rect;
    ShapeClass cls;
    int layer;  // drawn in ascending order: P outlines, Q fills, R outlines, tree fills
};

struct Scene {
    QBox viewport;
    std::vector<Shape> shapes;
    nlohmann::json metadata;

    Scene() : viewport(Rat(0), Rat(1), Rat(0), Rat(1)) {}
};

// All P outlines and filled Q^3 squares meeting the viewport (closed-set
// intersection).
Scene render_overview(const Construction& c, const QBox& viewport);

// One Q square with its nested fills and the 4x4 grid of R squares: 3 Q
// shapes plus 16 each of R^3/R^2/R^1. `exaggerate` scales the delta-derived
// insets for legibility; it is clamped to 2^j so no square collapses, and
// both the requested and effective factors land in the metadata.
Scene render_q_zoom(const Construction& c, int j, const Rat& exaggerate = Rat(1));

// The root square R_{1,1}^1 and all depth-level node rects.
Scene render_tree(const Construction& c, int depth, long long cap = 1000000);

// Deterministic SVG 1.1; byte-identical for identical scenes and options.
std::string scene_to_svg(const Scene& scene, int sig_digits = 12, int px_width = 720);

// Deterministic binary PPM (P6, 8-bit): white background, black Q^3 fills,
// greys 0xB0 / 0x80 for Q^2 / Q^1.
std::string scene_to_ppm(const Scene& scene, int px_width = 256);

}  // namespace fjl
