#include "fjl/render.hpp"

#include <algorithm>
#include <sstream>

#include "fjl/tree.hpp"

namespace fjl {

namespace {

long long clamp_ll(const mpz_class& z, long long lo, long long hi) {
    if (!z.fits_slong_p()) return z < 0 ? lo : hi;
    long long v = z.get_si();
    return v < lo ? lo : v > hi ? hi : v;
}

const char* class_name(ShapeClass c) {
    switch (c) {
        case ShapeClass::POutline:    return "p-outline";
        case ShapeClass::Q3Fill:      return "q3-fill";
        case ShapeClass::Q3Outline:   return "q3-outline";
        case ShapeClass::Q2Fill:      return "q2-fill";
        case ShapeClass::Q1Fill:      return "q1-fill";
        case ShapeClass::R3Outline:   return "r3-outline";
        case ShapeClass::R2Outline:   return "r2-outline";
        case ShapeClass::R1Outline:   return "r1-outline";
        case ShapeClass::TreeFill:    return "tree-fill";
        case ShapeClass::RootOutline: return "root-outline";
    }
    return "unknown";
}

void require_viewport(const QBox& v) {
    if (v.width().sign() <= 0 || v.height().sign() <= 0)
        throw std::domain_error("render: degenerate viewport");
}

}  // namespace

Scene render_overview(const Construction& c, const QBox& viewport) {
    require_viewport(viewport);

    Scene scene;
    scene.viewport = viewport;
    scene.metadata = nlohmann::json{{"figure", "overview"}};

    // Candidate lattice cells: P_{j,k} sits inside S_{j,k} = [2j,2j+2]x[2k,2k+2].
    long long j_lo = clamp_ll((viewport.x_lo() / Rat(2)).floor() - 1, -(1LL << 40), 1LL << 40);
    long long j_hi = clamp_ll((viewport.x_hi() / Rat(2)).ceil() + 1, -(1LL << 40), 1LL << 40);
    long long k_lo = clamp_ll((viewport.y_lo() / Rat(2)).floor() - 1, -(1LL << 40), 1LL << 40);
    long long k_hi = clamp_ll((viewport.y_hi() / Rat(2)).ceil() + 1, -(1LL << 40), 1LL << 40);
    for (long long j = j_lo; j <= j_hi; ++j)
        for (long long k = k_lo; k <= k_hi; ++k) {
            QRect p = c.square_P(j, k);
            if (boxes_intersect(box_of_rect(p), viewport))
                scene.shapes.push_back({p, ShapeClass::POutline, 0});
        }

    long long q_lo = std::max(1LL, clamp_ll(viewport.x_lo().floor() - 1, 1, 1LL << 40));
    long long q_hi = clamp_ll(viewport.x_hi().ceil() + 1, 1, 1LL << 40);
    for (long long j = q_lo; j <= q_hi; ++j) {
        QRect q = c.square_Q(static_cast<int>(j), 3);
        if (boxes_intersect(box_of_rect(q), viewport))
            scene.shapes.push_back({q, ShapeClass::Q3Fill, 1});
    }
    return scene;
}

Scene render_q_zoom(const Construction& c, int j, const Rat& exaggerate) {
    if (j < 1) throw std::domain_error("render_q_zoom: j must be >= 1");
    if (exaggerate.sign() <= 0)
        throw std::domain_error("render_q_zoom: exaggeration must be positive");

    // Clamp so the narrowest inset square, R^1, keeps at least half of its
    // cell's half-side; at the cap the inset ratios stay 1:2:4.
    Rat cap = Rat::pow2(j);
    Rat effective = min(exaggerate, cap);
    ConstructionParams params = c.params();
    params.delta_scale = params.delta_scale * effective;
    Construction view(params);

    Scene scene;
    QRect q3 = view.square_Q(j, 3);
    scene.viewport = box_inflate(box_of_rect(q3), q3.half_side / Rat(8));
    scene.metadata = nlohmann::json{
        {"figure", "q_zoom"},
        {"j", j},
        {"exaggerate_requested", exaggerate.str()},
        {"exaggerate_effective", effective.str()},
        {"faithful", effective == Rat(1)},
    };

    scene.shapes.push_back({view.square_Q(j, 2), ShapeClass::Q2Fill, 1});
    scene.shapes.push_back({view.square_Q(j, 1), ShapeClass::Q1Fill, 1});
    scene.shapes.push_back({q3, ShapeClass::Q3Outline, 2});
    for (int l = 1; l <= 16; ++l)
        scene.shapes.push_back({view.square_R(j, l, 3), ShapeClass::R3Outline, 2});
    for (int l = 1; l <= 16; ++l)
        scene.shapes.push_back({view.square_R(j, l, 2), ShapeClass::R2Outline, 2});
    for (int l = 1; l <= 16; ++l)
        scene.shapes.push_back({view.square_R(j, l, 1), ShapeClass::R1Outline, 2});
    return scene;
}

Scene render_tree(const Construction& c, int depth, long long cap) {
    std::vector<TreeNode> nodes = enumerate_level(c, depth, cap);

    Scene scene;
    QRect root = tree_root(c).rect;
    scene.viewport = box_inflate(box_of_rect(root), root.half_side / Rat(8));
    scene.metadata = nlohmann::json{{"figure", "tree"}, {"depth", depth}};

    scene.shapes.push_back({root, ShapeClass::RootOutline, 0});
    for (const TreeNode& n : nodes)
        scene.shapes.push_back({n.rect, ShapeClass::TreeFill, 3});
    return scene;
}

std::string scene_to_svg(const Scene& scene, int sig_digits, int px_width) {
    if (px_width < 16) throw std::domain_error("scene_to_svg: width too small");
    const QBox& v = scene.viewport;
    Rat k = Rat(px_width) / v.width();
    long long px_height = clamp_ll((v.height() * k).round_nearest(), 1, 1 << 20);

    std::vector<Shape> shapes = scene.shapes;
    std::stable_sort(shapes.begin(), shapes.end(),
                     [](const Shape& a, const Shape& b) { return a.layer < b.layer; });

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_width
        << "\" height=\"" << px_height << "\" viewBox=\"0 0 " << px_width << " "
        << px_height << "\">\n"
        << "<metadata>" << scene.metadata.dump() << "</metadata>\n"
        << "<style>\n"
           "rect { shape-rendering: crispEdges; }\n"
           ".bg { fill: #ffffff; }\n"
           ".p-outline { fill: none; stroke: #000000; stroke-width: 1.5; }\n"
           ".q3-fill { fill: #000000; }\n"
           ".q3-outline { fill: none; stroke: #000000; stroke-width: 2; }\n"
           ".q2-fill { fill: #b0b0b0; }\n"
           ".q1-fill { fill: #808080; }\n"
           ".r3-outline { fill: none; stroke: #000000; stroke-width: 1.5; }\n"
           ".r2-outline { fill: none; stroke: #000000; stroke-width: 1.2; "
           "stroke-dasharray: 6 4; }\n"
           ".r1-outline { fill: none; stroke: #000000; stroke-width: 1; "
           "stroke-dasharray: 1.5 3; }\n"
           ".tree-fill { fill: #808080; }\n"
           ".root-outline { fill: none; stroke: #000000; stroke-width: 1.5; }\n"
           "</style>\n"
        << "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"" << px_width << "\" height=\""
        << px_height << "\"/>\n";

    for (const Shape& s : shapes) {
        QBox b = box_of_rect(s.rect);
        Rat x = (b.x_lo() - v.x_lo()) * k;
        Rat y = (v.y_hi() - b.y_hi()) * k;  // SVG y grows downward
        Rat side = b.width() * k;
        svg << "<rect class=\"" << class_name(s.cls) << "\" x=\"" << x.decimal(sig_digits)
            << "\" y=\"" << y.decimal(sig_digits) << "\" width=\"" << side.decimal(sig_digits)
            << "\" height=\"" << (b.height() * k).decimal(sig_digits) << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

namespace {

struct Rgb {
    unsigned char r, g, b;
};

Rgb class_color(ShapeClass c) {
    switch (c) {
        case ShapeClass::Q2Fill:   return {0xB0, 0xB0, 0xB0};
        case ShapeClass::Q1Fill:   return {0x80, 0x80, 0x80};
        case ShapeClass::TreeFill: return {0x80, 0x80, 0x80};
        case ShapeClass::R2Outline: return {0x40, 0x40, 0x40};
        case ShapeClass::R1Outline: return {0x60, 0x60, 0x60};
        default: return {0x00, 0x00, 0x00};
    }
}

bool is_fill(ShapeClass c) {
    return c == ShapeClass::Q3Fill || c == ShapeClass::Q2Fill ||
           c == ShapeClass::Q1Fill || c == ShapeClass::TreeFill;
}

}  // namespace

std::string scene_to_ppm(const Scene& scene, int px_width) {
    if (px_width < 8) throw std::domain_error("scene_to_ppm: width too small");
    const QBox& v = scene.viewport;
    long long W = px_width;
    long long H = clamp_ll((Rat(px_width) * v.height() / v.width()).round_nearest(), 1,
                           1 << 14);

    std::vector<unsigned char> pix(static_cast<size_t>(W * H * 3), 0xFF);
    auto put = [&](long long x, long long y, Rgb col) {
        if (x < 0 || x >= W || y < 0 || y >= H) return;
        size_t i = static_cast<size_t>((y * W + x) * 3);
        pix[i] = col.r;
        pix[i + 1] = col.g;
        pix[i + 2] = col.b;
    };
    auto col_of = [&](const Rat& x) {
        return clamp_ll(((x - v.x_lo()) * Rat(W) / v.width()).floor(), 0, W - 1);
    };
    auto row_of = [&](const Rat& y) {
        return clamp_ll(((v.y_hi() - y) * Rat(H) / v.height()).floor(), 0, H - 1);
    };

    std::vector<Shape> shapes = scene.shapes;
    std::stable_sort(shapes.begin(), shapes.end(),
                     [](const Shape& a, const Shape& b) { return a.layer < b.layer; });

    for (const Shape& s : shapes) {
        QBox b = box_of_rect(s.rect);
        long long x0 = col_of(b.x_lo()), x1 = col_of(b.x_hi());
        long long y0 = row_of(b.y_hi()), y1 = row_of(b.y_lo());
        Rgb col = class_color(s.cls);
        if (is_fill(s.cls)) {
            for (long long y = y0; y <= y1; ++y)
                for (long long x = x0; x <= x1; ++x) put(x, y, col);
        } else {
            for (long long x = x0; x <= x1; ++x) {
                put(x, y0, col);
                put(x, y1, col);
            }
            for (long long y = y0; y <= y1; ++y) {
                put(x0, y, col);
                put(x1, y, col);
            }
        }
    }

    std::ostringstream out;
    out << "P6\n" << W << " " << H << "\n255\n";
    out.write(reinterpret_cast<const char*>(pix.data()), static_cast<std::streamsize>(pix.size()));
    return out.str();
}

}  // namespace fjl
