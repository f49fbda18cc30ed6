#include <doctest.h>

#include <algorithm>

#include "fjl/render.hpp"

using namespace fjl;

namespace {
const Construction C;

int count_class(const Scene& s, ShapeClass cls) {
    int n = 0;
    for (const Shape& sh : s.shapes) n += sh.cls == cls ? 1 : 0;
    return n;
}
}  // namespace

TEST_CASE("overview: the figure-wide viewport") {
    Scene s = render_overview(C, QBox(Rat(-3), Rat(9), Rat(-3), Rat(5)));
    // P columns j = -2..4, rows k = -2..2; Q fills j = 1..9 reach into x <= 9
    CHECK(count_class(s, ShapeClass::POutline) == 35);
    CHECK(count_class(s, ShapeClass::Q3Fill) == 9);
    for (const Shape& sh : s.shapes)
        CHECK(boxes_intersect(box_of_rect(sh.rect), s.viewport));
}

TEST_CASE("overview: small viewport picks up boundary-touching neighbours") {
    Scene s = render_overview(C, QBox(Rat(0), Rat(2), Rat(0), Rat(2)));
    CHECK(count_class(s, ShapeClass::POutline) == 1);  // P(0,0)
    CHECK(count_class(s, ShapeClass::Q3Fill) == 2);    // Q_1^3 plus touching Q_2^3
    CHECK(s.shapes.size() == 3);
}

TEST_CASE("overview: a gap viewport holds no squares") {
    // the sliver between P(-4,0) and P(-3,0) around re z = -6
    QBox gap(Rat(-6) - Rat::pow2(-10), Rat(-6) + Rat::pow2(-10), Rat(2, 5), Rat(3, 5));
    Scene s = render_overview(C, gap);
    CHECK(s.shapes.empty());
}

TEST_CASE("overview: no filled Q^3 intersects any P outline") {
    Scene s = render_overview(C, QBox(Rat(-3), Rat(9), Rat(-3), Rat(5)));
    for (const Shape& a : s.shapes) {
        if (a.cls != ShapeClass::Q3Fill) continue;
        for (const Shape& b : s.shapes) {
            if (b.cls != ShapeClass::POutline) continue;
            CHECK(rect_separation(a.rect, b.rect) > Rat(0));
        }
    }
}

TEST_CASE("overview rejects a degenerate viewport") {
    CHECK_THROWS_AS(render_overview(C, QBox(Rat(1), Rat(1), Rat(0), Rat(2))),
                    std::domain_error);
}

TEST_CASE("zoom scene: 51 shapes, faithful geometry") {
    Scene s = render_q_zoom(C, 1);
    CHECK(s.shapes.size() == 51);
    CHECK(count_class(s, ShapeClass::R3Outline) == 16);
    CHECK(count_class(s, ShapeClass::R2Outline) == 16);
    CHECK(count_class(s, ShapeClass::R1Outline) == 16);
    CHECK(s.metadata["faithful"] == true);
    CHECK(s.metadata["exaggerate_effective"] == "1");

    // scene geometry equals the construction's geometry exactly
    CHECK(s.shapes[0].rect == C.square_Q(1, 2));
    CHECK(s.shapes[1].rect == C.square_Q(1, 1));
    CHECK(s.shapes[2].rect == C.square_Q(1, 3));

    // inset-to-side ratio before exaggeration: delta_1 / (2 * 1/8) = 1/64
    Rat inset = C.square_Q(1, 3).half_side - C.square_Q(1, 2).half_side;
    CHECK(inset / (Rat(2) * C.square_Q(1, 3).half_side) == Rat(1, 256) / Rat(1, 4));
}

TEST_CASE("zoom exaggeration scales insets and is clamped with metadata") {
    Scene s8 = render_q_zoom(C, 1, Rat(8));
    CHECK(s8.metadata["exaggerate_requested"] == "8");
    CHECK(s8.metadata["exaggerate_effective"] == "2");  // clamp at 2^j
    CHECK(s8.metadata["faithful"] == false);

    Scene s2 = render_q_zoom(C, 1, Rat(2));
    Rat inset = C.square_Q(1, 3).half_side - s2.shapes[0].rect.half_side;
    CHECK(inset == Rat(2) * C.delta(1));
    // every shape stays a valid square
    CHECK(s2.shapes.size() == 51);
}

TEST_CASE("tree scene: root plus level fills, with the cap guard") {
    Scene d1 = render_tree(C, 1);
    CHECK(d1.shapes.size() == 2);  // root outline + the root fill

    Scene d3 = render_tree(C, 3);
    CHECK(count_class(d3, ShapeClass::TreeFill) == 256);
    QRect root = d3.shapes.front().rect;
    for (const Shape& sh : d3.shapes)
        CHECK(rect_contains(root, sh.rect).contained);

    CHECK_THROWS_AS(render_tree(C, 8), std::length_error);
}

TEST_CASE("SVG output is deterministic and structurally sound") {
    Scene s = render_q_zoom(C, 1);
    std::string a = scene_to_svg(s, 12, 720);
    std::string b = scene_to_svg(render_q_zoom(C, 1), 12, 720);
    CHECK(a == b);
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(a.find("<svg xmlns") != std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("q2-fill") != std::string::npos);
    CHECK(a.find("r1-outline") != std::string::npos);
    CHECK(a.find("exaggerate_effective") != std::string::npos);

    // precision changes the emitted coordinates, not the structure (a width
    // of 700 puts the pixel scale off the dyadic grid)
    std::string coarse = scene_to_svg(s, 4, 700);
    std::string fine = scene_to_svg(s, 12, 700);
    CHECK(coarse != fine);
    CHECK(std::count(coarse.begin(), coarse.end(), '\n') ==
          std::count(fine.begin(), fine.end(), '\n'));
}

TEST_CASE("PPM output: header, size, determinism, expected colours") {
    Scene s = render_q_zoom(C, 1, Rat(2));
    std::string ppm = scene_to_ppm(s, 128);
    CHECK(ppm.rfind("P6\n", 0) == 0);
    CHECK(ppm == scene_to_ppm(render_q_zoom(C, 1, Rat(2)), 128));

    size_t hdr_end = ppm.find("255\n") + 4;
    std::string dims = ppm.substr(3, ppm.find('\n', 3) - 3);
    CHECK(dims.substr(0, dims.find(' ')) == "128");

    // greys 0xB0 (Q^2) and 0x80 (Q^1) and white background all present
    bool has_b0 = false, has_80 = false, has_ff = false;
    for (size_t i = hdr_end; i + 2 < ppm.size(); i += 3) {
        unsigned char r = static_cast<unsigned char>(ppm[i]);
        unsigned char g = static_cast<unsigned char>(ppm[i + 1]);
        unsigned char b2 = static_cast<unsigned char>(ppm[i + 2]);
        if (r == 0xB0 && g == 0xB0 && b2 == 0xB0) has_b0 = true;
        if (r == 0x80 && g == 0x80 && b2 == 0x80) has_80 = true;
        if (r == 0xFF && g == 0xFF && b2 == 0xFF) has_ff = true;
    }
    CHECK(has_b0);
    CHECK(has_80);
    CHECK(has_ff);
}
