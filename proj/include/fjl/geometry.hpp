#pragma once

// The square families and affine maps of the construction, built exactly.
//
// The plane is tiled by unit-lattice squares S_{j,k} (center (2j+1, 2k+1),
// half-side 1) holding slightly smaller squares P_{j,k} (half-side
// 1 - 2^{-|j|-|k|-1}). Along the positive real axis, each integer j >= 1
// carries three nested squares Q_j^1 c Q_j^2 c Q_j^3 centered at (j, 0) with
// half-sides 2^{-j-2} - {2,1,0}*delta_j, where delta_j = 2^{-2j-6}. Q_j^3 is
// divided into a 4x4 grid of cells R_{j,l}^3, each holding inset squares
// R_{j,l}^2 and R_{j,l}^1. phi_{j,l} is the rotation-free similarity taking
// R_{j,l}^1 onto Q_{j+1}^2.

#include <string>

#include "fjl/rat.hpp"

namespace fjl {

// Closed axis-aligned square: center plus positive half-side. Membership is
// closed (<= on every bound).
struct QRect {
    QPoint center;
    Rat half_side;

    QRect(QPoint c, Rat h) : center(std::move(c)), half_side(std::move(h)) {
        if (half_side.sign() <= 0)
            throw std::domain_error("QRect: non-positive half-side");
    }

    friend bool operator==(const QRect&, const QRect&) = default;
};

std::ostream& operator<<(std::ostream& os, const QRect& s);
void to_json(nlohmann::json& j, const QRect& s);

QBox box_of_rect(const QRect& s);
Rat rect_area(const QRect& s);  // (2 * half_side)^2

struct Containment {
    bool contained;  // closed semantics: touching counts
    Rat margin;      // min over the four sides; negative iff not contained
};

Containment rect_contains(const QRect& outer, const QRect& inner);

// Positive iff the closed squares are disjoint (see box_separation).
Rat rect_separation(const QRect& a, const QRect& b);

// Rotation-free similarity z |-> scale*z + offset with scale > 0. Maps
// axis-aligned squares to axis-aligned squares.
struct AffineMap {
    Rat scale;
    QPoint offset;

    AffineMap(Rat s, QPoint o) : scale(std::move(s)), offset(std::move(o)) {
        if (scale.sign() <= 0)
            throw std::domain_error("AffineMap: non-positive scale");
    }
    static AffineMap identity() { return AffineMap(Rat(1), {Rat(0), Rat(0)}); }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

QPoint affine_apply(const AffineMap& m, const QPoint& z);
QBox affine_apply(const AffineMap& m, const QBox& b);
QRect affine_apply(const AffineMap& m, const QRect& s);
QRect affine_preimage(const AffineMap& m, const QRect& s);
QPoint affine_preimage(const AffineMap& m, const QPoint& z);
AffineMap affine_compose(const AffineMap& outer, const AffineMap& inner);
AffineMap affine_inverse(const AffineMap& m);

// Where a point sits in the partition the model map is defined on.
enum class Region { P, R2, Q3Gap, Complement };

struct RegionTag {
    Region region = Region::Complement;
    long long j = 0;          // P: lattice j; R2/Q3Gap: Q index
    long long k = 0;          // P only
    int l = 0;                // R2 only, cell index 1..16
    bool in_r1 = false;       // R2 only
    bool on_boundary = false; // on the boundary of the tagged square

    friend bool operator==(const RegionTag&, const RegionTag&) = default;

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const RegionTag& t);

// Constants the construction is built from. Defaults are the real values;
// the verifier's mutation tests and the renderer's inset exaggeration swap
// in altered copies.
struct ConstructionParams {
    long delta_slope = -2;    // delta_j = delta_scale * 2^(delta_slope*j + delta_offset)
    long delta_offset = -6;
    Rat delta_scale = Rat(1);
    int r1_inset_factor = 4;  // R^1 side inset, in units of delta_j
    int phi_target_level = 2; // phi_{j,l} maps R_{j,l}^1 onto Q_{j+1}^{this}

    friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

class Construction {
public:
    Construction() = default;
    explicit Construction(ConstructionParams p) : p_(std::move(p)) {}

    const ConstructionParams& params() const { return p_; }

    // delta_j = 2^{-2j-6} (under default params); j >= 1.
    Rat delta(int j) const;

    // P_{j,k}: center (2j+1, 2k+1), half-side 1 - 2^{-|j|-|k|-1}.
    QRect square_P(long long j, long long k) const;

    // S_{j,k}: center (2j+1, 2k+1), half-side 1.
    QRect square_S(long long j, long long k) const;

    // Q_j^level: center (j, 0), half-side 2^{-j-2} - {2,1,0}*delta_j.
    QRect square_Q(int j, int level) const;

    // R_{j,l}^level: cell l of the 4x4 subdivision of Q_j^3, numbered
    // row-major from the top-left; levels 2 and 1 share its center with the
    // side reduced by 2*delta_j and r1_inset_factor*delta_j.
    QRect square_R(int j, int l, int level) const;

    // The similarity mapping R_{j,l}^1 onto Q_{j+1}^2 without rotation.
    AffineMap phi(int j, int l) const;

    // phi's expansion factor; independent of l.
    Rat scale(int j) const;

    // Product of scale(1..depth); scale_product(0) = 1.
    Rat scale_product(int depth) const;

    // Exact closed-set classification with boundary flag. Inside Q_j^3 the
    // R^2 squares take precedence over the gap tag.
    RegionTag locate(const QPoint& z) const;

private:
    ConstructionParams p_;
};

}  // namespace fjl
