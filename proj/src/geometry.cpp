#include "fjl/geometry.hpp"

#include <ostream>

namespace fjl {

std::ostream& operator<<(std::ostream& os, const QRect& s) {
    return os << "square(center " << s.center << ", half " << s.half_side << ")";
}

void to_json(nlohmann::json& j, const QRect& s) {
    j = nlohmann::json{{"cx", s.center.x}, {"cy", s.center.y}, {"half", s.half_side}};
}

QBox box_of_rect(const QRect& s) {
    return QBox(s.center.x - s.half_side, s.center.x + s.half_side,
                s.center.y - s.half_side, s.center.y + s.half_side);
}

Rat rect_area(const QRect& s) {
    Rat side = Rat(2) * s.half_side;
    return side * side;
}

Containment rect_contains(const QRect& outer, const QRect& inner) {
    Rat m = box_margin(box_of_rect(outer), box_of_rect(inner));
    return {m.sign() >= 0, m};
}

Rat rect_separation(const QRect& a, const QRect& b) {
    return box_separation(box_of_rect(a), box_of_rect(b));
}

QPoint affine_apply(const AffineMap& m, const QPoint& z) {
    return {m.scale * z.x + m.offset.x, m.scale * z.y + m.offset.y};
}

QBox affine_apply(const AffineMap& m, const QBox& b) {
    return QBox(m.scale * b.x_lo() + m.offset.x, m.scale * b.x_hi() + m.offset.x,
                m.scale * b.y_lo() + m.offset.y, m.scale * b.y_hi() + m.offset.y);
}

QRect affine_apply(const AffineMap& m, const QRect& s) {
    return QRect(affine_apply(m, s.center), m.scale * s.half_side);
}

QRect affine_preimage(const AffineMap& m, const QRect& s) {
    return QRect(affine_preimage(m, s.center), s.half_side / m.scale);
}

QPoint affine_preimage(const AffineMap& m, const QPoint& z) {
    return {(z.x - m.offset.x) / m.scale, (z.y - m.offset.y) / m.scale};
}

AffineMap affine_compose(const AffineMap& outer, const AffineMap& inner) {
    return AffineMap(outer.scale * inner.scale,
                     affine_apply(outer, inner.offset));
}

AffineMap affine_inverse(const AffineMap& m) {
    Rat inv = Rat(1) / m.scale;
    return AffineMap(inv, {-(inv * m.offset.x), -(inv * m.offset.y)});
}

std::string RegionTag::str() const {
    std::string s;
    switch (region) {
        case Region::P:
            s = "P(" + std::to_string(j) + "," + std::to_string(k) + ")";
            break;
        case Region::R2:
            s = "R2(" + std::to_string(j) + "," + std::to_string(l) + ")";
            if (in_r1) s += "+R1";
            break;
        case Region::Q3Gap:
            s = "Q3gap(" + std::to_string(j) + ")";
            break;
        case Region::Complement:
            s = "outside";
            break;
    }
    if (on_boundary) s += "@boundary";
    return s;
}

std::ostream& operator<<(std::ostream& os, const RegionTag& t) { return os << t.str(); }

Rat Construction::delta(int j) const {
    if (j < 1) throw std::domain_error("delta: j must be >= 1");
    return p_.delta_scale * Rat::pow2(p_.delta_slope * j + p_.delta_offset);
}

QRect Construction::square_P(long long j, long long k) const {
    long long aj = j < 0 ? -j : j;
    long long ak = k < 0 ? -k : k;
    Rat half = Rat(1) - Rat::pow2(-(aj + ak + 1));
    return QRect({Rat(2 * j + 1), Rat(2 * k + 1)}, half);
}

QRect Construction::square_S(long long j, long long k) const {
    return QRect({Rat(2 * j + 1), Rat(2 * k + 1)}, Rat(1));
}

QRect Construction::square_Q(int j, int level) const {
    if (j < 1) throw std::domain_error("square_Q: j must be >= 1");
    if (level < 1 || level > 3) throw std::domain_error("square_Q: level must be 1..3");
    Rat half = Rat::pow2(-j - 2) - Rat(3 - level) * delta(j);
    return QRect({Rat(j), Rat(0)}, half);
}

QRect Construction::square_R(int j, int l, int level) const {
    if (j < 1) throw std::domain_error("square_R: j must be >= 1");
    if (l < 1 || l > 16) throw std::domain_error("square_R: l must be 1..16");
    if (level < 1 || level > 3) throw std::domain_error("square_R: level must be 1..3");

    QRect q3 = square_Q(j, 3);
    Rat cell_half = Rat::pow2(-j - 4);
    int row = (l - 1) / 4;  // 0 = top
    int col = (l - 1) % 4;  // 0 = left
    QPoint center{
        q3.center.x - q3.half_side + Rat(2 * col + 1) * cell_half,
        q3.center.y + q3.half_side - Rat(2 * row + 1) * cell_half};

    int side_inset = level == 1 ? p_.r1_inset_factor : level == 2 ? 2 : 0;
    Rat half = cell_half - Rat(side_inset) * delta(j) / Rat(2);
    return QRect(center, half);
}

AffineMap Construction::phi(int j, int l) const {
    QRect src = square_R(j, l, 1);
    QRect dst = square_Q(j + 1, p_.phi_target_level);
    Rat s = dst.half_side / src.half_side;
    return AffineMap(s, dst.center - s * src.center);
}

Rat Construction::scale(int j) const {
    return square_Q(j + 1, p_.phi_target_level).half_side / square_R(j, 1, 1).half_side;
}

Rat Construction::scale_product(int depth) const {
    Rat prod(1);
    for (int m = 1; m <= depth; ++m) prod *= scale(m);
    return prod;
}

namespace {

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("locate: coordinate index out of range");
    return z.get_si();
}

}  // namespace

RegionTag Construction::locate(const QPoint& z) const {
    // Q-square candidate: the nearest integer (half-sides are at most 1/8,
    // so no other index can match).
    long long jq = to_ll(z.x.round_nearest());
    if (jq >= 1) {
        QRect q3 = square_Q(static_cast<int>(jq), 3);
        QBox q3box = box_of_rect(q3);
        Rat q3m = box_point_margin(q3box, z);
        if (q3m.sign() >= 0) {
            // 4x4 cell of z; points on a grid line land in no R^2, so the
            // floored candidate is the only one that can contain z.
            Rat side = Rat::pow2(-static_cast<int>(jq) - 3);
            long long col = to_ll(((z.x - q3box.x_lo()) / side).floor());
            long long row = to_ll(((q3box.y_hi() - z.y) / side).floor());
            col = col < 0 ? 0 : col > 3 ? 3 : col;
            row = row < 0 ? 0 : row > 3 ? 3 : row;
            int l = static_cast<int>(4 * row + col) + 1;

            QRect r2 = square_R(static_cast<int>(jq), l, 2);
            Rat r2m = box_point_margin(box_of_rect(r2), z);
            if (r2m.sign() >= 0) {
                QRect r1 = square_R(static_cast<int>(jq), l, 1);
                Rat r1m = box_point_margin(box_of_rect(r1), z);
                RegionTag t;
                t.region = Region::R2;
                t.j = jq;
                t.l = l;
                t.in_r1 = r1m.sign() >= 0;
                t.on_boundary = t.in_r1 ? r1m.is_zero() : r2m.is_zero();
                return t;
            }
            RegionTag t;
            t.region = Region::Q3Gap;
            t.j = jq;
            t.on_boundary = q3m.is_zero();
            return t;
        }
    }

    // P-square candidate from the lattice cell S_{j,k} containing z. P sits
    // strictly inside its cell, so a single candidate decides membership.
    long long jp = to_ll((z.x / Rat(2)).floor());
    long long kp = to_ll((z.y / Rat(2)).floor());
    QRect p = square_P(jp, kp);
    Rat pm = box_point_margin(box_of_rect(p), z);
    if (pm.sign() >= 0) {
        RegionTag t;
        t.region = Region::P;
        t.j = jp;
        t.k = kp;
        t.on_boundary = pm.is_zero();
        return t;
    }
    return RegionTag{};
}

}  // namespace fjl
