#pragma once

// Exact scalar and enclosure arithmetic. Every certified quantity in this
// project is an arbitrary-precision rational; floating point appears only in
// rendering coordinates.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace fjl {

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1 and
// den >= 1. Canonicalized on construction, so equality is structural.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long n, long d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // 2^e, exact for any (practically unbounded) integer exponent.
    static Rat pow2(long e);

    // Accepts "p", "p/q", and plain decimals like "-3.25".
    static Rat from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Exact "p/q" (or "p" when integral).
    std::string str() const;

    // Decimal approximation with `sig` significant digits, round half away
    // from zero; deterministic. Dyadics shorter than `sig` digits print exactly.
    std::string decimal(int sig = 12) const;

    double to_double() const { return v_.get_d(); }  // rendering only

    mpz_class floor() const;
    mpz_class ceil() const;
    mpz_class round_nearest() const;  // ties round up

private:
    mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r);
void to_json(nlohmann::json& j, const Rat& r);

// A point of the plane, identified with the complex number x + iy.
struct QPoint {
    Rat x;
    Rat y;

    friend bool operator==(const QPoint&, const QPoint&) = default;
    friend QPoint operator+(const QPoint& a, const QPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend QPoint operator-(const QPoint& a, const QPoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend QPoint operator*(const Rat& s, const QPoint& p) { return {s * p.x, s * p.y}; }
};

std::ostream& operator<<(std::ostream& os, const QPoint& p);
void to_json(nlohmann::json& j, const QPoint& p);

// Closed axis-aligned rectangle given by its coordinate bounds.
class QBox {
public:
    QBox(Rat x_lo, Rat x_hi, Rat y_lo, Rat y_hi)
        : x_lo_(std::move(x_lo)), x_hi_(std::move(x_hi)),
          y_lo_(std::move(y_lo)), y_hi_(std::move(y_hi)) {
        if (x_lo_ > x_hi_ || y_lo_ > y_hi_)
            throw std::domain_error("QBox: inverted bounds");
    }
    static QBox around(const QPoint& p) { return QBox(p.x, p.x, p.y, p.y); }

    const Rat& x_lo() const { return x_lo_; }
    const Rat& x_hi() const { return x_hi_; }
    const Rat& y_lo() const { return y_lo_; }
    const Rat& y_hi() const { return y_hi_; }

    Rat width() const { return x_hi_ - x_lo_; }
    Rat height() const { return y_hi_ - y_lo_; }
    Rat area() const { return width() * height(); }

    friend bool operator==(const QBox&, const QBox&) = default;

private:
    Rat x_lo_, x_hi_, y_lo_, y_hi_;
};

std::ostream& operator<<(std::ostream& os, const QBox& b);

// Minkowski inflation by radius r >= 0; result contains the input.
QBox box_inflate(const QBox& b, const Rat& r);

// min over the four sides of (outer bound - inner bound); >= 0 iff inner is
// contained in outer (closed semantics), negative otherwise.
Rat box_margin(const QBox& outer, const QBox& inner);

// min over the four sides of the point's distance to each bound; >= 0 iff the
// point lies in the box, 0 exactly on the boundary.
Rat box_point_margin(const QBox& b, const QPoint& p);

// Largest axis separation gap: positive iff the closed boxes are disjoint,
// zero iff they touch, negative iff their interiors overlap. A positive value
// lower-bounds the Euclidean distance.
Rat box_separation(const QBox& a, const QBox& b);

bool boxes_intersect(const QBox& a, const QBox& b);

}  // namespace fjl
