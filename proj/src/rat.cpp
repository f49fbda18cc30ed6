#include "fjl/rat.hpp"

#include <cctype>
#include <ostream>

namespace fjl {

Rat Rat::pow2(long e) {
    mpq_class q(1);
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
    Rat r;
    r.v_ = q;
    return r;
}

Rat Rat::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class n, d;
        if (n.set_str(s.substr(0, slash), 10) != 0 ||
            d.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("Rat: bad fraction '" + s + "'");
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("Rat: bad decimal '" + s + "'");
        mpz_class n;
        if (n.set_str(digits, 10) != 0)
            throw std::invalid_argument("Rat: bad decimal '" + s + "'");
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, s.size() - dot - 1);
        return Rat(n, d);
    }
    mpz_class n;
    if (n.set_str(s, 10) != 0)
        throw std::invalid_argument("Rat: bad integer '" + s + "'");
    return Rat(n);
}

std::string Rat::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

namespace {

// Number of decimal digits of |z|, exact.
long digits10(const mpz_class& z) {
    return static_cast<long>(mpz_class(::abs(z)).get_str().size());
}

mpz_class pow10(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

}  // namespace

std::string Rat::decimal(int sig) const {
    if (sig < 1) throw std::invalid_argument("Rat::decimal: sig < 1");
    if (is_zero()) return "0";

    mpz_class a = ::abs(num());
    const mpz_class& b = den();

    // Decimal exponent e with 10^e <= a/b < 10^{e+1}.
    long e = digits10(a) - digits10(b);
    auto at_least_pow10 = [&](long p) {
        return p >= 0 ? a >= b * pow10(p) : a * pow10(-p) >= b;
    };
    if (!at_least_pow10(e)) --e;

    // sig-digit mantissa, rounded half away from zero.
    long shift = sig - 1 - e;
    mpz_class n2 = shift >= 0 ? mpz_class(a * pow10(shift)) : a;
    mpz_class d2 = shift >= 0 ? b : mpz_class(b * pow10(-shift));
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    if (2 * r >= d2) ++q;
    if (q == pow10(sig)) {
        q /= 10;
        ++e;
    }

    std::string digits = q.get_str();
    std::string out;
    if (e >= sig - 1) {
        if (e > 40) {  // fall back to exponent form well past our domain
            out = digits.substr(0, 1);
            if (digits.size() > 1) out += "." + digits.substr(1);
            out += "e" + std::to_string(e);
        } else {
            out = digits + std::string(e - (sig - 1), '0');
        }
    } else if (e >= 0) {
        out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    } else if (e >= -40) {
        out = "0." + std::string(-e - 1, '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(e);
    }

    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        auto last = out.find_last_not_of('0');
        if (out[last] == '.') --last;
        out.erase(last + 1);
    }
    return sign() < 0 ? "-" + out : out;
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rat::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rat::round_nearest() const {
    return (*this + Rat(1, 2)).floor();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

void to_json(nlohmann::json& j, const Rat& r) {
    j = nlohmann::json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

std::ostream& operator<<(std::ostream& os, const QPoint& p) {
    return os << "(" << p.x << ", " << p.y << ")";
}

void to_json(nlohmann::json& j, const QPoint& p) {
    j = nlohmann::json{{"x", p.x}, {"y", p.y}};
}

std::ostream& operator<<(std::ostream& os, const QBox& b) {
    return os << "[" << b.x_lo() << "," << b.x_hi() << "]x["
              << b.y_lo() << "," << b.y_hi() << "]";
}

QBox box_inflate(const QBox& b, const Rat& r) {
    if (r.sign() < 0) throw std::domain_error("box_inflate: negative radius");
    return QBox(b.x_lo() - r, b.x_hi() + r, b.y_lo() - r, b.y_hi() + r);
}

Rat box_margin(const QBox& outer, const QBox& inner) {
    Rat m = inner.x_lo() - outer.x_lo();
    m = min(m, outer.x_hi() - inner.x_hi());
    m = min(m, inner.y_lo() - outer.y_lo());
    m = min(m, outer.y_hi() - inner.y_hi());
    return m;
}

Rat box_point_margin(const QBox& b, const QPoint& p) {
    Rat m = p.x - b.x_lo();
    m = min(m, b.x_hi() - p.x);
    m = min(m, p.y - b.y_lo());
    m = min(m, b.y_hi() - p.y);
    return m;
}

Rat box_separation(const QBox& a, const QBox& b) {
    Rat gx = max(b.x_lo() - a.x_hi(), a.x_lo() - b.x_hi());
    Rat gy = max(b.y_lo() - a.y_hi(), a.y_lo() - b.y_hi());
    return max(gx, gy);
}

bool boxes_intersect(const QBox& a, const QBox& b) {
    return box_separation(a, b).sign() <= 0;
}

}  // namespace fjl
