#include <doctest.h>

#include "fjl/rat.hpp"
#include "test_support.hpp"

using namespace fjl;

TEST_CASE("pow2 produces exact dyadics") {
    CHECK(Rat::pow2(0) == Rat(1));
    CHECK(Rat::pow2(-8) == Rat(1, 256));
    CHECK(Rat::pow2(3) == Rat(8));
    CHECK(Rat::pow2(-200) * Rat::pow2(200) == Rat(1));
}

TEST_CASE("rationals canonicalize on construction") {
    Rat r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rat(0, 7).den() == 1);
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("field identities hold exactly on random rationals") {
    test::DetPrng rng(42);
    for (int i = 0; i < 300; ++i) {
        Rat a = rng.next_rat(), b = rng.next_rat(), c = rng.next_rat();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == Rat(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
        // canonical form invariant
        Rat s = a * b + c;
        CHECK(s.den() > 0);
        CHECK(gcd(mpz_class(abs(s.num())), s.den()) == 1);
    }
}

TEST_CASE("comparisons are a total order") {
    test::DetPrng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat a = rng.next_rat(), b = rng.next_rat();
        CHECK(((a < b) + (a == b) + (b < a)) == 1);
        if (a < b) CHECK(a - b < Rat(0));
    }
}

TEST_CASE("string round trips") {
    CHECK(Rat::from_string("21/8") == Rat(21, 8));
    CHECK(Rat::from_string("-3.25") == Rat(-13, 4));
    CHECK(Rat::from_string("299") == Rat(299));
    CHECK(Rat(21, 8).str() == "21/8");
    CHECK(Rat(5).str() == "5");
    CHECK_THROWS_AS(Rat::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rat::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::from_string(""), std::invalid_argument);
}

TEST_CASE("decimal serialization is correctly rounded and stable") {
    CHECK(Rat(21, 8).decimal(12) == "2.625");
    CHECK(Rat(1, 256).decimal(12) == "0.00390625");
    CHECK(Rat(1, 3).decimal(4) == "0.3333");
    CHECK(Rat(2, 3).decimal(4) == "0.6667");
    CHECK(Rat(-2, 3).decimal(4) == "-0.6667");
    CHECK(Rat(299, 9).decimal(12) == "33.2222222222");
    CHECK(Rat(0).decimal(12) == "0");
    CHECK(Rat(999, 1000).decimal(2) == "1");
    CHECK(Rat(123456).decimal(3) == "123000");
    CHECK(Rat::pow2(-60).decimal(6) == Rat::pow2(-60).decimal(6));
}

TEST_CASE("floor, ceil and rounding") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(7, 2).round_nearest() == 4);  // ties round up
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).round_nearest() == -3);
    CHECK(Rat(29, 32).round_nearest() == 1);
}

TEST_CASE("box inflation") {
    QBox unit(Rat(0), Rat(1), Rat(0), Rat(1));
    CHECK(box_inflate(unit, Rat(0)) == unit);
    CHECK(box_inflate(unit, Rat(1, 2)) ==
          QBox(Rat(-1, 2), Rat(3, 2), Rat(-1, 2), Rat(3, 2)));

    // point box inflated by delta_1^2 = 2^{-16}
    QBox pt = QBox::around({Rat(2), Rat(0)});
    QBox inflated = box_inflate(pt, Rat::pow2(-16));
    CHECK(inflated.width() == Rat::pow2(-15));
    CHECK(inflated.x_lo() == Rat(2) - Rat::pow2(-16));

    CHECK_THROWS_AS(box_inflate(unit, Rat(-1, 4)), std::domain_error);
}

TEST_CASE("box inflation composes additively") {
    test::DetPrng rng(11);
    for (int i = 0; i < 100; ++i) {
        Rat x = rng.next_rat(), y = rng.next_rat();
        QBox b(x, x + rng.next_nonneg_rat(), y, y + rng.next_nonneg_rat());
        Rat r1 = rng.next_nonneg_rat(), r2 = rng.next_nonneg_rat();
        CHECK(box_inflate(box_inflate(b, r1), r2) == box_inflate(b, r1 + r2));
    }
}

TEST_CASE("box margins and separation") {
    QBox outer(Rat(0), Rat(4), Rat(0), Rat(4));
    QBox inner(Rat(1), Rat(3), Rat(1), Rat(2));
    CHECK(box_margin(outer, inner) == Rat(1));
    CHECK(box_margin(inner, outer) == Rat(-2));  // worst side: y grows by 2
    CHECK(box_margin(outer, outer) == Rat(0));

    CHECK(box_point_margin(outer, {Rat(2), Rat(2)}) == Rat(2));
    CHECK(box_point_margin(outer, {Rat(0), Rat(2)}) == Rat(0));
    CHECK(box_point_margin(outer, {Rat(-1), Rat(2)}) == Rat(-1));

    QBox right(Rat(5), Rat(6), Rat(0), Rat(4));
    CHECK(box_separation(outer, right) == Rat(1));
    CHECK(box_separation(outer, outer) < Rat(0));
    QBox touching(Rat(4), Rat(5), Rat(0), Rat(4));
    CHECK(box_separation(outer, touching) == Rat(0));
    CHECK(boxes_intersect(outer, touching));
    CHECK(!boxes_intersect(outer, right));
}
