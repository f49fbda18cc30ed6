#pragma once

// The piecewise model map the construction is built around, together with
// the perturbation budgets any admissible map must respect: within 1/2 of
// 1+i on every P square, and within delta_j^2 of phi_{j,l} on every R^2
// square. Orbits, derivative products, and the spherical-derivative lower
// bound live here too.

#include <optional>
#include <vector>

#include "fjl/geometry.hpp"

namespace fjl {

struct PerturbationBudget {
    Rat on_P = Rat(1, 2);

    Rat on_R2(const Construction& c, int j) const {
        Rat d = c.delta(j);
        return d * d;
    }
};

struct DerivativeRange {
    Rat lo;
    Rat hi;
};

// One application of the model map: the exact model value, the enclosure
// every admissible map stays inside, and (on R^1) the derivative interval.
struct ModelStep {
    RegionTag tag;
    std::optional<QPoint> value;
    std::optional<QBox> enclosure;
    std::optional<DerivativeRange> derivative_bound;

    bool defined() const { return value.has_value(); }
};

ModelStep model_step(const Construction& c, const QPoint& z);

struct OrbitRecord {
    enum class Status { Alive, LeftModelDomain };

    std::vector<QPoint> points;      // points[0] is the seed
    std::vector<RegionTag> tags;     // tags[i] classifies points[i]
    Rat contraction = Rat(1);        // product of scales over R-steps
    bool absorbed = false;           // entered P; contraction tracking stops
    Status status = Status::Alive;
    int left_at = -1;                // step index when status is LeftModelDomain
};

// Iterates the exact model map for up to `steps` steps.
OrbitRecord orbit(const Construction& c, const QPoint& seed, int steps);

// One JSON object per step: {step, x, y, tag, contraction}; a final status
// object closes the stream.
std::string orbit_to_jsonl(const Construction& c, const OrbitRecord& rec);

// 2^{j+1} / (1 + ((j+1) + 2^{-j-3})^2): a lower bound for the spherical
// derivative of the j-th iterate on the invariant set, since the derivative
// product exceeds 2^j and the orbit stays within Q_{j+1}^3 of center (j+1,0).
Rat marty_lower_bound(int j);

// Product of the exact model scales over depths 1..depth.
Rat exact_contraction(const Construction& c, int depth);

// Worst-case product over admissible maps: prod (scale(m) - delta_m).
Rat derivative_product_lower(const Construction& c, int depth);

}  // namespace fjl
