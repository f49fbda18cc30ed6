#include "fjl/dynamics.hpp"

#include <sstream>

namespace fjl {

ModelStep model_step(const Construction& c, const QPoint& z) {
    ModelStep step;
    step.tag = c.locate(z);

    const PerturbationBudget budget;
    switch (step.tag.region) {
        case Region::P: {
            step.value = QPoint{Rat(1), Rat(1)};
            step.enclosure = box_inflate(QBox::around(*step.value), budget.on_P);
            break;
        }
        case Region::R2: {
            int j = static_cast<int>(step.tag.j);
            AffineMap map = c.phi(j, step.tag.l);
            step.value = affine_apply(map, z);
            step.enclosure = box_inflate(QBox::around(*step.value), budget.on_R2(c, j));
            if (step.tag.in_r1) {
                Rat d = c.delta(j);
                step.derivative_bound = DerivativeRange{map.scale - d, map.scale + d};
            }
            break;
        }
        case Region::Q3Gap:
        case Region::Complement:
            break;  // the model says nothing here
    }
    return step;
}

OrbitRecord orbit(const Construction& c, const QPoint& seed, int steps) {
    if (steps < 0) throw std::domain_error("orbit: negative step count");

    OrbitRecord rec;
    rec.points.push_back(seed);
    rec.tags.push_back(c.locate(seed));

    for (int n = 1; n <= steps; ++n) {
        ModelStep s = model_step(c, rec.points.back());
        if (!s.defined()) {
            rec.status = OrbitRecord::Status::LeftModelDomain;
            rec.left_at = n;
            break;
        }
        if (s.tag.region == Region::P) {
            rec.absorbed = true;
        } else if (!rec.absorbed) {
            rec.contraction *= c.scale(static_cast<int>(s.tag.j));
        }
        rec.points.push_back(*s.value);
        rec.tags.push_back(c.locate(*s.value));
    }
    return rec;
}

std::string orbit_to_jsonl(const Construction& c, const OrbitRecord& rec) {
    std::ostringstream out;
    Rat running(1);
    bool absorbed = false;
    for (size_t i = 0; i < rec.points.size(); ++i) {
        if (i > 0) {
            const RegionTag& from = rec.tags[i - 1];
            if (from.region == Region::P)
                absorbed = true;
            else if (from.region == Region::R2 && !absorbed)
                running *= c.scale(static_cast<int>(from.j));
        }
        nlohmann::json line{
            {"step", i},
            {"x", rec.points[i].x},
            {"y", rec.points[i].y},
            {"tag", rec.tags[i].str()},
            {"contraction", running},
        };
        out << line.dump() << "\n";
    }
    nlohmann::json status{
        {"status", rec.status == OrbitRecord::Status::Alive ? "alive" : "left_model_domain"},
        {"absorbed", rec.absorbed},
    };
    if (rec.left_at >= 0) status["left_at"] = rec.left_at;
    out << status.dump() << "\n";
    return out.str();
}

Rat marty_lower_bound(int j) {
    if (j < 1) throw std::domain_error("marty_lower_bound: j must be >= 1");
    Rat modulus = Rat(j + 1) + Rat::pow2(-j - 3);
    return Rat::pow2(j + 1) / (Rat(1) + modulus * modulus);
}

Rat exact_contraction(const Construction& c, int depth) {
    if (depth < 1) throw std::domain_error("exact_contraction: depth must be >= 1");
    return c.scale_product(depth);
}

Rat derivative_product_lower(const Construction& c, int depth) {
    if (depth < 1) throw std::domain_error("derivative_product_lower: depth must be >= 1");
    Rat prod(1);
    for (int m = 1; m <= depth; ++m) prod *= c.scale(m) - c.delta(m);
    return prod;
}

}  // namespace fjl
