#include "fjl/tree.hpp"

namespace fjl {

TreeNode tree_root(const Construction& c) {
    return TreeNode{{}, 1, c.square_R(1, 1, 1), Rat(1), 1};
}

AffineMap node_forward_map(const Construction& c, const TreeNode& n) {
    QRect image = c.square_R(n.depth, n.target, 1);
    return AffineMap(n.contraction, image.center - n.contraction * n.rect.center);
}

std::vector<TreeNode> children(const Construction& c, const TreeNode& n) {
    // The next iterate on this node is phi_{depth,target} after the node's
    // forward map; children pull the next level's R^1 squares back through it.
    AffineMap composed = affine_compose(c.phi(n.depth, n.target), node_forward_map(c, n));

    std::vector<TreeNode> out;
    out.reserve(16);
    for (int m = 1; m <= 16; ++m) {
        std::vector<int> address = n.address;
        address.push_back(m);
        out.push_back(TreeNode{std::move(address), n.depth + 1,
                               affine_preimage(composed, c.square_R(n.depth + 1, m, 1)),
                               composed.scale, m});
    }
    return out;
}

namespace {

mpz_class count_at(int depth) {
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), 16, static_cast<unsigned long>(depth - 1));
    return count;
}

Rat node_half_at(const Construction& c, int depth) {
    return c.square_R(depth, 1, 1).half_side / c.scale_product(depth - 1);
}

Rat measure_at(const Construction& c, int depth) {
    Rat side = Rat(2) * node_half_at(c, depth);
    return Rat(count_at(depth)) * side * side;
}

}  // namespace

LevelSummary level_summary(const Construction& c, int j) {
    if (j < 1) throw std::domain_error("level_summary: depth must be >= 1");
    LevelSummary s;
    s.depth = j;
    s.node_count = count_at(j);
    s.node_half_side = node_half_at(c, j);
    s.level_measure = measure_at(c, j);
    s.loss_to_next = s.level_measure - measure_at(c, j + 1);
    s.paper_loss_bound = Rat::pow2(-5 * static_cast<long>(j) - 5);
    return s;
}

std::vector<TreeNode> enumerate_level(const Construction& c, int j, long long cap) {
    if (j < 1) throw std::domain_error("enumerate_level: depth must be >= 1");
    mpz_class needed = count_at(j);
    if (cmp(needed, static_cast<long>(cap)) > 0) {
        throw std::length_error("enumerate_level: level " + std::to_string(j) + " has " +
                                needed.get_str() + " nodes, raise cap to at least " +
                                needed.get_str());
    }
    std::vector<TreeNode> level{tree_root(c)};
    for (int d = 1; d < j; ++d) {
        std::vector<TreeNode> next;
        next.reserve(level.size() * 16);
        for (const TreeNode& n : level)
            for (TreeNode& ch : children(c, n)) next.push_back(std::move(ch));
        level = std::move(next);
    }
    return level;
}

Rat measure_lower_bound(const Construction& c, int depth) {
    if (depth < 1) throw std::domain_error("measure_lower_bound: depth must be >= 1");
    return measure_at(c, depth) - Rat::pow2(-static_cast<long>(depth) - 8);
}

nlohmann::json level_to_json(const LevelSummary& s, const Rat& lower_bound_so_far) {
    return nlohmann::json{
        {"depth", s.depth},
        {"count", s.node_count.get_str()},
        {"half_side", s.node_half_side},
        {"measure", s.level_measure},
        {"loss", s.loss_to_next},
        {"bound", Rat(s.node_count) * s.paper_loss_bound},
        {"lower_bound_so_far", lower_bound_so_far},
    };
}

}  // namespace fjl
