#pragma once

// The nested collections T_j realized as a 16-ary tree of exact preimage
// squares under the exact model map. T_1 = {R_{1,1}^1}; each node of depth j
// maps onto some R_{j,l}^1 under the (j-1)-th iterate, and its 16 children
// are the preimages of R_{j+1,1}^1 .. R_{j+1,16}^1 under the next map.
// Levels are congruent, so per-level measures have closed forms; the
// enumeration path cross-checks them.

#include <vector>

#include "fjl/geometry.hpp"

namespace fjl {

struct TreeNode {
    std::vector<int> address;  // word over 1..16, length depth-1
    int depth = 1;
    QRect rect;                // exact subset of R_{1,1}^1
    Rat contraction;           // scale of the (depth-1)-th iterate on this node
    int target = 1;            // the (depth-1)-th iterate maps rect onto R_{depth,target}^1
};

TreeNode tree_root(const Construction& c);

// The forward map of the (depth-1)-th iterate restricted to the node:
// scale = contraction, sends rect onto R_{depth,target}^1.
AffineMap node_forward_map(const Construction& c, const TreeNode& n);

// The 16 children, pairwise disjoint subsets of the parent's rect.
std::vector<TreeNode> children(const Construction& c, const TreeNode& n);

struct LevelSummary {
    int depth = 1;
    mpz_class node_count;   // 16^{depth-1}
    Rat node_half_side;
    Rat level_measure;      // node_count * (2 * node_half_side)^2
    Rat loss_to_next;       // level_measure(depth) - level_measure(depth+1)
    Rat paper_loss_bound;   // 2^{-5*depth-5}, the worst-case per-node loss
};

// Closed-form summary; all nodes at a level are congruent because the
// expansion factor does not depend on the cell index.
LevelSummary level_summary(const Construction& c, int j);

// Explicit nodes of level j in address order. Refuses when 16^{j-1} > cap.
std::vector<TreeNode> enumerate_level(const Construction& c, int j, long long cap);

// level_measure(depth) - 2^{-depth-8}: exact measure down to `depth` minus
// the worst-case loss tail of all deeper levels, so a certified lower bound
// on the measure of the full intersection for every admissible map.
Rat measure_lower_bound(const Construction& c, int depth);

nlohmann::json level_to_json(const LevelSummary& s, const Rat& lower_bound_so_far);

}  // namespace fjl
