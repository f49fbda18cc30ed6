#pragma once

// The proof ledger: one named exact check per inequality or identity the
// construction rests on, each reporting an exact rational margin (distance to
// failure). Strict checks pass iff margin > 0; equality and non-strict parts
// carry a zero_ok flag. All margins are worst-case over every admissible map
// within the perturbation budgets, never a sampled instance.

#include <vector>

#include "fjl/geometry.hpp"

namespace fjl {

struct SubMargin {
    std::string name;
    Rat margin;
    bool zero_ok = false;  // non-strict containment or exact identity

    bool pass() const { return margin.sign() > 0 || (zero_ok && margin.is_zero()); }
};

struct CheckReport {
    std::string id;
    std::vector<long long> params;
    std::string statement;
    std::vector<SubMargin> parts;

    Rat margin() const;               // min over parts
    bool passed() const;              // all parts pass
    bool zero_margin_strict() const;  // passed with margin exactly 0
};

void to_json(nlohmann::json& j, const CheckReport& r);

// delta_{j+1} - delta_j^2 > 0: the squared budget on level j stays below the
// next level's inset unit.
CheckReport check_budget_separation(const Construction& c, int j);

// Image geometry of phi_{j,l} with the R^2 budget: (a) the image boundary
// clears Q_{j+1}^1 by more than delta_j^2, (b) the image inflated by
// delta_j^2 stays inside Q_{j+1}^3, (c) the image of the R^1 center sits
// inside Q_{j+1}^1 with room to spare.
CheckReport check_covering(const Construction& c, int j);

// scale(j) > 2 + delta_j; the gap between R^1 and the boundary of R^2 equals
// delta_j exactly (the radius that turns the value budget delta_j^2 into the
// derivative budget delta_j); scale(j) - delta_j > 2.
CheckReport check_derivative(const Construction& c, int j);

// (scale(j) - delta_j) - 2 > 0: the real part of any admissible derivative
// on R^1 exceeds 2, so every admissible map is injective there.
CheckReport check_injectivity(const Construction& c, int j);

// The P-value enclosure (half-side = budget) against the half-side 1/2 of
// P_{0,0}: zero margin, with strictness supplied by the strict value budget.
CheckReport check_P_absorption(const Construction& c, const Rat& budget = Rat(1, 2));

// P squares pairwise disjoint, Q^3 squares pairwise disjoint, and Q^3
// disjoint from every P, for lattice indices |j|,|k| <= lattice_max and Q
// indices <= q_j_max. Margin: the smallest separation gap found.
CheckReport check_disjointness(const Construction& c, int q_j_max, int lattice_max);

// meas(S \ P) = 4 - 4(1 - 2^{-|j|-|k|-1})^2 = 8*2^{-|j|-|k|-1} -
// 4*4^{-|j|-|k|-1}, strictly below 4*2^{-|j|}*2^{-|k|}.
CheckReport check_cell_measure(long long j, long long k);

struct SeriesResult {
    Rat partial_sum;
    Rat tail_bound;
    Rat closed_form;
};

void to_json(nlohmann::json& j, const SeriesResult& s);

// The complement-measure series: partial sum of meas(S \ P) over
// |j|,|k| <= N by direct summation, closed form 299/9 from the geometric
// series, and the exact geometric-tail remainder.
SeriesResult measure_complement(int N);

// Ledger wrapper: partial + tail == closed exactly, partial < closed, and
// the coarse bound 36 dominates the closed form.
CheckReport check_complement_series(int N);

// The per-level loss chain: the difference-of-squares identity for
// meas(R^3 \ R^1) at level j+1, the strict step dropping the square term,
// and the dyadic identity 2^{-3j+3} * delta_{j+1} = 2^{-5j-5}; plus the
// exact-model per-node loss staying below that bound.
CheckReport check_loss_chain(const Construction& c, int j);

// Termwise 16^{j-1} * 2^{-5j-5} = 2^{-j-9} for j <= j_max, the closed sum
// 2^{-9}, the root measure 9/4096, and the positive gap 2^{-12}.
CheckReport check_total_loss(const Construction& c, int j_max = 64);

// First j <= j_max whose spherical-derivative lower bound exceeds the
// threshold; the crossing index is recorded in params[0].
CheckReport check_marty_divergence(const Construction& c, const Rat& threshold, int j_max);

struct VerifyConfig {
    int j_max = 32;
    int lattice = 16;
    int series_n = 64;
};

// Every check over the configured ranges, in fixed id order. Geometric
// degeneracy inside a check (an inset square collapsing under mutated
// constants) is reported as a failed check rather than aborting the run.
std::vector<CheckReport> run_all(const Construction& c, const VerifyConfig& cfg);

nlohmann::json report_to_json(const std::vector<CheckReport>& reports);

}  // namespace fjl
