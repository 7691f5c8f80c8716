#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "infoutil/distribution.hpp"

namespace infoutil::utility {

// A choice set: K available objects and the rewards/probabilities attached
// to the resulting choices. `probs` holds the per-choice probability of the
// reward being actualized; the entries are individual probabilities in
// [0, 1] and are not required to form a complete distribution (reward
// probabilities of distinct choices need not be exhaustive). Under the full
// power-set reading a choice set over K objects has 2^K choices; smaller
// explicit listings are equally valid.
struct ChoiceSet {
    int object_count = 0;                     // K = n(O)
    std::vector<double> rewards;              // one per choice, monetary units
    std::vector<double> probs;                // P(reward actualized), in [0,1]
    std::vector<double> prob_positive_utility;  // P(U_r(c) > 0), in [0,1]

    // Throws InputError on length mismatch or out-of-range probabilities.
    // prob_positive_utility may be empty, meaning 1.0 for every choice
    // (the reduced model with perfect certainty).
    void validate() const;

    bool power_set_sized() const;
};

// Total expected utility vector [U_r, U_x].
struct CompositeUtility {
    double intrinsic = 0.0;  // monetary units
    double extrinsic = 0.0;  // bits scaled by K, never negative
};

struct MaximizerResult {
    DiscreteDistribution optimum;  // uniform over 2^K outcomes
    double max_utility = 0.0;      // K^2 bits
};

struct MotivationalStrength {
    std::size_t index = 0;
    double strength = 0.0;
};

// Options for the projected-gradient verifier of the entropy maximizer.
struct ProjectedGradientOptions {
    double initial_step = 0.1;
    int max_iterations = 10000;
    double coordinate_tolerance = 1e-10;  // stop when max |p_new - p| below
};

// U_x = -K sum_j p_j log2 p_j = K * H(d). Non-negative for all valid input.
double extrinsic_utility(const DiscreteDistribution& d, int object_count);

// Analytic maximizer of U_x over distributions on 2^K outcomes: the uniform
// distribution with every entry 2^-K and U_x = K^2. For K <= 12 the result
// is additionally cross-checked by a projected-gradient maximization and an
// AnalysisError is thrown if the two disagree beyond 1e-6 per coordinate.
// Throws InputError for K < 0 or K > enumeration_cap.
MaximizerResult maximize_extrinsic_utility(int object_count,
                                           int enumeration_cap = 20);

// Projected gradient ascent of K * H(p) over the probability simplex,
// started from `start`. Used as the numerical verifier for the analytic
// optimum; exposed so tests can run it from arbitrary interior points.
DiscreteDistribution maximize_extrinsic_numeric(
    int object_count, const std::vector<double>& start,
    const ProjectedGradientOptions& opts = {});

// Binary entropy of p, the single-choice U_x. Defined as 0 at p = 0 and
// p = 1 by continuity; throws InputError outside [0, 1].
double binary_extrinsic_utility(double p);

// Second derivative of the single-choice U_x: -1 / (ln 2 * p (1 - p)).
// Strictly negative on (0, 1); throws InputError at or beyond the endpoints.
double binary_marginal_curvature(double p);

// U_r = sum_j r_j p_j.
double intrinsic_utility(const ChoiceSet& c);

// Vroom: argmax over r_j * P(U_r > 0)_j * p_j. Ties break to the lowest
// index. Throws InputError on an empty choice set.
MotivationalStrength motivational_strength(const ChoiceSet& c);

// Standard Bayes: posterior_j = likelihood_j * prior_j / sum_k l_k * prior_k.
// Throws InputError when every product is zero.
DiscreteDistribution bayes_posterior(const DiscreteDistribution& priors,
                                     const std::vector<double>& likelihoods);

// [U_r, U_x] with the extrinsic part taken over the supplied posterior.
CompositeUtility composite_utility(const ChoiceSet& c,
                                   const DiscreteDistribution& posterior);

}  // namespace infoutil::utility
