#pragma once

#include <cstddef>
#include <vector>

namespace infoutil {

// Probability vector over finitely many outcomes. Entries must be
// non-negative and sum to 1 within kSumTolerance; inputs inside the
// tolerance are renormalized exactly on construction.
class DiscreteDistribution {
public:
    static constexpr double kSumTolerance = 1e-9;

    explicit DiscreteDistribution(std::vector<double> probs);

    static DiscreteDistribution uniform(std::size_t n_outcomes);

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }

    bool is_uniform(double tol = 1e-9) const;

private:
    std::vector<double> probs_;
};

// Shannon entropy in bits, with the 0 * log2(0) = 0 convention.
// Always in [0, log2(n)] for an n-outcome distribution.
double shannon_entropy(const DiscreteDistribution& d);

}  // namespace infoutil
