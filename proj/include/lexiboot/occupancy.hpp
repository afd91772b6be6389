#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lexiboot/types.hpp"

namespace lexiboot {

using BigRational = boost::multiprecision::cpp_rational;

// Largest N or H accepted by the exact big-integer evaluation.
inline constexpr std::size_t kExactOccupancyLimit = 200;

// Distribution of the number m of words left unused when N objects are assigned
// to H words uniformly at random.
struct OccupancyDistribution {
    std::size_t n_objects = 0;
    std::size_t n_words = 0;
    std::vector<double> probabilities;  // index m = 0..H
    std::vector<BigRational> exact;     // same values as exact rationals

    double mean() const;
    BigRational exact_mean() const;
};

// P_m = C(H, m) * surj(N, H - m) / H^N, with surjection counts from the Stirling
// recurrence in big integers. Throws ConfigError for N or H outside [1, 200].
OccupancyDistribution exact_unused_distribution(std::size_t n_objects, std::size_t n_words);

// lambda = H exp(-N/H)
double poisson_lambda(std::size_t n_objects, std::size_t n_words);
// Poisson mass e^-lambda lambda^m / m!, evaluated in log space.
double poisson_probability(std::size_t m, double lambda);
double poisson_limit(std::size_t m, std::size_t n_objects, std::size_t n_words);

// Random-assignment error in the large-size limit: 1 - alpha + alpha e^{-1/alpha}.
// Returns 1 at alpha = 0; throws DomainError for negative alpha.
double asymptotic_error(double alpha);

// Finite-size random-assignment error 1 - (H - E[m]) / N with E[m] = H (1 - 1/H)^N.
double exact_expected_error(std::size_t n_objects, std::size_t n_words);

// Error of one uniformly random object -> word assignment.
double random_assignment_sample(std::size_t n_objects, std::size_t n_words, Rng& rng);

}  // namespace lexiboot
