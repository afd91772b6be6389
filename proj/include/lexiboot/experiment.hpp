#pragma once

#include <cstdint>
#include <vector>

#include "lexiboot/game.hpp"

namespace lexiboot {

// Stateless 64-bit mix of (master_seed, sample_index) used to seed each game.
std::uint64_t derive_sample_seed(std::uint64_t master_seed, std::uint64_t sample_index);

// Error-compensated running sum (Neumaier).
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

struct SampleOutcome {
    std::uint64_t seed = 0;
    std::uint64_t episodes = 0;
    bool frozen = false;
    bool consensus = false;
    double error = 0.0;  // agent I, meaningful only when frozen
};

struct EnsembleStats {
    GameConfig config;
    std::uint64_t n_samples = 0;
    std::uint64_t n_frozen = 0;
    double mean_error = 0.0;  // over frozen samples
    double std_error = 0.0;
    double freeze_rate = 0.0;
    double consensus_rate = 0.0;  // among frozen samples
    double mean_episodes = 0.0;
    bool valid = false;  // false when no sample froze
    // Seeds of frozen games whose agents ended with different lexicons.
    std::vector<std::uint64_t> non_consensus_seeds;

    friend bool operator==(const EnsembleStats&, const EnsembleStats&) = default;
};

// Plays n_samples independent games (sample i seeded with derive_sample_seed(master_seed, i),
// overriding config.seed) on up to `workers` threads. Output does not depend on `workers`.
std::vector<SampleOutcome> run_samples(const GameConfig& config, std::uint64_t n_samples,
                                       std::uint64_t master_seed, unsigned workers);

EnsembleStats summarize(const GameConfig& config, const std::vector<SampleOutcome>& outcomes);

EnsembleStats run_ensemble(const GameConfig& config, std::uint64_t n_samples,
                           std::uint64_t master_seed, unsigned workers);

struct SweepRow {
    double alpha = 0.0;
    EnsembleStats stats;
    double eps_random = 0.0;   // asymptotic random-assignment error
    double eps_optimal = 0.0;  // best achievable error
};

// H = round(alpha * N) for each alpha. Throws ConfigError when that is below 1.
std::size_t words_for_alpha(double alpha, std::size_t n_objects);

std::vector<SweepRow> sweep_alpha(const GameConfig& base, const std::vector<double>& alphas,
                                  std::uint64_t n_samples, std::uint64_t master_seed,
                                  unsigned workers);

struct FitPoint {
    double inv_n = 0.0;
    double error = 0.0;
    double std_error = 0.0;
};

struct FitResult {
    double intercept = 0.0;
    double intercept_err = 0.0;
    double slope = 0.0;
    double slope_err = 0.0;
    std::vector<FitPoint> points;
};

struct SizePoint {
    std::size_t n_objects = 0;
    double mean_error = 0.0;
    double std_error = 0.0;
};

// Weighted least squares of error against 1/N (weights 1/SE^2; unit weights with
// residual-scaled covariance when any SE is zero). Throws FitError with fewer
// than two points or repeated N.
FitResult extrapolate_to_infinite_n(const std::vector<SizePoint>& points);

}  // namespace lexiboot
