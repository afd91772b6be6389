#include "lexiboot/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "lexiboot/errors.hpp"
#include "lexiboot/measures.hpp"
#include "lexiboot/occupancy.hpp"

namespace lexiboot {

std::uint64_t derive_sample_seed(std::uint64_t master_seed, std::uint64_t sample_index) {
    // splitmix64 finalizer over a golden-ratio stride; the master seed is mixed
    // first so nearby master seeds give unrelated streams.
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(master_seed) + (sample_index + 1) * 0x9e3779b97f4a7c15ULL);
}

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

namespace {

SampleOutcome play_sample(const GameConfig& base, std::uint64_t seed) {
    GameConfig config = base;
    config.seed = seed;
    const GameResult game = run_game(config);
    SampleOutcome out;
    out.seed = seed;
    out.episodes = game.episodes;
    out.frozen = game.frozen;
    out.consensus = game.consensus;
    if (game.frozen) out.error = accuracy_report(game.matrix_i).error_value();
    return out;
}

}  // namespace

std::vector<SampleOutcome> run_samples(const GameConfig& config, std::uint64_t n_samples,
                                       std::uint64_t master_seed, unsigned workers) {
    config.validate();
    if (n_samples < 1) throw ConfigError("ensemble needs at least one sample");
    if (workers < 1) throw ConfigError("ensemble needs at least one worker");

    std::vector<SampleOutcome> outcomes(n_samples);
    const unsigned lanes = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_samples));
    if (lanes == 1) {
        for (std::uint64_t i = 0; i < n_samples; ++i) {
            outcomes[i] = play_sample(config, derive_sample_seed(master_seed, i));
        }
        return outcomes;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(lanes);
    for (unsigned lane = 0; lane < lanes; ++lane) {
        threads.emplace_back([&] {
            try {
                for (std::uint64_t i = next++; i < n_samples; i = next++) {
                    outcomes[i] = play_sample(config, derive_sample_seed(master_seed, i));
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n_samples;
            }
        });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
    return outcomes;
}

EnsembleStats summarize(const GameConfig& config, const std::vector<SampleOutcome>& outcomes) {
    EnsembleStats stats;
    stats.config = config;
    stats.n_samples = outcomes.size();

    CompensatedSum error_sum;
    CompensatedSum episode_sum;
    std::uint64_t agreeing = 0;
    for (const SampleOutcome& s : outcomes) {
        episode_sum.add(static_cast<double>(s.episodes));
        if (!s.frozen) continue;
        ++stats.n_frozen;
        error_sum.add(s.error);
        if (s.consensus) {
            ++agreeing;
        } else {
            stats.non_consensus_seeds.push_back(s.seed);
        }
    }
    if (stats.n_samples > 0) {
        stats.freeze_rate = static_cast<double>(stats.n_frozen) / static_cast<double>(stats.n_samples);
        stats.mean_episodes = episode_sum.value() / static_cast<double>(stats.n_samples);
    }
    stats.valid = stats.n_frozen > 0;
    if (!stats.valid) return stats;

    const double n = static_cast<double>(stats.n_frozen);
    stats.mean_error = error_sum.value() / n;
    stats.consensus_rate = static_cast<double>(agreeing) / n;
    if (stats.n_frozen > 1) {
        CompensatedSum squares;
        for (const SampleOutcome& s : outcomes) {
            if (!s.frozen) continue;
            const double d = s.error - stats.mean_error;
            squares.add(d * d);
        }
        stats.std_error = std::sqrt(std::max(0.0, squares.value()) / (n - 1.0) / n);
    }
    return stats;
}

EnsembleStats run_ensemble(const GameConfig& config, std::uint64_t n_samples,
                           std::uint64_t master_seed, unsigned workers) {
    return summarize(config, run_samples(config, n_samples, master_seed, workers));
}

std::size_t words_for_alpha(double alpha, std::size_t n_objects) {
    if (!(alpha >= 0.0)) throw ConfigError("alpha must be non-negative");
    const double h = std::round(alpha * static_cast<double>(n_objects));
    if (h < 1.0) {
        throw ConfigError("alpha=" + std::to_string(alpha) + " with N=" + std::to_string(n_objects) +
                          " gives fewer than one word");
    }
    return static_cast<std::size_t>(h);
}

std::vector<SweepRow> sweep_alpha(const GameConfig& base, const std::vector<double>& alphas,
                                  std::uint64_t n_samples, std::uint64_t master_seed,
                                  unsigned workers) {
    for (const double a : alphas) words_for_alpha(a, base.n_objects);
    std::vector<SweepRow> rows;
    rows.reserve(alphas.size());
    for (const double a : alphas) {
        GameConfig config = base;
        config.n_words = words_for_alpha(a, base.n_objects);
        SweepRow row;
        row.alpha = a;
        row.stats = run_ensemble(config, n_samples, master_seed, workers);
        row.eps_random = asymptotic_error(a);
        row.eps_optimal = optimal_error(a);
        rows.push_back(std::move(row));
    }
    return rows;
}

FitResult extrapolate_to_infinite_n(const std::vector<SizePoint>& points) {
    if (points.size() < 2) throw FitError("extrapolation needs at least two sizes");
    std::set<std::size_t> sizes;
    for (const auto& p : points) {
        if (p.n_objects == 0) throw FitError("extrapolation point with N = 0");
        if (!sizes.insert(p.n_objects).second) {
            throw FitError("duplicate N=" + std::to_string(p.n_objects) + " in extrapolation points");
        }
    }

    FitResult fit;
    bool weighted = true;
    for (const auto& p : points) {
        fit.points.push_back({1.0 / static_cast<double>(p.n_objects), p.mean_error, p.std_error});
        if (!(p.std_error > 0.0)) weighted = false;
    }

    // Normal equations of y = a + b x with weights w.
    double s = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : fit.points) {
        const double w = weighted ? 1.0 / (p.std_error * p.std_error) : 1.0;
        s += w;
        sx += w * p.inv_n;
        sy += w * p.error;
        sxx += w * p.inv_n * p.inv_n;
        sxy += w * p.inv_n * p.error;
    }
    const double det = s * sxx - sx * sx;
    if (!(det > 0.0)) throw FitError("degenerate abscissae in extrapolation");
    fit.intercept = (sxx * sy - sx * sxy) / det;
    fit.slope = (s * sxy - sx * sy) / det;

    double scale = 1.0;
    if (!weighted) {
        double rss = 0.0;
        for (const auto& p : fit.points) {
            const double r = p.error - fit.intercept - fit.slope * p.inv_n;
            rss += r * r;
        }
        const auto dof = static_cast<double>(fit.points.size()) - 2.0;
        scale = dof > 0.0 ? rss / dof : 0.0;
    }
    fit.intercept_err = std::sqrt(scale * sxx / det);
    fit.slope_err = std::sqrt(scale * s / det);
    return fit;
}

}  // namespace lexiboot
