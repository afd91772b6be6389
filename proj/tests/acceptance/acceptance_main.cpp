// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Ensembles shared between criteria are run once.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "lexiboot/cli.hpp"
#include "lexiboot/experiment.hpp"
#include "lexiboot/measures.hpp"
#include "lexiboot/occupancy.hpp"

using namespace lexiboot;

namespace {

constexpr std::uint64_t kMasterSeed = 20100;
constexpr Count kResolution = 10'000;

struct Verdict {
    bool pass = false;
    std::string detail;
};

unsigned workers() {
    return cli::default_workers();
}

std::string fmt(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

using EnsembleKey = std::tuple<int, std::size_t, std::size_t, std::size_t, std::uint64_t>;

// Runs (or recalls) an ensemble at M = 10^4 with the suite's master seed.
const EnsembleStats& ensemble(LearningMode mode, std::size_t n, double alpha, std::size_t context,
                              std::uint64_t samples) {
    static std::map<EnsembleKey, EnsembleStats> cache;
    const std::size_t h = words_for_alpha(alpha, n);
    const EnsembleKey key{static_cast<int>(mode), n, h, context, samples};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GameConfig config;
    config.n_objects = n;
    config.n_words = h;
    config.context_size = context;
    config.resolution = kResolution;
    config.mode = mode;
    const auto t0 = std::chrono::steady_clock::now();
    EnsembleStats stats = run_ensemble(config, samples, kMasterSeed, workers());
    std::printf("    ran %s N=%zu H=%zu C=%zu samples=%llu: eps=%s +- %s freeze=%s (%.1fs)\n",
                std::string(to_string(mode)).c_str(), n, h, context,
                static_cast<unsigned long long>(samples), fmt(stats.mean_error).c_str(),
                fmt(stats.std_error).c_str(), fmt(stats.freeze_rate, 3).c_str(), seconds_since(t0));
    std::fflush(stdout);
    return cache.emplace(key, std::move(stats)).first->second;
}

std::string describe(const EnsembleStats& s) {
    return fmt(s.mean_error) + "+-" + fmt(s.std_error);
}

double combined_se(const EnsembleStats& a, const EnsembleStats& b) {
    return std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
}

// ---------------------------------------------------------------------------

Verdict analytic_anchor() {
    const double eps_r = asymptotic_error(0.5);
    bool ok = std::abs(eps_r - 0.5677) <= 1e-4;
    for (int i = 1; i <= 10; ++i) {
        const double a = i / 10.0;
        ok = ok && optimal_error(a) == 1.0 - a;
    }
    for (double a : {1.5, 2.0, 5.0, 10.0}) ok = ok && optimal_error(a) == 0.0;
    return {ok, "eps_r(0.5)=" + fmt(eps_r, 7) + " (target 0.5677 +- 1e-4); eps_m = 1-alpha on 0.1..1.0, 0 beyond"};
}

Verdict occupancy_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t h = 1; h <= 5; ++h) {
            std::size_t total = 1;
            for (std::size_t i = 0; i < n; ++i) total *= h;
            std::vector<long long> hits(h + 1, 0);
            for (std::size_t code = 0; code < total; ++code) {
                std::set<std::size_t> used;
                for (std::size_t i = 0, c = code; i < n; ++i, c /= h) used.insert(c % h);
                ++hits[h - used.size()];
            }
            const auto dist = exact_unused_distribution(n, h);
            for (std::size_t m = 0; m <= h; ++m) {
                ok = ok && dist.exact[m] == BigRational(hits[m], static_cast<long long>(total));
            }
        }
    }
    double worst = 0.0;
    for (std::size_t n = 1; n <= 60; ++n) {
        for (std::size_t h = 1; h <= 60; ++h) {
            const double hd = static_cast<double>(h);
            const double expected = hd * std::pow(1.0 - 1.0 / hd, static_cast<double>(n));
            worst = std::max(worst, std::abs(exact_unused_distribution(n, h).mean() - expected));
        }
    }
    const double elapsed = seconds_since(t0);
    ok = ok && worst <= 1e-12 && elapsed < 10.0;
    return {ok, "enumeration match N,H<=5; max |mean - H(1-1/H)^N| = " + std::to_string(worst) +
                    " over N,H<=60; " + fmt(elapsed, 2) + "s (< 10s)"};
}

Verdict random_assignment() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(kMasterSeed);
    constexpr int kSamples = 10'000;
    CompensatedSum sum;
    std::vector<double> values(kSamples);
    for (auto& v : values) {
        v = random_assignment_sample(96, 48, rng);
        sum.add(v);
    }
    const double mean = sum.value() / kSamples;
    CompensatedSum sq;
    for (double v : values) sq.add((v - mean) * (v - mean));
    const double se = std::sqrt(sq.value() / (kSamples - 1.0) / kSamples);
    const double exact = exact_expected_error(96, 48);
    const double elapsed = seconds_since(t0);
    const bool ok = std::abs(mean - exact) <= 3.0 * se && elapsed < 5.0;
    return {ok, "MC " + fmt(mean) + "+-" + fmt(se) + " vs exact " + fmt(exact) + " (within 3 SE); " +
                    fmt(elapsed, 2) + "s"};
}

Verdict fig1_convergence() {
    bool ok = true;
    std::string detail;
    for (double alpha : {0.25, 0.5, 1.0}) {
        const auto& s = ensemble(LearningMode::unsupervised, 96, alpha, 2, 200);
        const double target = asymptotic_error(alpha);
        ok = ok && s.valid && std::abs(s.mean_error - target) <= 0.02;
        detail += "a=" + fmt(alpha, 2) + ": " + describe(s) + " vs " + fmt(target) + "; ";
    }
    return {ok, detail + "tolerance 0.02"};
}

Verdict finite_size_ordering() {
    const auto& u = ensemble(LearningMode::unsupervised, 16, 0.5, 2, 1000);
    const auto& s = ensemble(LearningMode::supervised, 16, 0.5, 2, 1000);
    const double gap = u.mean_error - s.mean_error;
    const double se = combined_se(u, s);
    return {gap > 3.0 * se, "N=16: unsupervised " + describe(u) + ", supervised " + describe(s) +
                                "; gap " + fmt(gap) + " > 3*SE " + fmt(3.0 * se)};
}

Verdict size_trends() {
    const auto& s16 = ensemble(LearningMode::supervised, 16, 0.5, 2, 1000);
    const auto& s96 = ensemble(LearningMode::supervised, 96, 0.5, 2, 1000);
    const auto& u16 = ensemble(LearningMode::unsupervised, 16, 0.5, 2, 1000);
    const auto& u96 = ensemble(LearningMode::unsupervised, 96, 0.5, 2, 1000);
    const double sup_gap = s96.mean_error - s16.mean_error;
    const double uns_gap = u16.mean_error - u96.mean_error;
    const bool ok = sup_gap > 3.0 * combined_se(s16, s96) && uns_gap > 3.0 * combined_se(u16, u96);
    return {ok, "supervised 16->96: " + describe(s16) + " -> " + describe(s96) + " (rise " + fmt(sup_gap) +
                    ", 3SE " + fmt(3.0 * combined_se(s16, s96)) + "); unsupervised 16->96: " + describe(u16) +
                    " -> " + describe(u96) + " (drop " + fmt(uns_gap) + ", 3SE " +
                    fmt(3.0 * combined_se(u16, u96)) + ")"};
}

Verdict fig2_extrapolation() {
    std::vector<SizePoint> points;
    for (std::size_t n : {16u, 24u, 32u, 48u, 96u}) {
        const auto& s = ensemble(LearningMode::unsupervised, n, 0.5, 2, 1000);
        points.push_back({n, s.mean_error, s.std_error});
    }
    const FitResult fit = extrapolate_to_infinite_n(points);
    const double target = asymptotic_error(0.5);
    const bool ok = std::abs(fit.intercept - target) <= 0.01;
    return {ok, "intercept " + fmt(fit.intercept) + "+-" + fmt(fit.intercept_err) + ", slope " + fmt(fit.slope) +
                    "+-" + fmt(fit.slope_err) + "; |intercept - " + fmt(target, 4) + "| <= 0.01"};
}

Verdict fig3_context() {
    bool ok = true;
    std::string detail;
    for (double alpha : {0.5, 1.0}) {
        const auto& s = ensemble(LearningMode::unsupervised, 96, alpha, 4, 200);
        const double target = asymptotic_error(alpha);
        ok = ok && s.valid && std::abs(s.mean_error - target) <= 0.03;
        detail += "C=4 a=" + fmt(alpha, 2) + ": " + describe(s) + " vs " + fmt(target) + "; ";
    }
    return {ok, detail + "tolerance 0.03"};
}

Verdict consensus_property() {
    const auto& s = ensemble(LearningMode::unsupervised, 16, 0.5, 2, 1000);
    std::string seeds;
    for (auto seed : s.non_consensus_seeds) seeds += " " + std::to_string(seed);
    return {s.n_frozen == 1000 && s.consensus_rate >= 0.99,
            "frozen " + std::to_string(s.n_frozen) + "/1000, consensus_rate " + fmt(s.consensus_rate, 4) +
                " (>= 0.99); violating seeds:" + (seeds.empty() ? " none" : seeds)};
}

Verdict property_suites() {
    std::vector<std::string> failures;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    // Row-sum conservation, absorption monotonicity and binary-at-freeze over both rules.
    for (auto mode : {LearningMode::unsupervised, LearningMode::supervised}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng rng(seed);
            GameConfig cfg;
            cfg.n_objects = 6 + seed % 5;
            cfg.n_words = 2 + seed % 4;
            cfg.context_size = 1 + seed % 3;
            cfg.resolution = 40;
            cfg.mode = mode;
            auto a = VerbalizationMatrix::random(cfg.n_objects, cfg.n_words, cfg.resolution, rng);
            auto b = VerbalizationMatrix::random(cfg.n_objects, cfg.n_words, cfg.resolution, rng);
            std::vector<Count> zeros_a;
            std::uint64_t e = 0;
            for (; e < 2'000'000 && !(a.is_frozen() && b.is_frozen()); ++e) {
                const auto fa = a.frozen_rows();
                const auto fb = b.frozen_rows();
                const auto before_a = std::vector<Count>(a.counts().begin(), a.counts().end());
                auto& speaker = e % 2 == 0 ? a : b;
                auto& hearer = e % 2 == 0 ? b : a;
                if (mode == LearningMode::unsupervised) {
                    unsupervised_episode(speaker, hearer, cfg, rng);
                } else {
                    supervised_episode(speaker, hearer, cfg, rng);
                }
                check(a.frozen_rows() >= fa && b.frozen_rows() >= fb, "absorption monotonicity");
                for (std::size_t i = 0; i < before_a.size(); ++i) {
                    if (before_a[i] == 0 && a.counts()[i] != 0) failures.push_back("zero entry revived");
                }
                for (std::uint32_t n = 0; n < cfg.n_objects; ++n) {
                    const auto ra = a.row(ObjectId{n});
                    const auto rb = b.row(ObjectId{n});
                    check(std::accumulate(ra.begin(), ra.end(), 0u) == cfg.resolution &&
                              std::accumulate(rb.begin(), rb.end(), 0u) == cfg.resolution,
                          "row-sum conservation");
                }
            }
            const bool frozen = a.is_frozen() && b.is_frozen();
            if (mode == LearningMode::unsupervised) check(frozen, "unsupervised game froze");
            if (frozen)
                for (std::size_t i = 0; i < a.counts().size(); ++i) {
                check(a.counts()[i] == 0 || a.counts()[i] == cfg.resolution, "binary at freeze");
            }
        }
    }

    // H_u identity and restricted-sum identity over all binary lexicons with N, H <= 4.
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t h = 1; h <= 4; ++h) {
            std::size_t total = 1;
            for (std::size_t i = 0; i < n; ++i) total *= h;
            for (std::size_t code = 0; code < total; ++code) {
                std::vector<std::uint32_t> words(n);
                for (std::size_t i = 0, c = code; i < n; ++i, c /= h) words[i] = static_cast<std::uint32_t>(c % h);
                const auto report = accuracy_report(words, h);
                const std::set<std::uint32_t> distinct(words.begin(), words.end());
                check(report.used_words == Rational(static_cast<std::int64_t>(distinct.size())), "H_u identity");
                std::map<std::uint32_t, Rational> per_word;
                for (std::size_t i = 0; i < n; ++i) per_word[words[i]] += report.per_object_accuracy[i];
                for (const auto& [w, sum] : per_word) check(sum == Rational(1), "restricted-sum identity");
            }
        }
    }

    // Worker-count determinism of the CSV bytes.
    const auto dir = std::filesystem::temp_directory_path() / "lexiboot_acceptance";
    std::filesystem::create_directories(dir);
    std::string csv[2];
    const char* lanes[2] = {"1", "4"};
    for (int i = 0; i < 2; ++i) {
        const auto path = (dir / ("workers" + std::string(lanes[i]) + ".csv")).string();
        std::ostringstream out, err;
        const int code = cli::run({"sweep", "--alphas", "0.25,0.5,1", "--objects", "12,16", "--mode",
                                   "unsupervised,supervised", "--resolution", "500", "--samples", "24",
                                   "--seed", "5", "--workers", lanes[i], "--out", path},
                                  out, err);
        check(code == 0, "sweep ran");
        std::ifstream f(path, std::ios::binary);
        std::ostringstream bytes;
        bytes << f.rdbuf();
        csv[i] = bytes.str();
    }
    check(!csv[0].empty() && csv[0] == csv[1], "worker-count determinism");

    std::set<std::string> unique(failures.begin(), failures.end());
    std::string detail = unique.empty() ? "all properties hold" : "violated:";
    for (const auto& f : unique) detail += " [" + f + "]";
    return {unique.empty(),
            detail + " (row sums, absorption, binary-at-freeze, H_u, restricted sum, workers 1 vs 4 CSV)"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "analytic anchor", analytic_anchor},
        {2, "occupancy oracle", occupancy_oracle},
        {3, "random-assignment Monte Carlo", random_assignment},
        {4, "convergence to eps_r at N=96, C=2", fig1_convergence},
        {5, "finite-size ordering supervised < unsupervised", finite_size_ordering},
        {6, "size trends", size_trends},
        {7, "1/N extrapolation", fig2_extrapolation},
        {8, "context-size robustness C=4", fig3_context},
        {9, "consensus property", consensus_property},
        {10, "property suites", property_suites},
    };

    std::printf("acceptance suite: %u worker(s), master seed %llu, M=%u\n", workers(),
                static_cast<unsigned long long>(kMasterSeed), kResolution);
    int failed = 0;
    std::vector<std::string> summary;
    for (const auto& c : criteria) {
        std::printf("[ .. ] %2d %s\n", c.id, c.name);
        std::fflush(stdout);
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict v = c.run();
        const std::string line = std::string(v.pass ? "[PASS] " : "[FAIL] ") + (c.id < 10 ? " " : "") +
                                 std::to_string(c.id) + " " + c.name + ": " + v.detail + " (" +
                                 fmt(seconds_since(t0), 1) + "s)";
        std::printf("%s\n", line.c_str());
        std::fflush(stdout);
        summary.push_back(line);
        failed += v.pass ? 0 : 1;
    }
    std::printf("\n==== summary ====\n");
    for (const auto& line : summary) std::printf("%s\n", line.c_str());
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
