#include "lexiboot/occupancy.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lexiboot/errors.hpp"
#include "lexiboot/measures.hpp"

namespace lexiboot {

namespace mp = boost::multiprecision;

namespace {

double rational_to_double(const BigRational& r) {
    using Float = mp::cpp_bin_float_100;
    const Float value = Float(mp::numerator(r)) / Float(mp::denominator(r));
    return value.convert_to<double>();
}

}  // namespace

double OccupancyDistribution::mean() const {
    return rational_to_double(exact_mean());
}

BigRational OccupancyDistribution::exact_mean() const {
    BigRational sum = 0;
    for (std::size_t m = 0; m < exact.size(); ++m) sum += exact[m] * m;
    return sum;
}

OccupancyDistribution exact_unused_distribution(std::size_t n_objects, std::size_t n_words) {
    if (n_objects < 1 || n_words < 1) throw ConfigError("occupancy needs N >= 1 and H >= 1");
    if (n_objects > kExactOccupancyLimit || n_words > kExactOccupancyLimit) {
        throw ConfigError("exact occupancy is limited to N, H <= " +
                          std::to_string(kExactOccupancyLimit) + "; use the Poisson limit instead");
    }
    const std::size_t N = n_objects;
    const std::size_t H = n_words;

    // stirling[k] = S(n, k) for the current n; only k <= H is needed.
    std::vector<mp::cpp_int> stirling(H + 1, 0);
    stirling[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t k = std::min(n, H); k >= 1; --k) {
            stirling[k] = stirling[k] * k + stirling[k - 1];
        }
        stirling[0] = 0;
    }

    // Word-side factors: C(H, m) * (H - m)! = H! / m!
    mp::cpp_int h_factorial = 1;
    for (std::size_t i = 2; i <= H; ++i) h_factorial *= i;
    const mp::cpp_int total = mp::pow(mp::cpp_int(H), static_cast<unsigned>(N));

    OccupancyDistribution dist;
    dist.n_objects = N;
    dist.n_words = H;
    dist.exact.resize(H + 1);
    dist.probabilities.resize(H + 1);
    mp::cpp_int falling = h_factorial;  // H! / m!
    for (std::size_t m = 0; m <= H; ++m) {
        if (m > 0) falling /= m;
        const std::size_t used = H - m;
        const mp::cpp_int ways = used <= N ? falling * stirling[used] : mp::cpp_int(0);
        dist.exact[m] = BigRational(ways, total);
        dist.probabilities[m] = rational_to_double(dist.exact[m]);
    }
    return dist;
}

double poisson_lambda(std::size_t n_objects, std::size_t n_words) {
    const double h = static_cast<double>(n_words);
    return h * std::exp(-static_cast<double>(n_objects) / h);
}

double poisson_probability(std::size_t m, double lambda) {
    if (lambda <= 0.0) return m == 0 ? 1.0 : 0.0;
    const double k = static_cast<double>(m);
    return std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
}

double poisson_limit(std::size_t m, std::size_t n_objects, std::size_t n_words) {
    if (n_words < 1) throw ConfigError("Poisson limit needs H >= 1");
    return poisson_probability(m, poisson_lambda(n_objects, n_words));
}

double asymptotic_error(double alpha) {
    if (!(alpha >= 0.0)) throw DomainError("alpha must be non-negative");
    if (alpha == 0.0) return 1.0;
    return 1.0 - alpha + alpha * std::exp(-1.0 / alpha);
}

double exact_expected_error(std::size_t n_objects, std::size_t n_words) {
    if (n_objects < 1 || n_words < 1) throw ConfigError("occupancy needs N >= 1 and H >= 1");
    const double h = static_cast<double>(n_words);
    const double n = static_cast<double>(n_objects);
    // (1 - 1/H)^N via log1p keeps precision for large H.
    const double unused = n_words == 1 ? 0.0 : h * std::exp(n * std::log1p(-1.0 / h));
    return 1.0 - (h - unused) / n;
}

double random_assignment_sample(std::size_t n_objects, std::size_t n_words, Rng& rng) {
    if (n_objects < 1 || n_words < 1) throw ConfigError("occupancy needs N >= 1 and H >= 1");
    std::vector<std::uint32_t> words(n_objects);
    for (auto& w : words) w = uniform_index(rng, static_cast<std::uint32_t>(n_words));
    return accuracy_report(words, n_words).error_value();
}

}  // namespace lexiboot
