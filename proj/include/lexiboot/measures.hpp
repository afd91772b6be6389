#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "lexiboot/verbalization_matrix.hpp"

namespace lexiboot {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

// Communication quality of a frozen lexicon. Exact values plus double views.
struct CommunicationReport {
    std::vector<Rational> per_object_accuracy;  // phi_n = 1 / #objects sharing n's word
    Rational mean_accuracy;                     // phi
    Rational error;                             // 1 - phi
    Rational used_words;                        // H_u = sum of phi_n

    double mean_accuracy_value() const { return to_double(mean_accuracy); }
    double error_value() const { return to_double(error); }
    double used_words_value() const { return to_double(used_words); }
};

// Throws NotFrozenError if any row of the matrix is not binary.
CommunicationReport accuracy_report(const VerbalizationMatrix& matrix);

// Same measure for an explicit object -> word assignment.
CommunicationReport accuracy_report(const std::vector<std::uint32_t>& word_of_object,
                                    std::size_t n_words);

// Lowest error any lexicon can reach with alpha = H/N: max(0, 1 - alpha).
// Throws DomainError for negative or NaN alpha.
double optimal_error(double alpha);

// Fraction of rows whose argmax word sets differ. Throws UsageError on shape mismatch.
double consensus_distance(const VerbalizationMatrix& a, const VerbalizationMatrix& b);

}  // namespace lexiboot
