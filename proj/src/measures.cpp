#include "lexiboot/measures.hpp"

#include <cmath>
#include <string>

#include "lexiboot/errors.hpp"

namespace lexiboot {

CommunicationReport accuracy_report(const std::vector<std::uint32_t>& word_of_object,
                                    std::size_t n_words) {
    if (word_of_object.empty()) throw UsageError("accuracy_report: no objects");
    std::vector<std::int64_t> objects_per_word(n_words, 0);
    for (const std::uint32_t w : word_of_object) {
        if (w >= n_words) throw UsageError("accuracy_report: word index out of range");
        ++objects_per_word[w];
    }

    CommunicationReport report;
    report.per_object_accuracy.reserve(word_of_object.size());
    for (const std::uint32_t w : word_of_object) {
        report.per_object_accuracy.emplace_back(1, objects_per_word[w]);
    }
    for (const Rational& phi : report.per_object_accuracy) report.used_words += phi;
    report.mean_accuracy = report.used_words / static_cast<std::int64_t>(word_of_object.size());
    report.error = Rational(1) - report.mean_accuracy;
    return report;
}

CommunicationReport accuracy_report(const VerbalizationMatrix& matrix) {
    std::vector<std::uint32_t> words(matrix.n_objects());
    for (std::size_t n = 0; n < matrix.n_objects(); ++n) {
        const auto w = matrix.binary_word(ObjectId{static_cast<std::uint32_t>(n)});
        if (!w) {
            throw NotFrozenError("accuracy is defined only for frozen matrices (row " +
                                 std::to_string(n) + " is not binary)");
        }
        words[n] = w->value;
    }
    return accuracy_report(words, matrix.n_words());
}

double optimal_error(double alpha) {
    if (!(alpha >= 0.0)) throw DomainError("alpha must be non-negative");
    return alpha >= 1.0 ? 0.0 : 1.0 - alpha;
}

double consensus_distance(const VerbalizationMatrix& a, const VerbalizationMatrix& b) {
    if (a.n_objects() != b.n_objects() || a.n_words() != b.n_words()) {
        throw UsageError("consensus_distance: matrices have different shapes");
    }
    std::size_t differing = 0;
    for (std::size_t n = 0; n < a.n_objects(); ++n) {
        const ObjectId object{static_cast<std::uint32_t>(n)};
        const auto wa = a.binary_word(object);
        const auto wb = b.binary_word(object);
        if (wa && wb) {
            differing += *wa != *wb ? 1 : 0;
        } else {
            differing += a.row_argmax(object) != b.row_argmax(object) ? 1 : 0;
        }
    }
    return static_cast<double>(differing) / static_cast<double>(a.n_objects());
}

}  // namespace lexiboot
