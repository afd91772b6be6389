#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lexiboot/types.hpp"

namespace lexiboot {

/**
 * Object-to-word association table of one agent.
 *
 * Entry (n, h) holds an integer count in [0, M]; the association probability
 * is count / M and every row sums to M. Entries that reach 0 are absorbed and
 * never become positive again; a row whose whole mass sits on one word is
 * binary (frozen) and never changes again.
 *
 * Besides the counts, each row keeps the list of its positive words (for O(1)
 * uniform draws) and a cached leader for production. A counter of binary rows
 * makes the freeze check constant-time.
 */
class VerbalizationMatrix {
public:
    // Independent multinomial(M, uniform over H) row per object.
    static VerbalizationMatrix random(std::size_t n_objects, std::size_t n_words, Count resolution,
                                      Rng& rng);

    // Builds a matrix from explicit row-major counts. Throws ConfigError if a row
    // does not sum to `resolution` or the table has the wrong size.
    static VerbalizationMatrix from_counts(std::size_t n_objects, std::size_t n_words,
                                           Count resolution, std::span<const Count> counts);

    std::size_t n_objects() const { return n_objects_; }
    std::size_t n_words() const { return n_words_; }
    Count resolution() const { return resolution_; }

    Count count(ObjectId object, WordId word) const {
        return counts_[object.value * n_words_ + word.value];
    }
    double probability(ObjectId object, WordId word) const {
        return static_cast<double>(count(object, word)) / resolution_;
    }
    std::span<const Count> row(ObjectId object) const {
        return {counts_.data() + object.value * n_words_, n_words_};
    }
    std::span<const Count> counts() const { return counts_; }

    // Number of words with a positive count in the row.
    std::size_t support_size(ObjectId object) const { return support_size_[object.value]; }
    bool is_row_binary(ObjectId object) const { return support_size_[object.value] == 1; }
    std::size_t frozen_rows() const { return frozen_rows_; }
    bool is_frozen() const { return frozen_rows_ == n_objects_; }

    // The unique word holding all the mass of a binary row.
    std::optional<WordId> binary_word(ObjectId object) const;

    // Production: a word with the largest count in the row, ties uniform at random.
    // Draws from `rng` only when the maximum is shared.
    WordId speak(ObjectId object, Rng& rng) const;

    // All words attaining the row maximum, ascending.
    std::vector<WordId> row_argmax(ObjectId object) const;

    // Interpretation: the candidate with the largest count in column `word`,
    // ties uniform at random over the tied candidates in list order.
    // Throws UsageError on an empty candidate list.
    ObjectId interpret(WordId word, std::span<const ObjectId> candidates, Rng& rng) const;

    // Uniform draw among words with positive count in the row. Never empty.
    WordId draw_positive_word(ObjectId object, Rng& rng) const;

    // Uniform draw among words with count strictly inside (0, M); empty when the
    // row is binary.
    std::optional<WordId> draw_interior_word(ObjectId object, Rng& rng) const;

    // Moves one unit of mass from `dec_word` to `inc_word` within a row.
    // Skipped entirely (returns false) when the words coincide, the row is binary,
    // or either endpoint sits at 0.
    bool apply_transfer(ObjectId object, WordId inc_word, WordId dec_word);

    // Equality of dimensions and counts; bookkeeping order is not compared.
    friend bool operator==(const VerbalizationMatrix& a, const VerbalizationMatrix& b) {
        return a.n_objects_ == b.n_objects_ && a.n_words_ == b.n_words_ &&
               a.resolution_ == b.resolution_ && a.counts_ == b.counts_;
    }

private:
    static constexpr std::uint32_t kTied = 0xffffffffu;

    VerbalizationMatrix(std::size_t n_objects, std::size_t n_words, Count resolution);
    void rebuild_bookkeeping();
    void remove_from_support(std::size_t row, std::uint32_t word);
    void refresh_leader(std::size_t row) const;

    std::size_t n_objects_ = 0;
    std::size_t n_words_ = 0;
    Count resolution_ = 0;
    std::vector<Count> counts_;

    // Row-major: support_[row * H + i] for i < support_size_[row] lists the positive
    // words of the row; support_pos_[row * H + word] is the word's slot in that list.
    std::vector<std::uint32_t> support_;
    std::vector<std::uint32_t> support_pos_;
    std::vector<std::uint32_t> support_size_;
    std::size_t frozen_rows_ = 0;

    // Production cache. When leader_valid_ is set, row_max_ is the row maximum and
    // leader_ the unique maximizer (kTied when shared). Increments keep it exact;
    // decrementing a maximizer invalidates it.
    mutable std::vector<Count> row_max_;
    mutable std::vector<std::uint32_t> leader_;
    mutable std::vector<std::uint8_t> leader_valid_;
};

}  // namespace lexiboot
