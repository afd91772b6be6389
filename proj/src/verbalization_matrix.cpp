#include "lexiboot/verbalization_matrix.hpp"

#include <algorithm>
#include <string>

#include "lexiboot/errors.hpp"

namespace lexiboot {

VerbalizationMatrix::VerbalizationMatrix(std::size_t n_objects, std::size_t n_words, Count resolution)
    : n_objects_(n_objects),
      n_words_(n_words),
      resolution_(resolution),
      counts_(n_objects * n_words, 0),
      support_(n_objects * n_words, 0),
      support_pos_(n_objects * n_words, 0),
      support_size_(n_objects, 0),
      row_max_(n_objects, 0),
      leader_(n_objects, kTied),
      leader_valid_(n_objects, 0) {
    if (n_objects == 0 || n_words == 0 || resolution == 0) {
        throw ConfigError("verbalization matrix needs N >= 1, H >= 1 and M >= 1 (got N=" +
                          std::to_string(n_objects) + ", H=" + std::to_string(n_words) +
                          ", M=" + std::to_string(resolution) + ")");
    }
}

VerbalizationMatrix VerbalizationMatrix::random(std::size_t n_objects, std::size_t n_words,
                                                Count resolution, Rng& rng) {
    VerbalizationMatrix m(n_objects, n_words, resolution);
    // Sequential conditional binomials give an exact multinomial sample per row.
    for (std::size_t n = 0; n < n_objects; ++n) {
        Count remaining = resolution;
        Count* row = m.counts_.data() + n * n_words;
        for (std::size_t h = 0; h + 1 < n_words && remaining > 0; ++h) {
            const double p = 1.0 / static_cast<double>(n_words - h);
            const Count k = std::binomial_distribution<Count>(remaining, p)(rng);
            row[h] = k;
            remaining -= k;
        }
        row[n_words - 1] += remaining;
    }
    m.rebuild_bookkeeping();
    return m;
}

VerbalizationMatrix VerbalizationMatrix::from_counts(std::size_t n_objects, std::size_t n_words,
                                                     Count resolution,
                                                     std::span<const Count> counts) {
    VerbalizationMatrix m(n_objects, n_words, resolution);
    if (counts.size() != n_objects * n_words) {
        throw ConfigError("count table has " + std::to_string(counts.size()) + " entries, expected " +
                          std::to_string(n_objects * n_words));
    }
    for (std::size_t n = 0; n < n_objects; ++n) {
        std::uint64_t sum = 0;
        for (std::size_t h = 0; h < n_words; ++h) sum += counts[n * n_words + h];
        if (sum != resolution) {
            throw ConfigError("row " + std::to_string(n) + " sums to " + std::to_string(sum) +
                              ", expected " + std::to_string(resolution));
        }
    }
    std::copy(counts.begin(), counts.end(), m.counts_.begin());
    m.rebuild_bookkeeping();
    return m;
}

void VerbalizationMatrix::rebuild_bookkeeping() {
    frozen_rows_ = 0;
    for (std::size_t n = 0; n < n_objects_; ++n) {
        std::uint32_t size = 0;
        for (std::size_t h = 0; h < n_words_; ++h) {
            if (counts_[n * n_words_ + h] > 0) {
                support_[n * n_words_ + size] = static_cast<std::uint32_t>(h);
                support_pos_[n * n_words_ + h] = size;
                ++size;
            }
        }
        support_size_[n] = size;
        if (size == 1) ++frozen_rows_;
        leader_valid_[n] = 0;
    }
}

void VerbalizationMatrix::remove_from_support(std::size_t row, std::uint32_t word) {
    const std::size_t base = row * n_words_;
    const std::uint32_t slot = support_pos_[base + word];
    const std::uint32_t last = --support_size_[row];
    const std::uint32_t moved = support_[base + last];
    support_[base + slot] = moved;
    support_pos_[base + moved] = slot;
    if (last == 1) ++frozen_rows_;
}

std::optional<WordId> VerbalizationMatrix::binary_word(ObjectId object) const {
    if (!is_row_binary(object)) return std::nullopt;
    return WordId{support_[object.value * n_words_]};
}

void VerbalizationMatrix::refresh_leader(std::size_t row) const {
    const std::size_t base = row * n_words_;
    Count best = 0;
    std::uint32_t ties = 0;
    std::uint32_t leader = kTied;
    for (std::uint32_t i = 0; i < support_size_[row]; ++i) {
        const std::uint32_t h = support_[base + i];
        const Count c = counts_[base + h];
        if (c > best) {
            best = c;
            ties = 1;
            leader = h;
        } else if (c == best) {
            ++ties;
        }
    }
    row_max_[row] = best;
    leader_[row] = ties == 1 ? leader : kTied;
    leader_valid_[row] = 1;
}

std::vector<WordId> VerbalizationMatrix::row_argmax(ObjectId object) const {
    const auto r = row(object);
    const Count best = *std::max_element(r.begin(), r.end());
    std::vector<WordId> out;
    for (std::size_t h = 0; h < n_words_; ++h) {
        if (r[h] == best) out.push_back(WordId{static_cast<std::uint32_t>(h)});
    }
    return out;
}

WordId VerbalizationMatrix::speak(ObjectId object, Rng& rng) const {
    const std::size_t n = object.value;
    if (!leader_valid_[n]) refresh_leader(n);
    if (leader_[n] != kTied) return WordId{leader_[n]};

    // Shared maximum: pick uniformly among maximizers in ascending word order so the
    // result depends only on the counts and the draw.
    const std::size_t base = n * n_words_;
    std::vector<std::uint32_t> tied;
    for (std::uint32_t i = 0; i < support_size_[n]; ++i) {
        const std::uint32_t h = support_[base + i];
        if (counts_[base + h] == row_max_[n]) tied.push_back(h);
    }
    std::sort(tied.begin(), tied.end());
    return WordId{tied[uniform_index(rng, static_cast<std::uint32_t>(tied.size()))]};
}

ObjectId VerbalizationMatrix::interpret(WordId word, std::span<const ObjectId> candidates,
                                        Rng& rng) const {
    if (candidates.empty()) throw UsageError("interpret: empty candidate list");
    Count best = 0;
    std::uint32_t ties = 0;
    for (const ObjectId c : candidates) {
        const Count v = count(c, word);
        if (ties == 0 || v > best) {
            best = v;
            ties = 1;
        } else if (v == best) {
            ++ties;
        }
    }
    std::uint32_t pick = ties == 1 ? 0 : uniform_index(rng, ties);
    for (const ObjectId c : candidates) {
        if (count(c, word) == best && pick-- == 0) return c;
    }
    return candidates.front();  // unreachable
}

WordId VerbalizationMatrix::draw_positive_word(ObjectId object, Rng& rng) const {
    const std::size_t n = object.value;
    const std::uint32_t size = support_size_[n];
    const std::uint32_t i = size == 1 ? 0 : uniform_index(rng, size);
    return WordId{support_[n * n_words_ + i]};
}

std::optional<WordId> VerbalizationMatrix::draw_interior_word(ObjectId object, Rng& rng) const {
    // A non-binary row has no entry at M, so its interior words are exactly its
    // positive words.
    if (is_row_binary(object)) return std::nullopt;
    return draw_positive_word(object, rng);
}

bool VerbalizationMatrix::apply_transfer(ObjectId object, WordId inc_word, WordId dec_word) {
    const std::size_t n = object.value;
    if (inc_word == dec_word || support_size_[n] == 1) return false;
    const std::size_t base = n * n_words_;
    Count& inc = counts_[base + inc_word.value];
    Count& dec = counts_[base + dec_word.value];
    if (inc == 0 || dec == 0) return false;

    ++inc;
    --dec;

    if (leader_valid_[n]) {
        if (inc > row_max_[n]) {
            row_max_[n] = inc;
            leader_[n] = inc_word.value;
        } else if (inc == row_max_[n]) {
            leader_[n] = kTied;
        }
        if (dec + 1 == row_max_[n]) leader_valid_[n] = 0;
    }
    if (dec == 0) remove_from_support(n, dec_word.value);
    return true;
}

}  // namespace lexiboot
