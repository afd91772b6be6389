#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexiboot/types.hpp"
#include "lexiboot/verbalization_matrix.hpp"

namespace lexiboot {

enum class LearningMode { unsupervised, supervised };

std::string_view to_string(LearningMode mode);
// Throws ConfigError on anything other than "unsupervised" / "supervised".
LearningMode parse_learning_mode(std::string_view text);

inline constexpr std::uint64_t kDefaultMaxEpisodes = 2'000'000'000ULL;

struct GameConfig {
    std::size_t n_objects = 1;
    std::size_t n_words = 1;
    std::size_t context_size = 1;
    Count resolution = 10'000;
    LearningMode mode = LearningMode::unsupervised;
    std::uint64_t max_episodes = kDefaultMaxEpisodes;
    std::uint64_t seed = 0;

    double alpha() const { return static_cast<double>(n_words) / static_cast<double>(n_objects); }
    // Throws ConfigError unless N, H >= 1, 1 <= C <= N, M >= 1 and max_episodes >= 1.
    void validate() const;

    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

struct Context {
    std::vector<ObjectId> objects;
};

enum class Agent { I, J };

struct EpisodeRecord {
    Agent speaker = Agent::I;
    ObjectId topic;
    WordId word;
    std::optional<ObjectId> hearer_guess;  // supervised only
    std::optional<bool> success;           // supervised only
};

struct GameResult {
    VerbalizationMatrix matrix_i;
    VerbalizationMatrix matrix_j;
    std::uint64_t episodes = 0;
    bool frozen = false;
    bool consensus = false;
};

// C distinct objects, uniform over ordered C-tuples (hence over C-subsets).
// Throws ConfigError when C > N or C == 0.
Context sample_context(std::size_t n_objects, std::size_t context_size, Rng& rng);
void sample_context(std::size_t n_objects, std::size_t context_size, Rng& rng, Context& out);

// Cross-situational rule with the word draws already made: for every context
// object i, one unit moves from decrement_words[i] to `word` in the hearer's row.
// Returns the number of transfers that went through.
std::size_t apply_unsupervised_update(VerbalizationMatrix& hearer, std::span<const ObjectId> context,
                                      WordId word, std::span<const WordId> decrement_words);

// Feedback rule with the random words already drawn. On success both agents move
// mass onto `word` in row `topic`; on failure the speaker's row `topic` and the
// hearer's row `guess` give up one unit of `word`. An absent random word skips
// that agent's update.
void apply_supervised_update(VerbalizationMatrix& speaker, VerbalizationMatrix& hearer,
                             ObjectId topic, ObjectId guess, WordId word,
                             std::optional<WordId> speaker_word, std::optional<WordId> hearer_word);

// One episode of each rule. Random draws are consumed in a fixed order: context,
// topic, production tie-break, interpretation tie-break (supervised), then the
// per-row word draws in context order (speaker before hearer when supervised).
EpisodeRecord unsupervised_episode(const VerbalizationMatrix& speaker, VerbalizationMatrix& hearer,
                                   const GameConfig& config, Rng& rng);
EpisodeRecord supervised_episode(VerbalizationMatrix& speaker, VerbalizationMatrix& hearer,
                                 const GameConfig& config, Rng& rng);

// Plays until both matrices are binary or max_episodes is reached. Agent I speaks
// on even episodes, J on odd ones. Both matrices are initialized from `rng`
// (I first).
GameResult run_game(const GameConfig& config, Rng& rng);
// Same, seeding a fresh generator from config.seed.
GameResult run_game(const GameConfig& config);

}  // namespace lexiboot
