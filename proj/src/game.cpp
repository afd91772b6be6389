#include "lexiboot/game.hpp"

#include <algorithm>
#include <string>

#include "lexiboot/errors.hpp"
#include "lexiboot/measures.hpp"

namespace lexiboot {

std::string_view to_string(LearningMode mode) {
    return mode == LearningMode::supervised ? "supervised" : "unsupervised";
}

LearningMode parse_learning_mode(std::string_view text) {
    if (text == "unsupervised") return LearningMode::unsupervised;
    if (text == "supervised") return LearningMode::supervised;
    throw ConfigError("unknown learning mode '" + std::string(text) +
                      "' (expected unsupervised or supervised)");
}

void GameConfig::validate() const {
    if (n_objects < 1) throw ConfigError("number of objects must be >= 1");
    if (n_words < 1) throw ConfigError("number of words must be >= 1");
    if (context_size < 1 || context_size > n_objects) {
        throw ConfigError("context size must satisfy 1 <= C <= N (got C=" +
                          std::to_string(context_size) + ", N=" + std::to_string(n_objects) + ")");
    }
    if (resolution < 1) throw ConfigError("resolution M must be >= 1");
    if (max_episodes < 1) throw ConfigError("max_episodes must be >= 1");
}

void sample_context(std::size_t n_objects, std::size_t context_size, Rng& rng, Context& out) {
    if (context_size == 0 || context_size > n_objects) {
        throw ConfigError("context size must satisfy 1 <= C <= N (got C=" +
                          std::to_string(context_size) + ", N=" + std::to_string(n_objects) + ")");
    }
    out.objects.clear();
    const auto n = static_cast<std::uint32_t>(n_objects);
    if (2 * context_size <= n_objects) {
        // Rejection keeps small contexts allocation-free.
        while (out.objects.size() < context_size) {
            const ObjectId candidate{uniform_index(rng, n)};
            if (std::find(out.objects.begin(), out.objects.end(), candidate) == out.objects.end()) {
                out.objects.push_back(candidate);
            }
        }
        return;
    }
    // Partial Fisher-Yates for large contexts.
    std::vector<std::uint32_t> pool(n_objects);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < context_size; ++i) {
        const std::uint32_t j = i + uniform_index(rng, n - i);
        std::swap(pool[i], pool[j]);
        out.objects.push_back(ObjectId{pool[i]});
    }
}

Context sample_context(std::size_t n_objects, std::size_t context_size, Rng& rng) {
    Context context;
    context.objects.reserve(context_size);
    sample_context(n_objects, context_size, rng, context);
    return context;
}

std::size_t apply_unsupervised_update(VerbalizationMatrix& hearer, std::span<const ObjectId> context,
                                      WordId word, std::span<const WordId> decrement_words) {
    if (context.size() != decrement_words.size()) {
        throw UsageError("one decrement word per context object is required");
    }
    std::size_t applied = 0;
    for (std::size_t i = 0; i < context.size(); ++i) {
        applied += hearer.apply_transfer(context[i], word, decrement_words[i]) ? 1 : 0;
    }
    return applied;
}

void apply_supervised_update(VerbalizationMatrix& speaker, VerbalizationMatrix& hearer,
                             ObjectId topic, ObjectId guess, WordId word,
                             std::optional<WordId> speaker_word, std::optional<WordId> hearer_word) {
    if (guess == topic) {
        if (speaker_word) speaker.apply_transfer(topic, word, *speaker_word);
        if (hearer_word) hearer.apply_transfer(topic, word, *hearer_word);
    } else {
        if (speaker_word) speaker.apply_transfer(topic, *speaker_word, word);
        if (hearer_word) hearer.apply_transfer(guess, *hearer_word, word);
    }
}

namespace {

struct EpisodeScratch {
    Context context;
    std::vector<WordId> decrements;
};

EpisodeRecord unsupervised_step(const VerbalizationMatrix& speaker, VerbalizationMatrix& hearer,
                                const GameConfig& config, Rng& rng, EpisodeScratch& scratch) {
    sample_context(config.n_objects, config.context_size, rng, scratch.context);
    const auto& objects = scratch.context.objects;
    const ObjectId topic = objects[uniform_index(rng, static_cast<std::uint32_t>(objects.size()))];
    const WordId word = speaker.speak(topic, rng);

    scratch.decrements.clear();
    for (const ObjectId n : objects) scratch.decrements.push_back(hearer.draw_positive_word(n, rng));
    apply_unsupervised_update(hearer, objects, word, scratch.decrements);

    EpisodeRecord record;
    record.topic = topic;
    record.word = word;
    return record;
}

EpisodeRecord supervised_step(VerbalizationMatrix& speaker, VerbalizationMatrix& hearer,
                              const GameConfig& config, Rng& rng, EpisodeScratch& scratch) {
    sample_context(config.n_objects, config.context_size, rng, scratch.context);
    const auto& objects = scratch.context.objects;
    const ObjectId topic = objects[uniform_index(rng, static_cast<std::uint32_t>(objects.size()))];
    const WordId word = speaker.speak(topic, rng);
    const ObjectId guess = hearer.interpret(word, objects, rng);
    const bool success = guess == topic;

    std::optional<WordId> speaker_word;
    std::optional<WordId> hearer_word;
    if (success) {
        speaker_word = speaker.draw_positive_word(topic, rng);
        hearer_word = hearer.draw_positive_word(topic, rng);
    } else {
        speaker_word = speaker.draw_interior_word(topic, rng);
        hearer_word = hearer.draw_interior_word(guess, rng);
    }
    apply_supervised_update(speaker, hearer, topic, guess, word, speaker_word, hearer_word);

    EpisodeRecord record;
    record.topic = topic;
    record.word = word;
    record.hearer_guess = guess;
    record.success = success;
    return record;
}

}  // namespace

EpisodeRecord unsupervised_episode(const VerbalizationMatrix& speaker, VerbalizationMatrix& hearer,
                                   const GameConfig& config, Rng& rng) {
    EpisodeScratch scratch;
    return unsupervised_step(speaker, hearer, config, rng, scratch);
}

EpisodeRecord supervised_episode(VerbalizationMatrix& speaker, VerbalizationMatrix& hearer,
                                 const GameConfig& config, Rng& rng) {
    EpisodeScratch scratch;
    return supervised_step(speaker, hearer, config, rng, scratch);
}

GameResult run_game(const GameConfig& config, Rng& rng) {
    config.validate();
    GameResult result{
        VerbalizationMatrix::random(config.n_objects, config.n_words, config.resolution, rng),
        VerbalizationMatrix::random(config.n_objects, config.n_words, config.resolution, rng),
    };
    EpisodeScratch scratch;
    scratch.context.objects.reserve(config.context_size);
    scratch.decrements.reserve(config.context_size);

    auto& a = result.matrix_i;
    auto& b = result.matrix_j;
    std::uint64_t episode = 0;
    while (!(a.is_frozen() && b.is_frozen()) && episode < config.max_episodes) {
        const bool i_speaks = (episode & 1U) == 0;
        auto& speaker = i_speaks ? a : b;
        auto& hearer = i_speaks ? b : a;
        if (config.mode == LearningMode::unsupervised) {
            unsupervised_step(speaker, hearer, config, rng, scratch);
        } else {
            supervised_step(speaker, hearer, config, rng, scratch);
        }
        ++episode;
    }
    result.episodes = episode;
    result.frozen = a.is_frozen() && b.is_frozen();
    result.consensus = consensus_distance(a, b) == 0.0;
    return result;
}

GameResult run_game(const GameConfig& config) {
    Rng rng(config.seed);
    return run_game(config, rng);
}

}  // namespace lexiboot
