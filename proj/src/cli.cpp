#include "lexiboot/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lexiboot/errors.hpp"
#include "lexiboot/experiment.hpp"
#include "lexiboot/measures.hpp"
#include "lexiboot/occupancy.hpp"

namespace lexiboot::cli {

namespace {

constexpr const char* kToolVersion = LEXIBOOT_VERSION;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

// Options shared by the simulation subcommands.
struct GameFlags {
    std::vector<std::size_t> objects;
    std::optional<std::size_t> words;
    std::optional<double> alpha;
    std::vector<double> alphas;
    std::size_t context = 2;
    Count resolution = 10'000;
    std::vector<std::string> modes{"unsupervised"};
    std::uint64_t seed = 1;
    std::uint64_t max_episodes = kDefaultMaxEpisodes;
    std::uint64_t samples = 1000;
    unsigned workers = 1;
    std::string out;
    bool gnuplot = false;
    std::string config;
};

void add_common_game_options(CLI::App* cmd, GameFlags& f) {
    cmd->add_option("--context", f.context, "context size C")->capture_default_str();
    cmd->add_option("--resolution", f.resolution, "resolution M (learning rate 1/M)")
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "seed (master seed for ensembles)")->capture_default_str();
    cmd->add_option("--max-episodes", f.max_episodes, "episode cap per game")->capture_default_str();
    cmd->add_option("--config", f.config, "key-value config file; flags override it");
}

void add_ensemble_options(CLI::App* cmd, GameFlags& f) {
    cmd->add_option("--samples", f.samples, "independent games per point")->capture_default_str();
    cmd->add_option("--workers", f.workers, "worker threads (default $LEXIBOOT_WORKERS)");
    cmd->add_option("--out", f.out, "output CSV path");
    cmd->add_flag("--gnuplot", f.gnuplot, "also write a gnuplot script next to the CSV");
}

GameConfig base_config(const GameFlags& f, LearningMode mode) {
    GameConfig c;
    c.context_size = f.context;
    c.resolution = f.resolution;
    c.mode = mode;
    c.max_episodes = f.max_episodes;
    c.seed = f.seed;
    return c;
}

std::string eps_field(const EnsembleStats& s, double value) {
    return s.valid ? format_number(value) : "nan";
}

void write_manifest(const std::string& data_path, const RunManifest& manifest) {
    std::ofstream file(data_path + ".manifest.json");
    if (!file) throw ConfigError("cannot write manifest next to " + data_path);
    file << to_json(manifest).dump(2) << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + path + "'");
    return file;
}

// ---- game ------------------------------------------------------------------

int cmd_game(const GameFlags& f, std::ostream& out) {
    if (f.objects.size() != 1) throw ConfigError("game takes a single --objects value");
    if (f.words && f.alpha) throw ConfigError("give either --words or --alpha, not both");
    if (!f.words && !f.alpha) throw ConfigError("one of --words or --alpha is required");
    if (f.modes.size() != 1) throw ConfigError("game takes a single --mode");

    GameConfig config = base_config(f, parse_learning_mode(f.modes.front()));
    config.n_objects = f.objects.front();
    config.n_words = f.words ? *f.words : words_for_alpha(*f.alpha, config.n_objects);
    config.validate();

    const GameResult game = run_game(config);
    out << "objects: " << config.n_objects << '\n'
        << "words: " << config.n_words << '\n'
        << "alpha: " << format_number(config.alpha()) << '\n'
        << "context: " << config.context_size << '\n'
        << "resolution: " << config.resolution << '\n'
        << "mode: " << to_string(config.mode) << '\n'
        << "seed: " << config.seed << '\n'
        << "episodes: " << game.episodes << '\n'
        << "frozen: " << (game.frozen ? "true" : "false") << '\n'
        << "consensus: " << (game.consensus ? "true" : "false") << '\n'
        << "consensus_distance: "
        << format_number(consensus_distance(game.matrix_i, game.matrix_j)) << '\n';
    if (!game.frozen) {
        out << "eps_I: n/a\neps_J: n/a\nused_words_I: n/a\nused_words_J: n/a\n";
        return kNotFrozen;
    }
    const auto ri = accuracy_report(game.matrix_i);
    const auto rj = accuracy_report(game.matrix_j);
    out << "eps_I: " << format_number(ri.error_value()) << '\n'
        << "eps_J: " << format_number(rj.error_value()) << '\n'
        << "used_words_I: " << format_number(ri.used_words_value()) << '\n'
        << "used_words_J: " << format_number(rj.used_words_value()) << '\n'
        << "eps_optimal: " << format_number(optimal_error(config.alpha())) << '\n'
        << "eps_random: " << format_number(asymptotic_error(config.alpha())) << '\n';
    return kSuccess;
}

// ---- sweep -----------------------------------------------------------------

void write_sweep_gnuplot(const std::string& csv_path, std::ostream& gp) {
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'alpha = H/N'\nset ylabel 'communication error'\n"
       << "eps_r(a) = 1 - a + a*exp(-1/a)\n"
       << "eps_m(a) = a < 1 ? 1 - a : 0\n"
       << "set xrange [0:*]\nset yrange [0:1]\nset samples 400\n"
       << "plot '" << csv_path << "' using 1:8:9 with yerrorbars pt 6 title 'simulation', \\\n"
       << "     eps_r(x) with lines lt 1 title 'random assignment', \\\n"
       << "     eps_m(x) with lines dt 2 title 'optimal'\n";
}

int cmd_sweep(const GameFlags& f, const std::vector<std::string>& args, std::ostream& out) {
    if (f.alphas.empty()) throw ConfigError("--alphas is required");
    if (f.objects.empty()) throw ConfigError("--objects is required");
    if (f.out.empty()) throw ConfigError("--out is required");

    std::vector<LearningMode> modes;
    for (const auto& m : f.modes) modes.push_back(parse_learning_mode(m));
    for (const std::size_t n : f.objects) {
        for (const double a : f.alphas) words_for_alpha(a, n);
        GameConfig probe = base_config(f, modes.front());
        probe.n_objects = n;
        probe.n_words = 1;
        probe.validate();
    }

    RunManifest manifest;
    manifest.command = "sweep";
    manifest.args = args;
    manifest.config = base_config(f, modes.front());
    manifest.n_samples = f.samples;
    manifest.master_seed = f.seed;
    manifest.workers = f.workers;
    manifest.started = utc_timestamp();

    std::ofstream csv = open_output(f.out);
    csv << "alpha,N,H,C,M,mode,samples,mean_eps,se_eps,freeze_rate,consensus_rate,eps_random,"
           "eps_optimal\n";
    for (const LearningMode mode : modes) {
        for (const std::size_t n : f.objects) {
            GameConfig base = base_config(f, mode);
            base.n_objects = n;
            for (const SweepRow& row : sweep_alpha(base, f.alphas, f.samples, f.seed, f.workers)) {
                const EnsembleStats& s = row.stats;
                csv << format_number(row.alpha) << ',' << n << ',' << s.config.n_words << ','
                    << s.config.context_size << ',' << s.config.resolution << ','
                    << to_string(mode) << ',' << s.n_samples << ','
                    << eps_field(s, s.mean_error) << ',' << eps_field(s, s.std_error) << ','
                    << format_number(s.freeze_rate) << ',' << eps_field(s, s.consensus_rate)
                    << ',' << format_number(row.eps_random) << ','
                    << format_number(row.eps_optimal) << '\n';
                out << "alpha=" << format_number(row.alpha) << " N=" << n
                    << " mode=" << to_string(mode) << " eps=" << eps_field(s, s.mean_error)
                    << " +- " << eps_field(s, s.std_error) << '\n';
            }
        }
    }
    csv.close();
    if (f.gnuplot) {
        std::ofstream gp = open_output(f.out + ".gp");
        write_sweep_gnuplot(f.out, gp);
    }
    manifest.finished = utc_timestamp();
    write_manifest(f.out, manifest);
    out << "wrote " << f.out << '\n';
    return kSuccess;
}

// ---- extrapolate -----------------------------------------------------------

std::vector<SizePoint> read_points_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError("cannot read points file '" + path + "'");
    std::vector<SizePoint> points;
    std::string line;
    while (std::getline(file, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#' || !std::isdigit(static_cast<unsigned char>(line[0]))) {
            continue;  // comments and header
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        SizePoint p;
        if (!(fields >> p.n_objects >> p.mean_error >> p.std_error)) {
            throw ConfigError("malformed points line: '" + line + "' (expected N,mean_eps,se_eps)");
        }
        points.push_back(p);
    }
    return points;
}

void write_extrapolate_gnuplot(const std::string& csv_path, const FitResult& fit, double alpha,
                               std::ostream& gp) {
    gp << "set datafile separator ','\n"
       << "set xlabel '1/N'\nset ylabel 'communication error'\n"
       << "set xrange [0:*]\n"
       << "a = " << format_number(fit.intercept) << "\nb = " << format_number(fit.slope) << '\n'
       << "eps_r = " << format_number(asymptotic_error(alpha)) << '\n'
       << "plot '" << csv_path << "' every ::1 using 2:3:4 with yerrorbars pt 6 title 'simulation', \\\n"
       << "     a + b*x with lines lt 1 title 'linear fit', \\\n"
       << "     eps_r with lines dt 2 title 'random assignment'\n";
}

int cmd_extrapolate(const GameFlags& f, const std::vector<std::string>& points_file,
                    const std::vector<std::string>& args, std::ostream& out) {
    if (!f.alpha) throw ConfigError("--alpha is required");
    if (f.modes.size() != 1) throw ConfigError("extrapolate takes a single --mode");
    const LearningMode mode = parse_learning_mode(f.modes.front());

    RunManifest manifest;
    manifest.command = "extrapolate";
    manifest.args = args;
    manifest.config = base_config(f, mode);
    manifest.n_samples = f.samples;
    manifest.master_seed = f.seed;
    manifest.workers = f.workers;
    manifest.started = utc_timestamp();

    std::vector<SizePoint> points;
    std::ostringstream rows;
    rows << "N,inv_N,mean_eps,se_eps,H,C,M,mode,samples,freeze_rate,consensus_rate,eps_exact_random\n";
    if (!points_file.empty()) {
        points = read_points_file(points_file.front());
        for (const auto& p : points) {
            rows << p.n_objects << ',' << format_number(1.0 / static_cast<double>(p.n_objects))
                 << ',' << format_number(p.mean_error) << ',' << format_number(p.std_error)
                 << ",,,,,,,,\n";
        }
    } else {
        if (f.objects.size() < 2) throw ConfigError("--objects needs at least two sizes");
        for (const std::size_t n : f.objects) {
            GameConfig config = base_config(f, mode);
            config.n_objects = n;
            config.n_words = words_for_alpha(*f.alpha, n);
            config.validate();
        }
        for (const std::size_t n : f.objects) {
            GameConfig config = base_config(f, mode);
            config.n_objects = n;
            config.n_words = words_for_alpha(*f.alpha, n);
            const EnsembleStats s = run_ensemble(config, f.samples, f.seed, f.workers);
            if (!s.valid) throw ConfigError("no game froze at N=" + std::to_string(n));
            points.push_back({n, s.mean_error, s.std_error});
            rows << n << ',' << format_number(1.0 / static_cast<double>(n)) << ','
                 << format_number(s.mean_error) << ',' << format_number(s.std_error) << ','
                 << config.n_words << ',' << config.context_size << ',' << config.resolution << ','
                 << to_string(mode) << ',' << s.n_samples << ',' << format_number(s.freeze_rate)
                 << ',' << format_number(s.consensus_rate) << ','
                 << format_number(exact_expected_error(n, config.n_words)) << '\n';
            out << "N=" << n << " eps=" << format_number(s.mean_error) << " +- "
                << format_number(s.std_error) << '\n';
        }
    }

    const FitResult fit = extrapolate_to_infinite_n(points);
    std::ostringstream summary;
    summary << "intercept,intercept_err,slope,slope_err\n"
            << format_number(fit.intercept) << ',' << format_number(fit.intercept_err) << ','
            << format_number(fit.slope) << ',' << format_number(fit.slope_err) << '\n';

    if (!f.out.empty()) {
        std::ofstream csv = open_output(f.out);
        csv << rows.str() << '\n' << summary.str();
        csv.close();
        if (f.gnuplot) {
            std::ofstream gp = open_output(f.out + ".gp");
            write_extrapolate_gnuplot(f.out, fit, *f.alpha, gp);
        }
        manifest.finished = utc_timestamp();
        write_manifest(f.out, manifest);
    } else {
        out << rows.str() << '\n';
    }
    out << summary.str();
    out << "reference eps_random_asymptotic=" << format_number(asymptotic_error(*f.alpha)) << '\n';
    for (const auto& p : points) {
        const std::size_t h = words_for_alpha(*f.alpha, p.n_objects);
        out << "reference N=" << p.n_objects
            << " eps_random_exact=" << format_number(exact_expected_error(p.n_objects, h)) << '\n';
    }
    out << "reference eps_optimal=" << format_number(optimal_error(*f.alpha)) << '\n';
    return kSuccess;
}

// ---- occupancy -------------------------------------------------------------

int cmd_occupancy(std::size_t n_objects, std::size_t n_words, bool poisson,
                  std::uint64_t mc_samples, std::uint64_t seed, std::ostream& out) {
    if (n_objects < 1 || n_words < 1) throw ConfigError("--objects and --words must be >= 1");
    const bool exact_ok = n_objects <= kExactOccupancyLimit && n_words <= kExactOccupancyLimit;
    if (!exact_ok && !poisson) {
        throw ConfigError("exact occupancy is limited to N, H <= " +
                          std::to_string(kExactOccupancyLimit) + "; rerun with --poisson");
    }
    const double alpha = static_cast<double>(n_words) / static_cast<double>(n_objects);
    const double lambda = poisson_lambda(n_objects, n_words);

    if (exact_ok) {
        const OccupancyDistribution dist = exact_unused_distribution(n_objects, n_words);
        out << (poisson ? "m,P_exact,P_poisson\n" : "m,P_exact\n");
        for (std::size_t m = 0; m <= n_words; ++m) {
            out << m << ',' << format_number(dist.probabilities[m]);
            if (poisson) out << ',' << format_number(poisson_probability(m, lambda));
            out << '\n';
        }
        out << "mean_unused_exact: " << format_number(dist.mean()) << '\n';
    } else {
        const auto upper = static_cast<std::size_t>(
            std::min<double>(static_cast<double>(n_words), std::ceil(lambda + 40.0 * std::sqrt(lambda) + 10.0)));
        out << "m,P_poisson\n";
        for (std::size_t m = 0; m <= upper; ++m) {
            out << m << ',' << format_number(poisson_probability(m, lambda)) << '\n';
        }
    }
    const double h = static_cast<double>(n_words);
    out << "lambda: " << format_number(lambda) << '\n'
        << "mean_unused: "
        << format_number(n_words == 1 ? 0.0
                                      : h * std::exp(static_cast<double>(n_objects) * std::log1p(-1.0 / h)))
        << '\n'
        << "eps_exact: " << format_number(exact_expected_error(n_objects, n_words)) << '\n'
        << "eps_asymptotic: " << format_number(asymptotic_error(alpha)) << '\n'
        << "eps_optimal: " << format_number(optimal_error(alpha)) << '\n';
    if (mc_samples > 0) {
        Rng rng(seed);
        CompensatedSum sum;
        std::vector<double> samples(mc_samples);
        for (auto& s : samples) {
            s = random_assignment_sample(n_objects, n_words, rng);
            sum.add(s);
        }
        const double n = static_cast<double>(mc_samples);
        const double mean = sum.value() / n;
        CompensatedSum sq;
        for (const double s : samples) sq.add((s - mean) * (s - mean));
        const double se = mc_samples > 1 ? std::sqrt(sq.value() / (n - 1.0) / n) : 0.0;
        out << "eps_monte_carlo: " << format_number(mean) << " +- " << format_number(se) << '\n';
    }
    return kSuccess;
}

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err);

// ---- replay ----------------------------------------------------------------

int cmd_replay(const std::string& manifest_path, const std::string& out_override,
               std::ostream& out, std::ostream& err) {
    std::ifstream file(manifest_path);
    if (!file) throw ConfigError("cannot read manifest '" + manifest_path + "'");
    const RunManifest manifest = manifest_from_json(nlohmann::json::parse(file));
    std::vector<std::string> args = manifest.args;
    if (!out_override.empty()) {
        auto it = std::find(args.begin(), args.end(), "--out");
        if (it != args.end() && std::next(it) != args.end()) {
            *std::next(it) = out_override;
        } else {
            args.push_back("--out");
            args.push_back(out_override);
        }
    }
    return dispatch(args, out, err);
}

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args = raw_args;
    // A --config file is expanded before parsing so the manifest records resolved flags.
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--config") {
            const std::string path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            args = merge_config_file(args, path);
            break;
        }
    }

    CLI::App app{"Two-agent lexicon bootstrapping simulator and occupancy baselines", "lexiboot"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    GameFlags f;
    f.workers = default_workers();

    auto* game = app.add_subcommand("game", "play a single game to freeze");
    game->add_option("--objects", f.objects, "number of objects N")->required()->expected(1);
    game->add_option("--words", f.words, "number of words H");
    game->add_option("--alpha", f.alpha, "word/object ratio; sets H = round(alpha N)");
    game->add_option("--mode", f.modes, "unsupervised | supervised")->expected(1);
    add_common_game_options(game, f);

    auto* sweep = app.add_subcommand("sweep", "error versus alpha for several N and modes");
    sweep->add_option("--alphas", f.alphas, "comma-separated alpha values")->delimiter(',')->required();
    sweep->add_option("--objects", f.objects, "comma-separated N values")->delimiter(',')->required();
    sweep->add_option("--mode", f.modes, "comma-separated modes")->delimiter(',');
    add_common_game_options(sweep, f);
    add_ensemble_options(sweep, f);

    std::vector<std::string> points_file;
    auto* extrap = app.add_subcommand("extrapolate", "fit error against 1/N and extrapolate");
    extrap->add_option("--alpha", f.alpha, "word/object ratio")->required();
    extrap->add_option("--objects", f.objects, "comma-separated N values")->delimiter(',');
    extrap->add_option("--mode", f.modes, "unsupervised | supervised")->expected(1);
    extrap->add_option("--points", points_file, "fit precomputed N,mean_eps,se_eps rows instead of simulating")
        ->expected(1);
    add_common_game_options(extrap, f);
    add_ensemble_options(extrap, f);

    std::size_t occ_objects = 0;
    std::size_t occ_words = 0;
    bool occ_poisson = false;
    std::uint64_t occ_mc = 0;
    std::uint64_t occ_seed = 1;
    auto* occ = app.add_subcommand("occupancy", "random-assignment baselines");
    occ->add_option("--objects", occ_objects, "number of objects N")->required();
    occ->add_option("--words", occ_words, "number of words H")->required();
    occ->add_flag("--poisson", occ_poisson, "include the Poisson limit");
    occ->add_option("--mc-samples", occ_mc, "Monte Carlo samples of random assignments");
    occ->add_option("--seed", occ_seed, "Monte Carlo seed")->capture_default_str();

    std::string manifest_path;
    std::string replay_out;
    auto* replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
    replay->add_option("manifest", manifest_path, "path to a .manifest.json")->required();
    replay->add_option("--out", replay_out, "write to this path instead of the recorded one");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }
    if (f.workers < 1) throw ConfigError("--workers must be >= 1");

    if (*game) return cmd_game(f, out);
    if (*sweep) return cmd_sweep(f, args, out);
    if (*extrap) return cmd_extrapolate(f, points_file, args, out);
    if (*occ) return cmd_occupancy(occ_objects, occ_words, occ_poisson, occ_mc, occ_seed, out);
    if (*replay) return cmd_replay(manifest_path, replay_out, out, err);
    return kUsageError;
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (value == 0.0) return "0";
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::vector<std::string> merge_config_file(const std::vector<std::string>& args,
                                           const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError("cannot read config file '" + path + "'");
    std::vector<std::string> merged = args;
    std::string line;
    while (std::getline(file, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto sep = line.find_first_of("= \t");
        std::string key = trim(line.substr(0, sep));
        std::string value = sep == std::string::npos ? "" : trim(line.substr(sep + 1));
        if (!value.empty() && value[0] == '=') value = trim(value.substr(1));
        while (!key.empty() && key[0] == '-') key.erase(0, 1);
        if (key.empty()) continue;
        const std::string flag = "--" + key;
        if (has_flag(args, flag)) continue;
        if (value == "false") continue;
        merged.push_back(flag);
        if (!value.empty() && value != "true") merged.push_back(value);
    }
    return merged;
}

unsigned default_workers() {
    if (const char* env = std::getenv("LEXIBOOT_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

nlohmann::json to_json(const RunManifest& m) {
    return {
        {"tool_version", m.tool_version.empty() ? kToolVersion : m.tool_version},
        {"command", m.command},
        {"args", m.args},
        {"config",
         {{"n_objects", m.config.n_objects},
          {"n_words", m.config.n_words},
          {"context_size", m.config.context_size},
          {"resolution", m.config.resolution},
          {"mode", std::string(to_string(m.config.mode))},
          {"max_episodes", m.config.max_episodes},
          {"seed", m.config.seed}}},
        {"n_samples", m.n_samples},
        {"master_seed", m.master_seed},
        {"workers", m.workers},
        {"started", m.started},
        {"finished", m.finished},
    };
}

RunManifest manifest_from_json(const nlohmann::json& j) {
    RunManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.args = j.at("args").get<std::vector<std::string>>();
    const auto& c = j.at("config");
    m.config.n_objects = c.at("n_objects").get<std::size_t>();
    m.config.n_words = c.at("n_words").get<std::size_t>();
    m.config.context_size = c.at("context_size").get<std::size_t>();
    m.config.resolution = c.at("resolution").get<Count>();
    m.config.mode = parse_learning_mode(c.at("mode").get<std::string>());
    m.config.max_episodes = c.at("max_episodes").get<std::uint64_t>();
    m.config.seed = c.at("seed").get<std::uint64_t>();
    m.n_samples = j.at("n_samples").get<std::uint64_t>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.workers = j.at("workers").get<unsigned>();
    m.started = j.value("started", "");
    m.finished = j.value("finished", "");
    return m;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const FitError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed manifest: " << e.what() << '\n';
    }
    return kUsageError;
}

}  // namespace lexiboot::cli
