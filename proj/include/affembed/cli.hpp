#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affembed/append.hpp"
#include "affembed/detail/log.hpp"
#include "affembed/embedding_io.hpp"
#include "affembed/errors.hpp"
#include "affembed/eval.hpp"
#include "affembed/lexicon.hpp"
#include "affembed/report.hpp"
#include "affembed/retrofit.hpp"
#include "affembed/version.hpp"

namespace affembed::cli {

// Exit-code contract: 0 success, 1 usage error, 2 data/validation error,
// 3 I/O error. Diagnostics go to stderr; data goes to files or stdout.
enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kIo = 3 };

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

using affembed::detail::log_info;
using affembed::detail::log_warn;

inline void require_input_file(const std::filesystem::path& path, std::string_view role) {
    namespace fs = std::filesystem;
    if (!fs::exists(path) || fs::is_directory(path)) {
        throw IoError(std::string(role) + " file not found: " + path.string());
    }
}

inline void require_output_dir(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    const fs::path dir = path.parent_path();
    if (!dir.empty() && !fs::is_directory(dir)) {
        throw IoError("output directory does not exist: " + dir.string());
    }
}

inline unsigned resolve_threads(int flag_value) {
    if (flag_value > 0) return static_cast<unsigned>(flag_value);
    if (const char* env = std::getenv("AFFEMBED_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    return affembed::detail::default_threads();
}

inline VectorFileFormat resolve_input_format(const std::string& name,
                                             const std::filesystem::path& path) {
    if (name == "plain") return VectorFileFormat::PlainText;
    if (name == "w2v") return VectorFileFormat::Word2VecTextHeader;
    return detect_format(path);
}

inline VectorFileFormat output_format(const std::string& name) {
    return name == "w2v" ? VectorFileFormat::Word2VecTextHeader
                         : VectorFileFormat::PlainText;
}

}  // namespace detail

// ---- shared option blocks ----

struct LexiconCliOptions {
    std::string word_column = "Word";
    std::vector<std::string> value_columns = {"V.Mean.Sum", "A.Mean.Sum", "D.Mean.Sum"};
    int word_index = -1;                  // >= 0 switches to index-based columns
    std::vector<std::size_t> value_indices;
    bool no_header = false;
    double scale_min = 1.0;
    double scale_max = 9.0;
    std::string delimiter = "auto";
    bool lowercase = false;

    LexiconLoadOptions to_load_options() const {
        LexiconLoadOptions options;
        if (word_index >= 0) {
            if (value_indices.empty()) {
                throw UsageError("--lexicon-word-index requires --lexicon-value-indices");
            }
            options.columns = ColumnSpec::indices(static_cast<std::size_t>(word_index),
                                                  value_indices, !no_header);
        } else {
            if (no_header) {
                throw UsageError("--lexicon-no-header requires index-based columns");
            }
            options.columns = ColumnSpec::names(word_column, value_columns);
        }
        options.scale_min = scale_min;
        options.scale_max = scale_max;
        if (delimiter == "comma") {
            options.delimiter = ',';
        } else if (delimiter == "tab") {
            options.delimiter = '\t';
        } else if (delimiter != "auto") {
            throw UsageError("--lexicon-delim must be auto, comma, or tab");
        }
        options.lowercase_words = lowercase;
        return options;
    }

    void fingerprint(Fnv1a64& h) const {
        h.update("word_col=").update(word_column);
        for (const auto& c : value_columns) h.update("|vc=").update(c);
        h.update("|wi=").update(std::to_string(word_index));
        for (auto i : value_indices) h.update("|vi=").update(std::to_string(i));
        h.update("|nh=").update(no_header ? "1" : "0");
        h.update("|smin=").update(affembed::detail::format_double_shortest(scale_min));
        h.update("|smax=").update(affembed::detail::format_double_shortest(scale_max));
        h.update("|delim=").update(delimiter);
        h.update("|lower=").update(lowercase ? "1" : "0");
    }
};

inline void add_lexicon_options(CLI::App* cmd, LexiconCliOptions& options) {
    cmd->add_option("--lexicon-word-col", options.word_column,
                    "Header name of the word column");
    cmd->add_option("--lexicon-value-cols", options.value_columns,
                    "Header names of the affect value columns")
        ->delimiter(',');
    cmd->add_option("--lexicon-word-index", options.word_index,
                    "0-based word column (switches to index-based columns)");
    cmd->add_option("--lexicon-value-indices", options.value_indices,
                    "0-based affect value columns")
        ->delimiter(',');
    cmd->add_flag("--lexicon-no-header", options.no_header,
                  "File has no header row (index-based columns only)");
    cmd->add_option("--scale-min", options.scale_min, "Lower bound of the affect scale");
    cmd->add_option("--scale-max", options.scale_max, "Upper bound of the affect scale");
    cmd->add_option("--lexicon-delim", options.delimiter, "auto, comma, or tab");
    cmd->add_flag("--lexicon-lowercase", options.lowercase,
                  "Lowercase lexicon words at load time");
}

// ---- per-subcommand options ----

struct CommonOptions {
    int threads = 0;  // 0 = AFFEMBED_THREADS env var, else hardware concurrency
    std::string log_level = "info";
    std::uint64_t seed = 0;  // reserved; recorded in provenance only
};

struct EnrichOptions {
    std::string embeddings;
    std::string lexicon;
    std::string out;
    int target_dim = 0;
    std::string input_format = "auto";
    std::string format = "plain";
    int precision = 6;
    bool no_reduce = false;
    LexiconCliOptions lexicon_options;
};

struct RetrofitOptions {
    std::string embeddings;
    std::string ontology;
    std::string lexicon;
    std::string out;
    std::string strength = "none";
    double alpha = 1.0;
    std::string beta = "inverse-degree";
    int iterations = 10;
    double tol = 0.0;
    std::string mode = "gauss-seidel";
    std::string input_format = "auto";
    std::string format = "plain";
    int precision = 6;
    LexiconCliOptions lexicon_options;
};

struct EvalSimOptions {
    std::string embeddings;
    std::vector<std::string> datasets;
    std::string report;
    bool skip_header = false;
    std::string input_format = "auto";
};

struct NoiseOptions {
    std::string embeddings;
    std::string lexicon;
    std::string report;
    std::size_t k = 10;
    std::vector<std::size_t> ks;
    std::vector<Index> dims;
    std::string input_format = "auto";
    LexiconCliOptions lexicon_options;
};

struct NeighborsOptions {
    std::string embeddings;
    std::vector<std::string> words;
    std::size_t k = 5;
    std::string input_format = "auto";
};

// ---- provenance ----

inline std::string version_string() {
    return std::string(kToolName) + " " + std::string(kVersion);
}

inline Provenance make_provenance(
    std::string_view subcommand, const std::function<void(Fnv1a64&)>& fingerprint_config,
    std::uint64_t seed,
    const std::vector<std::pair<std::string, std::filesystem::path>>& inputs) {
    Provenance p;
    p.tool = std::string(kToolName);
    p.version = std::string(kVersion);

    Fnv1a64 h;
    h.update(kVersion).update("|").update(subcommand);
    h.update("|seed=").update(std::to_string(seed));
    fingerprint_config(h);
    for (const auto& [role, path] : inputs) {
        const std::uint64_t checksum = file_checksum(path);
        p.inputs.emplace_back(role, checksum);
        h.update("|input:").update(role).update("=").update(to_hex(checksum));
    }
    p.config_hash = h.value();
    return p;
}

// ---- subcommand implementations ----

inline void cmd_enrich(const EnrichOptions& opt, const CommonOptions& common) {
    detail::require_input_file(opt.embeddings, "embeddings");
    detail::require_input_file(opt.lexicon, "lexicon");
    detail::require_output_dir(opt.out);
    const unsigned threads = detail::resolve_threads(common.threads);

    Provenance provenance = make_provenance(
        "enrich",
        [&](Fnv1a64& h) {
            h.update("|target_dim=").update(std::to_string(opt.target_dim));
            h.update("|no_reduce=").update(opt.no_reduce ? "1" : "0");
            h.update("|precision=").update(std::to_string(opt.precision));
            h.update("|format=").update(opt.format);
            opt.lexicon_options.fingerprint(h);
        },
        common.seed, {{"embeddings", opt.embeddings}, {"lexicon", opt.lexicon}});
    detail::log_info("enrich", "provenance " + to_hex(provenance.config_hash));

    const EmbeddingSet set =
        load_embeddings(opt.embeddings, detail::resolve_input_format(opt.input_format, opt.embeddings));
    const AffectLexicon lex = load_lexicon(opt.lexicon, opt.lexicon_options.to_load_options());
    detail::log_info("enrich", "loaded " + std::to_string(set.size()) + " words, dim " +
                                   std::to_string(set.dim()) + ", lexicon coverage " +
                                   affembed::detail::format_double_shortest(coverage(lex, set)));

    EnrichedMatrix standardized = standardize_columns(concat_affect(set, lex));
    if (opt.no_reduce) {
        EmbeddingSet wide(std::move(standardized.vocab), std::move(standardized.values));
        save_embeddings(wide, opt.out, detail::output_format(opt.format), opt.precision);
        detail::log_info("enrich", "wrote unreduced " + std::to_string(wide.dim()) +
                                       "-dimensional matrix to " + opt.out);
        return;
    }

    const Index target = opt.target_dim > 0 ? static_cast<Index>(opt.target_dim) : set.dim();
    PcaModel model = fit_pca(standardized, target, threads);
    if (model.rank < target) {
        detail::log_warn("enrich", "data has rank " + std::to_string(model.rank) +
                                       " < " + std::to_string(target) +
                                       "; padding with orthonormal complements");
    }
    Matrix reduced = pca_project(model, standardized.values, threads);
    EmbeddingSet out(std::move(standardized.vocab), std::move(reduced));
    save_embeddings(out, opt.out, detail::output_format(opt.format), opt.precision);
    detail::log_info("enrich", "wrote " + std::to_string(out.size()) + " x " +
                                   std::to_string(out.dim()) + " embeddings to " + opt.out);
}

inline void cmd_retrofit(const RetrofitOptions& opt, const CommonOptions& common) {
    detail::require_input_file(opt.embeddings, "embeddings");
    detail::require_input_file(opt.ontology, "ontology");
    if (!opt.lexicon.empty()) detail::require_input_file(opt.lexicon, "lexicon");
    detail::require_output_dir(opt.out);

    RetrofitConfig cfg;
    cfg.alpha = opt.alpha;
    if (opt.beta == "inverse-degree") {
        cfg.beta_rule = BetaRule::InverseDegree;
    } else if (opt.beta.rfind("const:", 0) == 0) {
        cfg.beta_rule = BetaRule::Constant;
        double v = 0.0;
        if (!affembed::detail::parse_finite_double(opt.beta.substr(6), v) || v <= 0.0) {
            throw UsageError("--beta const:<v> needs a positive number");
        }
        cfg.beta_constant = v;
    } else {
        throw UsageError("--beta must be inverse-degree or const:<v>");
    }
    if (opt.strength == "none") {
        cfg.strength = StrengthKind::None;
    } else if (opt.strength == "c") {
        cfg.strength = StrengthKind::CStrength;
    } else if (opt.strength == "i") {
        cfg.strength = StrengthKind::IStrength;
    } else {
        throw UsageError("--strength must be none, c, or i");
    }
    if (cfg.strength != StrengthKind::None && opt.lexicon.empty()) {
        throw UsageError("--strength c|i requires --lexicon");
    }
    cfg.iterations = opt.iterations;
    if (opt.tol > 0.0) cfg.convergence_tol = opt.tol;
    if (opt.mode == "jacobi") {
        cfg.mode = SweepMode::Jacobi;
    } else if (opt.mode != "gauss-seidel") {
        throw UsageError("--mode must be gauss-seidel or jacobi");
    }

    std::vector<std::pair<std::string, std::filesystem::path>> inputs = {
        {"embeddings", opt.embeddings}, {"ontology", opt.ontology}};
    if (!opt.lexicon.empty()) inputs.emplace_back("lexicon", opt.lexicon);
    Provenance provenance = make_provenance(
        "retrofit",
        [&](Fnv1a64& h) {
            h.update("|alpha=").update(affembed::detail::format_double_shortest(opt.alpha));
            h.update("|beta=").update(opt.beta);
            h.update("|strength=").update(opt.strength);
            h.update("|iters=").update(std::to_string(opt.iterations));
            h.update("|tol=").update(affembed::detail::format_double_shortest(opt.tol));
            h.update("|mode=").update(opt.mode);
            h.update("|precision=").update(std::to_string(opt.precision));
            h.update("|format=").update(opt.format);
            opt.lexicon_options.fingerprint(h);
        },
        common.seed, inputs);
    detail::log_info("retrofit", "provenance " + to_hex(provenance.config_hash));

    const EmbeddingSet set =
        load_embeddings(opt.embeddings, detail::resolve_input_format(opt.input_format, opt.embeddings));
    const Ontology onto = load_ontology(opt.ontology);
    if (onto.self_loops_dropped() > 0) {
        detail::log_warn("retrofit", "dropped " + std::to_string(onto.self_loops_dropped()) +
                                         " self-loop(s) from the ontology");
    }
    detail::log_info("retrofit", "ontology has " + std::to_string(onto.word_count()) +
                                     " words and " + std::to_string(onto.edge_count()) + " edges");

    std::optional<AffectLexicon> lex;
    if (!opt.lexicon.empty()) {
        lex.emplace(load_lexicon(opt.lexicon, opt.lexicon_options.to_load_options()));
    }
    EmbeddingSet out = retrofit(set, onto, lex ? &*lex : nullptr, cfg);
    save_embeddings(out, opt.out, detail::output_format(opt.format), opt.precision);
    detail::log_info("retrofit", "wrote " + std::to_string(out.size()) + " x " +
                                     std::to_string(out.dim()) + " embeddings to " + opt.out);
}

inline void cmd_eval_sim(const EvalSimOptions& opt, const CommonOptions& common) {
    detail::require_input_file(opt.embeddings, "embeddings");
    for (const auto& ds : opt.datasets) detail::require_input_file(ds, "dataset");
    detail::require_output_dir(opt.report);

    std::vector<std::pair<std::string, std::filesystem::path>> inputs = {
        {"embeddings", opt.embeddings}};
    for (const auto& ds : opt.datasets) {
        inputs.emplace_back("dataset:" + std::filesystem::path(ds).stem().string(), ds);
    }
    Provenance provenance = make_provenance(
        "eval-sim",
        [&](Fnv1a64& h) { h.update("|skip_header=").update(opt.skip_header ? "1" : "0"); },
        common.seed, inputs);

    const EmbeddingSet set =
        load_embeddings(opt.embeddings, detail::resolve_input_format(opt.input_format, opt.embeddings));
    std::vector<SimilarityDataset> datasets;
    datasets.reserve(opt.datasets.size());
    for (const auto& ds : opt.datasets) {
        datasets.push_back(load_similarity_dataset(ds, opt.skip_header));
    }

    const EvalReport report = evaluate_similarity(set, datasets);
    write_similarity_report(opt.report, report, provenance);
    for (const auto& row : report.rows) {
        detail::log_info("eval-sim", row.dataset + ": rho=" +
                                         affembed::detail::format_double_shortest(row.rho) +
                                         " used=" + std::to_string(row.used) +
                                         " skipped=" + std::to_string(row.skipped));
    }
    detail::log_info("eval-sim", "wrote report to " + opt.report);
}

inline void cmd_noise(const NoiseOptions& opt, const CommonOptions& common) {
    detail::require_input_file(opt.embeddings, "embeddings");
    detail::require_input_file(opt.lexicon, "lexicon");
    detail::require_output_dir(opt.report);
    const unsigned threads = detail::resolve_threads(common.threads);

    std::vector<std::size_t> ks = opt.ks.empty() ? std::vector<std::size_t>{opt.k} : opt.ks;

    Provenance provenance = make_provenance(
        "noise",
        [&](Fnv1a64& h) {
            for (auto k : ks) h.update("|k=").update(std::to_string(k));
            for (auto d : opt.dims) h.update("|dim=").update(std::to_string(d));
            opt.lexicon_options.fingerprint(h);
        },
        common.seed, {{"embeddings", opt.embeddings}, {"lexicon", opt.lexicon}});
    detail::log_info("noise", "provenance " + to_hex(provenance.config_hash));

    const EmbeddingSet set =
        load_embeddings(opt.embeddings, detail::resolve_input_format(opt.input_format, opt.embeddings));
    const AffectLexicon lex = load_lexicon(opt.lexicon, opt.lexicon_options.to_load_options());

    affembed::NoiseOptions noise_options;
    noise_options.dims = opt.dims;
    noise_options.ks = ks;
    noise_options.threads = threads;
    const NoiseReport report = compute_noise(set, lex, noise_options);
    write_noise_report(opt.report, report, provenance);
    detail::log_info("noise", "wrote " + std::to_string(report.cells.size()) +
                                  " report rows to " + opt.report);
}

inline void cmd_neighbors(const NeighborsOptions& opt) {
    detail::require_input_file(opt.embeddings, "embeddings");
    const EmbeddingSet set =
        load_embeddings(opt.embeddings, detail::resolve_input_format(opt.input_format, opt.embeddings));
    for (const auto& word : opt.words) {
        const auto neighbors = knn(set, word, opt.k);
        std::size_t rank = 1;
        for (const auto& n : neighbors) {
            std::cout << word << '\t' << rank++ << '\t' << n.word << '\t'
                      << affembed::detail::format_double_shortest(n.cosine) << '\n';
        }
    }
}

// ---- entry point ----

inline int run(int argc, const char* const argv[]) {
    CLI::App app{"Affect-enriched word embeddings: enrichment, retrofitting, and evaluation"};
    app.set_version_flag("--version", version_string());
    app.set_config("--config", "", "Read options from an INI-style config file");
    app.require_subcommand(0, 1);

    CommonOptions common;
    app.add_option("--threads", common.threads,
                   "Worker threads (0 = AFFEMBED_THREADS env var, else hardware)");
    app.add_option("--log-level", common.log_level, "error, warn, info, or debug");
    app.add_option("--seed", common.seed, "Recorded in provenance; unused by the pipeline");
    app.fallthrough();  // global flags may also follow the subcommand

    EnrichOptions enrich;
    CLI::App* enrich_cmd =
        app.add_subcommand("enrich", "Concatenate affect vectors and reduce back via PCA");
    enrich_cmd->add_option("--embeddings", enrich.embeddings, "Input vector file")->required();
    enrich_cmd->add_option("--lexicon", enrich.lexicon, "Affect lexicon CSV/TSV")->required();
    enrich_cmd->add_option("--out", enrich.out, "Output vector file")->required();
    enrich_cmd->add_option("--target-dim", enrich.target_dim,
                           "Output dimensionality (default: input dimensionality)");
    enrich_cmd->add_option("--input-format", enrich.input_format, "auto, plain, or w2v");
    enrich_cmd->add_option("--format", enrich.format, "Output format: plain or w2v");
    enrich_cmd->add_option("--precision", enrich.precision,
                           "Decimal digits; 17+ = shortest round-trip");
    enrich_cmd->add_flag("--no-reduce", enrich.no_reduce,
                         "Write the standardized D+F matrix without PCA (debug)");
    add_lexicon_options(enrich_cmd, enrich.lexicon_options);

    RetrofitOptions retro;
    CLI::App* retrofit_cmd =
        app.add_subcommand("retrofit", "Pull vectors toward ontology neighbors");
    retrofit_cmd->add_option("--embeddings", retro.embeddings, "Input vector file")->required();
    retrofit_cmd->add_option("--ontology", retro.ontology, "Word graph file")->required();
    retrofit_cmd->add_option("--lexicon", retro.lexicon,
                             "Affect lexicon (required for --strength c|i)");
    retrofit_cmd->add_option("--out", retro.out, "Output vector file")->required();
    retrofit_cmd->add_option("--strength", retro.strength,
                             "Affect edge reweighting: none, c, or i");
    retrofit_cmd->add_option("--alpha", retro.alpha, "Anchor weight");
    retrofit_cmd->add_option("--beta", retro.beta, "inverse-degree or const:<v>");
    retrofit_cmd->add_option("--iters", retro.iterations, "Number of sweeps");
    retrofit_cmd->add_option("--tol", retro.tol,
                             "Stop early when the largest per-word move is below this");
    retrofit_cmd->add_option("--mode", retro.mode, "gauss-seidel or jacobi");
    retrofit_cmd->add_option("--input-format", retro.input_format, "auto, plain, or w2v");
    retrofit_cmd->add_option("--format", retro.format, "Output format: plain or w2v");
    retrofit_cmd->add_option("--precision", retro.precision,
                             "Decimal digits; 17+ = shortest round-trip");
    add_lexicon_options(retrofit_cmd, retro.lexicon_options);

    EvalSimOptions eval_sim;
    CLI::App* eval_cmd =
        app.add_subcommand("eval-sim", "Spearman correlation against similarity benchmarks");
    eval_cmd->add_option("--embeddings", eval_sim.embeddings, "Input vector file")->required();
    eval_cmd->add_option("--datasets", eval_sim.datasets, "Benchmark files (word1 word2 score)")
        ->required();
    eval_cmd->add_option("--report", eval_sim.report, "Output CSV")->required();
    eval_cmd->add_flag("--skip-header", eval_sim.skip_header,
                       "Skip the first line of each dataset");
    eval_cmd->add_option("--input-format", eval_sim.input_format, "auto, plain, or w2v");

    NoiseOptions noise;
    CLI::App* noise_cmd =
        app.add_subcommand("noise", "Neighborhood polarity/granular noise metrics");
    noise_cmd->add_option("--embeddings", noise.embeddings, "Input vector file")->required();
    noise_cmd->add_option("--lexicon", noise.lexicon, "Affect lexicon CSV/TSV")->required();
    noise_cmd->add_option("--report", noise.report, "Output CSV")->required();
    noise_cmd->add_option("--k", noise.k, "Neighborhood size");
    noise_cmd->add_option("--ks", noise.ks, "Several k values (ascending)")->delimiter(',');
    noise_cmd->add_option("--dims", noise.dims, "0-based affect dimensions (default: all)")
        ->delimiter(',');
    noise_cmd->add_option("--input-format", noise.input_format, "auto, plain, or w2v");
    add_lexicon_options(noise_cmd, noise.lexicon_options);

    NeighborsOptions neighbors_opt;
    CLI::App* neighbors_cmd =
        app.add_subcommand("neighbors", "Print the top-k nearest neighbors of a word");
    neighbors_cmd->add_option("--embeddings", neighbors_opt.embeddings, "Input vector file")
        ->required();
    neighbors_cmd->add_option("--word", neighbors_opt.words, "Query word (repeatable)")
        ->required();
    neighbors_cmd->add_option("--k", neighbors_opt.k, "Number of neighbors");
    neighbors_cmd->add_option("--input-format", neighbors_opt.input_format,
                              "auto, plain, or w2v");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (common.log_level == "error") {
        affembed::detail::log_level() = affembed::detail::LogLevel::Error;
    } else if (common.log_level == "warn") {
        affembed::detail::log_level() = affembed::detail::LogLevel::Warn;
    } else if (common.log_level == "info") {
        affembed::detail::log_level() = affembed::detail::LogLevel::Info;
    } else if (common.log_level == "debug") {
        affembed::detail::log_level() = affembed::detail::LogLevel::Debug;
    } else {
        std::cerr << "unknown log level: " << common.log_level << "\n";
        return kUsage;
    }

    try {
        if (enrich_cmd->parsed()) {
            cmd_enrich(enrich, common);
        } else if (retrofit_cmd->parsed()) {
            cmd_retrofit(retro, common);
        } else if (eval_cmd->parsed()) {
            cmd_eval_sim(eval_sim, common);
        } else if (noise_cmd->parsed()) {
            cmd_noise(noise, common);
        } else if (neighbors_cmd->parsed()) {
            cmd_neighbors(neighbors_opt);
        } else {
            std::cerr << app.help() << "\n";
            return kUsage;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    }
    return kOk;
}

inline int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("affembed");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace affembed::cli
