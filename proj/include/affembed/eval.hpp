#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affembed/detail/parallel.hpp"
#include "affembed/detail/text.hpp"
#include "affembed/embedding_set.hpp"
#include "affembed/errors.hpp"
#include "affembed/lexicon.hpp"
#include "affembed/report.hpp"

namespace affembed {

inline double cosine(const Eigen::Ref<const RowVector>& u,
                     const Eigen::Ref<const RowVector>& v) {
    if (u.size() != v.size()) throw ShapeMismatchError("cosine needs equal-length vectors");
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0) throw ZeroVectorError("cosine of a zero vector is undefined");
    if (nv == 0.0) throw ZeroVectorError("cosine of a zero vector is undefined");
    return u.dot(v) / (nu * nv);
}

struct ScoredWord {
    std::string word;
    double cosine;
};

namespace detail {

// Top-k among (score, candidate) pairs: descending score, ties broken by
// ascending vocabulary index.
struct ScoredIndex {
    double score;
    Index index;
};

inline void select_top_k(std::vector<ScoredIndex>& scored, std::size_t k) {
    const auto better = [](const ScoredIndex& a, const ScoredIndex& b) {
        return a.score > b.score || (a.score == b.score && a.index < b.index);
    };
    if (scored.size() > k) {
        std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k),
                          scored.end(), better);
        scored.resize(k);
    } else {
        std::sort(scored.begin(), scored.end(), better);
    }
}

}  // namespace detail

// Top-k candidates by cosine, excluding the query word itself. With a filter,
// only filter words present in the vocabulary are candidates. Returns fewer
// than k when candidates are scarce.
inline std::vector<ScoredWord> knn(const EmbeddingSet& set, std::string_view word,
                                   std::size_t k,
                                   const std::vector<std::string>* candidate_filter = nullptr) {
    if (k < 1) throw ValidationError("k must be at least 1");
    auto query = set.index_of(word);
    if (!query) throw UnknownWordError(std::string(word));

    std::vector<Index> candidates;
    if (candidate_filter != nullptr) {
        candidates.reserve(candidate_filter->size());
        for (const auto& w : *candidate_filter) {
            if (auto idx = set.index_of(w)) {
                if (*idx != *query) candidates.push_back(*idx);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    } else {
        candidates.reserve(static_cast<std::size_t>(set.size()) - 1);
        for (Index i = 0; i < set.size(); ++i) {
            if (i != *query) candidates.push_back(i);
        }
    }

    const double query_norm = set.row(*query).norm();
    if (query_norm == 0.0) throw ZeroVectorError(*query);

    std::vector<detail::ScoredIndex> scored;
    scored.reserve(candidates.size());
    for (Index c : candidates) {
        const double norm = set.row(c).norm();
        if (norm == 0.0) throw ZeroVectorError(c);
        scored.push_back({set.row(*query).dot(set.row(c)) / (query_norm * norm), c});
    }
    detail::select_top_k(scored, k);

    std::vector<ScoredWord> out;
    out.reserve(scored.size());
    for (const auto& s : scored) out.push_back({set.word(s.index), s.score});
    return out;
}

// Fractional (average) ranks, 1-based; tied values share the mean of their
// positions.
inline std::vector<double> average_ranks(std::span<const double> xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        // positions i+1 .. j+1 (1-based) share the average rank
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
        i = j + 1;
    }
    return ranks;
}

// Spearman's rank correlation: Pearson correlation of the averaged ranks.
inline double spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw LengthMismatchError(xs.size(), ys.size());
    if (xs.size() < 2) throw ValidationError("spearman needs at least 2 observations");

    const auto rx = average_ranks(xs);
    const auto ry = average_ranks(ys);
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw ZeroVarianceError("rank correlation is undefined when one ranking is constant");
    }
    return sxy / std::sqrt(sxx * syy);
}

struct SimilarityDataset {
    struct Pair {
        std::string word1;
        std::string word2;
        double score;
    };
    std::string name;
    std::vector<Pair> pairs;
};

// Lines "word1 word2 score", tab- or space-separated.
inline SimilarityDataset load_similarity_dataset(const std::filesystem::path& path,
                                                 bool skip_header = false) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dataset file: " + path.string());
    const std::string name = path.string();

    SimilarityDataset ds;
    ds.name = path.stem().string();
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_cr(line);
        if (detail::is_blank(line)) continue;
        if (first && skip_header) {
            first = false;
            continue;
        }
        first = false;
        auto tokens = detail::split_whitespace(line);
        if (tokens.size() != 3) {
            throw ParseError(name, line_no, "expected 'word1 word2 score'");
        }
        double score = 0.0;
        if (!detail::parse_finite_double(tokens[2], score)) {
            throw ParseError(name, line_no,
                             "cannot parse '" + std::string(tokens[2]) + "' as a finite score");
        }
        ds.pairs.push_back({std::string(tokens[0]), std::string(tokens[1]), score});
    }
    if (in.bad()) throw IoError("read failure on " + name);
    if (ds.pairs.empty()) throw ParseError(name, line_no == 0 ? 1 : line_no, "no word pairs found");
    return ds;
}

struct EvalReport {
    struct Row {
        std::string dataset;
        double rho;
        std::size_t used;
        std::size_t skipped;
    };
    std::vector<Row> rows;
};

// Spearman correlation between model cosine similarities and human scores,
// per dataset. Pairs with either word out of vocabulary are skipped and
// counted.
inline EvalReport evaluate_similarity(const EmbeddingSet& set,
                                      const std::vector<SimilarityDataset>& datasets) {
    EvalReport report;
    for (const auto& ds : datasets) {
        std::vector<double> model_scores;
        std::vector<double> human_scores;
        std::size_t skipped = 0;
        for (const auto& pair : ds.pairs) {
            auto i = set.index_of(pair.word1);
            auto j = set.index_of(pair.word2);
            if (!i || !j) {
                ++skipped;
                continue;
            }
            model_scores.push_back(cosine(set.row(*i), set.row(*j)));
            human_scores.push_back(pair.score);
        }
        if (model_scores.size() < 2) {
            throw DatasetEmptyError("dataset '" + ds.name + "' has " +
                                    std::to_string(model_scores.size()) +
                                    " in-vocabulary pairs; need at least 2");
        }
        report.rows.push_back(
            {ds.name, spearman(model_scores, human_scores), model_scores.size(), skipped});
    }
    return report;
}

enum class Polarity { Positive, Negative, Neutral };

inline Polarity polarity(double value, double neutral) {
    if (value > neutral) return Polarity::Positive;
    if (value < neutral) return Polarity::Negative;
    return Polarity::Neutral;
}

inline bool opposite_polarity(Polarity a, Polarity b) {
    return (a == Polarity::Positive && b == Polarity::Negative) ||
           (a == Polarity::Negative && b == Polarity::Positive);
}

// One (affect dimension, k) aggregate: mean fraction of opposite-polarity
// neighbors (PN@k) and mean absolute affect difference to neighbors (GN@k).
struct NoiseCell {
    std::string dim_label;
    Index dim;
    std::size_t k;
    double pn;
    double gn;
    std::size_t evaluated;
    std::size_t skipped;
};

struct NoiseReport {
    std::vector<NoiseCell> cells;  // ordered by dimension, then k
};

inline std::vector<std::string> default_dim_labels(Index dims) {
    if (dims == 3) return {"V", "A", "D"};
    std::vector<std::string> labels;
    for (Index f = 0; f < dims; ++f) labels.push_back("d" + std::to_string(f));
    return labels;
}

namespace detail {

// Nearest neighbors within the lexicon∩vocab pool for every pool word, via
// blocked cosine matrix products. Pool words with zero vectors cannot be
// ranked and are skipped. Neighbor lists are in vocabulary order of the pool,
// ties broken toward lower vocabulary index.
struct PoolNeighbors {
    std::vector<Index> rows;                       // usable pool rows, ascending
    std::vector<std::vector<std::size_t>> lists;   // per pool word: pool positions, best first
    std::size_t skipped = 0;                       // pool words without candidates
};

inline PoolNeighbors pool_knn(const EmbeddingSet& set, const AffectLexicon& lex,
                              std::size_t kmax, unsigned threads) {
    PoolNeighbors result;
    std::size_t pool_total = 0;
    for (Index i = 0; i < set.size(); ++i) {
        if (!lex.contains(set.word(i))) continue;
        ++pool_total;
        if (set.row(i).norm() > 0.0) result.rows.push_back(i);
    }

    const std::size_t m = result.rows.size();
    if (m < 2) {
        // nobody has a candidate neighbor
        result.rows.clear();
        result.skipped = pool_total;
        return result;
    }
    result.skipped = pool_total - m;

    Matrix normalized(static_cast<Index>(m), set.dim());
    for (std::size_t p = 0; p < m; ++p) {
        normalized.row(static_cast<Index>(p)) =
            set.row(result.rows[p]) / set.row(result.rows[p]).norm();
    }

    result.lists.assign(m, {});
    constexpr std::ptrdiff_t kBlock = 128;
    for_each_block(static_cast<std::ptrdiff_t>(m), kBlock, threads,
                   [&](std::ptrdiff_t begin, std::ptrdiff_t end) {
                       Matrix sims = normalized.middleRows(begin, end - begin) *
                                     normalized.transpose();
                       std::vector<ScoredIndex> scored;
                       for (std::ptrdiff_t r = begin; r < end; ++r) {
                           scored.clear();
                           scored.reserve(m - 1);
                           for (std::size_t c = 0; c < m; ++c) {
                               if (static_cast<std::ptrdiff_t>(c) == r) continue;
                               scored.push_back({sims(r - begin, static_cast<Index>(c)),
                                                 static_cast<Index>(c)});
                           }
                           select_top_k(scored, kmax);
                           auto& list = result.lists[static_cast<std::size_t>(r)];
                           list.reserve(scored.size());
                           for (const auto& s : scored) {
                               list.push_back(static_cast<std::size_t>(s.index));
                           }
                       }
                   });
    return result;
}

}  // namespace detail

struct NoiseOptions {
    std::vector<Index> dims;        // empty = all affect dimensions
    std::vector<std::size_t> ks;    // must be non-empty, ascending
    std::vector<std::string> dim_labels;  // empty = V/A/D or d0..
    unsigned threads = 1;
};

// PN@k and GN@k over every lexicon word present in the vocabulary, with
// neighbor candidates restricted to that same pool.
inline NoiseReport compute_noise(const EmbeddingSet& set, const AffectLexicon& lex,
                                 const NoiseOptions& options) {
    if (options.ks.empty()) throw ValidationError("at least one k is required");
    if (!std::is_sorted(options.ks.begin(), options.ks.end()) ||
        std::adjacent_find(options.ks.begin(), options.ks.end()) != options.ks.end()) {
        throw ValidationError("k values must be strictly ascending");
    }
    if (options.ks.front() < 1) throw ValidationError("k must be at least 1");

    std::vector<Index> dims = options.dims;
    if (dims.empty()) {
        for (Index f = 0; f < lex.dims(); ++f) dims.push_back(f);
    }
    for (Index f : dims) {
        if (f < 0 || f >= lex.dims()) {
            throw ValidationError("affect dimension " + std::to_string(f) + " out of range");
        }
    }
    std::vector<std::string> labels =
        options.dim_labels.empty() ? default_dim_labels(lex.dims()) : options.dim_labels;
    if (labels.size() != static_cast<std::size_t>(lex.dims())) {
        throw ValidationError("need one label per affect dimension");
    }

    const std::size_t kmax = options.ks.back();
    const auto pool = detail::pool_knn(set, lex, kmax, options.threads);
    const std::size_t m = pool.rows.size();

    // Affect values for the pool, one column read per requested dimension.
    std::vector<Vector> affect(m);
    for (std::size_t p = 0; p < m; ++p) {
        affect[p] = lex.affect_vector(set.word(pool.rows[p]));
    }
    const double neutral_mid = (lex.scale_min() + lex.scale_max()) / 2.0;

    NoiseReport report;
    for (Index f : dims) {
        for (std::size_t k : options.ks) {
            double pn_sum = 0.0;
            double gn_sum = 0.0;
            for (std::size_t p = 0; p < m; ++p) {
                const auto& list = pool.lists[p];
                const std::size_t realized = std::min(k, list.size());
                const Polarity own = polarity(affect[p][f], neutral_mid);
                std::size_t opposite = 0;
                double diff_sum = 0.0;
                for (std::size_t t = 0; t < realized; ++t) {
                    const auto& neighbor = affect[list[t]];
                    if (opposite_polarity(own, polarity(neighbor[f], neutral_mid))) ++opposite;
                    diff_sum += std::abs(affect[p][f] - neighbor[f]);
                }
                pn_sum += static_cast<double>(opposite) / static_cast<double>(realized);
                gn_sum += diff_sum / static_cast<double>(realized);
            }
            NoiseCell cell;
            cell.dim_label = labels[static_cast<std::size_t>(f)];
            cell.dim = f;
            cell.k = k;
            cell.pn = m == 0 ? 0.0 : pn_sum / static_cast<double>(m);
            cell.gn = m == 0 ? 0.0 : gn_sum / static_cast<double>(m);
            cell.evaluated = m;
            cell.skipped = pool.skipped;
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

// Mean fraction of top-k neighbors whose affect sign (relative to the scale
// midpoint) is opposite to the word's own, for one dimension.
inline double polarity_noise_at_k(const EmbeddingSet& set, const AffectLexicon& lex,
                                  std::size_t k, Index dim, unsigned threads = 1) {
    NoiseOptions options;
    options.dims = {dim};
    options.ks = {k};
    options.threads = threads;
    return compute_noise(set, lex, options).cells.front().pn;
}

// Mean absolute affect difference between a word and its top-k neighbors,
// for one dimension.
inline double granular_noise_at_k(const EmbeddingSet& set, const AffectLexicon& lex,
                                  std::size_t k, Index dim, unsigned threads = 1) {
    NoiseOptions options;
    options.dims = {dim};
    options.ks = {k};
    options.threads = threads;
    return compute_noise(set, lex, options).cells.front().gn;
}

// The full PN/GN table over several k values, for plotting.
inline NoiseReport noise_curve(const EmbeddingSet& set, const AffectLexicon& lex,
                               const std::vector<Index>& dims,
                               const std::vector<std::size_t>& ks, unsigned threads = 1) {
    NoiseOptions options;
    options.dims = dims;
    options.ks = ks;
    options.threads = threads;
    return compute_noise(set, lex, options);
}

inline void write_similarity_report(const std::filesystem::path& path, const EvalReport& report,
                                    const Provenance& provenance) {
    write_file_atomic(path, [&](std::ostream& os) {
        provenance.write_comment_lines(os);
        os << "dataset,rho,used,skipped\n";
        for (const auto& row : report.rows) {
            os << row.dataset << ',' << detail::format_double_shortest(row.rho) << ','
               << row.used << ',' << row.skipped << '\n';
        }
    });
}

inline void write_noise_report(const std::filesystem::path& path, const NoiseReport& report,
                               const Provenance& provenance) {
    write_file_atomic(path, [&](std::ostream& os) {
        provenance.write_comment_lines(os);
        os << "dim,k,pn,gn,evaluated,skipped\n";
        for (const auto& cell : report.cells) {
            os << cell.dim_label << ',' << cell.k << ','
               << detail::format_double_shortest(cell.pn) << ','
               << detail::format_double_shortest(cell.gn) << ',' << cell.evaluated << ','
               << cell.skipped << '\n';
        }
    });
}

}  // namespace affembed
