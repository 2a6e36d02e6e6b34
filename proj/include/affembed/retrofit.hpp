#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affembed/detail/text.hpp"
#include "affembed/embedding_set.hpp"
#include "affembed/errors.hpp"
#include "affembed/lexicon.hpp"

namespace affembed {

// Undirected word graph of semantic relations. No self-loops, no duplicate
// edges; adjacency is kept symmetric.
class Ontology {
public:
    Index add_word(std::string_view word) {
        auto it = index_.find(word);
        if (it != index_.end()) return it->second;
        const Index id = static_cast<Index>(words_.size());
        words_.emplace_back(word);
        adjacency_.emplace_back();
        index_.emplace(words_.back(), id);
        return id;
    }

    // Returns false for self-loops and already-present edges.
    bool add_edge(std::string_view a, std::string_view b) {
        if (a == b) {
            ++self_loops_dropped_;
            return false;
        }
        const Index ia = add_word(a);
        const Index ib = add_word(b);
        auto& na = adjacency_[static_cast<std::size_t>(ia)];
        if (std::find(na.begin(), na.end(), ib) != na.end()) return false;
        na.push_back(ib);
        adjacency_[static_cast<std::size_t>(ib)].push_back(ia);
        ++edge_count_;
        return true;
    }

    std::size_t word_count() const noexcept { return words_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t self_loops_dropped() const noexcept { return self_loops_dropped_; }

    const std::vector<std::string>& words() const noexcept { return words_; }
    const std::string& word(Index i) const { return words_[static_cast<std::size_t>(i)]; }

    bool contains(std::string_view word) const { return index_.find(word) != index_.end(); }

    std::optional<Index> index_of(std::string_view word) const {
        auto it = index_.find(word);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<Index>& neighbors(Index i) const {
        return adjacency_[static_cast<std::size_t>(i)];
    }

private:
    std::vector<std::string> words_;
    WordIndexMap index_;
    std::vector<std::vector<Index>> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t self_loops_dropped_ = 0;
};

// One line per head word: "head neighbor neighbor ...", whitespace-separated.
// Repeated pairs deduplicate; empty lines are skipped.
inline Ontology load_ontology(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open ontology file: " + path.string());

    Ontology onto;
    std::string line;
    while (std::getline(in, line)) {
        detail::strip_cr(line);
        auto tokens = detail::split_whitespace(line);
        if (tokens.empty()) continue;
        for (std::size_t k = 1; k < tokens.size(); ++k) {
            onto.add_edge(tokens[0], tokens[k]);
        }
        if (tokens.size() == 1) onto.add_word(tokens[0]);
    }
    if (in.bad()) throw IoError("read failure on " + path.string());
    return onto;
}

// Combined affect similarity over all dimensions: 1 at identical vectors,
// 0 at the maximal distance corner-to-corner. Symmetric, range [0, 1].
inline double cstrength(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b,
                        double max_dist) {
    if (a.size() != b.size()) {
        throw ShapeMismatchError("affect vectors must have the same dimension");
    }
    const double denom = std::sqrt(static_cast<double>(a.size())) * max_dist;
    return 1.0 - (a - b).norm() / denom;
}

// Per-dimension affect similarity, summed. Symmetric, range [0, F].
inline double istrength(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b,
                        double max_dist) {
    if (a.size() != b.size()) {
        throw ShapeMismatchError("affect vectors must have the same dimension");
    }
    double s = 0.0;
    for (Index f = 0; f < a.size(); ++f) {
        s += 1.0 - std::abs(a[f] - b[f]) / max_dist;
    }
    return s;
}

enum class BetaRule { InverseDegree, Constant };
enum class StrengthKind { None, CStrength, IStrength };
enum class SweepMode { GaussSeidel, Jacobi };

struct RetrofitConfig {
    double alpha = 1.0;
    BetaRule beta_rule = BetaRule::InverseDegree;
    double beta_constant = 1.0;  // used when beta_rule == Constant
    StrengthKind strength = StrengthKind::None;
    int iterations = 10;
    std::optional<double> convergence_tol;  // stop when the largest per-word move falls below
    SweepMode mode = SweepMode::GaussSeidel;

    void validate() const {
        if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
        if (beta_rule == BetaRule::Constant && !(beta_constant > 0.0)) {
            throw ValidationError("constant beta must be positive");
        }
        if (iterations < 1) throw ValidationError("iterations must be at least 1");
        if (convergence_tol && !(*convergence_tol > 0.0)) {
            throw ValidationError("convergence tolerance must be positive");
        }
    }
};

namespace detail {

struct WeightedNeighbor {
    Index row;      // row in the embedding set
    double weight;  // beta'_ij
};

// Per vocabulary word, the in-vocabulary ontology neighbors with their final
// edge weights. InverseDegree divides by the count of usable neighbors (the
// ones actually summed); strength rescaling multiplies on top. Ontology words
// with no embedding cannot contribute a vector and are ignored.
inline std::vector<std::vector<WeightedNeighbor>> build_neighbor_lists(
    const EmbeddingSet& set, const Ontology& onto, const AffectLexicon* lexicon,
    const RetrofitConfig& cfg) {
    if (cfg.strength != StrengthKind::None && lexicon == nullptr) {
        throw MissingLexiconError();
    }

    std::vector<std::vector<WeightedNeighbor>> lists(
        static_cast<std::size_t>(set.size()));
    for (Index i = 0; i < set.size(); ++i) {
        auto node = onto.index_of(set.word(i));
        if (!node) continue;
        auto& list = lists[static_cast<std::size_t>(i)];
        for (Index nb : onto.neighbors(*node)) {
            if (auto row = set.index_of(onto.word(nb))) {
                list.push_back({*row, 0.0});
            }
        }
        if (list.empty()) continue;

        const double base = cfg.beta_rule == BetaRule::Constant
                                ? cfg.beta_constant
                                : 1.0 / static_cast<double>(list.size());
        for (auto& wn : list) {
            double s = 1.0;
            if (cfg.strength != StrengthKind::None) {
                const Vector& ai = lexicon->affect_vector(set.word(i));
                const Vector& aj = lexicon->affect_vector(set.word(wn.row));
                s = cfg.strength == StrengthKind::CStrength
                        ? cstrength(ai, aj, lexicon->max_dist())
                        : istrength(ai, aj, lexicon->max_dist());
            }
            wn.weight = base * s;
        }
    }
    return lists;
}

}  // namespace detail

// Iterative refinement pulling each word toward its graph neighbors while
// anchoring to the original vector:
//   q_i <- (sum_j beta'_ij q_j + alpha q_hat_i) / (sum_j beta'_ij + alpha).
// Gauss-Seidel sweeps in vocabulary order use already-updated neighbors;
// Jacobi sweeps read only the previous sweep's values (same fixed point).
// Words without usable neighbors keep their input vectors.
inline EmbeddingSet retrofit(const EmbeddingSet& set, const Ontology& onto,
                             const AffectLexicon* lexicon, const RetrofitConfig& cfg) {
    cfg.validate();
    const auto lists = detail::build_neighbor_lists(set, onto, lexicon, cfg);

    const Matrix& anchors = set.matrix();
    Matrix q = anchors;
    Matrix prev;
    RowVector updated(set.dim());

    for (int sweep = 0; sweep < cfg.iterations; ++sweep) {
        double max_move = 0.0;
        if (cfg.mode == SweepMode::Jacobi) prev = q;
        const Matrix& source = cfg.mode == SweepMode::Jacobi ? prev : q;

        for (Index i = 0; i < set.size(); ++i) {
            const auto& list = lists[static_cast<std::size_t>(i)];
            if (list.empty()) continue;
            updated = cfg.alpha * anchors.row(i);
            double denom = cfg.alpha;
            for (const auto& wn : list) {
                updated += wn.weight * source.row(wn.row);
                denom += wn.weight;
            }
            updated /= denom;
            max_move = std::max(max_move, (updated - q.row(i)).norm());
            q.row(i) = updated;
        }

        if (cfg.convergence_tol && max_move < *cfg.convergence_tol) break;
    }
    return EmbeddingSet(set.vocab(), std::move(q));
}

// The minimization objective. Each undirected edge contributes once, with the
// symmetrized weight (beta'_ij + beta'_ji)/2; this is the convex function
// whose per-word minimization yields the update rule whenever the edge
// weights are symmetric (constant beta, or strength-scaled constant beta).
// Inverse-degree weights are asymmetric on degree-irregular graphs, and no
// objective of this shape turns those sweeps into coordinate descent.
inline double objective(const EmbeddingSet& original, const EmbeddingSet& current,
                        const Ontology& onto, const AffectLexicon* lexicon,
                        const RetrofitConfig& cfg) {
    if (original.dim() != current.dim() || original.size() != current.size() ||
        original.vocab() != current.vocab()) {
        throw ShapeMismatchError("embedding sets must share vocabulary and dimension");
    }
    cfg.validate();
    const auto lists = detail::build_neighbor_lists(original, onto, lexicon, cfg);

    double psi = 0.0;
    for (Index i = 0; i < original.size(); ++i) {
        psi += cfg.alpha * (current.row(i) - original.row(i)).squaredNorm();
        for (const auto& wn : lists[static_cast<std::size_t>(i)]) {
            // both directed occurrences appear in the lists, so halving the
            // sum counts each edge once at the symmetrized weight
            psi += 0.5 * wn.weight * (current.row(i) - current.row(wn.row)).squaredNorm();
        }
    }
    return psi;
}

}  // namespace affembed
