#pragma once

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affembed/errors.hpp"

namespace affembed {

// Row-major so that one word's vector is contiguous, matching the row-per-word
// text formats this library reads and writes.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Index = Eigen::Index;

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

using WordIndexMap =
    std::unordered_map<std::string, Index, StringHash, std::equal_to<>>;

// Ordered vocabulary plus one dense row per word. Immutable after
// construction and safe to share across threads for reads.
class EmbeddingSet {
public:
    EmbeddingSet(std::vector<std::string> vocab, Matrix matrix)
        : vocab_(std::move(vocab)), matrix_(std::move(matrix)) {
        if (vocab_.empty()) {
            throw ValidationError("embedding set must contain at least one word");
        }
        if (matrix_.cols() < 1) {
            throw ValidationError("embedding dimension must be at least 1");
        }
        if (matrix_.rows() != static_cast<Index>(vocab_.size())) {
            throw ValidationError(
                "vocabulary size (" + std::to_string(vocab_.size()) +
                ") does not match matrix rows (" + std::to_string(matrix_.rows()) + ")");
        }
        if (!matrix_.allFinite()) {
            throw ValidationError("embedding matrix contains non-finite values");
        }
        index_.reserve(vocab_.size());
        for (std::size_t i = 0; i < vocab_.size(); ++i) {
            if (!index_.emplace(vocab_[i], static_cast<Index>(i)).second) {
                throw ValidationError("duplicate word '" + vocab_[i] + "' in vocabulary");
            }
        }
    }

    Index size() const noexcept { return matrix_.rows(); }
    Index dim() const noexcept { return matrix_.cols(); }

    const std::vector<std::string>& vocab() const noexcept { return vocab_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    const std::string& word(Index i) const { return vocab_[static_cast<std::size_t>(i)]; }

    auto row(Index i) const { return matrix_.row(i); }

    std::optional<Index> index_of(std::string_view word) const {
        auto it = index_.find(word);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(std::string_view word) const { return index_.find(word) != index_.end(); }

    // The row for `word`, or absent. Never fails.
    std::optional<RowVector> lookup(std::string_view word) const {
        auto idx = index_of(word);
        if (!idx) return std::nullopt;
        return RowVector(matrix_.row(*idx));
    }

private:
    std::vector<std::string> vocab_;
    Matrix matrix_;
    WordIndexMap index_;
};

}  // namespace affembed
