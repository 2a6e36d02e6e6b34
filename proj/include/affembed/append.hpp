#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "affembed/detail/parallel.hpp"
#include "affembed/embedding_set.hpp"
#include "affembed/errors.hpp"
#include "affembed/lexicon.hpp"

namespace affembed {

enum class EnrichedStage { Concatenated, Standardized, Reduced };

// Vocabulary plus the matrix of one enrichment stage: word⊕affect rows of
// width D+F, the standardized version of those, or the PCA-reduced width-D
// result.
struct EnrichedMatrix {
    EnrichedStage stage;
    std::vector<std::string> vocab;
    Matrix values;
};

struct PcaModel {
    Vector mean;             // column means of the fitted data
    Matrix axes;             // input_width x target_dim, orthonormal columns
    Vector singular_values;  // of the centered data matrix, non-increasing
    Index rank = 0;          // axes backed by nonzero variance; smaller values are padding
};

// Scales every row to unit Euclidean norm. A zero row has no direction and
// is rejected.
inline Matrix l2_normalize_rows(const Eigen::Ref<const Matrix>& m) {
    Matrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        const double norm = m.row(i).norm();
        if (norm == 0.0) throw ZeroVectorError(i);
        out.row(i) = m.row(i) / norm;
    }
    return out;
}

// Row i = normalized word vector ⊕ normalized affect vector, width D+F.
// Words outside the lexicon contribute its neutral vector.
inline EnrichedMatrix concat_affect(const EmbeddingSet& set, const AffectLexicon& lex) {
    const Index d = set.dim();
    const Index f = lex.dims();
    Matrix out(set.size(), d + f);
    for (Index i = 0; i < set.size(); ++i) {
        const double word_norm = set.row(i).norm();
        if (word_norm == 0.0) throw ZeroVectorError(i);
        out.row(i).head(d) = set.row(i) / word_norm;

        const Vector& affect = lex.affect_vector(set.word(i));
        const double affect_norm = affect.norm();
        if (affect_norm == 0.0) throw ZeroVectorError(i);
        out.row(i).tail(f) = affect.transpose() / affect_norm;
    }
    return EnrichedMatrix{EnrichedStage::Concatenated, set.vocab(), std::move(out)};
}

namespace detail {

// Columns whose spread is at (or below) floating-point noise around a
// constant are treated as zero-variance.
inline bool negligible_stddev(double stddev, double mean) {
    return stddev <= 1e-13 * (1.0 + std::abs(mean));
}

}  // namespace detail

// Per column: subtract the mean and divide by the population standard
// deviation. Zero-variance columns are centered only, leaving them all-zero.
inline EnrichedMatrix standardize_columns(EnrichedMatrix m) {
    if (m.stage != EnrichedStage::Concatenated) {
        throw ValidationError("standardize_columns expects a concatenated matrix");
    }
    const Index n = m.values.rows();
    if (n < 2) throw TooFewRowsError("standardization needs at least 2 rows");

    for (Index j = 0; j < m.values.cols(); ++j) {
        const double mean = m.values.col(j).mean();
        m.values.col(j).array() -= mean;
        const double stddev = std::sqrt(m.values.col(j).squaredNorm() / static_cast<double>(n));
        if (!detail::negligible_stddev(stddev, mean)) {
            m.values.col(j) /= stddev;
        }
    }
    m.stage = EnrichedStage::Standardized;
    return m;
}

namespace detail {

// Flips each column so its largest-magnitude entry (first such index) is
// positive, making the axes reproducible across linear-algebra backends.
inline void fix_axis_signs(Matrix& axes) {
    for (Index j = 0; j < axes.cols(); ++j) {
        Index at = 0;
        double best = -1.0;
        for (Index i = 0; i < axes.rows(); ++i) {
            const double mag = std::abs(axes(i, j));
            if (mag > best) {
                best = mag;
                at = i;
            }
        }
        if (axes(at, j) < 0.0) axes.col(j) = -axes.col(j);
    }
}

}  // namespace detail

// Principal axes of the (re-centered) input via a width x width scatter-matrix
// eigendecomposition, so memory stays bounded for large vocabularies. When the
// data has fewer than target_dim directions of variance the eigenbasis of the
// zero eigenvalues pads the axes; `rank` records how many axes carry variance.
inline PcaModel fit_pca(const EnrichedMatrix& m, Index target_dim, unsigned threads = 1) {
    if (m.stage != EnrichedStage::Standardized) {
        throw ValidationError("fit_pca expects a standardized matrix");
    }
    const Index n = m.values.rows();
    const Index width = m.values.cols();
    if (target_dim < 1) throw ValidationError("target dimension must be at least 1");
    if (target_dim > width) {
        throw ValidationError("target dimension exceeds matrix width");
    }
    if (n < target_dim) {
        throw ValidationError("need at least as many rows as target dimensions");
    }

    PcaModel model;
    model.mean = m.values.colwise().mean();

    // Scatter S = (X-mean)^T (X-mean), accumulated over fixed-size row blocks
    // and combined in block order (bit-stable for any thread count).
    constexpr std::ptrdiff_t kBlock = 2048;
    const std::ptrdiff_t num_blocks = (n + kBlock - 1) / kBlock;
    std::vector<Eigen::MatrixXd> partials(static_cast<std::size_t>(num_blocks),
                                          Eigen::MatrixXd::Zero(width, width));
    detail::for_each_block(n, kBlock, threads, [&](std::ptrdiff_t begin, std::ptrdiff_t end) {
        Matrix centered = m.values.middleRows(begin, end - begin);
        centered.rowwise() -= model.mean.transpose();
        partials[static_cast<std::size_t>(begin / kBlock)].noalias() =
            centered.transpose() * centered;
    });
    Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(width, width);
    for (const auto& p : partials) scatter += p;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(scatter);
    if (solver.info() != Eigen::Success) {
        throw Error("eigendecomposition of the scatter matrix failed");
    }

    // Eigen orders eigenvalues ascending; take the top target_dim, descending.
    model.axes.resize(width, target_dim);
    model.singular_values.resize(target_dim);
    const double lambda_max = std::max(0.0, solver.eigenvalues()(width - 1));
    const double rank_tol = static_cast<double>(width) * lambda_max * 1e-12;
    model.rank = 0;
    for (Index k = 0; k < target_dim; ++k) {
        const Index src = width - 1 - k;
        const double lambda = std::max(0.0, solver.eigenvalues()(src));
        model.axes.col(k) = solver.eigenvectors().col(src);
        model.singular_values(k) = std::sqrt(lambda);
        if (lambda > rank_tol && lambda > 0.0) ++model.rank;
    }
    detail::fix_axis_signs(model.axes);
    return model;
}

// (rows - mean) * axes.
inline Matrix pca_project(const PcaModel& model, const Eigen::Ref<const Matrix>& rows,
                          unsigned threads = 1) {
    if (rows.cols() != model.mean.size()) {
        throw ShapeMismatchError("projection input width does not match the PCA model");
    }
    Matrix out(rows.rows(), model.axes.cols());
    detail::for_each_block(rows.rows(), 2048, threads,
                           [&](std::ptrdiff_t begin, std::ptrdiff_t end) {
                               Matrix centered = rows.middleRows(begin, end - begin);
                               centered.rowwise() -= model.mean.transpose();
                               out.middleRows(begin, end - begin).noalias() =
                                   centered * model.axes;
                           });
    return out;
}

struct AppendOptions {
    Index target_dim = 0;  // 0 = keep the source dimensionality
    unsigned threads = 1;
};

// The full enrichment pipeline: normalize, concatenate affect, standardize,
// then PCA back down to the original width. Vocabulary and order are
// preserved.
inline EmbeddingSet affect_append(const EmbeddingSet& set, const AffectLexicon& lex,
                                  const AppendOptions& options = {}) {
    const Index target = options.target_dim > 0 ? options.target_dim : set.dim();
    EnrichedMatrix standardized = standardize_columns(concat_affect(set, lex));
    PcaModel model = fit_pca(standardized, target, options.threads);
    Matrix reduced = pca_project(model, standardized.values, options.threads);
    return EmbeddingSet(std::move(standardized.vocab), std::move(reduced));
}

}  // namespace affembed
