#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "affembed/detail/text.hpp"
#include "affembed/embedding_set.hpp"
#include "affembed/errors.hpp"
#include "affembed/report.hpp"

namespace affembed {

// Plain text: one line per word, "word v1 v2 ... vD".
// Word2VecTextHeader: same rows preceded by a "count dim" line.
// UTF-8, LF or CRLF; fields separated by ASCII spaces.
enum class VectorFileFormat { PlainText, Word2VecTextHeader };

// Sniffs the first line: exactly two unsigned-integer tokens means a
// word2vec-style header.
inline VectorFileFormat detect_format(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open embeddings file: " + path.string());
    std::string line;
    if (!std::getline(in, line)) {
        return VectorFileFormat::PlainText;
    }
    detail::strip_cr(line);
    auto tokens = detail::split_whitespace(line);
    std::size_t a = 0, b = 0;
    if (tokens.size() == 2 && detail::parse_size(tokens[0], a) &&
        detail::parse_size(tokens[1], b)) {
        return VectorFileFormat::Word2VecTextHeader;
    }
    return VectorFileFormat::PlainText;
}

inline EmbeddingSet load_embeddings(const std::filesystem::path& path,
                                    VectorFileFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open embeddings file: " + path.string());
    const std::string name = path.string();

    std::string line;
    std::size_t line_no = 0;

    std::size_t header_count = 0;
    std::size_t dim = 0;  // fixed by the header or by the first data row
    if (format == VectorFileFormat::Word2VecTextHeader) {
        if (!std::getline(in, line)) {
            throw ParseError(name, 1, "missing 'count dim' header line");
        }
        ++line_no;
        detail::strip_cr(line);
        auto tokens = detail::split_whitespace(line);
        if (tokens.size() != 2 || !detail::parse_size(tokens[0], header_count) ||
            !detail::parse_size(tokens[1], dim)) {
            throw ParseError(name, 1, "malformed 'count dim' header line");
        }
        if (dim == 0) throw ParseError(name, 1, "header dimension must be positive");
    }

    std::vector<std::string> vocab;
    std::vector<double> values;
    WordIndexMap seen;

    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_cr(line);
        if (detail::is_blank(line)) continue;

        auto tokens = detail::split_whitespace(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2) {
            throw ParseError(name, line_no, "expected a word followed by vector values");
        }

        std::string word(tokens[0]);
        const std::size_t found = tokens.size() - 1;
        if (dim == 0) {
            dim = found;
        } else if (found != dim) {
            throw InconsistentDimensionError(name, line_no, dim, found);
        }

        if (!seen.emplace(word, static_cast<Index>(vocab.size())).second) {
            throw DuplicateWordError(name, line_no, word);
        }

        for (std::size_t k = 1; k < tokens.size(); ++k) {
            double v = 0.0;
            if (!detail::parse_finite_double(tokens[k], v)) {
                throw ParseError(name, line_no,
                                 "cannot parse '" + std::string(tokens[k]) +
                                     "' as a finite number");
            }
            values.push_back(v);
        }
        vocab.push_back(std::move(word));
    }
    if (in.bad()) throw IoError("read failure on " + name);

    if (vocab.empty()) {
        throw ParseError(name, line_no == 0 ? 1 : line_no, "no vector rows found");
    }
    if (format == VectorFileFormat::Word2VecTextHeader && vocab.size() != header_count) {
        throw ParseError(name, line_no,
                         "header declares " + std::to_string(header_count) +
                             " rows but file contains " + std::to_string(vocab.size()));
    }

    Matrix m(static_cast<Index>(vocab.size()), static_cast<Index>(dim));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            m(i, j) = values[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)];
        }
    }
    return EmbeddingSet(std::move(vocab), std::move(m));
}

// precision >= 17 selects shortest round-trip notation (bit-exact reload);
// smaller values select fixed notation with that many decimal digits.
inline void save_embeddings(const EmbeddingSet& set, const std::filesystem::path& path,
                            VectorFileFormat format, int precision = 6) {
    if (precision < 0) throw ValidationError("precision must be non-negative");
    const bool shortest = precision >= 17;

    write_file_atomic(path, [&](std::ostream& os) {
        if (format == VectorFileFormat::Word2VecTextHeader) {
            os << set.size() << " " << set.dim() << "\n";
        }
        std::string buf;
        for (Index i = 0; i < set.size(); ++i) {
            os << set.word(i);
            for (Index j = 0; j < set.dim(); ++j) {
                buf = shortest ? detail::format_double_shortest(set.matrix()(i, j))
                               : detail::format_double_fixed(set.matrix()(i, j), precision);
                os << ' ' << buf;
            }
            os << '\n';
        }
    });
}

}  // namespace affembed
