#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affembed/detail/text.hpp"
#include "affembed/embedding_set.hpp"
#include "affembed/errors.hpp"

namespace affembed {

// Word -> affect vector on a bounded scale. Words missing from the lexicon
// get the neutral vector (scale midpoint per dimension), so lookups never fail.
class AffectLexicon {
public:
    using EntryMap = std::unordered_map<std::string, Vector, StringHash, std::equal_to<>>;

    AffectLexicon(EntryMap entries, Index dims, double scale_min, double scale_max)
        : entries_(std::move(entries)),
          dims_(dims),
          scale_min_(scale_min),
          scale_max_(scale_max) {
        if (dims_ < 1) throw ValidationError("affect dimensionality must be at least 1");
        if (!(scale_max_ > scale_min_)) {
            throw ValidationError("scale_max must be strictly greater than scale_min");
        }
        neutral_ = Vector::Constant(dims_, (scale_min_ + scale_max_) / 2.0);
        for (const auto& [word, vec] : entries_) {
            if (vec.size() != dims_) {
                throw ValidationError("affect vector for '" + word + "' has wrong dimension");
            }
            for (Index f = 0; f < dims_; ++f) {
                if (!(vec[f] >= scale_min_ && vec[f] <= scale_max_)) {
                    throw ValidationError("affect value for '" + word + "' is outside the scale");
                }
            }
        }
    }

    Index dims() const noexcept { return dims_; }
    double scale_min() const noexcept { return scale_min_; }
    double scale_max() const noexcept { return scale_max_; }
    // Maximum possible distance between two values in any one dimension.
    double max_dist() const noexcept { return scale_max_ - scale_min_; }
    const Vector& neutral() const noexcept { return neutral_; }
    std::size_t size() const noexcept { return entries_.size(); }

    bool contains(std::string_view word) const {
        return entries_.find(word) != entries_.end();
    }

    // Stored vector if present, else neutral. Total: defined for every string.
    const Vector& affect_vector(std::string_view word) const {
        auto it = entries_.find(word);
        return it == entries_.end() ? neutral_ : it->second;
    }

private:
    EntryMap entries_;
    Index dims_;
    double scale_min_;
    double scale_max_;
    Vector neutral_;
};

// Which columns of a delimited file hold the word and the affect values,
// either by header name or by 0-based position.
struct ColumnSpec {
    bool by_name = true;
    std::string word_name;
    std::vector<std::string> value_names;
    std::size_t word_index = 0;
    std::vector<std::size_t> value_indices;
    bool has_header = true;

    static ColumnSpec names(std::string word, std::vector<std::string> values) {
        ColumnSpec spec;
        spec.by_name = true;
        spec.word_name = std::move(word);
        spec.value_names = std::move(values);
        return spec;
    }

    static ColumnSpec indices(std::size_t word, std::vector<std::size_t> values,
                              bool has_header = false) {
        ColumnSpec spec;
        spec.by_name = false;
        spec.word_index = word;
        spec.value_indices = std::move(values);
        spec.has_header = has_header;
        return spec;
    }

    // Column layout of the published VAD norms CSV.
    static ColumnSpec warriner() {
        return names("Word", {"V.Mean.Sum", "A.Mean.Sum", "D.Mean.Sum"});
    }

    std::size_t value_count() const {
        return by_name ? value_names.size() : value_indices.size();
    }
};

struct LexiconLoadOptions {
    ColumnSpec columns = ColumnSpec::warriner();
    double scale_min = 1.0;
    double scale_max = 9.0;
    char delimiter = '\0';  // '\0' = auto-detect: tab if the first line has one, else comma
    bool lowercase_words = false;
};

namespace detail {

inline std::string lowercase_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace detail

// Loads a comma- or tab-separated affect lexicon. Quoted fields are not
// supported; the published VAD norms file does not need them.
inline AffectLexicon load_lexicon(const std::filesystem::path& path,
                                  const LexiconLoadOptions& options = {}) {
    const ColumnSpec& spec = options.columns;
    if (spec.value_count() == 0) {
        throw ValidationError("column spec must name at least one affect value column");
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file: " + path.string());
    const std::string name = path.string();

    std::string line;
    std::size_t line_no = 0;

    char delim = options.delimiter;
    std::size_t word_col = spec.word_index;
    std::vector<std::size_t> value_cols = spec.value_indices;

    const bool expect_header = spec.by_name || spec.has_header;
    if (expect_header) {
        if (!std::getline(in, line)) throw ParseError(name, 1, "missing header line");
        ++line_no;
        detail::strip_cr(line);
        if (delim == '\0') delim = line.find('\t') != std::string::npos ? '\t' : ',';
        if (spec.by_name) {
            auto fields = detail::split_delim(line, delim);
            auto find_col = [&](const std::string& col) -> std::size_t {
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (fields[i] == col) return i;
                }
                throw ParseError(name, 1, "column '" + col + "' not found in header");
            };
            word_col = find_col(spec.word_name);
            value_cols.clear();
            for (const auto& col : spec.value_names) value_cols.push_back(find_col(col));
        }
    }

    const Index dims = static_cast<Index>(spec.value_count());
    AffectLexicon::EntryMap entries;

    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_cr(line);
        if (line.empty()) continue;
        if (delim == '\0') delim = line.find('\t') != std::string::npos ? '\t' : ',';

        auto fields = detail::split_delim(line, delim);
        std::size_t needed = word_col;
        for (std::size_t c : value_cols) needed = std::max(needed, c);
        if (fields.size() <= needed) {
            throw ParseError(name, line_no,
                             "expected at least " + std::to_string(needed + 1) + " fields, found " +
                                 std::to_string(fields.size()));
        }

        std::string word(fields[word_col]);
        if (word.empty()) throw ParseError(name, line_no, "empty word field");
        if (options.lowercase_words) word = detail::lowercase_ascii(word);

        Vector vec(dims);
        for (Index f = 0; f < dims; ++f) {
            std::string_view field = fields[value_cols[static_cast<std::size_t>(f)]];
            double v = 0.0;
            if (!detail::parse_finite_double(field, v)) {
                throw ParseError(name, line_no,
                                 "cannot parse '" + std::string(field) + "' as a finite number");
            }
            if (v < options.scale_min || v > options.scale_max) {
                throw OutOfScaleError(name, line_no, word, static_cast<std::size_t>(f), v);
            }
            vec[f] = v;
        }

        // try_emplace leaves `word` intact when the key already exists.
        if (!entries.try_emplace(std::move(word), std::move(vec)).second) {
            throw DuplicateWordError(name, line_no, word);
        }
    }
    if (in.bad()) throw IoError("read failure on " + name);

    return AffectLexicon(std::move(entries), dims, options.scale_min, options.scale_max);
}

// |vocab ∩ lexicon| / |vocab|.
inline double coverage(const AffectLexicon& lex, const EmbeddingSet& set) {
    std::size_t hits = 0;
    for (const auto& word : set.vocab()) {
        if (lex.contains(word)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(set.size());
}

}  // namespace affembed
