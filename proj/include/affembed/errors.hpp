#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affembed {

// Base of everything this library throws. The CLI maps subclasses onto its
// exit-code contract: IoError -> 3, all other Error subclasses -> 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Invariant violations on construction or bad arguments to an operation.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A line of an input file that does not parse. `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::string file, std::size_t line, const std::string& reason)
        : Error(file + ":" + std::to_string(line) + ": " + reason),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

class InconsistentDimensionError : public ParseError {
public:
    InconsistentDimensionError(std::string file, std::size_t line,
                               std::size_t expected, std::size_t found)
        : ParseError(std::move(file), line,
                     "expected " + std::to_string(expected) + " values, found " +
                         std::to_string(found)),
          expected_(expected),
          found_(found) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t found() const noexcept { return found_; }

private:
    std::size_t expected_;
    std::size_t found_;
};

class DuplicateWordError : public ParseError {
public:
    DuplicateWordError(std::string file, std::size_t line, std::string word)
        : ParseError(std::move(file), line, "duplicate word '" + word + "'"),
          word_(std::move(word)) {}

    const std::string& word() const noexcept { return word_; }

private:
    std::string word_;
};

class OutOfScaleError : public ParseError {
public:
    OutOfScaleError(std::string file, std::size_t line, std::string word,
                    std::size_t dim, double value)
        : ParseError(std::move(file), line,
                     "value " + std::to_string(value) + " for word '" + word +
                         "' (dimension " + std::to_string(dim) + ") is outside the scale"),
          word_(std::move(word)),
          dim_(dim),
          value_(value) {}

    const std::string& word() const noexcept { return word_; }
    std::size_t dim() const noexcept { return dim_; }
    double value() const noexcept { return value_; }

private:
    std::string word_;
    std::size_t dim_;
    double value_;
};

class ZeroVectorError : public Error {
public:
    explicit ZeroVectorError(std::ptrdiff_t row)
        : Error("zero vector at row " + std::to_string(row) +
                " cannot be unit-normalized"),
          row_(row) {}
    explicit ZeroVectorError(const std::string& msg) : Error(msg), row_(-1) {}

    std::ptrdiff_t row() const noexcept { return row_; }

private:
    std::ptrdiff_t row_;
};

class TooFewRowsError : public Error {
public:
    explicit TooFewRowsError(const std::string& msg) : Error(msg) {}
};

class MissingLexiconError : public Error {
public:
    MissingLexiconError()
        : Error("strength-weighted retrofitting requires an affect lexicon") {}
};

class UnknownWordError : public Error {
public:
    explicit UnknownWordError(std::string word)
        : Error("word '" + word + "' is not in the vocabulary"), word_(std::move(word)) {}

    const std::string& word() const noexcept { return word_; }

private:
    std::string word_;
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t a, std::size_t b)
        : Error("sequence lengths differ: " + std::to_string(a) + " vs " +
                std::to_string(b)) {}
};

class ZeroVarianceError : public Error {
public:
    explicit ZeroVarianceError(const std::string& msg) : Error(msg) {}
};

class DatasetEmptyError : public Error {
public:
    explicit DatasetEmptyError(const std::string& msg) : Error(msg) {}
};

class ShapeMismatchError : public Error {
public:
    explicit ShapeMismatchError(const std::string& msg) : Error(msg) {}
};

}  // namespace affembed
