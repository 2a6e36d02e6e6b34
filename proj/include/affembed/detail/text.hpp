#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace affembed::detail {

// Strips one trailing '\r' so files with CRLF line endings parse like LF ones.
inline void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool is_blank(std::string_view s) {
    for (char c : s) {
        if (c != ' ' && c != '\t') return false;
    }
    return true;
}

// Splits on runs of spaces/tabs; no empty tokens.
inline std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

// Splits on a single delimiter; empty fields are kept.
inline std::vector<std::string_view> split_delim(std::string_view s, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

// Locale-independent double parse of a whole token. Returns false on any
// trailing garbage or on NaN/Inf; embedding and lexicon values must be finite.
inline bool parse_finite_double(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) return false;
    return std::isfinite(out);
}

inline bool parse_size(std::string_view token, std::size_t& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

// Shortest representation that round-trips the exact double.
inline std::string format_double_shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// Fixed notation with `precision` digits after the decimal point.
inline std::string format_double_fixed(double v, int precision) {
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::fixed, precision);
    if (ec != std::errc()) return format_double_shortest(v);
    return std::string(buf, ptr);
}

}  // namespace affembed::detail
