#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affembed/detail/text.hpp"
#include "affembed/errors.hpp"

namespace affembed {

// Incremental FNV-1a (64-bit). Used for input checksums and for the run
// fingerprint embedded in report headers.
class Fnv1a64 {
public:
    Fnv1a64& update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ULL;
        }
        return *this;
    }

    Fnv1a64& update(const void* data, std::size_t n) {
        return update(std::string_view(static_cast<const char*>(data), n));
    }

    std::uint64_t value() const noexcept { return hash_; }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

inline std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

inline std::uint64_t file_checksum(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file for checksum: " + path.string());
    Fnv1a64 h;
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        std::streamsize got = in.gcount();
        if (got > 0) h.update(buf, static_cast<std::size_t>(got));
    }
    if (in.bad()) throw IoError("read failure while checksumming " + path.string());
    return h.value();
}

// Writes through a temp file in the same directory and renames into place, so
// the destination is either absent or complete.
inline void write_file_atomic(const std::filesystem::path& path,
                              const std::function<void(std::ostream&)>& writer) {
    namespace fs = std::filesystem;
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";

    std::random_device rd;
    fs::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd()));

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        try {
            writer(out);
        } catch (...) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw;
        }
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failure on '" + tmp.string() + "'");
        }
    }

    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() +
                      "': " + ec.message());
    }
}

// Run identity for report headers: tool version, a fingerprint of the
// data-affecting options, and a checksum per input file.
struct Provenance {
    std::string tool;
    std::string version;
    std::uint64_t config_hash = 0;
    std::vector<std::pair<std::string, std::uint64_t>> inputs;  // role -> checksum

    void write_comment_lines(std::ostream& os) const {
        os << "# " << tool << " " << version << "\n";
        os << "# provenance " << to_hex(config_hash) << "\n";
        for (const auto& [role, checksum] : inputs) {
            os << "# input " << role << "=" << to_hex(checksum) << "\n";
        }
    }
};

}  // namespace affembed
