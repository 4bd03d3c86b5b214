#pragma once

#include "construction.hpp"
#include "correlation.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace zcz {

enum class FileFormat {
    Json,
    Csv,
};

const char* to_string(FileFormat f);

// How the sequence in a file was made; everything optional.
struct SequenceMetadata {
    std::optional<std::string> construction; // "zcz" or "frank"
    std::optional<std::int64_t> n;           // zcz parameter
    std::optional<std::string> variant;      // "floor" or "ceiling"
    std::optional<std::int64_t> divisor;     // frank parameter
};

struct LoadedSequence {
    Sequence sequence;
    SequenceMetadata metadata;
};

// JSON: {"modulus": N, "exponents": [...], "meta": {...}}.
// CSV: "# key=value" comment lines (modulus plus metadata), then the header
// "index,exponent" and one row per entry. Output bytes are deterministic for
// fixed inputs.
void save_sequence(const Sequence& s, const SequenceMetadata& meta,
                   const std::filesystem::path& path, FileFormat format);

// Validates modulus >= 1, a non-empty exponent list, and every exponent in
// [0, modulus); a violation raises ParseError naming the offending index.
LoadedSequence load_sequence(const std::filesystem::path& path, FileFormat format);

// CSV with header "shift,re,im,abs,is_zero", one row per shift in [0, L).
void save_profile_csv(const CorrelationProfile& p, const std::filesystem::path& path);

} // namespace zcz
