#include "sequence_io.hpp"

#include "errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace zcz {

namespace {

using nlohmann::json;

// Shortest round-trip decimal for a double.
std::string format_double(double v)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    return out;
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    return in;
}

Sequence make_sequence(std::vector<std::int64_t> exponents, std::int64_t modulus,
                       const std::filesystem::path& path)
{
    try {
        return Sequence(std::move(exponents), modulus);
    } catch (const InvalidArgument& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

json meta_to_json(const SequenceMetadata& meta)
{
    json m = json::object();
    if (meta.construction) {
        m["construction"] = *meta.construction;
    }
    if (meta.n) {
        m["n"] = *meta.n;
    }
    if (meta.variant) {
        m["variant"] = *meta.variant;
    }
    if (meta.divisor) {
        m["d"] = *meta.divisor;
    }
    return m;
}

void save_json(const Sequence& s, const SequenceMetadata& meta,
               const std::filesystem::path& path)
{
    json doc;
    doc["modulus"] = s.modulus();
    doc["exponents"] = std::vector<std::int64_t>(s.exponents().begin(), s.exponents().end());
    doc["meta"] = meta_to_json(meta);
    auto out = open_out(path);
    out << doc.dump(2) << '\n';
}

void save_csv(const Sequence& s, const SequenceMetadata& meta,
              const std::filesystem::path& path)
{
    auto out = open_out(path);
    out << "# modulus=" << s.modulus() << '\n';
    if (meta.construction) {
        out << "# construction=" << *meta.construction << '\n';
    }
    if (meta.n) {
        out << "# n=" << *meta.n << '\n';
    }
    if (meta.variant) {
        out << "# variant=" << *meta.variant << '\n';
    }
    if (meta.divisor) {
        out << "# d=" << *meta.divisor << '\n';
    }
    out << "index,exponent\n";
    const auto exps = s.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        out << i << ',' << exps[i] << '\n';
    }
}

LoadedSequence load_json(const std::filesystem::path& path)
{
    auto in = open_in(path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("modulus") || !doc.contains("exponents")) {
        throw ParseError(path.string() + ": expected an object with \"modulus\" and \"exponents\"");
    }
    if (!doc["modulus"].is_number_integer() || !doc["exponents"].is_array()) {
        throw ParseError(path.string() + ": \"modulus\" must be an integer and \"exponents\" an array");
    }
    std::vector<std::int64_t> exponents;
    exponents.reserve(doc["exponents"].size());
    for (std::size_t i = 0; i < doc["exponents"].size(); ++i) {
        const auto& e = doc["exponents"][i];
        if (!e.is_number_integer()) {
            throw ParseError(path.string() + ": exponent at index " + std::to_string(i)
                             + " is not an integer");
        }
        exponents.push_back(e.get<std::int64_t>());
    }

    SequenceMetadata meta;
    if (doc.contains("meta") && doc["meta"].is_object()) {
        const auto& m = doc["meta"];
        if (m.contains("construction") && m["construction"].is_string()) {
            meta.construction = m["construction"].get<std::string>();
        }
        if (m.contains("n") && m["n"].is_number_integer()) {
            meta.n = m["n"].get<std::int64_t>();
        }
        if (m.contains("variant") && m["variant"].is_string()) {
            meta.variant = m["variant"].get<std::string>();
        }
        if (m.contains("d") && m["d"].is_number_integer()) {
            meta.divisor = m["d"].get<std::int64_t>();
        }
    }
    return LoadedSequence{make_sequence(std::move(exponents), doc["modulus"].get<std::int64_t>(), path),
                          std::move(meta)};
}

std::int64_t parse_int(const std::string& text, const std::filesystem::path& path,
                       std::size_t line_no)
{
    std::int64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(path.string() + ":" + std::to_string(line_no)
                         + ": expected an integer, got \"" + text + "\"");
    }
    return value;
}

LoadedSequence load_csv(const std::filesystem::path& path)
{
    auto in = open_in(path);
    SequenceMetadata meta;
    std::optional<std::int64_t> modulus;
    std::vector<std::int64_t> exponents;
    bool header_seen = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            std::string key = line.substr(1, eq - 1);
            std::string value = line.substr(eq + 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            if (key == "modulus") {
                modulus = parse_int(value, path, line_no);
            } else if (key == "construction") {
                meta.construction = value;
            } else if (key == "n") {
                meta.n = parse_int(value, path, line_no);
            } else if (key == "variant") {
                meta.variant = value;
            } else if (key == "d") {
                meta.divisor = parse_int(value, path, line_no);
            }
            continue;
        }
        if (!header_seen) {
            if (line != "index,exponent") {
                throw ParseError(path.string() + ":" + std::to_string(line_no)
                                 + ": expected header \"index,exponent\"");
            }
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError(path.string() + ":" + std::to_string(line_no)
                             + ": expected \"index,exponent\" row");
        }
        const std::int64_t index = parse_int(line.substr(0, comma), path, line_no);
        if (index != static_cast<std::int64_t>(exponents.size())) {
            throw ParseError(path.string() + ":" + std::to_string(line_no)
                             + ": index " + std::to_string(index) + " out of order, expected "
                             + std::to_string(exponents.size()));
        }
        exponents.push_back(parse_int(line.substr(comma + 1), path, line_no));
    }
    if (!modulus) {
        throw ParseError(path.string() + ": missing \"# modulus=N\" line");
    }
    if (!header_seen) {
        throw ParseError(path.string() + ": missing \"index,exponent\" header");
    }
    return LoadedSequence{make_sequence(std::move(exponents), *modulus, path), std::move(meta)};
}

} // namespace

const char* to_string(FileFormat f)
{
    return f == FileFormat::Json ? "json" : "csv";
}

void save_sequence(const Sequence& s, const SequenceMetadata& meta,
                   const std::filesystem::path& path, FileFormat format)
{
    if (format == FileFormat::Json) {
        save_json(s, meta, path);
    } else {
        save_csv(s, meta, path);
    }
}

LoadedSequence load_sequence(const std::filesystem::path& path, FileFormat format)
{
    return format == FileFormat::Json ? load_json(path) : load_csv(path);
}

void save_profile_csv(const CorrelationProfile& p, const std::filesystem::path& path)
{
    auto out = open_out(path);
    out << "shift,re,im,abs,is_zero\n";
    for (std::int64_t tau = 0; tau < p.period(); ++tau) {
        const auto v = p.value(tau);
        out << tau << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << ','
            << format_double(std::abs(v)) << ',' << (p.is_zero(tau) ? 1 : 0) << '\n';
    }
}

} // namespace zcz
