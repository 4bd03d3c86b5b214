#include "construction.hpp"
#include "correlation.hpp"
#include "errors.hpp"
#include "sequence_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace zcz;
namespace fs = std::filesystem;

namespace {

fs::path test_dir()
{
    const fs::path dir = fs::temp_directory_path() / "zcz_io_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
}

} // namespace

TEST_CASE("json round trip with metadata")
{
    const fs::path path = test_dir() / "zcz_n0.json";
    const Sequence s = build_zcz_sequence(0, RoundingVariant::Floor);
    SequenceMetadata meta;
    meta.construction = "zcz";
    meta.n = 0;
    meta.variant = "floor";
    save_sequence(s, meta, path, FileFormat::Json);

    const LoadedSequence loaded = load_sequence(path, FileFormat::Json);
    CHECK(loaded.sequence == s);
    CHECK(loaded.metadata.construction == "zcz");
    CHECK(loaded.metadata.n == 0);
    CHECK(loaded.metadata.variant == "floor");

    const auto doc = nlohmann::json::parse(slurp(path));
    CHECK(doc["modulus"] == 6);
    CHECK(doc["exponents"].size() == 24);
    CHECK(doc["exponents"][3] == 1);
    CHECK(doc["meta"]["construction"] == "zcz");
}

TEST_CASE("csv round trip keeps the modulus")
{
    const fs::path path = test_dir() / "frank_d2.csv";
    const Sequence s = build_frank_sequence(2);
    SequenceMetadata meta;
    meta.construction = "frank";
    meta.divisor = 2;
    save_sequence(s, meta, path, FileFormat::Csv);

    const std::string text = slurp(path);
    CHECK(text.find("# modulus=2\n") != std::string::npos);
    CHECK(text.find("index,exponent\n") != std::string::npos);
    CHECK(text.find("3,1\n") != std::string::npos);

    const LoadedSequence loaded = load_sequence(path, FileFormat::Csv);
    CHECK(loaded.sequence == s);
    CHECK(loaded.metadata.divisor == 2);
}

TEST_CASE("round trips on random sequences, both formats")
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t modulus = 1 + static_cast<std::int64_t>(rng() % 90);
        const std::int64_t period = 1 + static_cast<std::int64_t>(rng() % 200);
        std::vector<std::int64_t> exps;
        for (std::int64_t i = 0; i < period; ++i) {
            exps.push_back(static_cast<std::int64_t>(rng() % modulus));
        }
        const Sequence s(exps, modulus);
        for (const FileFormat format : {FileFormat::Json, FileFormat::Csv}) {
            const fs::path path = test_dir()
                / ("roundtrip_" + std::to_string(trial) + "." + to_string(format));
            save_sequence(s, {}, path, format);
            CHECK(load_sequence(path, format).sequence == s);
        }
    }
}

TEST_CASE("saving is byte deterministic")
{
    const Sequence s = build_zcz_sequence(1, RoundingVariant::Ceiling);
    SequenceMetadata meta;
    meta.construction = "zcz";
    meta.n = 1;
    meta.variant = "ceiling";
    const fs::path a = test_dir() / "det_a.json";
    const fs::path b = test_dir() / "det_b.json";
    save_sequence(s, meta, a, FileFormat::Json);
    save_sequence(s, meta, b, FileFormat::Json);
    CHECK(slurp(a) == slurp(b));

    const fs::path c = test_dir() / "det_a.csv";
    const fs::path d = test_dir() / "det_b.csv";
    save_sequence(s, meta, c, FileFormat::Csv);
    save_sequence(s, meta, d, FileFormat::Csv);
    CHECK(slurp(c) == slurp(d));
}

TEST_CASE("load rejects malformed files")
{
    const fs::path dir = test_dir();

    SUBCASE("missing file")
    {
        CHECK_THROWS_AS(load_sequence(dir / "does_not_exist.json", FileFormat::Json), IoError);
    }
    SUBCASE("broken json")
    {
        const fs::path path = dir / "broken.json";
        spit(path, "{ not json");
        CHECK_THROWS_AS(load_sequence(path, FileFormat::Json), ParseError);
    }
    SUBCASE("exponent out of range names the index")
    {
        const fs::path path = dir / "out_of_range.json";
        spit(path, R"({"modulus": 6, "exponents": [0, 1, 7], "meta": {}})");
        CHECK_THROWS_WITH_AS(load_sequence(path, FileFormat::Json),
                             doctest::Contains("index 2"), ParseError);
    }
    SUBCASE("negative exponent rejected")
    {
        const fs::path path = dir / "negative.json";
        spit(path, R"({"modulus": 6, "exponents": [0, -1], "meta": {}})");
        CHECK_THROWS_WITH_AS(load_sequence(path, FileFormat::Json),
                             doctest::Contains("index 1"), ParseError);
    }
    SUBCASE("non-integer exponent rejected")
    {
        const fs::path path = dir / "float.json";
        spit(path, R"({"modulus": 6, "exponents": [0, 1.5], "meta": {}})");
        CHECK_THROWS_AS(load_sequence(path, FileFormat::Json), ParseError);
    }
    SUBCASE("csv without modulus comment")
    {
        const fs::path path = dir / "no_modulus.csv";
        spit(path, "index,exponent\n0,0\n1,1\n");
        CHECK_THROWS_WITH_AS(load_sequence(path, FileFormat::Csv),
                             doctest::Contains("modulus"), ParseError);
    }
    SUBCASE("csv with a wrong header")
    {
        const fs::path path = dir / "bad_header.csv";
        spit(path, "# modulus=6\nidx,value\n0,0\n");
        CHECK_THROWS_AS(load_sequence(path, FileFormat::Csv), ParseError);
    }
    SUBCASE("csv with out-of-order indices")
    {
        const fs::path path = dir / "bad_order.csv";
        spit(path, "# modulus=6\nindex,exponent\n0,0\n2,1\n");
        CHECK_THROWS_AS(load_sequence(path, FileFormat::Csv), ParseError);
    }
    SUBCASE("csv exponent beyond the modulus names the index")
    {
        const fs::path path = dir / "csv_range.csv";
        spit(path, "# modulus=6\nindex,exponent\n0,0\n1,9\n");
        CHECK_THROWS_WITH_AS(load_sequence(path, FileFormat::Csv),
                             doctest::Contains("index 1"), ParseError);
    }
}

TEST_CASE("profile csv layout")
{
    const fs::path path = test_dir() / "profile_n0.csv";
    const auto profile = auto_profile(build_zcz_sequence(0, RoundingVariant::Floor));
    save_profile_csv(profile, path);

    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "shift,re,im,abs,is_zero");

    int rows = 0;
    std::vector<int> zero_flags;
    while (std::getline(in, line)) {
        ++rows;
        const auto last_comma = line.rfind(',');
        zero_flags.push_back(std::stoi(line.substr(last_comma + 1)));
    }
    REQUIRE(rows == 24);
    for (int tau = 0; tau < 24; ++tau) {
        const bool nonzero = tau == 0 || tau == 6 || tau == 18;
        CHECK(zero_flags[static_cast<std::size_t>(tau)] == (nonzero ? 0 : 1));
    }

    const fs::path again = test_dir() / "profile_n0_again.csv";
    save_profile_csv(profile, again);
    CHECK(slurp(path) == slurp(again));
}

TEST_CASE("save rejects unwritable paths")
{
    const Sequence s = build_frank_sequence(2);
    CHECK_THROWS_AS(save_sequence(s, {}, "/nonexistent_dir_zcz/out.json", FileFormat::Json),
                    IoError);
    const auto profile = auto_profile(s);
    CHECK_THROWS_AS(save_profile_csv(profile, "/nonexistent_dir_zcz/out.csv"), IoError);
}
