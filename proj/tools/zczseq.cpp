// zczseq: generate ZCZ/Frank sequences, compute correlation profiles, and
// verify the advertised zero-correlation-zone structure. Thin client of the
// zcz C API.

#include <zcz/zcz.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct SequenceDeleter {
    void operator()(zcz_sequence* s) const { zcz_sequence_free(s); }
};
struct ProfileDeleter {
    void operator()(zcz_profile* p) const { zcz_profile_free(p); }
};
using SequencePtr = std::unique_ptr<zcz_sequence, SequenceDeleter>;
using ProfilePtr = std::unique_ptr<zcz_profile, ProfileDeleter>;

int fail(zcz_status status)
{
    std::cerr << "error (" << zcz_status_name(status) << "): " << zcz_last_error() << "\n";
    return 1;
}

zcz_format parse_format(const std::string& name)
{
    return name == "csv" ? ZCZ_FORMAT_CSV : ZCZ_FORMAT_JSON;
}

int run_generate(const std::string& construction, std::int64_t n, const std::string& variant,
                 std::int64_t d, const std::string& format, const std::string& out_path)
{
    SequencePtr seq;
    zcz_sequence* raw = nullptr;
    zcz_status st = ZCZ_OK;
    if (construction == "zcz") {
        const zcz_rounding rounding =
            variant == "ceiling" ? ZCZ_ROUND_CEILING : ZCZ_ROUND_FLOOR;
        st = zcz_sequence_build_zcz(n, rounding, &raw);
    } else {
        st = zcz_sequence_build_frank(d, &raw);
    }
    if (st != ZCZ_OK) {
        return fail(st);
    }
    seq.reset(raw);

    st = zcz_sequence_save(seq.get(), out_path.c_str(), parse_format(format));
    if (st != ZCZ_OK) {
        return fail(st);
    }
    std::cout << "wrote " << out_path << " (period " << zcz_sequence_period(seq.get())
              << ", modulus " << zcz_sequence_modulus(seq.get()) << ")\n";
    return 0;
}

int run_profile(const std::string& in_path, const std::string& method, double tol,
                const std::string& out_path)
{
    const zcz_format format =
        in_path.size() >= 4 && in_path.substr(in_path.size() - 4) == ".csv" ? ZCZ_FORMAT_CSV
                                                                            : ZCZ_FORMAT_JSON;
    zcz_sequence* raw_seq = nullptr;
    zcz_status st = zcz_sequence_load(in_path.c_str(), format, &raw_seq);
    if (st != ZCZ_OK) {
        return fail(st);
    }
    SequencePtr seq(raw_seq);

    const zcz_method m = method == "transform" ? ZCZ_METHOD_TRANSFORM : ZCZ_METHOD_DIRECT;
    zcz_profile* raw_profile = nullptr;
    st = zcz_autocorrelation(seq.get(), m, tol, &raw_profile);
    if (st != ZCZ_OK) {
        return fail(st);
    }
    ProfilePtr profile(raw_profile);

    st = zcz_profile_save_csv(profile.get(), out_path.c_str());
    if (st != ZCZ_OK) {
        return fail(st);
    }
    std::cout << "wrote " << out_path << " (" << zcz_profile_period(profile.get())
              << " shifts, tolerance " << zcz_profile_tolerance(profile.get()) << ")\n";
    return 0;
}

int run_verify(std::int64_t n_min, std::int64_t n_max, const std::string& variant, double tol,
               const std::string& report_path)
{
    const zcz_rounding rounding = variant == "ceiling" ? ZCZ_ROUND_CEILING : ZCZ_ROUND_FLOOR;
    char* report = nullptr;
    int all_passed = 0;
    const zcz_status st =
        zcz_verify_range(n_min, n_max, rounding, tol, &report, &all_passed);
    if (st != ZCZ_OK) {
        return fail(st);
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << report_path << "\n";
            zcz_string_free(report);
            return 1;
        }
        out << report << "\n";
    } else {
        std::cout << report << "\n";
    }
    zcz_string_free(report);
    std::cout << "verify n=" << n_min << ".." << n_max << " (" << variant
              << "): " << (all_passed ? "all claims hold" : "FAILED") << "\n";
    return all_passed ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ZCZ sequence toolkit: construction, correlation, verification"};
    app.require_subcommand(1);

    // generate
    std::string construction;
    std::int64_t n = 0;
    std::string variant = "floor";
    std::int64_t d = 1;
    std::string format = "json";
    std::string out_path;
    auto* generate = app.add_subcommand("generate", "construct a sequence and write it to a file");
    generate->add_option("--construction", construction, "sequence family")
        ->required()
        ->check(CLI::IsMember({"zcz", "frank"}));
    generate->add_option("--n", n, "ZCZ parameter (period 24(2n+1))");
    generate->add_option("--variant", variant, "index rounding for the zcz construction")
        ->check(CLI::IsMember({"floor", "ceiling"}));
    generate->add_option("--d", d, "Frank divisor (period d^2)");
    generate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    generate->add_option("--out", out_path, "output path")->required();

    // profile
    std::string in_path;
    std::string method = "direct";
    double tol = 0.0;
    std::string profile_out;
    auto* profile = app.add_subcommand("profile", "autocorrelation profile of a sequence file");
    profile->add_option("--in", in_path, "sequence file (.json or .csv)")->required();
    profile->add_option("--method", method, "correlation engine")
        ->check(CLI::IsMember({"direct", "transform"}));
    profile->add_option("--tol", tol, "zero-classification tolerance (<= 0: 1e-9 * period)");
    profile->add_option("--out", profile_out, "profile CSV path")->required();

    // verify
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::string verify_variant = "floor";
    double verify_tol = 0.0;
    std::string report_path;
    auto* verify = app.add_subcommand("verify", "check the ZCZ claims over a range of n");
    verify->add_option("--n-min", n_min, "first n")->required();
    verify->add_option("--n-max", n_max, "last n")->required();
    verify->add_option("--variant", verify_variant, "index rounding")
        ->check(CLI::IsMember({"floor", "ceiling"}));
    verify->add_option("--tol", verify_tol, "tolerance (<= 0: 1e-9 * period per n)");
    verify->add_option("--report", report_path, "JSON report path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (generate->parsed()) {
        if (construction == "zcz" && generate->count("--d") > 0) {
            std::cerr << "error: --d applies to the frank construction only\n";
            return 1;
        }
        if (construction == "frank"
            && (generate->count("--n") > 0 || generate->count("--variant") > 0)) {
            std::cerr << "error: --n/--variant apply to the zcz construction only\n";
            return 1;
        }
        return run_generate(construction, n, variant, d, format, out_path);
    }
    if (profile->parsed()) {
        return run_profile(in_path, method, tol, profile_out);
    }
    return run_verify(n_min, n_max, verify_variant, verify_tol, report_path);
}
