#include "zcz/zcz.h"

#include "analysis.hpp"
#include "aop.hpp"
#include "construction.hpp"
#include "correlation.hpp"
#include "errors.hpp"
#include "sequence_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <utility>
#include <vector>

using nlohmann::json;

struct zcz_sequence {
    zcz::Sequence impl;
    zcz::SequenceMetadata metadata;
};

struct zcz_profile {
    zcz::CorrelationProfile impl;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& message)
{
    t_last_error = message;
}

zcz_status classify(const std::exception& e)
{
    set_error(e.what());
    if (dynamic_cast<const zcz::SizeLimitError*>(&e)) {
        return ZCZ_ERROR_SIZE_LIMIT;
    }
    if (dynamic_cast<const zcz::MismatchError*>(&e)) {
        return ZCZ_ERROR_MISMATCH;
    }
    if (dynamic_cast<const zcz::ParseError*>(&e)) {
        return ZCZ_ERROR_PARSE;
    }
    if (dynamic_cast<const zcz::IoError*>(&e)) {
        return ZCZ_ERROR_IO;
    }
    if (dynamic_cast<const zcz::InvalidArgument*>(&e)) {
        return ZCZ_ERROR_INVALID_ARGUMENT;
    }
    return ZCZ_ERROR_INTERNAL;
}

template <typename Fn>
zcz_status guarded(Fn&& fn)
{
    try {
        fn();
        t_last_error.clear();
        return ZCZ_OK;
    } catch (const std::exception& e) {
        return classify(e);
    } catch (...) {
        set_error("unknown error");
        return ZCZ_ERROR_INTERNAL;
    }
}

zcz_status require(bool condition, const char* message)
{
    if (condition) {
        return ZCZ_OK;
    }
    set_error(message);
    return ZCZ_ERROR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

json aop_to_json(const zcz::AopReport& report)
{
    json cond1 = json::array();
    for (const auto& v : report.condition1_violations) {
        cond1.push_back(json{{"column_a", v.column_a},
                             {"column_b", v.column_b},
                             {"shift", v.shift},
                             {"re", v.value.real()},
                             {"im", v.value.imag()}});
    }
    json cond2 = json::array();
    for (const auto& e : report.condition2_exceptions) {
        cond2.push_back(json{{"shift", e.shift},
                             {"re", e.value.real()},
                             {"im", e.value.imag()}});
    }
    return json{{"divisor", report.divisor},
                {"tolerance", report.tolerance},
                {"condition1_violations", std::move(cond1)},
                {"condition1_holds", report.condition1_holds()},
                {"condition2_exceptions", std::move(cond2)},
                {"condition2_exception_shifts", report.condition2_shifts()}};
}

json claim_to_json(const zcz::ClaimReport& report)
{
    json measured = json::array();
    for (const auto& m : report.measured) {
        measured.push_back(json{{"shift", m.shift},
                                {"re", m.value.real()},
                                {"im", m.value.imag()}});
    }
    json aop = aop_to_json(report.aop);
    aop["expected_exception_shifts"] = report.expected_exception_shifts;
    aop["exceptions_match"] = report.aop_exceptions_match;
    return json{{"n", report.n},
                {"variant", zcz::to_string(report.variant)},
                {"period", report.period},
                {"modulus", report.modulus},
                {"tolerance", report.tolerance},
                {"expected_shifts", report.expected_shifts},
                {"measured", std::move(measured)},
                {"closed_form", report.closed_form},
                {"checks",
                 json{{"shifts_match", report.shifts_match},
                      {"values_equal", report.values_equal},
                      {"matches_closed_form", report.matches_closed_form},
                      {"imag_negligible", report.imag_negligible},
                      {"closed_form_gated", report.closed_form_gated}}},
                {"aop", std::move(aop)},
                {"passed", report.passed()}};
}

} // namespace

extern "C" {

const char* zcz_status_name(zcz_status status)
{
    switch (status) {
    case ZCZ_OK: return "ok";
    case ZCZ_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case ZCZ_ERROR_SIZE_LIMIT: return "size_limit";
    case ZCZ_ERROR_MISMATCH: return "mismatch";
    case ZCZ_ERROR_PARSE: return "parse";
    case ZCZ_ERROR_IO: return "io";
    case ZCZ_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* zcz_last_error(void)
{
    return t_last_error.c_str();
}

zcz_status zcz_sequence_build_zcz(int64_t n, zcz_rounding variant, zcz_sequence** out)
{
    if (auto st = require(out != nullptr, "out pointer is null"); st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        const auto v = variant == ZCZ_ROUND_FLOOR ? zcz::RoundingVariant::Floor
                                                  : zcz::RoundingVariant::Ceiling;
        zcz::SequenceMetadata meta;
        meta.construction = "zcz";
        meta.n = n;
        meta.variant = zcz::to_string(v);
        *out = new zcz_sequence{zcz::build_zcz_sequence(n, v), std::move(meta)};
    });
}

zcz_status zcz_sequence_build_frank(int64_t d, zcz_sequence** out)
{
    if (auto st = require(out != nullptr, "out pointer is null"); st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        zcz::SequenceMetadata meta;
        meta.construction = "frank";
        meta.divisor = d;
        *out = new zcz_sequence{zcz::build_frank_sequence(d), std::move(meta)};
    });
}

zcz_status zcz_sequence_create(const int64_t* exponents, size_t length, int64_t modulus,
                               zcz_sequence** out)
{
    if (auto st = require(out != nullptr && exponents != nullptr,
                          "exponents/out pointer is null");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        std::vector<std::int64_t> exps(exponents, exponents + length);
        *out = new zcz_sequence{zcz::Sequence(std::move(exps), modulus), {}};
    });
}

void zcz_sequence_free(zcz_sequence* seq)
{
    delete seq;
}

int64_t zcz_sequence_period(const zcz_sequence* seq)
{
    return seq != nullptr ? seq->impl.period() : 0;
}

int64_t zcz_sequence_modulus(const zcz_sequence* seq)
{
    return seq != nullptr ? seq->impl.modulus() : 0;
}

zcz_status zcz_sequence_exponents(const zcz_sequence* seq, int64_t* buffer, size_t capacity)
{
    if (auto st = require(seq != nullptr && buffer != nullptr, "sequence/buffer is null");
        st != ZCZ_OK) {
        return st;
    }
    const auto exps = seq->impl.exponents();
    if (auto st = require(capacity >= exps.size(), "buffer too small"); st != ZCZ_OK) {
        return st;
    }
    std::memcpy(buffer, exps.data(), exps.size() * sizeof(int64_t));
    t_last_error.clear();
    return ZCZ_OK;
}

zcz_status zcz_sequence_save(const zcz_sequence* seq, const char* path, zcz_format format)
{
    if (auto st = require(seq != nullptr && path != nullptr, "sequence/path is null");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        zcz::save_sequence(seq->impl, seq->metadata, path,
                           format == ZCZ_FORMAT_JSON ? zcz::FileFormat::Json
                                                     : zcz::FileFormat::Csv);
    });
}

zcz_status zcz_sequence_load(const char* path, zcz_format format, zcz_sequence** out)
{
    if (auto st = require(path != nullptr && out != nullptr, "path/out pointer is null");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        auto loaded = zcz::load_sequence(path, format == ZCZ_FORMAT_JSON
                                                   ? zcz::FileFormat::Json
                                                   : zcz::FileFormat::Csv);
        *out = new zcz_sequence{std::move(loaded.sequence), std::move(loaded.metadata)};
    });
}

zcz_status zcz_cross_correlation(const zcz_sequence* a, const zcz_sequence* b, int64_t shift,
                                 double* re, double* im)
{
    if (auto st = require(a != nullptr && b != nullptr && re != nullptr && im != nullptr,
                          "argument pointer is null");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        const auto value = zcz::cross_correlation(a->impl, b->impl, shift);
        *re = value.real();
        *im = value.imag();
    });
}

zcz_status zcz_autocorrelation(const zcz_sequence* seq, zcz_method method, double tolerance,
                               zcz_profile** out)
{
    if (auto st = require(seq != nullptr && out != nullptr, "sequence/out pointer is null");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        const auto m = method == ZCZ_METHOD_DIRECT ? zcz::Method::Direct
                                                   : zcz::Method::Transform;
        *out = new zcz_profile{zcz::auto_profile(seq->impl, m, tolerance)};
    });
}

zcz_status zcz_cross_profile(const zcz_sequence* a, const zcz_sequence* b, zcz_method method,
                             double tolerance, zcz_profile** out)
{
    if (auto st = require(a != nullptr && b != nullptr && out != nullptr,
                          "argument pointer is null");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        const auto m = method == ZCZ_METHOD_DIRECT ? zcz::Method::Direct
                                                   : zcz::Method::Transform;
        *out = new zcz_profile{zcz::cross_profile(a->impl, b->impl, m, tolerance)};
    });
}

void zcz_profile_free(zcz_profile* profile)
{
    delete profile;
}

int64_t zcz_profile_period(const zcz_profile* profile)
{
    return profile != nullptr ? profile->impl.period() : 0;
}

double zcz_profile_tolerance(const zcz_profile* profile)
{
    return profile != nullptr ? profile->impl.tolerance() : 0.0;
}

zcz_status zcz_profile_value(const zcz_profile* profile, int64_t shift, double* re, double* im)
{
    if (auto st = require(profile != nullptr && re != nullptr && im != nullptr,
                          "argument pointer is null");
        st != ZCZ_OK) {
        return st;
    }
    const auto value = profile->impl.value(shift);
    *re = value.real();
    *im = value.imag();
    t_last_error.clear();
    return ZCZ_OK;
}

int zcz_profile_is_zero(const zcz_profile* profile, int64_t shift)
{
    if (profile == nullptr) {
        set_error("profile is null");
        return -1;
    }
    return profile->impl.is_zero(shift) ? 1 : 0;
}

zcz_status zcz_profile_save_csv(const zcz_profile* profile, const char* path)
{
    if (auto st = require(profile != nullptr && path != nullptr, "profile/path is null");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] { zcz::save_profile_csv(profile->impl, path); });
}

double zcz_closed_form_offpeak(int64_t n)
{
    if (n < 0) {
        set_error("closed_form_offpeak: n must be >= 0");
        return std::numeric_limits<double>::quiet_NaN();
    }
    return zcz::closed_form_offpeak(n);
}

zcz_status zcz_aop_report(const zcz_sequence* seq, int64_t divisor, double tolerance,
                          char** json_out)
{
    if (auto st = require(seq != nullptr && json_out != nullptr, "sequence/out pointer is null");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        const auto report = zcz::check_aop(seq->impl, divisor, tolerance);
        *json_out = copy_string(aop_to_json(report).dump(2));
    });
}

zcz_status zcz_verify_range(int64_t n_min, int64_t n_max, zcz_rounding variant,
                            double tolerance, char** report_out, int* all_passed_out)
{
    if (auto st = require(report_out != nullptr && all_passed_out != nullptr,
                          "out pointer is null");
        st != ZCZ_OK) {
        return st;
    }
    if (auto st = require(n_min >= 0 && n_min <= n_max, "need 0 <= n_min <= n_max");
        st != ZCZ_OK) {
        return st;
    }
    return guarded([&] {
        const auto v = variant == ZCZ_ROUND_FLOOR ? zcz::RoundingVariant::Floor
                                                  : zcz::RoundingVariant::Ceiling;
        bool all_passed = true;
        json results = json::array();
        for (int64_t n = n_min; n <= n_max; ++n) {
            const auto report = zcz::verify_zcz_claims(n, v, tolerance);
            all_passed = all_passed && report.passed();
            results.push_back(claim_to_json(report));
        }
        json doc{{"variant", zcz::to_string(v)},
                 {"n_min", n_min},
                 {"n_max", n_max},
                 {"tolerance", tolerance > 0.0 ? json(tolerance) : json("auto")},
                 {"results", std::move(results)},
                 {"all_passed", all_passed}};
        *report_out = copy_string(doc.dump(2));
        *all_passed_out = all_passed ? 1 : 0;
    });
}

void zcz_string_free(char* s)
{
    delete[] s;
}

} // extern "C"
