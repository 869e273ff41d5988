#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lsakit/fixtures.hpp"

namespace lsakit::fixtures {

using FixtureValue = std::variant<Algebra, FlagDatum, MatchedPair, DeformationMap>;

struct FixtureInfo {
    std::string name;       // e.g. "ex46-ext"
    std::string signature;  // e.g. "ex46-ext(b,c,d,e)"
    std::string summary;
};

inline std::vector<FixtureInfo> fixture_list() {
    return {
        {"ex46", "ex46", "4-dim complete simple left-symmetric algebra"},
        {"ex47", "ex47", "3-dim Novikov algebra with brackets [e1,e2]=e2, [e1,e3]=e3"},
        {"ex55", "ex55", "4-dim left-symmetric algebra factoring through {e1,e3} and {e2,e4}"},
        {"ex46-ext", "ex46-ext(b,c,d,e)",
         "codimension-1 flag datum family over ex46 (valid iff c²=ec, b²=eb)"},
        {"ex47-case1", "ex47-case1(a11,a12,a13,alpha)", "flag datum family over ex47, h=g=0"},
        {"ex47-case2", "ex47-case2(a12,b12,b13)", "flag datum family over ex47, g(e1)=-1"},
        {"ex47-case3", "ex47-case3(a12,a13,b12,b13,b32,b33,c1,c2,c3,alpha)",
         "flag datum family over ex47, h(e1)=g(e1)=-1 (coefficients validated, not derived)"},
        {"ex47-case4", "ex47-case4(b12,b13,c2,c3,gamma)", "flag datum family over ex47, h(e1)=gamma"},
        {"ex55-mp", "ex55-mp", "matched pair carried by ex55 along the split {e1,e3} | {e2,e4}"},
        {"ex55-phi", "ex55-phi(b)", "deformation map of ex55-mp: phi(e2)=0, phi(e4)=b*e3"},
    };
}

namespace detail_fx {

inline std::vector<Scalar> parse_args(const std::string& args_text, const FieldSpec& field,
                                      std::size_t expected, const std::string& name) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    if (!args_text.empty()) {
        while (true) {
            std::size_t comma = args_text.find(',', start);
            std::string piece = args_text.substr(start, comma == std::string::npos ? std::string::npos
                                                                                   : comma - start);
            out.push_back(Scalar::parse(field, piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (out.size() != expected)
        throw error(errc::parse_error, name + " expects " + std::to_string(expected) + " parameter(s)");
    return out;
}

inline void require_pass(const CheckReport& rep, const std::string& name) {
    if (rep.pass) return;
    std::string cond = rep.violations.empty() ? "?" : rep.violations.front().condition;
    throw error(errc::parse_error, "fixture " + name + " fails its validity check (condition " + cond + ")");
}

}  // namespace detail_fx

/// Builds and validates a named fixture; parametric names carry arguments in
/// parentheses, parsed as scalars over `field`. Invalid parameter choices are
/// rejected with the violated condition named.
inline FixtureValue load_fixture(const std::string& ref, const FieldSpec& field) {
    std::string name = ref, args;
    if (auto open = ref.find('('); open != std::string::npos) {
        if (ref.back() != ')')
            throw error(errc::parse_error, "malformed fixture reference '" + ref + "'");
        name = ref.substr(0, open);
        args = ref.substr(open + 1, ref.size() - open - 2);
    }
    auto argv = [&](std::size_t n) { return detail_fx::parse_args(args, field, n, name); };

    if (name == "ex46") {
        argv(0);
        Algebra a = ex46(field);
        detail_fx::require_pass(check_identity(a, IdentityKind::left_symmetric), name);
        return a;
    }
    if (name == "ex47") {
        argv(0);
        Algebra a = ex47(field);
        detail_fx::require_pass(check_identity(a, IdentityKind::novikov), name);
        return a;
    }
    if (name == "ex55") {
        argv(0);
        Algebra a = ex55(field);
        detail_fx::require_pass(check_identity(a, IdentityKind::left_symmetric), name);
        return a;
    }
    if (name == "ex46-ext") {
        auto p = argv(4);
        FlagDatum fd = ex46_ext(field, p[0], p[1], p[2], p[3]);
        detail_fx::require_pass(check_flag(fd, AlgKind::left_symmetric), name);
        return fd;
    }
    if (name == "ex47-case1") {
        auto p = argv(4);
        FlagDatum fd = ex47_case1(field, p[0], p[1], p[2], p[3]);
        detail_fx::require_pass(check_flag(fd, AlgKind::novikov), name);
        return fd;
    }
    if (name == "ex47-case2") {
        auto p = argv(3);
        FlagDatum fd = ex47_case2(field, p[0], p[1], p[2]);
        detail_fx::require_pass(check_flag(fd, AlgKind::novikov), name);
        return fd;
    }
    if (name == "ex47-case3") {
        auto p = argv(10);
        FlagDatum fd = ex47_case3(field, p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8], p[9]);
        detail_fx::require_pass(check_flag(fd, AlgKind::novikov), name);
        return fd;
    }
    if (name == "ex47-case4") {
        auto p = argv(5);
        FlagDatum fd = ex47_case4(field, p[0], p[1], p[2], p[3], p[4]);
        detail_fx::require_pass(check_flag(fd, AlgKind::novikov), name);
        return fd;
    }
    if (name == "ex55-mp") {
        argv(0);
        MatchedPair mp = ex55_mp(field);
        detail_fx::require_pass(check_matched_pair(mp, AlgKind::left_symmetric), name);
        return mp;
    }
    if (name == "ex55-phi") {
        auto p = argv(1);
        DeformationMap dm = ex55_phi(field, p[0]);
        detail_fx::require_pass(check_deformation(ex55_mp(field), dm, AlgKind::left_symmetric), name);
        return dm;
    }
    throw error(errc::parse_error, "unknown fixture '" + name + "'");
}

}  // namespace lsakit::fixtures
