#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lsakit/json_io.hpp"
#include "lsakit/registry.hpp"

namespace lsakit::cli {

using io::json;

// exit codes: 0 all checks passed, 1 violations reported, 2 usage/parse
// error, 3 enumeration space above the cap
inline constexpr int exit_ok = 0;
inline constexpr int exit_violations = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_too_large = 3;

namespace detail_cli {

struct Options {
    FieldSpec field = FieldSpec::rationals();  // for fixture construction
    bool json_output = false;
    std::uint64_t max_candidates = 100'000'000;
};

inline FieldSpec parse_field_flag(const std::string& text) {
    if (text == "rational" || text == "Q") return FieldSpec::rationals();
    if (text.rfind("prime:", 0) == 0) {
        unsigned long p = 0;
        try {
            std::size_t pos = 0;
            p = std::stoul(text.substr(6), &pos);
            if (pos != text.size() - 6) throw std::invalid_argument("");
        } catch (...) {
            throw error(errc::usage_error, "bad field '" + text + "', expected rational or prime:P");
        }
        return FieldSpec::prime(static_cast<std::uint32_t>(p));
    }
    throw error(errc::usage_error, "bad field '" + text + "', expected rational or prime:P");
}

/// A value reference: examples:NAME, inline JSON, or a file path.
inline std::optional<fixtures::FixtureValue> load_fixture_ref(const std::string& ref, const Options& opt) {
    if (ref.rfind("examples:", 0) == 0)
        return fixtures::load_fixture(ref.substr(9), opt.field);
    return std::nullopt;
}

inline json load_json_ref(const std::string& ref) {
    if (!ref.empty() && ref.front() == '{') {
        try {
            return json::parse(ref);
        } catch (const nlohmann::json::parse_error& e) {
            throw error(errc::parse_error, std::string("inline JSON: ") + e.what());
        }
    }
    std::ifstream in(ref);
    if (!in)
        throw error(errc::parse_error, "cannot open '" + ref + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(errc::parse_error, ref + ": " + e.what());
    }
}

inline Algebra load_algebra(const std::string& ref, const Options& opt) {
    if (auto fx = load_fixture_ref(ref, opt)) {
        if (auto* a = std::get_if<Algebra>(&*fx)) return *a;
        throw error(errc::usage_error, "'" + ref + "' is not an algebra fixture");
    }
    return io::algebra_from_json(load_json_ref(ref));
}

inline FlagDatum load_flag(const std::string& ref, const Options& opt) {
    if (auto fx = load_fixture_ref(ref, opt)) {
        if (auto* fd = std::get_if<FlagDatum>(&*fx)) return *fd;
        throw error(errc::usage_error, "'" + ref + "' is not a flag-datum fixture");
    }
    return io::flag_from_json(load_json_ref(ref));
}

inline MatchedPair load_pair(const std::string& ref, const Options& opt) {
    if (auto fx = load_fixture_ref(ref, opt)) {
        if (auto* mp = std::get_if<MatchedPair>(&*fx)) return *mp;
        throw error(errc::usage_error, "'" + ref + "' is not a matched-pair fixture");
    }
    return io::matched_pair_from_json(load_json_ref(ref));
}

inline ExtendingDatum load_datum(const std::string& ref, const Options& opt) {
    if (auto fx = load_fixture_ref(ref, opt)) {
        if (auto* fd = std::get_if<FlagDatum>(&*fx)) return flag_to_datum(*fd);
        throw error(errc::usage_error, "'" + ref + "' is not a datum fixture; flag fixtures are lifted");
    }
    return io::datum_from_json(load_json_ref(ref));
}

inline DeformationMap load_phi(const std::string& ref, const Options& opt, const MatchedPair& mp) {
    if (auto fx = load_fixture_ref(ref, opt)) {
        if (auto* dm = std::get_if<DeformationMap>(&*fx)) return *dm;
        throw error(errc::usage_error, "'" + ref + "' is not a deformation-map fixture");
    }
    return io::deformation_from_json(load_json_ref(ref), mp.field(), mp.A.dim(), mp.B.dim());
}

inline AlgKind parse_kind2(const std::string& text) {
    if (text == "left-symmetric") return AlgKind::left_symmetric;
    if (text == "novikov") return AlgKind::novikov;
    throw error(errc::usage_error, "bad --kind '" + text + "', expected left-symmetric or novikov");
}

inline IdentityKind parse_identity_kind(const std::string& text) {
    if (text == "left-symmetric") return IdentityKind::left_symmetric;
    if (text == "novikov") return IdentityKind::novikov;
    if (text == "lie-jacobi") return IdentityKind::lie_jacobi_of_commutator;
    if (text == "antisymmetry") return IdentityKind::antisymmetry_of_commutator;
    throw error(errc::usage_error, "bad --kind '" + text + "'");
}

inline DatumCase parse_case(const std::string& text) {
    if (text == "general") return DatumCase::general;
    if (text == "twisted") return DatumCase::twisted;
    if (text == "crossed") return DatumCase::crossed;
    if (text == "bicrossed") return DatumCase::bicrossed;
    throw error(errc::usage_error, "bad --case '" + text + "'");
}

inline std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(piece, &pos);
            if (pos != piece.size() || v < 1) throw std::invalid_argument("");
            out.push_back(static_cast<std::size_t>(v) - 1);
        } catch (...) {
            throw error(errc::usage_error, "bad index list '" + text + "' (1-based, comma-separated)");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline void emit(std::ostream& out, const Options& opt, const json& j, const std::string& human_summary) {
    if (opt.json_output) {
        out << j.dump(2) << "\n";
    } else {
        out << human_summary << "\n";
    }
}

inline std::string describe_report(const CheckReport& rep) {
    if (rep.pass) return "pass";
    std::ostringstream os;
    os << "FAIL";
    for (const auto& v : rep.violations) {
        os << "\n  " << v.condition << " at (";
        for (std::size_t i = 0; i < v.where.size(); ++i) os << (i ? "," : "") << v.where[i] + 1;
        os << "): lhs = " << v.lhs.str() << ", rhs = " << v.rhs.str();
    }
    return os.str();
}

inline int report_exit(const CheckReport& rep) { return rep.pass ? exit_ok : exit_violations; }

}  // namespace detail_cli

/// Dispatches one CLI invocation; returns the process exit code. Kept as a
/// library function so tests can drive the full surface in-process.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail_cli;

    CLI::App app{"exact computations with left-symmetric and Novikov algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    if (const char* env = std::getenv("LSAKIT_MAX_CANDIDATES")) {
        try {
            opt.max_candidates = std::stoull(env);
        } catch (...) {
            err << "bad LSAKIT_MAX_CANDIDATES value\n";
            return exit_usage;
        }
    }
    std::string field_text = "rational", output_text = "human";
    app.add_option("--field", field_text, "field for fixture construction: rational | prime:P");
    app.add_option("--output", output_text, "output mode: human | json");
    app.add_option("--max-candidates", opt.max_candidates,
                   "enumeration cap (env LSAKIT_MAX_CANDIDATES)");

    std::string value, value2, value3, kind_text = "left-symmetric", case_text = "general";
    std::string mode_text = "equiv", sub_text;

    auto* c_check = app.add_subcommand("check", "identity check on a structure-constant algebra");
    c_check->add_option("value", value)->required();
    c_check->add_option("--kind", kind_text,
                        "left-symmetric | novikov | lie-jacobi | antisymmetry");

    auto* c_lie = app.add_subcommand("lie", "sub-adjacent commutator bracket of an algebra");
    c_lie->add_option("value", value)->required();

    auto* c_bimodule = app.add_subcommand("bimodule", "bimodule compatibility check");
    c_bimodule->add_option("value", value)->required();
    c_bimodule->add_option("--kind", kind_text);

    auto* c_unify = app.add_subcommand("unify", "assemble the product algebra of an extending datum");
    c_unify->add_option("value", value)->required();

    auto* c_conditions = app.add_subcommand("conditions", "extending-datum compatibility conditions");
    c_conditions->add_option("value", value)->required();
    c_conditions->add_option("--kind", kind_text);
    c_conditions->add_option("--case", case_text, "general | twisted | crossed | bicrossed");

    auto* c_extract = app.add_subcommand("extract", "read a datum off a split extension");
    c_extract->add_option("value", value)->required();
    c_extract->add_option("--sub", sub_text, "1-based subalgebra basis indices, e.g. 1,3")->required();

    auto* c_morphism = app.add_subcommand("morphism", "check an algebra map given by a witness");
    c_morphism->add_option("src", value)->required();
    c_morphism->add_option("dst", value2)->required();
    c_morphism->add_option("witness", value3)->required();

    auto* c_flag = app.add_subcommand("flag", "codimension-1 extending structures");
    c_flag->require_subcommand(1);
    c_flag->fallthrough();
    auto* c_flag_check = c_flag->add_subcommand("check", "flag-datum conditions");
    c_flag_check->add_option("value", value)->required();
    c_flag_check->add_option("--kind", kind_text);
    auto* c_flag_build = c_flag->add_subcommand("build", "lift a flag datum to a datum and its product");
    c_flag_build->add_option("value", value)->required();
    auto* c_flag_enum = c_flag->add_subcommand("enum", "enumerate all flag datums over F_p");
    c_flag_enum->add_option("--base", value, "base algebra")->required();
    c_flag_enum->add_option("--kind", kind_text);
    auto* c_flag_classify = c_flag->add_subcommand("classify", "enumerate and classify flag datums");
    c_flag_classify->add_option("--base", value, "base algebra")->required();
    c_flag_classify->add_option("--kind", kind_text);
    c_flag_classify->add_option("--mode", mode_text, "equiv | cohom");
    auto* c_flag_equiv = c_flag->add_subcommand("equiv", "check a flag-equivalence witness");
    c_flag_equiv->add_option("first", value)->required();
    c_flag_equiv->add_option("second", value2)->required();
    c_flag_equiv->add_option("witness", value3)->required();
    c_flag_equiv->add_option("--mode", mode_text, "equiv | cohom");

    auto* c_mp = app.add_subcommand("mp", "matched pairs");
    c_mp->require_subcommand(1);
    c_mp->fallthrough();
    auto* c_mp_verify = c_mp->add_subcommand("verify", "check the bicrossed-product conditions");
    c_mp_verify->add_option("value", value)->required();
    c_mp_verify->add_option("--kind", kind_text);

    auto* c_deform = app.add_subcommand("deform", "deformation maps and complements");
    c_deform->require_subcommand(1);
    c_deform->fallthrough();
    auto* c_deform_check = c_deform->add_subcommand("check", "deformation-map equation");
    c_deform_check->add_option("pair", value)->required();
    c_deform_check->add_option("phi", value2)->required();
    c_deform_check->add_option("--kind", kind_text);
    auto* c_deform_apply = c_deform->add_subcommand("apply", "deformed product and embedding");
    c_deform_apply->add_option("pair", value)->required();
    c_deform_apply->add_option("phi", value2)->required();
    c_deform_apply->add_option("--kind", kind_text);
    auto* c_deform_enum = c_deform->add_subcommand("enum", "all deformation maps over F_p");
    c_deform_enum->add_option("pair", value)->required();
    c_deform_enum->add_option("--kind", kind_text);
    auto* c_deform_classify = c_deform->add_subcommand("classify", "deformation maps up to equivalence");
    c_deform_classify->add_option("pair", value)->required();
    c_deform_classify->add_option("--kind", kind_text);
    auto* c_deform_oracle =
        c_deform->add_subcommand("oracle", "brute-force complement search cross-validated");
    c_deform_oracle->add_option("value", value, "ambient algebra")->required();
    c_deform_oracle->add_option("--sub", sub_text, "1-based subalgebra basis indices")->required();
    c_deform_oracle->add_option("--kind", kind_text);

    auto* c_examples = app.add_subcommand("examples", "built-in fixtures");
    c_examples->require_subcommand(1);
    c_examples->fallthrough();
    auto* c_examples_list = c_examples->add_subcommand("list", "list fixture names");
    auto* c_examples_show = c_examples->add_subcommand("show", "print a fixture");
    c_examples_show->add_option("name", value)->required();

    std::vector<const char*> argv;
    argv.push_back("lsakit");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        opt.field = parse_field_flag(field_text);
        if (output_text == "json") {
            opt.json_output = true;
        } else if (output_text != "human") {
            throw error(errc::usage_error, "bad --output '" + output_text + "'");
        }

        if (*c_check) {
            Algebra a = load_algebra(value, opt);
            CheckReport rep = check_identity(a, parse_identity_kind(kind_text));
            emit(out, opt, io::report_to_json(rep), describe_report(rep));
            return report_exit(rep);
        }
        if (*c_lie) {
            Algebra a = load_algebra(value, opt);
            json j = io::algebra_to_json(commutator_lie(a));
            emit(out, opt, j, j.dump(2));
            return exit_ok;
        }
        if (*c_bimodule) {
            Bimodule bm = io::bimodule_from_json(load_json_ref(value));
            AlgKind kind = parse_kind2(kind_text);
            CheckReport rep = check_bimodule(bm, kind);
            CheckReport rho = check_commutator_representation(bm);
            json j = io::report_to_json(rep);
            j["commutator_representation"] = io::report_to_json(rho);
            emit(out, opt, j,
                 "bimodule: " + describe_report(rep) + "\ncommutator representation: " + describe_report(rho));
            return rep.pass && rho.pass ? exit_ok : exit_violations;
        }
        if (*c_unify) {
            ExtendingDatum d = load_datum(value, opt);
            json j = io::algebra_to_json(unified_product(d).alg);
            emit(out, opt, j, j.dump(2));
            return exit_ok;
        }
        if (*c_conditions) {
            ExtendingDatum d = load_datum(value, opt);
            CheckReport rep = check_extending(d, parse_kind2(kind_text), parse_case(case_text));
            emit(out, opt, io::report_to_json(rep), describe_report(rep));
            return report_exit(rep);
        }
        if (*c_extract) {
            Algebra e = load_algebra(value, opt);
            ExtractResult ex = extract_datum(e, parse_index_list(sub_text));
            json j = io::extract_result_to_json(ex);
            emit(out, opt, j, j.dump(2));
            return exit_ok;
        }
        if (*c_morphism) {
            Algebra src = load_algebra(value, opt);
            Algebra dst = load_algebra(value2, opt);
            MorphismWitness w =
                io::morphism_witness_from_json(load_json_ref(value3), src.field(), src.dim(), dst.dim());
            MorphismReport rep = check_morphism(src, dst, w);
            emit(out, opt, io::morphism_report_to_json(rep),
                 describe_report(rep.report) + (rep.invertible ? "\ninvertible" : "\nnot invertible"));
            return report_exit(rep.report);
        }
        if (*c_flag_check) {
            FlagDatum fd = load_flag(value, opt);
            CheckReport rep = check_flag(fd, parse_kind2(kind_text));
            emit(out, opt, io::report_to_json(rep), describe_report(rep));
            return report_exit(rep);
        }
        if (*c_flag_build) {
            FlagDatum fd = load_flag(value, opt);
            ExtendingDatum d = flag_to_datum(fd);
            json j;
            j["datum"] = io::datum_to_json(d);
            j["algebra"] = io::algebra_to_json(unified_product(d).alg);
            emit(out, opt, j, j.dump(2));
            return exit_ok;
        }
        if (*c_flag_enum || *c_flag_classify) {
            Algebra base = load_algebra(value, opt);
            AlgKind kind = parse_kind2(kind_text);
            FlagClassification cls = enumerate_flags(base, kind, opt.max_candidates);
            if (*c_flag_classify) {
                if (mode_text == "cohom") cls.mode = EquivMode::cohomologous;
                else if (mode_text != "equiv")
                    throw error(errc::usage_error, "bad --mode '" + mode_text + "'");
                classify_flags(cls, opt.max_candidates);
            }
            json j = io::flag_classification_to_json(cls);
            emit(out, opt, j,
                 "space " + cls.space.str() + ", " + std::to_string(cls.valid.size()) + " valid datum(s), " +
                     std::to_string(cls.classes.size()) + " class(es)");
            return exit_ok;
        }
        if (*c_flag_equiv) {
            FlagDatum f1 = load_flag(value, opt);
            FlagDatum f2 = load_flag(value2, opt);
            EquivMode mode = mode_text == "cohom" ? EquivMode::cohomologous : EquivMode::equivalent;
            FlagEquivWitness w = io::flag_witness_from_json(load_json_ref(value3), f1.field(), f1.dim());
            CheckReport rep = check_flag_equiv(f1, f2, w, mode);
            emit(out, opt, io::report_to_json(rep), describe_report(rep));
            return report_exit(rep);
        }
        if (*c_mp_verify) {
            MatchedPair mp = load_pair(value, opt);
            CheckReport rep = check_matched_pair(mp, parse_kind2(kind_text));
            emit(out, opt, io::report_to_json(rep), describe_report(rep));
            return report_exit(rep);
        }
        if (*c_deform_check) {
            MatchedPair mp = load_pair(value, opt);
            DeformationMap dm = load_phi(value2, opt, mp);
            CheckReport rep = check_deformation(mp, dm, parse_kind2(kind_text));
            emit(out, opt, io::report_to_json(rep), describe_report(rep));
            return report_exit(rep);
        }
        if (*c_deform_apply) {
            MatchedPair mp = load_pair(value, opt);
            DeformationMap dm = load_phi(value2, opt, mp);
            Deformed d = deform(mp, dm, parse_kind2(kind_text));
            json j;
            j["algebra"] = io::algebra_to_json(d.bphi);
            j["embedding"] = io::matrix_to_json(d.embedding);
            emit(out, opt, j, j.dump(2));
            return exit_ok;
        }
        if (*c_deform_enum) {
            MatchedPair mp = load_pair(value, opt);
            ComplementReport rep = enumerate_deformations(mp, parse_kind2(kind_text), opt.max_candidates);
            json j = io::complement_report_to_json(rep);
            emit(out, opt, j,
                 std::to_string(rep.deformation_maps.size()) + " deformation map(s) of " +
                     std::to_string(rep.candidates_checked) + " candidate(s)");
            return exit_ok;
        }
        if (*c_deform_classify) {
            MatchedPair mp = load_pair(value, opt);
            ComplementReport rep = classify_complements(mp, parse_kind2(kind_text), opt.max_candidates);
            json j = io::complement_report_to_json(rep);
            emit(out, opt, j,
                 std::to_string(rep.deformation_maps.size()) + " deformation map(s), index " +
                     std::to_string(rep.index));
            return exit_ok;
        }
        if (*c_deform_oracle) {
            Algebra e = load_algebra(value, opt);
            AlgKind kind = parse_kind2(kind_text);
            std::vector<std::size_t> sub = parse_index_list(sub_text);
            BruteForceReport bf = brute_force_complements(e, sub, kind, opt.max_candidates);
            ExtractResult ex = extract_datum(e, sub);
            MatchedPair mp;
            mp.A = ex.datum.base;
            mp.B = ex.datum.dot_algebra();
            mp.la = ex.datum.la;
            mp.ra = ex.datum.ra;
            mp.lb = ex.datum.lv;
            mp.rb = ex.datum.rv;
            ComplementReport cls = classify_complements(mp, kind, opt.max_candidates);
            std::vector<std::size_t> sizes_bf, sizes_cls;
            for (const auto& c : bf.classes) sizes_bf.push_back(c.members.size());
            for (const auto& c : cls.classes) sizes_cls.push_back(c.members.size());
            std::sort(sizes_bf.begin(), sizes_bf.end());
            std::sort(sizes_cls.begin(), sizes_cls.end());
            bool agree = bf.index == cls.index && sizes_bf == sizes_cls &&
                         bf.complements.size() == cls.deformation_maps.size();
            json j;
            j["brute_force"] = io::brute_force_report_to_json(bf);
            j["deformation_classification"] = io::complement_report_to_json(cls);
            j["agree"] = agree;
            emit(out, opt, j,
                 "brute force index " + std::to_string(bf.index) + ", deformation index " +
                     std::to_string(cls.index) + (agree ? " (agree)" : " (DISAGREE)"));
            return agree ? exit_ok : exit_violations;
        }
        if (*c_examples_list) {
            json j = json::array();
            for (const auto& fx : fixtures::fixture_list()) {
                json e;
                e["name"] = fx.name;
                e["signature"] = fx.signature;
                e["summary"] = fx.summary;
                j.push_back(std::move(e));
                if (!opt.json_output) out << fx.signature << "  --  " << fx.summary << "\n";
            }
            if (opt.json_output) out << j.dump(2) << "\n";
            return exit_ok;
        }
        if (*c_examples_show) {
            fixtures::FixtureValue v = fixtures::load_fixture(value, opt.field);
            json j = std::visit(
                [&](const auto& payload) -> json {
                    using T = std::decay_t<decltype(payload)>;
                    if constexpr (std::is_same_v<T, Algebra>) return io::algebra_to_json(payload);
                    else if constexpr (std::is_same_v<T, FlagDatum>) return io::flag_to_json(payload);
                    else if constexpr (std::is_same_v<T, MatchedPair>) return io::matched_pair_to_json(payload);
                    else return io::deformation_to_json(payload);
                },
                v);
            out << j.dump(2) << "\n";
            return exit_ok;
        }
        err << "no subcommand selected\n";
        return exit_usage;
    } catch (const error& e) {
        err << errc_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == errc::enumeration_too_large ? exit_too_large : exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace lsakit::cli
