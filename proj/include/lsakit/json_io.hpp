#pragma once

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lsakit/bimodule.hpp"
#include "lsakit/complements.hpp"
#include "lsakit/fixtures.hpp"
#include "lsakit/flag.hpp"

namespace lsakit::io {

/// All files are UTF-8 JSON with canonical (insertion-ordered) keys; basis
/// and list indices are 1-based on this boundary and 0-based in memory.
using json = nlohmann::ordered_json;

namespace detail_io {

inline void expect_keys(const json& j, const char* what, std::set<std::string> required,
                        std::set<std::string> optional = {}) {
    if (!j.is_object())
        throw error(errc::parse_error, std::string(what) + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (required.contains(it.key())) {
            required.erase(it.key());
        } else if (!optional.contains(it.key())) {
            throw error(errc::parse_error, std::string(what) + ": unknown key '" + it.key() + "'");
        }
    }
    if (!required.empty())
        throw error(errc::parse_error, std::string(what) + ": missing key '" + *required.begin() + "'");
}

inline std::string get_string(const json& j, const char* what) {
    if (!j.is_string())
        throw error(errc::parse_error, std::string(what) + ": expected a string");
    return j.get<std::string>();
}

inline std::size_t get_index(const json& j, std::size_t limit, const char* what) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() < 1 || j.get<std::uint64_t>() > limit)
        throw error(errc::parse_error,
                    std::string(what) + ": index out of range 1.." + std::to_string(limit));
    return static_cast<std::size_t>(j.get<std::uint64_t>()) - 1;
}

}  // namespace detail_io

inline json field_to_json(const FieldSpec& f) {
    json j;
    if (f.is_rationals()) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "prime";
        j["p"] = f.p;
    }
    return j;
}

inline FieldSpec field_from_json(const json& j) {
    detail_io::expect_keys(j, "field", {"kind"}, {"p"});
    std::string kind = detail_io::get_string(j.at("kind"), "field.kind");
    if (kind == "rational") {
        if (j.contains("p"))
            throw error(errc::parse_error, "field: 'p' is only valid for prime fields");
        return FieldSpec::rationals();
    }
    if (kind == "prime") {
        if (!j.contains("p") || !j.at("p").is_number_unsigned())
            throw error(errc::parse_error, "field: prime fields need a positive 'p'");
        return FieldSpec::prime(j.at("p").get<std::uint32_t>());
    }
    throw error(errc::parse_error, "field: unknown kind '" + kind + "'");
}

inline json vec_to_json(const Vec& v) {
    json j = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) j.push_back(v[i].str());
    return j;
}

inline Vec vec_from_json(const json& j, const FieldSpec& f, std::size_t len, const char* what) {
    if (!j.is_array() || j.size() != len)
        throw error(errc::parse_error, std::string(what) + ": expected an array of " + std::to_string(len));
    Vec v = Vec::zero(f, len);
    for (std::size_t i = 0; i < len; ++i)
        v[i] = Scalar::parse(f, detail_io::get_string(j.at(i), what));
    return v;
}

inline json matrix_to_json(const Matrix& m) {
    json j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        j.push_back(std::move(row));
    }
    return j;
}

inline Matrix matrix_from_json(const json& j, const FieldSpec& f, std::size_t rows, std::size_t cols,
                               const char* what) {
    if (!j.is_array() || j.size() != rows)
        throw error(errc::parse_error, std::string(what) + ": expected " + std::to_string(rows) + " rows");
    Matrix m = Matrix::zero(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw error(errc::parse_error,
                        std::string(what) + ": expected " + std::to_string(cols) + " columns");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = Scalar::parse(f, detail_io::get_string(row.at(k), what));
    }
    return m;
}

/// Sparse bilinear table [{"i":1,"j":2,"out":{"4":"1"}}, ...]; rows with
/// all-zero output are omitted, entries sorted by (i, j), out-keys ascending.
inline json table_to_json(const std::vector<std::vector<Vec>>& table) {
    json j = json::array();
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t k = 0; k < table[i].size(); ++k) {
            const Vec& v = table[i][k];
            if (v.is_zero()) continue;
            json row;
            row["i"] = i + 1;
            row["j"] = k + 1;
            json out;
            for (std::size_t t = 0; t < v.size(); ++t)
                if (!v[t].is_zero()) out[std::to_string(t + 1)] = v[t].str();
            row["out"] = std::move(out);
            j.push_back(std::move(row));
        }
    return j;
}

inline std::vector<std::vector<Vec>> table_from_json(const json& j, const FieldSpec& f, std::size_t n,
                                                     std::size_t m, std::size_t out_dim, const char* what) {
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(m, Vec::zero(f, out_dim)));
    if (!j.is_array())
        throw error(errc::parse_error, std::string(what) + ": expected an array");
    for (const json& row : j) {
        detail_io::expect_keys(row, what, {"i", "j", "out"});
        std::size_t i = detail_io::get_index(row.at("i"), n, what);
        std::size_t k = detail_io::get_index(row.at("j"), m, what);
        const json& out = row.at("out");
        if (!out.is_object())
            throw error(errc::parse_error, std::string(what) + ": 'out' must be an object");
        for (auto it = out.begin(); it != out.end(); ++it) {
            std::size_t t = 0;
            try {
                std::size_t pos = 0;
                unsigned long idx = std::stoul(it.key(), &pos);
                if (pos != it.key().size() || idx < 1 || idx > out_dim) throw std::invalid_argument("");
                t = static_cast<std::size_t>(idx) - 1;
            } catch (...) {
                throw error(errc::parse_error, std::string(what) + ": bad output index '" + it.key() + "'");
            }
            table[i][k][t] = Scalar::parse(f, detail_io::get_string(it.value(), what));
        }
    }
    return table;
}

inline json algebra_to_json(const Algebra& a) {
    json j;
    j["field"] = field_to_json(a.field());
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    std::vector<std::vector<Vec>> table(a.dim(), std::vector<Vec>(a.dim(), Vec::zero(a.field(), a.dim())));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) table[i][k] = a.basis_product(i, k);
    j["products"] = table_to_json(table);
    return j;
}

inline Algebra algebra_from_json(const json& j) {
    detail_io::expect_keys(j, "algebra", {"field", "dim", "products"}, {"basis"});
    FieldSpec f = field_from_json(j.at("field"));
    if (!j.at("dim").is_number_unsigned())
        throw error(errc::parse_error, "algebra: 'dim' must be a nonnegative integer");
    std::size_t n = j.at("dim").get<std::size_t>();
    Algebra a = Algebra::zero(f, n);
    if (j.contains("basis")) {
        std::vector<std::string> labels;
        for (const json& l : j.at("basis")) labels.push_back(detail_io::get_string(l, "algebra.basis"));
        if (labels.size() != n)
            throw error(errc::parse_error, "algebra: basis size != dim");
        a.set_labels(std::move(labels));
    }
    auto table = table_from_json(j.at("products"), f, n, n, n, "algebra.products");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t t = 0; t < n; ++t) a.set_c(i, k, t, table[i][k][t]);
    return a;
}

inline json matrix_list_to_json(const std::vector<Matrix>& ms) {
    json j = json::array();
    for (const auto& m : ms) j.push_back(matrix_to_json(m));
    return j;
}

inline std::vector<Matrix> matrix_list_from_json(const json& j, const FieldSpec& f, std::size_t count,
                                                 std::size_t rows, std::size_t cols, const char* what) {
    if (!j.is_array() || j.size() != count)
        throw error(errc::parse_error,
                    std::string(what) + ": expected " + std::to_string(count) + " matrices");
    std::vector<Matrix> out;
    out.reserve(count);
    for (const json& m : j) out.push_back(matrix_from_json(m, f, rows, cols, what));
    return out;
}

inline json datum_to_json(const ExtendingDatum& d) {
    json j;
    j["base"] = algebra_to_json(d.base);
    j["vdim"] = d.vdim;
    j["lA"] = matrix_list_to_json(d.la);
    j["rA"] = matrix_list_to_json(d.ra);
    j["lV"] = matrix_list_to_json(d.lv);
    j["rV"] = matrix_list_to_json(d.rv);
    j["f"] = table_to_json(d.f);
    j["dot"] = table_to_json(d.dot);
    return j;
}

inline ExtendingDatum datum_from_json(const json& j) {
    detail_io::expect_keys(j, "datum", {"base", "vdim", "lA", "rA", "lV", "rV", "f", "dot"});
    Algebra base = algebra_from_json(j.at("base"));
    if (!j.at("vdim").is_number_unsigned())
        throw error(errc::parse_error, "datum: 'vdim' must be a nonnegative integer");
    std::size_t nv = j.at("vdim").get<std::size_t>();
    const FieldSpec& f = base.field();
    std::size_t na = base.dim();
    ExtendingDatum d = ExtendingDatum::zero(std::move(base), nv);
    d.la = matrix_list_from_json(j.at("lA"), f, na, nv, nv, "datum.lA");
    d.ra = matrix_list_from_json(j.at("rA"), f, na, nv, nv, "datum.rA");
    d.lv = matrix_list_from_json(j.at("lV"), f, nv, na, na, "datum.lV");
    d.rv = matrix_list_from_json(j.at("rV"), f, nv, na, na, "datum.rV");
    d.f = table_from_json(j.at("f"), f, nv, nv, na, "datum.f");
    d.dot = table_from_json(j.at("dot"), f, nv, nv, nv, "datum.dot");
    d.validate_shapes();
    return d;
}

inline json flag_to_json(const FlagDatum& fd) {
    json j;
    j["base"] = algebra_to_json(fd.base);
    j["h"] = vec_to_json(fd.h);
    j["g"] = vec_to_json(fd.g);
    j["D"] = matrix_to_json(fd.D);
    j["T"] = matrix_to_json(fd.T);
    j["a0"] = vec_to_json(fd.a0);
    j["alpha"] = fd.alpha.str();
    return j;
}

inline FlagDatum flag_from_json(const json& j) {
    detail_io::expect_keys(j, "flag datum", {"base", "h", "g", "D", "T", "a0", "alpha"});
    Algebra base = algebra_from_json(j.at("base"));
    const FieldSpec f = base.field();
    std::size_t n = base.dim();
    FlagDatum fd = FlagDatum::zero(std::move(base));
    fd.h = vec_from_json(j.at("h"), f, n, "flag.h");
    fd.g = vec_from_json(j.at("g"), f, n, "flag.g");
    fd.D = matrix_from_json(j.at("D"), f, n, n, "flag.D");
    fd.T = matrix_from_json(j.at("T"), f, n, n, "flag.T");
    fd.a0 = vec_from_json(j.at("a0"), f, n, "flag.a0");
    fd.alpha = Scalar::parse(f, detail_io::get_string(j.at("alpha"), "flag.alpha"));
    return fd;
}

inline json matched_pair_to_json(const MatchedPair& mp) {
    json j;
    j["A"] = algebra_to_json(mp.A);
    j["B"] = algebra_to_json(mp.B);
    j["lA"] = matrix_list_to_json(mp.la);
    j["rA"] = matrix_list_to_json(mp.ra);
    j["lB"] = matrix_list_to_json(mp.lb);
    j["rB"] = matrix_list_to_json(mp.rb);
    return j;
}

inline MatchedPair matched_pair_from_json(const json& j) {
    detail_io::expect_keys(j, "matched pair", {"A", "B", "lA", "rA", "lB", "rB"});
    MatchedPair mp;
    mp.A = algebra_from_json(j.at("A"));
    mp.B = algebra_from_json(j.at("B"));
    require_same_field(mp.A.field(), mp.B.field());
    const FieldSpec& f = mp.A.field();
    std::size_t na = mp.A.dim(), nb = mp.B.dim();
    mp.la = matrix_list_from_json(j.at("lA"), f, na, nb, nb, "pair.lA");
    mp.ra = matrix_list_from_json(j.at("rA"), f, na, nb, nb, "pair.rA");
    mp.lb = matrix_list_from_json(j.at("lB"), f, nb, na, na, "pair.lB");
    mp.rb = matrix_list_from_json(j.at("rB"), f, nb, na, na, "pair.rB");
    return mp;
}

inline json deformation_to_json(const DeformationMap& dm) {
    json j;
    j["phi"] = matrix_to_json(dm.phi);
    return j;
}

inline DeformationMap deformation_from_json(const json& j, const FieldSpec& f, std::size_t na,
                                            std::size_t nb) {
    detail_io::expect_keys(j, "deformation map", {"phi"});
    return DeformationMap{matrix_from_json(j.at("phi"), f, na, nb, "phi")};
}

inline json bimodule_to_json(const Bimodule& bm) {
    json j;
    j["base"] = algebra_to_json(bm.base);
    j["mdim"] = bm.mdim;
    j["S"] = matrix_list_to_json(bm.S);
    j["T"] = matrix_list_to_json(bm.T);
    return j;
}

inline Bimodule bimodule_from_json(const json& j) {
    detail_io::expect_keys(j, "bimodule", {"base", "mdim", "S", "T"});
    Bimodule bm;
    bm.base = algebra_from_json(j.at("base"));
    if (!j.at("mdim").is_number_unsigned())
        throw error(errc::parse_error, "bimodule: 'mdim' must be a nonnegative integer");
    bm.mdim = j.at("mdim").get<std::size_t>();
    bm.S = matrix_list_from_json(j.at("S"), bm.base.field(), bm.base.dim(), bm.mdim, bm.mdim, "bimodule.S");
    bm.T = matrix_list_from_json(j.at("T"), bm.base.field(), bm.base.dim(), bm.mdim, bm.mdim, "bimodule.T");
    return bm;
}

inline json split_to_json(const BasisSplit& s) {
    json j;
    json sub = json::array(), comp = json::array();
    for (std::size_t i : s.sub) sub.push_back(i + 1);
    for (std::size_t i : s.comp) comp.push_back(i + 1);
    j["sub"] = std::move(sub);
    j["comp"] = std::move(comp);
    return j;
}

inline BasisSplit split_from_json(const json& j, std::size_t dim) {
    detail_io::expect_keys(j, "split", {"sub", "comp"});
    BasisSplit s;
    for (const json& v : j.at("sub")) s.sub.push_back(detail_io::get_index(v, dim, "split.sub"));
    for (const json& v : j.at("comp")) s.comp.push_back(detail_io::get_index(v, dim, "split.comp"));
    s.validate(dim);
    return s;
}

inline json morphism_witness_to_json(const MorphismWitness& w) {
    json j;
    j["map"] = matrix_to_json(w.map);
    j["stabilizes"] = w.stabilizes;
    j["costabilizes"] = w.costabilizes;
    if (w.split) j["split"] = split_to_json(*w.split);
    if (w.src_split) j["src_split"] = split_to_json(*w.src_split);
    return j;
}

inline MorphismWitness morphism_witness_from_json(const json& j, const FieldSpec& f, std::size_t src_dim,
                                                  std::size_t dst_dim) {
    detail_io::expect_keys(j, "morphism witness", {"map"},
                           {"stabilizes", "costabilizes", "split", "src_split"});
    MorphismWitness w;
    w.map = matrix_from_json(j.at("map"), f, dst_dim, src_dim, "witness.map");
    if (j.contains("stabilizes")) w.stabilizes = j.at("stabilizes").get<bool>();
    if (j.contains("costabilizes")) w.costabilizes = j.at("costabilizes").get<bool>();
    if (j.contains("split")) w.split = split_from_json(j.at("split"), dst_dim);
    if (j.contains("src_split")) w.src_split = split_from_json(j.at("src_split"), src_dim);
    return w;
}

inline json violations_to_json(const CheckReport& rep) {
    json arr = json::array();
    for (const auto& v : rep.violations) {
        json jv;
        jv["condition_id"] = v.condition;
        json where = json::array();
        for (std::size_t i : v.where) where.push_back(i + 1);
        jv["witness"] = std::move(where);
        jv["lhs"] = vec_to_json(v.lhs);
        jv["rhs"] = vec_to_json(v.rhs);
        arr.push_back(std::move(jv));
    }
    return arr;
}

inline json report_to_json(const CheckReport& rep) {
    json j;
    j["pass"] = rep.pass;
    j["violations"] = violations_to_json(rep);
    return j;
}

inline json morphism_report_to_json(const MorphismReport& rep) {
    json j;
    j["pass"] = rep.report.pass;
    j["invertible"] = rep.invertible;
    j["violations"] = violations_to_json(rep.report);
    return j;
}

inline json datum_morphism_report_to_json(const DatumMorphismReport& rep) {
    json j;
    j["pass"] = rep.report.pass;
    j["mu_invertible"] = rep.mu_invertible;
    j["mu_identity"] = rep.mu_identity;
    j["violations"] = violations_to_json(rep.report);
    return j;
}

inline json flag_witness_to_json(const FlagEquivWitness& w) {
    json j;
    j["beta"] = w.beta.str();
    j["b0"] = vec_to_json(w.b0);
    return j;
}

inline FlagEquivWitness flag_witness_from_json(const json& j, const FieldSpec& f, std::size_t n) {
    detail_io::expect_keys(j, "flag witness", {"beta", "b0"});
    return FlagEquivWitness{Scalar::parse(f, detail_io::get_string(j.at("beta"), "witness.beta")),
                            vec_from_json(j.at("b0"), f, n, "witness.b0")};
}

inline json flag_classification_to_json(const FlagClassification& cls) {
    json j;
    j["field"] = field_to_json(cls.field);
    j["kind"] = alg_kind_name(cls.kind);
    j["mode"] = cls.mode == EquivMode::equivalent ? "equiv" : "cohom";
    j["space"] = cls.space.str();
    j["candidates_checked"] = cls.candidates_checked;
    j["valid_count"] = cls.valid.size();
    json valid = json::array();
    for (const auto& fd : cls.valid) valid.push_back(flag_to_json(fd));
    j["valid"] = std::move(valid);
    json classes = json::array();
    for (const auto& c : cls.classes) {
        json jc;
        jc["representative"] = c.representative + 1;
        json members = json::array();
        for (std::size_t m : c.members) members.push_back(m + 1);
        jc["members"] = std::move(members);
        json wits = json::array();
        for (const auto& w : c.witnesses) wits.push_back(flag_witness_to_json(w));
        jc["witnesses"] = std::move(wits);
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    return j;
}

inline json complement_report_to_json(const ComplementReport& rep) {
    json j;
    j["field"] = field_to_json(rep.field);
    j["kind"] = alg_kind_name(rep.kind);
    j["candidates_checked"] = rep.candidates_checked;
    json maps = json::array();
    for (const auto& dm : rep.deformation_maps) maps.push_back(matrix_to_json(dm.phi));
    j["deformation_maps"] = std::move(maps);
    json classes = json::array();
    for (const auto& c : rep.classes) {
        json jc;
        jc["representative"] = c.representative + 1;
        json members = json::array();
        for (std::size_t m : c.members) members.push_back(m + 1);
        jc["members"] = std::move(members);
        json wits = json::array();
        for (const auto& w : c.witnesses) wits.push_back(matrix_to_json(w));
        jc["witnesses"] = std::move(wits);
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    j["index"] = rep.index;
    return j;
}

inline json brute_force_report_to_json(const BruteForceReport& rep) {
    json j;
    j["field"] = field_to_json(rep.field);
    j["kind"] = alg_kind_name(rep.kind);
    j["candidates_checked"] = rep.candidates_checked;
    json comps = json::array();
    for (const auto& basis : rep.complements) {
        json jb = json::array();
        for (const auto& v : basis) jb.push_back(vec_to_json(v));
        comps.push_back(std::move(jb));
    }
    j["complements"] = std::move(comps);
    json classes = json::array();
    for (const auto& c : rep.classes) {
        json jc;
        jc["representative"] = c.representative + 1;
        json members = json::array();
        for (std::size_t m : c.members) members.push_back(m + 1);
        jc["members"] = std::move(members);
        json wits = json::array();
        for (const auto& w : c.witnesses) wits.push_back(matrix_to_json(w));
        jc["witnesses"] = std::move(wits);
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    j["index"] = rep.index;
    return j;
}

inline json extract_result_to_json(const ExtractResult& ex) {
    json j;
    j["datum"] = datum_to_json(ex.datum);
    j["iso"] = morphism_witness_to_json(ex.iso);
    return j;
}

inline json subalgebra_result_to_json(const SubalgebraResult& r) {
    json j;
    j["is_subalgebra"] = r.is_subalgebra;
    j["is_ideal"] = r.is_ideal;
    if (r.induced) j["induced"] = algebra_to_json(*r.induced);
    return j;
}

}  // namespace lsakit::io
