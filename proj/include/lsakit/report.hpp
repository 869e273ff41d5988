#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsakit/linalg.hpp"

namespace lsakit {

/// Kinds of structures most operations are parameterized by.
enum class AlgKind { left_symmetric, novikov };

inline const char* alg_kind_name(AlgKind k) {
    return k == AlgKind::left_symmetric ? "left-symmetric" : "novikov";
}

/// One failed condition instance. `where` holds 0-based basis indices of the
/// tuple that breaks the condition; lhs/rhs are the two evaluated sides
/// (scalar conditions are wrapped as length-1 vectors).
struct Violation {
    std::string condition;
    std::vector<std::size_t> where;
    Vec lhs, rhs;
};

struct CheckReport {
    bool pass = true;
    std::vector<Violation> violations;

    void add(std::string condition, std::vector<std::size_t> where, Vec lhs, Vec rhs) {
        pass = false;
        violations.push_back({std::move(condition), std::move(where), std::move(lhs), std::move(rhs)});
    }

    void merge(const CheckReport& other) {
        if (!other.pass) pass = false;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

}  // namespace lsakit
