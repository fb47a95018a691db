#pragma once

// Characters of the carrier (Boolean-valued maps satisfying decomposition,
// negation-compatibility, additivity, multiplicativity and monotonicity),
// the Δ/ε/μ structure maps, and the algebra the characters generate under
// pointwise product and pointwise GF(2) sum.
//
// The additivity "+" is its own mode (sum_interp), independent of the
// value-level semantics: with GF(2) addition the five clauses may be jointly
// unsatisfiable, and the enumerator reports whatever it finds.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "value.hpp"

namespace superlogic {

// A function from the carrier to F2, as a 4-entry table.
struct f2_function {
    std::array<bool, 4> bits{};   // indexed by super_value::code()

    bool operator()(super_value v) const { return bits[v.code()]; }

    static f2_function constant(bool b) { return {{b, b, b, b}}; }
    static f2_function body_map() { return {{false, true, false, true}}; }

    // Lexicographic code with the value at 0 most significant.
    std::uint8_t code() const {
        std::uint8_t c = 0;
        for (bool b : bits) c = static_cast<std::uint8_t>(c << 1 | (b ? 1 : 0));
        return c;
    }
    static f2_function from_code(std::uint8_t code) {
        f2_function f;
        for (int i = 3; i >= 0; --i) {
            f.bits[i] = (code & 1) != 0;
            code >>= 1;
        }
        return f;
    }

    bool operator==(const f2_function&) const = default;
    auto operator<=>(const f2_function& other) const { return code() <=> other.code(); }
};

using character = f2_function;

// μ: pointwise product. Lands in the function space, not necessarily in the
// character set.
inline f2_function mu(const f2_function& f, const f2_function& g) {
    f2_function out;
    for (std::size_t i = 0; i < 4; ++i) out.bits[i] = f.bits[i] && g.bits[i];
    return out;
}

inline f2_function pointwise_sum(const f2_function& f, const f2_function& g) {
    f2_function out;
    for (std::size_t i = 0; i < 4; ++i) out.bits[i] = f.bits[i] != g.bits[i];
    return out;
}

// Δ duplicates a character, ε sends every character to 1.
inline std::pair<std::pair<character, character>, bool> delta_eps(const character& chi) {
    return {{chi, chi}, true};
}

struct clause_violation {
    std::string clause;              // "decomposition" | "negation" | "additivity"
                                     // | "multiplicativity" | "monotonicity"
    std::vector<super_value> args;
    bool lhs = false, rhs = false;
};

struct character_verdict {
    bool is_character = true;
    std::vector<clause_violation> violations;
};

inline character_verdict is_character(const f2_function& chi, sum_semantics sem,
                                      sum_semantics sum_interp) {
    character_verdict verdict;
    auto report = [&](std::string clause, std::vector<super_value> args,
                      bool lhs, bool rhs) {
        if (lhs != rhs)
            verdict.violations.push_back({std::move(clause), std::move(args), lhs, rhs});
    };

    for (super_value l : carrier) {
        super_value p(l.body(), false);
        super_value nq(false, l.soul());
        report("decomposition", {l}, chi(l), graded_sum(chi(p), chi(nq), sum_interp));
        report("negation", {l}, chi(neg(l)), !chi(l));
    }
    for (super_value l : carrier) {
        for (super_value k : carrier) {
            report("additivity", {l, k}, chi(disj(l, k, sem)),
                   graded_sum(chi(l), chi(k), sum_interp));
            report("multiplicativity", {l, k}, chi(conj(l, k, sem)),
                   chi(l) && chi(k));
            if (leq(l, k))
                report("monotonicity", {l, k}, chi(l) && !chi(k), false);
        }
    }
    verdict.is_character = verdict.violations.empty();
    return verdict;
}

// Exhausts all 16 tables; the result may be empty, which is a finding.
inline std::vector<character> enumerate_characters(sum_semantics sem,
                                                   sum_semantics sum_interp) {
    std::vector<character> found;
    for (std::uint16_t code = 0; code < 16; ++code) {
        f2_function candidate = f2_function::from_code(static_cast<std::uint8_t>(code));
        if (is_character(candidate, sem, sum_interp).is_character)
            found.push_back(candidate);
    }
    return found;
}

class closure_too_large_error : public std::runtime_error {
public:
    explicit closure_too_large_error(std::size_t size)
        : std::runtime_error("algebra closure has " + std::to_string(size) +
                             " elements; the 4-point function space caps at 16") {}
};

// Closure of the generators (plus the constant-1 unit) under μ and pointwise
// GF(2) sum, sorted by table code. Cannot exceed 16 elements for 4-point
// tables; the cap is asserted anyway.
inline std::vector<f2_function> algebra_closure(std::vector<f2_function> generators) {
    std::array<bool, 16> seen{};
    std::vector<f2_function> algebra;
    auto add = [&](const f2_function& f) {
        if (!seen[f.code()]) {
            seen[f.code()] = true;
            algebra.push_back(f);
            return true;
        }
        return false;
    };
    add(f2_function::constant(true));
    for (const auto& g : generators) add(g);

    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t size = algebra.size();
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) {
                grew |= add(mu(algebra[i], algebra[j]));
                grew |= add(pointwise_sum(algebra[i], algebra[j]));
            }
    }
    if (algebra.size() > 16) throw closure_too_large_error(algebra.size());
    std::sort(algebra.begin(), algebra.end());
    return algebra;
}

} // namespace superlogic
