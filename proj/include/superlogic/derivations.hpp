#pragma once

// Vector fields over the carrier: endomaps satisfying the four derivation
// axioms (linearity in the P + nQ decomposition, commutation with negation,
// and the Leibniz-style rules for | and &). The carrier is small enough to
// decide everything by exhaustion over all 4^4 = 256 endomaps.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "value.hpp"

namespace superlogic {

struct endo_map {
    std::array<super_value, 4> table{};   // indexed by super_value::code()

    super_value operator()(super_value v) const { return table[v.code()]; }

    static endo_map identity() {
        return {{super_value::from_code(0), super_value::from_code(1),
                 super_value::from_code(2), super_value::from_code(3)}};
    }
    static endo_map constant(super_value v) { return {{v, v, v, v}}; }

    // Lexicographic code over the output tuple, X(0) most significant.
    std::uint16_t code() const {
        std::uint16_t c = 0;
        for (super_value v : table) c = static_cast<std::uint16_t>(c << 2 | v.code());
        return c;
    }
    static endo_map from_code(std::uint16_t code) {
        endo_map m;
        for (int i = 3; i >= 0; --i) {
            m.table[i] = super_value::from_code(code & 3);
            code >>= 2;
        }
        return m;
    }

    bool operator==(const endo_map&) const = default;
};

// Used as the Φ of the superfield expansion; any endomap qualifies.
using body_function = endo_map;

struct axiom_violation {
    std::string axiom;                   // "linearity" | "negation" | "or-rule" | "and-rule"
    std::vector<super_value> args;       // L, or L and K
    super_value actual;                  // X applied to the combined argument
    super_value expected;                // axiom right-hand side
};

struct vector_field_verdict {
    bool is_vector_field = true;
    std::vector<axiom_violation> violations;
};

inline vector_field_verdict is_vector_field(const endo_map& x, sum_semantics sem) {
    vector_field_verdict verdict;
    auto report = [&](std::string axiom, std::vector<super_value> args,
                      super_value actual, super_value expected) {
        if (actual != expected)
            verdict.violations.push_back(
                {std::move(axiom), std::move(args), actual, expected});
    };

    for (super_value v : carrier) {
        super_value p(v.body(), false);
        super_value q(v.soul(), false);
        report("linearity", {v}, x(v), formal_sum(x(p), n_shift(x(q)), sem));
        report("negation", {v}, x(neg(v)), neg(x(v)));
    }
    for (super_value l : carrier) {
        for (super_value k : carrier) {
            report("or-rule", {l, k}, x(disj(l, k, sem)),
                   conj(disj(x(l), k, sem), disj(l, x(k), sem), sem));
            report("and-rule", {l, k}, x(conj(l, k, sem)),
                   disj(conj(x(l), k, sem), conj(l, x(k), sem), sem));
        }
    }
    verdict.is_vector_field = verdict.violations.empty();
    return verdict;
}

// Exhausts all 256 endomaps in lexicographic table order. May return the
// empty sequence; that is a finding, not an error.
inline std::vector<endo_map> enumerate_vector_fields(sum_semantics sem) {
    std::vector<endo_map> found;
    for (std::uint32_t code = 0; code < 256; ++code) {
        endo_map candidate = endo_map::from_code(static_cast<std::uint16_t>(code));
        if (is_vector_field(candidate, sem).is_vector_field)
            found.push_back(candidate);
    }
    return found;
}

enum class field_op : std::uint8_t { negation, disjunction, conjunction };

constexpr std::string_view to_string(field_op op) {
    switch (op) {
    case field_op::negation:    return "not";
    case field_op::disjunction: return "or";
    default:                    return "and";
    }
}

// Pointwise combinations: [!X](L) = !(X(L)), [X|Y](L) = X(L)|Y(L),
// [X&Y](L) = X(L)&Y(L).
inline endo_map combine(field_op op, const endo_map& x,
                        const std::optional<endo_map>& y = std::nullopt,
                        sum_semantics sem = sum_semantics::xor_sum) {
    endo_map result;
    if (op == field_op::negation) {
        for (super_value v : carrier) result.table[v.code()] = neg(x(v));
        return result;
    }
    if (!y) throw std::invalid_argument("combine: missing second operand");
    for (super_value v : carrier)
        result.table[v.code()] = op == field_op::disjunction
            ? disj(x(v), (*y)(v), sem)
            : conj(x(v), (*y)(v), sem);
    return result;
}

// Superfield expansion Φ(L) = Φ(P) + nQ Φ(P) + Φ(nQ), with P the body part,
// nQ the soul part, and juxtaposition read as conjunction.
inline super_value superfield_expand(const body_function& phi, super_value l,
                                     sum_semantics sem) {
    super_value p(l.body(), false);
    super_value nq(false, l.soul());
    super_value phi_p = phi(p);
    return formal_sum(formal_sum(phi_p, conj(nq, phi_p, sem), sem), phi(nq), sem);
}

// Empirical closure record: what combine() does to each pair of enumerated
// vector fields. Asserts nothing about closure itself; the deliverable is a
// deterministic report.
struct closure_entry {
    field_op op;
    std::size_t x_index = 0, y_index = 0;   // y_index unused for negation
    endo_map result;
    bool still_vector_field = false;
};

struct closure_report {
    sum_semantics semantics;
    std::vector<endo_map> fields;
    std::vector<closure_entry> entries;
};

inline closure_report vector_field_closure(sum_semantics sem) {
    closure_report report{sem, enumerate_vector_fields(sem), {}};
    const auto& fields = report.fields;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        endo_map negated = combine(field_op::negation, fields[i]);
        report.entries.push_back(
            {field_op::negation, i, 0, negated,
             is_vector_field(negated, sem).is_vector_field});
    }
    for (auto op : {field_op::disjunction, field_op::conjunction})
        for (std::size_t i = 0; i < fields.size(); ++i)
            for (std::size_t j = 0; j < fields.size(); ++j) {
                endo_map combined = combine(op, fields[i], fields[j], sem);
                report.entries.push_back(
                    {op, i, j, combined,
                     is_vector_field(combined, sem).is_vector_field});
            }
    return report;
}

} // namespace superlogic
