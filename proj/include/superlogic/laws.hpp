#pragma once

// Named identity suite over the four-value carrier. Each identity is checked
// by exhaustive evaluation per semantics mode; refutations come with the
// first witness valuation in row order. The classical-limit section re-checks
// every identity after body projection, where all of them must hold.

#include <string>
#include <vector>

#include "formula.hpp"
#include "value.hpp"

namespace superlogic {

struct law_verdict {
    std::string name;
    sum_semantics semantics;
    bool holds = true;
    std::optional<valuation> witness;
    std::optional<super_value> lhs_value, rhs_value;
};

struct law_report {
    sum_semantics semantics;
    int carrier_size = 4;
    std::vector<law_verdict> entries;
};

struct law {
    std::string name;
    formula lhs, rhs;
    // Classical-limit entries compare body projections only.
    bool body_only = false;
};

inline law_verdict check_identity(const std::string& name, const formula& lhs,
                                  const formula& rhs, sum_semantics sem,
                                  bool body_only = false) {
    law_verdict verdict{name, sem, true, {}, {}, {}};
    if (body_only) {
        std::set<std::string> names;
        for (auto& a : lhs.atoms()) names.insert(a);
        for (auto& a : rhs.atoms()) names.insert(a);
        std::vector<std::string> atoms(names.begin(), names.end());
        detail::check_atom_cap(atoms.size());
        detail::for_each_valuation(atoms, [&](const valuation& val) {
            super_value a = evaluate(lhs, val, sem);
            super_value b = evaluate(rhs, val, sem);
            if (a.body() != b.body()) {
                verdict.holds = false;
                verdict.witness = val;
                verdict.lhs_value = a;
                verdict.rhs_value = b;
                return false;
            }
            return true;
        });
        return verdict;
    }
    equiv_verdict eq = equivalent(lhs, rhs, sem);
    verdict.holds = eq.holds;
    if (!eq.holds) {
        verdict.witness = eq.witness;
        verdict.lhs_value = eq.lhs_value;
        verdict.rhs_value = eq.rhs_value;
    }
    return verdict;
}

inline law_verdict check_identity(const formula& lhs, const formula& rhs,
                                  sum_semantics sem) {
    return check_identity(to_string(lhs) + " == " + to_string(rhs), lhs, rhs, sem);
}

// The registered suite, in fixed order: the carrier-level identities first,
// then their classical limits. The two multi-term distributivity entries test
// the expanded right-hand sides against direct evaluation; their classical
// limits compare against the single classical term the expansion reduces to
// at n = 0.
inline std::vector<law> registered_laws() {
    auto f = [](const char* text) { return parse(text); };

    std::vector<law> laws = {
        {"n-squared-zero", f("n(x) & n(y)"), f("0")},
        {"double-negation", f("!!x"), f("x")},
        {"commutativity-and", f("x & y"), f("y & x")},
        {"commutativity-or", f("x | y"), f("y | x")},
        {"associativity-and", f("(x & y) & z"), f("x & (y & z)")},
        {"associativity-or", f("(x | y) | z"), f("x | (y | z)")},
        {"idempotence-and", f("x & x"), f("x")},
        {"idempotence-or", f("x | x"), f("x")},
        {"distributivity-or-over-and", f("x | (y & z)"), f("(x | y) & (x | z)")},
        {"distributivity-and-over-or", f("x & (y | z)"), f("(x & y) | (x & z)")},
        {"de-morgan-and", f("!(x & y)"), f("!x | !y")},
        {"de-morgan-or", f("!(x | y)"), f("!x & !y")},
        {"excluded-middle", f("x | !x"), f("1")},
        {"absorption-and-or", f("x & (x | y)"), f("x")},
        {"absorption-or-and", f("x | (x & y)"), f("x")},
        {"conjunction-expansion",
         f("(P + n(Q)) & (R + n(S))"),
         f("(P & R) + n((P & S) + (Q & R))")},
        {"disjunction-expansion",
         f("(P + n(Q)) | (R + n(S))"),
         f("(P | R) + n((P | S) + (Q | R))")},
        {"distributivity-i-expansion",
         f("(P + n(Q)) | ((R + n(S)) & (T + n(U)))"),
         f("(P | (R & T)) + (P | (R & n(U))) + (P | (n(S) & T)) + (n(Q) | (R & T))")},
        {"distributivity-ii-expansion",
         f("((P + n(Q)) | (R + n(S))) & (T + n(U))"),
         f("((P | R) & T) + ((P | R) & n(U)) + ((P | n(S)) & T) + (n(Q | R) & T)")},
    };

    const std::size_t carrier_level = laws.size();
    for (std::size_t i = 0; i < carrier_level; ++i) {
        law limit = laws[i];
        limit.name = "classical-limit-" + limit.name;
        limit.body_only = true;
        if (laws[i].name == "distributivity-i-expansion")
            limit.rhs = f("P | (R & T)");
        else if (laws[i].name == "distributivity-ii-expansion")
            limit.rhs = f("(P | R) & T");
        laws.push_back(std::move(limit));
    }
    return laws;
}

inline law_report run_suite(sum_semantics sem) {
    law_report report{sem, 4, {}};
    for (const law& l : registered_laws())
        report.entries.push_back(check_identity(l.name, l.lhs, l.rhs, sem, l.body_only));
    return report;
}

// Names of the identities that fail at carrier level, in suite order.
inline std::vector<std::string> failing_names(const law_report& report) {
    std::vector<std::string> names;
    for (const auto& e : report.entries)
        if (!e.holds) names.push_back(e.name);
    return names;
}

} // namespace superlogic
