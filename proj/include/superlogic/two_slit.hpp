#pragma once

// Two-slit scenario: one population prepared for each slit, each with a
// first-order leak to the other slit. The product
//
//   (P1 + n(Q12)) & (P2 + n(Q21))
//
// splits into a classical body P1 & P2 and a first-order superposition term;
// the n^2 contribution vanishes.
//
// The numeric layer is an interpretation layered on top of the exact
// symbolic result: independent products at first order, body = p1*p2 and
// interference = p1*q21 + q12*p2.

#include <stdexcept>
#include <string>

#include "formula.hpp"

namespace superlogic {

class probability_range_error : public std::runtime_error {
public:
    probability_range_error(const std::string& name, double value)
        : std::runtime_error("probability " + name + " = " + std::to_string(value) +
                             " is outside [0, 1]") {}
};

struct two_slit_scenario {
    double p1 = 0, p2 = 0, q12 = 0, q21 = 0;
};

struct two_slit_result {
    canonical_pair symbolic;
    double body_weight = 0;
    double interference_weight = 0;
};

inline two_slit_result two_slit(const two_slit_scenario& s, sum_semantics sem) {
    auto check = [](const char* name, double v) {
        if (!(v >= 0.0 && v <= 1.0)) throw probability_range_error(name, v);
    };
    check("p1", s.p1);
    check("p2", s.p2);
    check("q12", s.q12);
    check("q21", s.q21);

    static const formula product = parse("(P1 + n(Q12)) & (P2 + n(Q21))");
    return {canonicalize(product, sem),
            s.p1 * s.p2,
            s.p1 * s.q21 + s.q12 * s.p2};
}

} // namespace superlogic
