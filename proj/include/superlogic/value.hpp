#pragma once

// The four-value carrier {0, 1, n, 1+n}: Boolean logic extended by a
// nilpotent element n with n*n = 0. Every value is a pair (body, soul)
// over GF(2) standing for body + n*soul, like a dual number over bits.
//
// The connectives act componentwise on the body and mix grades in the
// soul; products of two souls vanish. Wherever two same-grade terms are
// added, the "+" is a runtime mode (sum_semantics): GF(2) addition or
// lattice join. Under xor_sum the carrier is exactly the dual-number
// ring GF(2)[n]/(n^2).

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace superlogic {

// Reading of "+" between same-grade terms.
enum class sum_semantics : std::uint8_t { xor_sum, or_sum };

constexpr bool graded_sum(bool a, bool b, sum_semantics sem) {
    return sem == sum_semantics::xor_sum ? (a != b) : (a || b);
}

constexpr std::string_view to_string(sum_semantics sem) {
    return sem == sum_semantics::xor_sum ? "xor" : "or";
}

constexpr std::optional<sum_semantics> parse_semantics(std::string_view text) {
    if (text == "xor") return sum_semantics::xor_sum;
    if (text == "or") return sum_semantics::or_sum;
    return std::nullopt;
}

class super_value {
public:
    constexpr super_value() = default;
    constexpr super_value(bool body, bool soul) : body_(body), soul_(soul) {}

    static constexpr super_value zero()       { return {false, false}; }
    static constexpr super_value one()        { return {true, false}; }
    static constexpr super_value n()          { return {false, true}; }
    static constexpr super_value one_plus_n() { return {true, true}; }

    constexpr bool body() const { return body_; }
    constexpr bool soul() const { return soul_; }

    // Enumeration code in the canonical order 0 < 1 < n < 1+n.
    constexpr std::uint8_t code() const {
        return static_cast<std::uint8_t>((body_ ? 1 : 0) | (soul_ ? 2 : 0));
    }
    static constexpr super_value from_code(std::uint8_t code) {
        return {(code & 1) != 0, (code & 2) != 0};
    }

    constexpr bool operator==(const super_value&) const = default;
    constexpr auto operator<=>(const super_value& other) const {
        return code() <=> other.code();
    }

private:
    bool body_ = false;
    bool soul_ = false;
};

// The whole carrier, in enumeration order.
inline constexpr std::array<super_value, 4> carrier = {
    super_value::zero(), super_value::one(),
    super_value::n(), super_value::one_plus_n()};

// ===========================================================================
// Connectives
// ===========================================================================

// !L = !P + n!Q. Flips both components; note !(b, 0) = (!b, 1), so negation
// injects soul even on classical values.
constexpr super_value neg(super_value v) {
    return {!v.body(), !v.soul()};
}

// L & K: body is the classical conjunction, soul collects the two mixed-grade
// products; the soul*soul product is dropped (n^2 = 0).
constexpr super_value conj(super_value v, super_value w, sum_semantics sem) {
    return {v.body() && w.body(),
            graded_sum(v.body() && w.soul(), v.soul() && w.body(), sem)};
}

// L | K: same shape with joins. The soul term is the superposition term; it
// appears even for classical arguments (disj(1, 0) = 1+n).
constexpr super_value disj(super_value v, super_value w, sum_semantics sem) {
    return {v.body() || w.body(),
            graded_sum(v.body() || w.soul(), v.soul() || w.body(), sem)};
}

// The grade-combining "+" of L = P + nQ, componentwise.
constexpr super_value formal_sum(super_value v, super_value w, sum_semantics sem) {
    return {graded_sum(v.body(), w.body(), sem),
            graded_sum(v.soul(), w.soul(), sem)};
}

// Multiplication by n: the body moves to the soul, the old soul is
// annihilated (n * nQ = 0).
constexpr super_value n_shift(super_value v) {
    return {false, v.body()};
}

// Classical-limit projection (n := 0); also the designated-truth map.
constexpr bool body(super_value v) { return v.body(); }

constexpr bool soul(super_value v) { return v.soul(); }

// Componentwise implication order on (body, soul).
constexpr bool leq(super_value v, super_value w) {
    return (!v.body() || w.body()) && (!v.soul() || w.soul());
}

constexpr std::pair<super_value, super_value> diag(super_value v) {
    return {v, v};
}

// ===========================================================================
// Text form: exactly "0", "1", "n", "1+n"
// ===========================================================================

constexpr std::string_view to_string(super_value v) {
    constexpr std::array<std::string_view, 4> names = {"0", "1", "n", "1+n"};
    return names[v.code()];
}

constexpr std::optional<super_value> parse_value(std::string_view text) {
    if (text == "0") return super_value::zero();
    if (text == "1") return super_value::one();
    if (text == "n") return super_value::n();
    if (text == "1+n") return super_value::one_plus_n();
    return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, super_value v) {
    return os << to_string(v);
}

} // namespace superlogic
