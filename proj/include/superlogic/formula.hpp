#pragma once

// Formula language over named atoms and the four-value carrier.
//
// Grammar (ASCII, precedence ! > & > | > +):
//   formula := sum
//   sum     := clause ('+' clause)*
//   clause  := term ('|' term)*
//   term    := factor ('&' factor)*
//   factor  := '!' factor | 'n' '(' formula ')' | '(' formula ')'
//            | '0' | '1' | 'n' | atom
//   atom    := [A-Za-z_][A-Za-z0-9_]*   except the reserved word "n"
//
// "n" alone is the constant, "n(...)" is the shift operator. The unicode
// aliases ¬ ∧ ∨ are accepted on input.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "value.hpp"

namespace superlogic {

enum class node_kind : std::uint8_t {
    constant, atom, negation, conjunction, disjunction, formal_sum, n_shift
};

class formula {
public:
    static formula constant(super_value v) {
        return formula(std::make_shared<node>(node{node_kind::constant, v, {}, nullptr, nullptr}));
    }
    static formula atom(std::string name) {
        if (name == "n")
            throw std::invalid_argument("\"n\" is reserved and cannot name an atom");
        if (!valid_atom_name(name))
            throw std::invalid_argument("invalid atom name: \"" + name + "\"");
        return formula(std::make_shared<node>(
            node{node_kind::atom, {}, std::move(name), nullptr, nullptr}));
    }
    static formula negation(formula f) {
        return unary(node_kind::negation, std::move(f));
    }
    static formula conjunction(formula l, formula r) {
        return binary(node_kind::conjunction, std::move(l), std::move(r));
    }
    static formula disjunction(formula l, formula r) {
        return binary(node_kind::disjunction, std::move(l), std::move(r));
    }
    static formula sum(formula l, formula r) {
        return binary(node_kind::formal_sum, std::move(l), std::move(r));
    }
    static formula n_shift(formula f) {
        return unary(node_kind::n_shift, std::move(f));
    }

    node_kind kind() const { return node_->kind; }
    super_value value() const { return node_->value; }          // constant only
    const std::string& name() const { return node_->name; }     // atom only
    formula left() const { return formula(node_->left); }
    formula right() const { return formula(node_->right); }
    formula child() const { return formula(node_->left); }      // unary nodes

    bool operator==(const formula& other) const {
        if (node_ == other.node_) return true;
        if (node_->kind != other.node_->kind) return false;
        switch (node_->kind) {
        case node_kind::constant: return node_->value == other.node_->value;
        case node_kind::atom:     return node_->name == other.node_->name;
        case node_kind::negation:
        case node_kind::n_shift:  return child() == other.child();
        default:                  return left() == other.left() && right() == other.right();
        }
    }

    // Sorted unique atom names.
    std::vector<std::string> atoms() const {
        std::set<std::string> acc;
        collect_atoms(acc);
        return {acc.begin(), acc.end()};
    }

    static bool valid_atom_name(std::string_view name) {
        if (name.empty()) return false;
        auto head = [](char c) { return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
        auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
        if (!head(name.front())) return false;
        return std::all_of(name.begin() + 1, name.end(), tail);
    }

private:
    struct node {
        node_kind kind;
        super_value value;
        std::string name;
        std::shared_ptr<const node> left, right;
    };
    using node_ptr = std::shared_ptr<const node>;

    explicit formula(node_ptr n) : node_(std::move(n)) {}

    static formula unary(node_kind k, formula f) {
        return formula(std::make_shared<node>(node{k, {}, {}, f.node_, nullptr}));
    }
    static formula binary(node_kind k, formula l, formula r) {
        return formula(std::make_shared<node>(node{k, {}, {}, l.node_, r.node_}));
    }

    void collect_atoms(std::set<std::string>& acc) const {
        switch (node_->kind) {
        case node_kind::atom: acc.insert(node_->name); break;
        case node_kind::constant: break;
        case node_kind::negation:
        case node_kind::n_shift: child().collect_atoms(acc); break;
        default:
            left().collect_atoms(acc);
            right().collect_atoms(acc);
        }
    }

    node_ptr node_;
};

inline formula operator!(formula f) { return formula::negation(std::move(f)); }
inline formula operator&(formula l, formula r) { return formula::conjunction(std::move(l), std::move(r)); }
inline formula operator|(formula l, formula r) { return formula::disjunction(std::move(l), std::move(r)); }
inline formula operator+(formula l, formula r) { return formula::sum(std::move(l), std::move(r)); }

// ===========================================================================
// Errors
// ===========================================================================

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, std::vector<std::string> expected, std::string found)
        : std::runtime_error(build_message(offset, expected, found)),
          offset_(offset), expected_(std::move(expected)), found_(std::move(found)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    static std::string build_message(std::size_t offset,
                                     const std::vector<std::string>& expected,
                                     const std::string& found) {
        std::ostringstream os;
        os << "parse error at byte " << offset << ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            os << (i ? " | " : "") << expected[i];
        os << ", found " << found;
        return os.str();
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
    std::string found_;
};

class unbound_atom_error : public std::runtime_error {
public:
    explicit unbound_atom_error(const std::string& atom)
        : std::runtime_error("unbound atom: " + atom), atom_(atom) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

class too_many_atoms_error : public std::runtime_error {
public:
    explicit too_many_atoms_error(std::size_t count)
        : std::runtime_error("formula has " + std::to_string(count) +
                             " atoms; exhaustive operations cap at " +
                             std::to_string(max_exhaustive_atoms)),
          count_(count) {}
    std::size_t count() const { return count_; }

    static constexpr std::size_t max_exhaustive_atoms = 8;

private:
    std::size_t count_;
};

// ===========================================================================
// Parser
// ===========================================================================

namespace detail {

class parser {
public:
    explicit parser(std::string_view text) : text_(text) {}

    formula run() {
        formula f = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            fail({"'+'", "'|'", "'&'", "end of input"});
        return f;
    }

private:
    formula parse_sum() {
        formula f = parse_clause();
        while (accept('+')) f = formula::sum(std::move(f), parse_clause());
        return f;
    }

    formula parse_clause() {
        formula f = parse_term();
        while (accept_or()) f = formula::disjunction(std::move(f), parse_term());
        return f;
    }

    formula parse_term() {
        formula f = parse_factor();
        while (accept_and()) f = formula::conjunction(std::move(f), parse_factor());
        return f;
    }

    formula parse_factor() {
        skip_ws();
        if (accept_not()) return formula::negation(parse_factor());
        if (accept('(')) {
            formula f = parse_sum();
            expect(')');
            return f;
        }
        if (peek() == '0') { ++pos_; return formula::constant(super_value::zero()); }
        if (peek() == '1') { ++pos_; return formula::constant(super_value::one()); }
        std::string word = lex_word();
        if (word.empty())
            fail({"'!'", "'('", "'0'", "'1'", "'n'", "'n('", "atom"});
        if (word == "n") {
            if (accept('(')) {
                formula f = parse_sum();
                expect(')');
                return formula::n_shift(std::move(f));
            }
            return formula::constant(super_value::n());
        }
        return formula::atom(std::move(word));
    }

    std::string lex_word() {
        skip_ws();
        std::size_t start = pos_;
        auto head = [](char c) { return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
        auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
        if (pos_ < text_.size() && head(text_[pos_])) {
            ++pos_;
            while (pos_ < text_.size() && tail(text_[pos_])) ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    bool accept_not() { return accept('!') || accept_utf8("\xc2\xac"); }       // ¬
    bool accept_and() { return accept('&') || accept_utf8("\xe2\x88\xa7"); }   // ∧
    bool accept_or()  { return accept('|') || accept_utf8("\xe2\x88\xa8"); }   // ∨

    bool accept_utf8(std::string_view bytes) {
        skip_ws();
        if (text_.substr(pos_, bytes.size()) == bytes) {
            pos_ += bytes.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail({std::string("'") + c + "'"});
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip_ws();
        std::string found = pos_ < text_.size()
            ? "'" + std::string(1, text_[pos_]) + "'"
            : "end of input";
        throw parse_error(pos_, std::move(expected), std::move(found));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline formula parse(std::string_view text) {
    return detail::parser(text).run();
}

// ===========================================================================
// Printer
// ===========================================================================

namespace detail {

// Precedence levels: sum 0 < or 1 < and 2 < not 3 < primary 4.
inline int print_level(const formula& f) {
    switch (f.kind()) {
    case node_kind::formal_sum:  return 0;
    case node_kind::disjunction: return 1;
    case node_kind::conjunction: return 2;
    case node_kind::negation:    return 3;
    default:                     return 4;
    }
}

inline void print_to(std::ostream& os, const formula& f, int min_level) {
    const int level = print_level(f);
    const bool parens = level < min_level;
    if (parens) os << '(';
    switch (f.kind()) {
    case node_kind::constant:
        os << to_string(f.value());
        break;
    case node_kind::atom:
        os << f.name();
        break;
    case node_kind::negation:
        os << '!';
        print_to(os, f.child(), 3);
        break;
    case node_kind::n_shift:
        os << "n(";
        print_to(os, f.child(), 0);
        os << ')';
        break;
    case node_kind::conjunction:
        print_to(os, f.left(), 2);
        os << " & ";
        print_to(os, f.right(), 3);
        break;
    case node_kind::disjunction:
        print_to(os, f.left(), 1);
        os << " | ";
        print_to(os, f.right(), 2);
        break;
    case node_kind::formal_sum:
        print_to(os, f.left(), 0);
        os << " + ";
        print_to(os, f.right(), 1);
        break;
    }
    if (parens) os << ')';
}

} // namespace detail

// parse(to_string(f)) == f for every tree the parser can produce. The one
// exception is constant(1+n), which prints as "1+n" and re-parses as the
// value-identical sum 1 + n.
inline std::string to_string(const formula& f) {
    std::ostringstream os;
    detail::print_to(os, f, 0);
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const formula& f) {
    detail::print_to(os, f, 0);
    return os;
}

// ===========================================================================
// Evaluation
// ===========================================================================

using valuation = std::map<std::string, super_value>;

inline super_value evaluate(const formula& f, const valuation& val, sum_semantics sem) {
    switch (f.kind()) {
    case node_kind::constant:
        return f.value();
    case node_kind::atom: {
        auto it = val.find(f.name());
        if (it == val.end()) throw unbound_atom_error(f.name());
        return it->second;
    }
    case node_kind::negation:
        return neg(evaluate(f.child(), val, sem));
    case node_kind::n_shift:
        return n_shift(evaluate(f.child(), val, sem));
    case node_kind::conjunction:
        return conj(evaluate(f.left(), val, sem), evaluate(f.right(), val, sem), sem);
    case node_kind::disjunction:
        return disj(evaluate(f.left(), val, sem), evaluate(f.right(), val, sem), sem);
    case node_kind::formal_sum:
    default:
        return formal_sum(evaluate(f.left(), val, sem), evaluate(f.right(), val, sem), sem);
    }
}

// Classical Boolean evaluation for pure Boolean formulas (no sum/n-shift
// nodes). Constants evaluate to their body.
inline bool evaluate_classical(const formula& f, const std::map<std::string, bool>& val) {
    switch (f.kind()) {
    case node_kind::constant:
        return f.value().body();
    case node_kind::atom: {
        auto it = val.find(f.name());
        if (it == val.end()) throw unbound_atom_error(f.name());
        return it->second;
    }
    case node_kind::negation:
        return !evaluate_classical(f.child(), val);
    case node_kind::conjunction:
        return evaluate_classical(f.left(), val) && evaluate_classical(f.right(), val);
    case node_kind::disjunction:
        return evaluate_classical(f.left(), val) || evaluate_classical(f.right(), val);
    default:
        throw std::invalid_argument("classical evaluation requires a pure Boolean formula");
    }
}

// ===========================================================================
// Canonical P + nQ form
// ===========================================================================

// A pair of pure Boolean formulas (p, q) denoting p + n*q. Sound over
// classical valuations: for atoms assigned 0/1, the source formula evaluates
// to (classical p, classical q) as (body, soul).
struct canonical_pair {
    formula p, q;

    super_value evaluate(const std::map<std::string, bool>& classical_val) const {
        return {evaluate_classical(p, classical_val),
                evaluate_classical(q, classical_val)};
    }
};

namespace detail {

// Constructors with literal-constant folding, so canonical parts come out in
// the shape one writes by hand: 0 and 1 operands collapse instead of
// accumulating. No folding happens on atoms or compound subtrees.
inline bool is_const(const formula& f, bool b) {
    return f.kind() == node_kind::constant && f.value() == super_value(b, false);
}

inline formula mk_not(formula a) {
    if (is_const(a, false)) return formula::constant(super_value::one());
    if (is_const(a, true)) return formula::constant(super_value::zero());
    return !std::move(a);
}

inline formula mk_and(formula a, formula b) {
    if (is_const(a, false) || is_const(b, false))
        return formula::constant(super_value::zero());
    if (is_const(a, true)) return b;
    if (is_const(b, true)) return a;
    return std::move(a) & std::move(b);
}

inline formula mk_or(formula a, formula b) {
    if (is_const(a, true) || is_const(b, true))
        return formula::constant(super_value::one());
    if (is_const(a, false)) return b;
    if (is_const(b, false)) return a;
    return std::move(a) | std::move(b);
}

// Formula-level same-grade "+": under xor_sum it is spelled with the plain
// connectives so the canonical pair stays inside pure Boolean syntax.
inline formula formula_sum(formula a, formula b, sum_semantics sem) {
    if (sem == sum_semantics::or_sum) return mk_or(std::move(a), std::move(b));
    return mk_or(mk_and(a, mk_not(b)), mk_and(mk_not(a), b));
}

} // namespace detail

inline canonical_pair canonicalize(const formula& f, sum_semantics sem) {
    const formula zero = formula::constant(super_value::zero());
    switch (f.kind()) {
    case node_kind::constant:
        return {formula::constant(super_value(f.value().body(), false)),
                formula::constant(super_value(f.value().soul(), false))};
    case node_kind::atom:
        return {f, zero};
    case node_kind::n_shift:
        return {zero, canonicalize(f.child(), sem).p};
    case node_kind::negation: {
        auto [p, q] = canonicalize(f.child(), sem);
        return {detail::mk_not(p), detail::mk_not(q)};
    }
    case node_kind::conjunction: {
        auto [p1, q1] = canonicalize(f.left(), sem);
        auto [p2, q2] = canonicalize(f.right(), sem);
        return {detail::mk_and(p1, p2),
                detail::formula_sum(detail::mk_and(p1, q2), detail::mk_and(q1, p2), sem)};
    }
    case node_kind::disjunction: {
        auto [p1, q1] = canonicalize(f.left(), sem);
        auto [p2, q2] = canonicalize(f.right(), sem);
        return {detail::mk_or(p1, p2),
                detail::formula_sum(detail::mk_or(p1, q2), detail::mk_or(q1, p2), sem)};
    }
    case node_kind::formal_sum:
    default: {
        auto [p1, q1] = canonicalize(f.left(), sem);
        auto [p2, q2] = canonicalize(f.right(), sem);
        return {detail::formula_sum(p1, p2, sem), detail::formula_sum(q1, q2, sem)};
    }
    }
}

// ===========================================================================
// Truth tables and brute-force equivalence
// ===========================================================================

struct truth_table {
    std::vector<std::string> atoms;   // sorted
    sum_semantics semantics;
    std::vector<std::pair<std::vector<super_value>, super_value>> rows;
};

namespace detail {

inline void check_atom_cap(std::size_t count) {
    if (count > too_many_atoms_error::max_exhaustive_atoms)
        throw too_many_atoms_error(count);
}

// Rows run in lexicographic order of value codes, first atom most
// significant.
template <typename Fn>
void for_each_valuation(const std::vector<std::string>& atoms, Fn&& fn) {
    const std::size_t k = atoms.size();
    const std::size_t total = std::size_t{1} << (2 * k);
    valuation val;
    for (const auto& a : atoms) val[a] = super_value::zero();
    for (std::size_t row = 0; row < total; ++row) {
        for (std::size_t j = 0; j < k; ++j) {
            auto digit = static_cast<std::uint8_t>((row >> (2 * (k - 1 - j))) & 3);
            val[atoms[j]] = super_value::from_code(digit);
        }
        if (!fn(val)) return;
    }
}

} // namespace detail

inline truth_table tabulate(const formula& f, sum_semantics sem) {
    truth_table table{f.atoms(), sem, {}};
    detail::check_atom_cap(table.atoms.size());
    table.rows.reserve(std::size_t{1} << (2 * table.atoms.size()));
    detail::for_each_valuation(table.atoms, [&](const valuation& val) {
        std::vector<super_value> inputs;
        inputs.reserve(table.atoms.size());
        for (const auto& a : table.atoms) inputs.push_back(val.at(a));
        table.rows.emplace_back(std::move(inputs), evaluate(f, val, sem));
        return true;
    });
    return table;
}

// Equivalence result; carries the first counterexample in row order.
struct equiv_verdict {
    bool holds = true;
    std::optional<valuation> witness;
    super_value lhs_value, rhs_value;   // meaningful when !holds
};

inline equiv_verdict equivalent(const formula& f, const formula& g, sum_semantics sem) {
    std::set<std::string> names;
    for (auto& a : f.atoms()) names.insert(a);
    for (auto& a : g.atoms()) names.insert(a);
    std::vector<std::string> atoms(names.begin(), names.end());
    detail::check_atom_cap(atoms.size());

    equiv_verdict verdict;
    detail::for_each_valuation(atoms, [&](const valuation& val) {
        super_value a = evaluate(f, val, sem);
        super_value b = evaluate(g, val, sem);
        if (a != b) {
            verdict = {false, val, a, b};
            return false;
        }
        return true;
    });
    return verdict;
}

} // namespace superlogic
