// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_EXPR_HPP
#define CUBEDEG_EXPR_HPP

#include "cubedeg/interval.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubedeg {

// Arithmetic expression over variables x1..xn.
//
// Grammar (whitespace-insensitive):
//   system := expr (';' expr)*
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | base ('^' int)?
//   base   := number | 'x' digits | '(' expr ')' | func '(' expr ')'
//   func   := sin | cos | exp | ln | sqrt | cbrt | abs
//
// Nodes are stored flat with children before parents; the root is last.
class Expr {
public:
    enum class Op : std::uint8_t {
        Constant,
        Variable,
        Negate,
        Add,
        Sub,
        Mul,
        Div,
        Pow,
        Elementary,
    };

    struct Node {
        Op op = Op::Constant;
        ElemFn fn = ElemFn::Abs;  // Elementary only
        std::int32_t lhs = -1;    // operand of unary ops, left of binary ops
        std::int32_t rhs = -1;
        std::int32_t index = 0;   // 0-based variable index, or Pow exponent
        double value = 0.0;       // Constant only
    };

    static Expr constant(double value);
    static Expr variable(int index);
    static Expr negate(Expr operand);
    static Expr binary(Op op, Expr lhs, Expr rhs);
    static Expr power(Expr base, int exponent);
    static Expr elementary(ElemFn fn, Expr operand);

    Interval eval(std::span<const Interval> box) const;
    double eval(std::span<const double> point) const;

    // -1 when the expression has no variables.
    int max_variable() const noexcept;

    // Copy with every variable index increased by `offset`.
    Expr shifted(int offset) const;

    std::string to_string() const;

    std::span<const Node> nodes() const noexcept { return nodes_; }

private:
    std::vector<Node> nodes_;

    std::int32_t append(const Expr& other);
    void to_string(std::int32_t at, std::string& out) const;
};

// Parses a single expression over variables x1..x<dim>.
Expr parse_expr(std::string_view text, std::size_t dim);

// f: R^n -> R^n as n component expressions, plus the list of component
// indices still in play. Dropping a component during the degree recursion
// only edits `active`.
class FunctionSystem {
public:
    explicit FunctionSystem(std::vector<Expr> components);

    // `text` holds `dim` expressions separated by ';'.
    static FunctionSystem parse(std::string_view text, std::size_t dim);

    std::size_t ambient_dim() const noexcept { return components_.size(); }
    std::size_t codomain_dim() const noexcept { return active_.size(); }
    std::span<const std::size_t> active() const noexcept { return active_; }
    const Expr& component(std::size_t original) const { return components_.at(original); }

    // Copy with active[position] removed (0-based position).
    FunctionSystem without(std::size_t position) const;

    // f - p.
    FunctionSystem translated(std::span<const double> p) const;

    // `position` indexes into active().
    Interval eval_interval(std::size_t position, std::span<const Interval> box) const;
    double eval_point(std::size_t position, std::span<const double> x) const;

    // Active components joined by "; ".
    std::string to_string() const;

private:
    std::vector<Expr> components_;
    std::vector<std::size_t> active_;
};

} // namespace cubedeg

#endif
