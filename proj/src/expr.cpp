// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/expr.hpp"

#include "cubedeg/error.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace cubedeg {

namespace {

constexpr std::array<std::pair<std::string_view, ElemFn>, 7> kFunctions{{
    {"sin", ElemFn::Sin},
    {"cos", ElemFn::Cos},
    {"exp", ElemFn::Exp},
    {"ln", ElemFn::Ln},
    {"sqrt", ElemFn::Sqrt},
    {"cbrt", ElemFn::Cbrt},
    {"abs", ElemFn::Abs},
}};

double point_elementary(ElemFn fn, double x)
{
    switch (fn) {
    case ElemFn::Sin: return std::sin(x);
    case ElemFn::Cos: return std::cos(x);
    case ElemFn::Exp: return std::exp(x);
    case ElemFn::Ln:
        if (!(x > 0.0)) throw Error(ErrorCode::EmptyDomain, "ln of a non-positive value");
        return std::log(x);
    case ElemFn::Sqrt:
        if (x < 0.0) throw Error(ErrorCode::EmptyDomain, "sqrt of a negative value");
        return std::sqrt(x);
    case ElemFn::Cbrt: return std::cbrt(x);
    case ElemFn::Abs: return std::fabs(x);
    }
    return 0.0;
}

class Parser {
public:
    Parser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

    std::vector<Expr> system()
    {
        std::vector<Expr> out;
        out.push_back(expr());
        while (peek() == ';') {
            ++pos_;
            out.push_back(expr());
        }
        if (peek() != '\0') fail("unexpected character");
        return out;
    }

    Expr single()
    {
        Expr e = expr();
        if (peek() != '\0') fail("unexpected character");
        return e;
    }

private:
    std::string_view text_;
    std::size_t dim_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        if (pos_ >= text_.size()) throw SyntaxError(pos_, what + " (end of input)");
        throw SyntaxError(pos_, what + " '" + std::string(1, text_[pos_]) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "', found");
        ++pos_;
    }

    Expr expr()
    {
        Expr lhs = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            lhs = Expr::binary(c == '+' ? Expr::Op::Add : Expr::Op::Sub, std::move(lhs), term());
        }
        return lhs;
    }

    Expr term()
    {
        Expr lhs = factor();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++pos_;
            lhs = Expr::binary(c == '*' ? Expr::Op::Mul : Expr::Op::Div, std::move(lhs), factor());
        }
        return lhs;
    }

    // Unary minus binds looser than '^': -x^2 is -(x^2).
    Expr factor()
    {
        if (peek() == '-') {
            ++pos_;
            return Expr::negate(factor());
        }
        Expr b = base();
        if (peek() == '^') {
            ++pos_;
            return Expr::power(std::move(b), integer());
        }
        return b;
    }

    int integer()
    {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
            skip_space();
        }
        const std::size_t start = pos_;
        int value = 0;
        const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc() || end == text_.data() + start) fail("expected integer exponent, found");
        pos_ = static_cast<std::size_t>(end - text_.data());
        if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
            fail("exponent must be an integer literal, found");
        }
        return negative ? -value : value;
    }

    Expr base()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == 'x') return variable();
        if (std::isalpha(static_cast<unsigned char>(c))) return function();
        fail("unexpected character");
    }

    Expr number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
                pos_ = p;
            }
        }
        double value = 0.0;
        const auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || end != text_.data() + pos_) {
            pos_ = start;
            fail("malformed number");
        }
        return Expr::constant(value);
    }

    Expr variable()
    {
        const std::size_t start = pos_;
        ++pos_;
        std::size_t index = 0;
        const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), index);
        if (ec != std::errc() || end == text_.data() + pos_) fail("expected variable index after 'x', found");
        pos_ = static_cast<std::size_t>(end - text_.data());
        if (index < 1 || index > dim_) {
            throw Error(ErrorCode::VariableOutOfRange, "variable x" + std::to_string(index) + " at offset "
                                                           + std::to_string(start) + " is outside x1..x"
                                                           + std::to_string(dim_));
        }
        return Expr::variable(static_cast<int>(index - 1));
    }

    Expr function()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        for (const auto& [fname, fn] : kFunctions) {
            if (fname == name) {
                expect('(');
                Expr arg = expr();
                expect(')');
                return Expr::elementary(fn, std::move(arg));
            }
        }
        pos_ = start;
        fail("unknown identifier starting with");
    }
};

std::string format_number(double v)
{
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

} // namespace

Expr Expr::constant(double value)
{
    Expr e;
    e.nodes_.push_back(Node{.op = Op::Constant, .value = value});
    return e;
}

Expr Expr::variable(int index)
{
    Expr e;
    e.nodes_.push_back(Node{.op = Op::Variable, .index = index});
    return e;
}

std::int32_t Expr::append(const Expr& other)
{
    const auto offset = static_cast<std::int32_t>(nodes_.size());
    for (Node n : other.nodes_) {
        if (n.lhs >= 0) n.lhs += offset;
        if (n.rhs >= 0) n.rhs += offset;
        nodes_.push_back(n);
    }
    return static_cast<std::int32_t>(nodes_.size()) - 1;
}

Expr Expr::negate(Expr operand)
{
    Expr e = std::move(operand);
    const auto child = static_cast<std::int32_t>(e.nodes_.size()) - 1;
    e.nodes_.push_back(Node{.op = Op::Negate, .lhs = child});
    return e;
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs)
{
    Expr e = std::move(lhs);
    const auto l = static_cast<std::int32_t>(e.nodes_.size()) - 1;
    const auto r = e.append(rhs);
    e.nodes_.push_back(Node{.op = op, .lhs = l, .rhs = r});
    return e;
}

Expr Expr::power(Expr base, int exponent)
{
    Expr e = std::move(base);
    const auto child = static_cast<std::int32_t>(e.nodes_.size()) - 1;
    e.nodes_.push_back(Node{.op = Op::Pow, .lhs = child, .index = exponent});
    return e;
}

Expr Expr::elementary(ElemFn fn, Expr operand)
{
    Expr e = std::move(operand);
    const auto child = static_cast<std::int32_t>(e.nodes_.size()) - 1;
    e.nodes_.push_back(Node{.op = Op::Elementary, .fn = fn, .lhs = child});
    return e;
}

Interval Expr::eval(std::span<const Interval> box) const
{
    thread_local std::vector<Interval> v;
    v.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        switch (n.op) {
        case Op::Constant: v[i] = Interval(n.value); break;
        case Op::Variable: v[i] = box[static_cast<std::size_t>(n.index)]; break;
        case Op::Negate: v[i] = -v[n.lhs]; break;
        case Op::Add: v[i] = v[n.lhs] + v[n.rhs]; break;
        case Op::Sub: v[i] = v[n.lhs] - v[n.rhs]; break;
        case Op::Mul: v[i] = v[n.lhs] * v[n.rhs]; break;
        case Op::Div: v[i] = v[n.lhs] / v[n.rhs]; break;
        case Op::Pow: v[i] = pow(v[n.lhs], n.index); break;
        case Op::Elementary: v[i] = cubedeg::elementary(n.fn, v[n.lhs]); break;
        }
    }
    return v.back();
}

double Expr::eval(std::span<const double> point) const
{
    thread_local std::vector<double> v;
    v.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        switch (n.op) {
        case Op::Constant: v[i] = n.value; break;
        case Op::Variable: v[i] = point[static_cast<std::size_t>(n.index)]; break;
        case Op::Negate: v[i] = -v[n.lhs]; break;
        case Op::Add: v[i] = v[n.lhs] + v[n.rhs]; break;
        case Op::Sub: v[i] = v[n.lhs] - v[n.rhs]; break;
        case Op::Mul: v[i] = v[n.lhs] * v[n.rhs]; break;
        case Op::Div: v[i] = v[n.lhs] / v[n.rhs]; break;
        case Op::Pow: v[i] = std::pow(v[n.lhs], n.index); break;
        case Op::Elementary: v[i] = point_elementary(n.fn, v[n.lhs]); break;
        }
    }
    return v.back();
}

int Expr::max_variable() const noexcept
{
    int m = -1;
    for (const Node& n : nodes_) {
        if (n.op == Op::Variable && n.index > m) m = n.index;
    }
    return m;
}

Expr Expr::shifted(int offset) const
{
    Expr e = *this;
    for (Node& n : e.nodes_) {
        if (n.op == Op::Variable) n.index += offset;
    }
    return e;
}

std::string Expr::to_string() const
{
    std::string out;
    if (!nodes_.empty()) to_string(static_cast<std::int32_t>(nodes_.size()) - 1, out);
    return out;
}

// Binary operations are fully parenthesized so that printing and re-parsing
// reproduces the same tree.
void Expr::to_string(std::int32_t at, std::string& out) const
{
    const Node& n = nodes_[static_cast<std::size_t>(at)];
    switch (n.op) {
    case Op::Constant: out += format_number(n.value); return;
    case Op::Variable: out += 'x' + std::to_string(n.index + 1); return;
    case Op::Negate:
        out += "-(";
        to_string(n.lhs, out);
        out += ')';
        return;
    case Op::Pow:
        out += '(';
        to_string(n.lhs, out);
        out += ")^" + std::to_string(n.index);
        return;
    case Op::Elementary:
        out += cubedeg::to_string(n.fn);
        out += '(';
        to_string(n.lhs, out);
        out += ')';
        return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
        static constexpr std::string_view symbols = "+-*/";
        const auto k = static_cast<std::size_t>(n.op) - static_cast<std::size_t>(Op::Add);
        out += '(';
        to_string(n.lhs, out);
        out += ' ';
        out += symbols[k];
        out += ' ';
        to_string(n.rhs, out);
        out += ')';
        return;
    }
    }
}

Expr parse_expr(std::string_view text, std::size_t dim)
{
    return Parser(text, dim).single();
}

FunctionSystem::FunctionSystem(std::vector<Expr> components) : components_(std::move(components))
{
    const std::size_t n = components_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (components_[i].nodes().empty()) throw Error(ErrorCode::InvalidArgument, "empty component expression");
        if (components_[i].max_variable() >= static_cast<int>(n)) {
            throw Error(ErrorCode::VariableOutOfRange, "component " + std::to_string(i + 1)
                                                           + " uses a variable beyond x" + std::to_string(n));
        }
        active_.push_back(i);
    }
}

FunctionSystem FunctionSystem::parse(std::string_view text, std::size_t dim)
{
    if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
    std::vector<Expr> components = Parser(text, dim).system();
    if (components.size() != dim) {
        throw Error(ErrorCode::ComponentCount, "expected " + std::to_string(dim) + " components, found "
                                                   + std::to_string(components.size()));
    }
    return FunctionSystem(std::move(components));
}

FunctionSystem FunctionSystem::without(std::size_t position) const
{
    FunctionSystem copy = *this;
    copy.active_.erase(copy.active_.begin() + static_cast<std::ptrdiff_t>(position));
    return copy;
}

FunctionSystem FunctionSystem::translated(std::span<const double> p) const
{
    if (p.size() != ambient_dim()) throw Error(ErrorCode::InvalidArgument, "target point has wrong dimension");
    FunctionSystem copy = *this;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0.0) copy.components_[i] = Expr::binary(Expr::Op::Sub, components_[i], Expr::constant(p[i]));
    }
    return copy;
}

Interval FunctionSystem::eval_interval(std::size_t position, std::span<const Interval> box) const
{
    return components_[active_[position]].eval(box);
}

double FunctionSystem::eval_point(std::size_t position, std::span<const double> x) const
{
    return components_[active_[position]].eval(x);
}

std::string FunctionSystem::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < active_.size(); ++i) {
        if (i != 0) out += "; ";
        out += components_[active_[i]].to_string();
    }
    return out;
}

} // namespace cubedeg
