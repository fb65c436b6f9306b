#pragma once

#include "gencyc/errors.hpp"
#include "gencyc/ring.hpp"

#include <string>
#include <vector>

namespace gencyc {

/// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Abstract syntax of the product-calculus language.
///
/// Class level:  Ref, Neg, Add, Sub, Scale(scalar, atom), Diamond, BulletL, Wedge(poly, class),
///               DimPart(class; value = ell), and Int 0 for the zero class.
/// Query level:  Deg(class), Mult(class; name = point).
/// Integer arithmetic (scalars and ring polynomials): Int, Ref, Neg, Add, Sub, Mul, Pow(base; value = exponent).
struct Expr {
    enum class Kind { Ref, Int, Neg, Add, Sub, Mul, Pow, Scale, Diamond, BulletL, Wedge, DimPart, Deg, Mult };

    Kind kind = Kind::Int;
    std::string name;
    Integer value = 0;
    std::vector<Expr> args;
    int line = 1;
    int column = 1;

    /// Structural equality; source positions are ignored.
    bool operator==(const Expr& other) const {
        return kind == other.kind && name == other.name && value == other.value && args == other.args;
    }
};

/// Parses a query: a class expression, deg(expr) or mult(expr, point).
Expr parse(const std::string& text);
/// Parses the integer/polynomial sub-language on its own.
Expr parse_arith(const std::string& text);

/// Canonical text; parse(print(e)) == e for every tree the parser can produce.
std::string print(const Expr& e);

} // namespace gencyc
