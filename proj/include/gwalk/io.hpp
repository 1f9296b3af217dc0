#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gwalk/order.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk {

/// Variable names of a polynomial ring Q[x_1, ..., x_n], in declaration order.
class Ring {
public:
    /// Throws ParseError on empty, malformed or duplicate names.
    explicit Ring(std::vector<std::string> variables);

    std::size_t arity() const noexcept { return vars_.size(); }
    const std::vector<std::string>& variables() const noexcept { return vars_; }

    /// Parses e.g. `x^2 - 3/2*x*y + 7`. `*` between factors is optional.
    /// `line` is attached to errors; columns are 1-based within `text`.
    Polynomial parse(std::string_view text, std::size_t line = 1) const;

    /// Like parse, but one term may be bracketed to mark it: `[y^3] - x^2`.
    /// Without brackets the marking is taken from `fallback`; if that is null
    /// too, ParseError is thrown.
    MarkedPolynomial parse_marked(std::string_view text, const MatrixOrder* fallback, std::size_t line = 1) const;

    /// Terms from largest to smallest under `o`.
    std::string format(const Polynomial& f, const MatrixOrder& o) const;
    /// Marked term first, remaining terms from largest to smallest under `o`.
    /// With `bracket_mark` the marked term is written as `[term]`.
    std::string format(const MarkedPolynomial& g, const MatrixOrder& o, bool bracket_mark = false) const;
    std::string format_monomial(const ExponentVector& m) const;

private:
    std::vector<std::string> vars_;
};

/// Parses a vector such as `3,1`, `(9, 1)` or `1/2,3` with rational entries.
std::vector<Rational> parse_rational_vector(std::string_view text);

}  // namespace gwalk
