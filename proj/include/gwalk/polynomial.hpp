#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "gwalk/order.hpp"
#include "gwalk/vectors.hpp"

namespace gwalk {

/// Multivariate polynomial over Q with canonical storage: no zero coefficients,
/// no repeated monomials. The zero polynomial is the empty term map.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t arity) : arity_(arity) {}

    static Polynomial monomial(const ExponentVector& m, const Rational& coeff = 1);
    static Polynomial constant(std::size_t arity, const Rational& c);

    std::size_t arity() const noexcept { return arity_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    Rational coefficient(const ExponentVector& m) const;
    bool contains(const ExponentVector& m) const { return terms_.count(m) != 0; }

    /// Adds c * x^m, dropping the term if it cancels.
    void add_term(const ExponentVector& m, const Rational& c);

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial multiply_by_term(const Rational& c, const ExponentVector& m) const;

    /// Largest exponent under `o`; requires a nonzero polynomial.
    const ExponentVector& leading_exponent(const MatrixOrder& o) const;

    /// Exponents sorted from largest to smallest under `o`.
    std::vector<ExponentVector> sorted_exponents(const MatrixOrder& o) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    std::size_t arity_ = 0;
    TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial subtract(const Polynomial& f, const Polynomial& g);
Polynomial multiply_by_term(const Polynomial& f, const Rational& c, const ExponentVector& m);

std::set<ExponentVector> support(const Polynomial& f);

/// Terms of `f` maximizing <w, v>. Throws Error on the zero polynomial.
Polynomial initial_form(const Polynomial& f, const IntegerVector& w);

/// Polynomial with a distinguished term from its support.
class MarkedPolynomial {
public:
    MarkedPolynomial() = default;
    /// Throws InvalidMarking unless `marked` is in the support of `body`.
    MarkedPolynomial(Polynomial body, ExponentVector marked);

    const Polynomial& body() const noexcept { return body_; }
    const ExponentVector& marked() const noexcept { return marked_; }
    Rational marked_coefficient() const { return body_.coefficient(marked_); }
    std::size_t arity() const noexcept { return body_.arity(); }

    /// Same marking, body scaled so the marked coefficient is 1.
    MarkedPolynomial monic() const;

    friend bool operator==(const MarkedPolynomial&, const MarkedPolynomial&) = default;

private:
    Polynomial body_;
    ExponentVector marked_;
};

/// Marks the leading term of `f` under `o`.
MarkedPolynomial mark(const Polynomial& f, const MatrixOrder& o);

/// {u - u' : u' in supp(g), u' != u} where u is the marked exponent.
std::vector<IntegerVector> bounding_vectors(const MarkedPolynomial& g);

struct ReduceOptions {
    /// Reduction steps allowed before StepCapExceeded is thrown.
    std::size_t step_cap = 1'000'000;
    /// When set (and total), the largest reducible term under this order is reduced
    /// first. Otherwise terms are scanned from the top of the internal lex key.
    const MatrixOrder* order = nullptr;
};

/// Remainder of `f` on division by the marked polynomials `G`.
///
/// No term of the result is divisible by a marked exponent of `G`. `steps`, when
/// given, is incremented once per reduction step.
Polynomial normal_form(const Polynomial& f, std::span<const MarkedPolynomial> G, const ReduceOptions& opts = {},
                       std::size_t* steps = nullptr);

}  // namespace gwalk
