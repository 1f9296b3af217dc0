#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gwalk {

using BigInt = mpz_class;
using Rational = mpq_class;

class IntegerVector;

/// Exponent vector of a monomial: fixed arity, non-negative machine integers.
/// Arithmetic is overflow-checked.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<std::int64_t> entries);
    explicit ExponentVector(std::vector<std::int64_t> entries);

    static ExponentVector unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return e_.size(); }
    std::int64_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::int64_t>& entries() const noexcept { return e_; }

    std::int64_t total_degree() const;
    bool is_zero() const;

    /// True iff this monomial divides `other`.
    bool divides(const ExponentVector& other) const;

    ExponentVector operator+(const ExponentVector& other) const;
    /// Componentwise difference; requires `other` to divide *this.
    ExponentVector quotient(const ExponentVector& other) const;
    /// Signed difference as an arbitrary-precision vector.
    IntegerVector minus(const ExponentVector& other) const;

    friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
    friend bool coprime(const ExponentVector& a, const ExponentVector& b);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::int64_t> e_;
};

/// Fixed-arity vector of arbitrary-precision integers.
class IntegerVector {
public:
    IntegerVector() = default;
    explicit IntegerVector(std::size_t n) : e_(n, 0) {}
    IntegerVector(std::initializer_list<long> entries);
    explicit IntegerVector(std::vector<BigInt> entries) : e_(std::move(entries)) {}
    explicit IntegerVector(const ExponentVector& v);

    std::size_t size() const noexcept { return e_.size(); }
    const BigInt& operator[](std::size_t i) const { return e_[i]; }
    BigInt& operator[](std::size_t i) { return e_[i]; }
    const std::vector<BigInt>& entries() const noexcept { return e_; }

    bool is_zero() const;

    IntegerVector operator+(const IntegerVector& other) const;
    IntegerVector operator-(const IntegerVector& other) const;
    IntegerVector operator-() const;
    IntegerVector scaled(const BigInt& c) const;

    /// Divides out the gcd of the entries; zero stays zero.
    IntegerVector primitive() const;

    std::string to_string() const;

    friend bool operator==(const IntegerVector& a, const IntegerVector& b);
    friend bool operator!=(const IntegerVector& a, const IntegerVector& b) { return !(a == b); }

private:
    std::vector<BigInt> e_;
};

/// Entrywise lexicographic order, only for use as a container key.
struct IntegerVectorKeyLess {
    bool operator()(const IntegerVector& a, const IntegerVector& b) const;
};

BigInt dot(const IntegerVector& a, const IntegerVector& b);
BigInt dot(const IntegerVector& a, const ExponentVector& b);
Rational dot(const std::vector<Rational>& a, const IntegerVector& b);

/// Throws ArityMismatch unless the sizes agree.
void require_same_arity(std::size_t a, std::size_t b, const char* what);

}  // namespace gwalk
