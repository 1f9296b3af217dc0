#include "gwalk/vectors.hpp"

#include <algorithm>
#include <sstream>

#include "gwalk/errors.hpp"

namespace gwalk {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("exponent overflow");
    return r;
}

}  // namespace

void require_same_arity(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw ArityMismatch(std::string(what) + ": arity " + std::to_string(a) + " vs " +
                            std::to_string(b));
    }
}

ExponentVector::ExponentVector(std::initializer_list<std::int64_t> entries) : e_(entries) {
    for (auto x : e_)
        if (x < 0) throw Error("negative exponent");
}

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : e_(std::move(entries)) {
    for (auto x : e_)
        if (x < 0) throw Error("negative exponent");
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
    ExponentVector v(n);
    v.e_.at(i) = 1;
    return v;
}

std::int64_t ExponentVector::total_degree() const {
    std::int64_t d = 0;
    for (auto x : e_) d = checked_add(d, x);
    return d;
}

bool ExponentVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
    require_same_arity(size(), other.size(), "divides");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    require_same_arity(size(), other.size(), "monomial product");
    ExponentVector r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_add(e_[i], other.e_[i]);
    return r;
}

ExponentVector ExponentVector::quotient(const ExponentVector& other) const {
    if (!other.divides(*this)) throw Error("monomial quotient: not divisible");
    ExponentVector r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - other.e_[i];
    return r;
}

IntegerVector ExponentVector::minus(const ExponentVector& other) const {
    require_same_arity(size(), other.size(), "exponent difference");
    std::vector<BigInt> r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r[i] = static_cast<long>(e_[i]);
        r[i] -= static_cast<long>(other.e_[i]);
    }
    return IntegerVector(std::move(r));
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    require_same_arity(a.size(), b.size(), "lcm");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
    require_same_arity(a.size(), b.size(), "coprime");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
}

IntegerVector::IntegerVector(std::initializer_list<long> entries) {
    e_.reserve(entries.size());
    for (long x : entries) e_.emplace_back(x);
}

IntegerVector::IntegerVector(const ExponentVector& v) {
    e_.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e_.emplace_back(static_cast<long>(v[i]));
}

bool IntegerVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

IntegerVector IntegerVector::operator+(const IntegerVector& other) const {
    require_same_arity(size(), other.size(), "vector sum");
    IntegerVector r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + other.e_[i];
    return r;
}

IntegerVector IntegerVector::operator-(const IntegerVector& other) const {
    require_same_arity(size(), other.size(), "vector difference");
    IntegerVector r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - other.e_[i];
    return r;
}

IntegerVector IntegerVector::operator-() const {
    IntegerVector r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

IntegerVector IntegerVector::scaled(const BigInt& c) const {
    IntegerVector r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

IntegerVector IntegerVector::primitive() const {
    BigInt g = 0;
    for (const auto& x : e_) g = gcd(g, x);
    if (g == 0 || g == 1) return *this;
    IntegerVector r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) mpz_divexact(r.e_[i].get_mpz_t(), e_[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

std::string IntegerVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    os << ')';
    return os.str();
}

bool operator==(const IntegerVector& a, const IntegerVector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool IntegerVectorKeyLess::operator()(const IntegerVector& a, const IntegerVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

BigInt dot(const IntegerVector& a, const IntegerVector& b) {
    require_same_arity(a.size(), b.size(), "dot");
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BigInt dot(const IntegerVector& a, const ExponentVector& b) {
    require_same_arity(a.size(), b.size(), "dot");
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<long>(b[i]);
    return s;
}

Rational dot(const std::vector<Rational>& a, const IntegerVector& b) {
    require_same_arity(a.size(), b.size(), "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace gwalk
