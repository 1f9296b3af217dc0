#include "gwalk/polynomial.hpp"

#include <algorithm>
#include <iterator>

#include "gwalk/errors.hpp"

namespace gwalk {

Polynomial Polynomial::monomial(const ExponentVector& m, const Rational& coeff) {
    Polynomial p(m.size());
    p.add_term(m, coeff);
    return p;
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
    return monomial(ExponentVector(arity), c);
}

Rational Polynomial::coefficient(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& m, const Rational& c) {
    require_same_arity(arity_, m.size(), "add_term");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_arity(arity_, g.arity_, "add");
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    require_same_arity(arity_, g.arity_, "subtract");
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(arity_);
    if (sgn(c) == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, a * c);
    return r;
}

Polynomial Polynomial::multiply_by_term(const Rational& c, const ExponentVector& m) const {
    require_same_arity(arity_, m.size(), "multiply_by_term");
    Polynomial r(arity_);
    if (sgn(c) == 0) return r;
    // Shifting by a fixed monomial preserves the lex key order.
    for (const auto& [e, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, a * c);
    return r;
}

const ExponentVector& Polynomial::leading_exponent(const MatrixOrder& o) const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (o.compare(it->first, best->first) > 0) best = it;
    return best->first;
}

std::vector<ExponentVector> Polynomial::sorted_exponents(const MatrixOrder& o) const {
    std::vector<ExponentVector> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    std::sort(out.begin(), out.end(), [&o](const auto& a, const auto& b) { return o.compare(a, b) > 0; });
    return out;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial subtract(const Polynomial& f, const Polynomial& g) { return f - g; }
Polynomial multiply_by_term(const Polynomial& f, const Rational& c, const ExponentVector& m) {
    return f.multiply_by_term(c, m);
}

std::set<ExponentVector> support(const Polynomial& f) {
    std::set<ExponentVector> s;
    for (const auto& [m, c] : f.terms()) s.insert(s.end(), m);
    return s;
}

Polynomial initial_form(const Polynomial& f, const IntegerVector& w) {
    if (f.is_zero()) throw Error("initial form of the zero polynomial");
    require_same_arity(f.arity(), w.size(), "initial_form");
    std::vector<std::pair<BigInt, const Polynomial::TermMap::value_type*>> weighted;
    weighted.reserve(f.size());
    for (const auto& term : f.terms()) weighted.emplace_back(dot(w, term.first), &term);
    BigInt best = weighted.front().first;
    for (const auto& [wt, t] : weighted)
        if (wt > best) best = wt;
    Polynomial r(f.arity());
    for (const auto& [wt, t] : weighted)
        if (wt == best) r.add_term(t->first, t->second);
    return r;
}

MarkedPolynomial::MarkedPolynomial(Polynomial body, ExponentVector marked)
    : body_(std::move(body)), marked_(std::move(marked)) {
    if (!body_.contains(marked_)) throw InvalidMarking("marked term is not in the support");
}

MarkedPolynomial MarkedPolynomial::monic() const {
    Rational c = marked_coefficient();
    if (c == 1) return *this;
    return MarkedPolynomial(body_.scaled(1 / c), marked_);
}

MarkedPolynomial mark(const Polynomial& f, const MatrixOrder& o) {
    return MarkedPolynomial(f, f.leading_exponent(o));
}

std::vector<IntegerVector> bounding_vectors(const MarkedPolynomial& g) {
    std::vector<IntegerVector> out;
    out.reserve(g.body().size());
    for (const auto& [m, c] : g.body().terms())
        if (m != g.marked()) out.push_back(g.marked().minus(m));
    return out;
}

namespace {

struct OrderLess {
    const MatrixOrder* order;
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return order->compare(a, b) < 0; }
};

template <class Work>
Polynomial reduce(Work work, std::span<const MarkedPolynomial> G, std::size_t arity, const ReduceOptions& opts,
                  std::size_t* steps) {
    Polynomial rem(arity);
    std::size_t taken = 0;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        const MarkedPolynomial* divisor = nullptr;
        for (const auto& g : G) {
            if (g.marked().divides(top->first)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            rem.add_term(top->first, top->second);
            work.erase(top);
            continue;
        }
        if (++taken > opts.step_cap)
            throw StepCapExceeded("normal form exceeded " + std::to_string(opts.step_cap) + " reduction steps");
        ExponentVector shift = top->first.quotient(divisor->marked());
        Rational factor = top->second / divisor->marked_coefficient();
        for (const auto& [e, a] : divisor->body().terms()) {
            auto [it, inserted] = work.try_emplace(e + shift, 0);
            it->second -= factor * a;
            if (sgn(it->second) == 0) work.erase(it);
        }
    }
    if (steps) *steps += taken;
    return rem;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const MarkedPolynomial> G, const ReduceOptions& opts,
                       std::size_t* steps) {
    for (const auto& g : G) require_same_arity(f.arity(), g.arity(), "normal_form");
    if (opts.order != nullptr && opts.order->is_total()) {
        require_same_arity(f.arity(), opts.order->arity(), "normal_form");
        std::map<ExponentVector, Rational, OrderLess> work(OrderLess{opts.order});
        for (const auto& [m, c] : f.terms()) work.emplace(m, c);
        return reduce(std::move(work), G, f.arity(), opts, steps);
    }
    return reduce(f.terms(), G, f.arity(), opts, steps);
}

}  // namespace gwalk
