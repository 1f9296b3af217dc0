#include "gwalk/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gwalk/errors.hpp"

namespace gwalk {

std::vector<Polynomial> MarkedBasis::bodies() const {
    std::vector<Polynomial> out;
    out.reserve(members.size());
    for (const auto& g : members) out.push_back(g.body());
    return out;
}

Polynomial s_polynomial(const MarkedPolynomial& f, const MarkedPolynomial& g) {
    require_same_arity(f.arity(), g.arity(), "s_polynomial");
    ExponentVector l = lcm(f.marked(), g.marked());
    Polynomial a = f.body().multiply_by_term(1 / f.marked_coefficient(), l.quotient(f.marked()));
    Polynomial b = g.body().multiply_by_term(1 / g.marked_coefficient(), l.quotient(g.marked()));
    return a - b;
}

namespace {

struct Pair {
    std::size_t i;
    std::size_t j;
    ExponentVector lcm;
};

// Integer copy of a basis member, scaled to coprime integer coefficients.
struct IntMember {
    ExponentVector lead;
    BigInt lead_coeff;
    std::vector<std::pair<ExponentVector, BigInt>> terms;
};

IntMember primitive(const MarkedPolynomial& g) {
    BigInt den = 1, num = 0;
    for (const auto& [m, c] : g.body().terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    IntMember out{g.marked(), 0, {}};
    for (const auto& [m, c] : g.body().terms()) {
        BigInt v = c.get_num() * (den / c.get_den()) / num;
        if (m == g.marked()) out.lead_coeff = v;
        out.terms.emplace_back(m, std::move(v));
    }
    return out;
}

struct OrderLess {
    const MatrixOrder* order;
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return order->compare(a, b) < 0; }
};

// Fraction-free full reduction. The result is the normal form up to a nonzero scalar.
Polynomial reduce_scaled(const Polynomial& f, const std::vector<IntMember>& G, const std::vector<bool>& use,
                         const MatrixOrder& o, std::size_t cap) {
    BigInt den = 1;
    for (const auto& [m, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::map<ExponentVector, BigInt, OrderLess> work(OrderLess{&o});
    for (const auto& [m, c] : f.terms()) work.emplace(m, c.get_num() * (den / c.get_den()));
    std::vector<std::pair<ExponentVector, BigInt>> rem;

    auto shrink = [&] {
        BigInt g = 0;
        for (const auto& [m, c] : work) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        for (const auto& [m, c] : rem) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g <= 1) return;
        for (auto& [m, c] : work) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (auto& [m, c] : rem) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    };

    std::size_t taken = 0;
    BigInt d, a, b;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        const IntMember* divisor = nullptr;
        for (std::size_t k = 0; k < G.size() && !divisor; ++k)
            if (use[k] && G[k].lead.divides(top->first)) divisor = &G[k];
        if (!divisor) {
            rem.emplace_back(top->first, std::move(top->second));
            work.erase(top);
            continue;
        }
        if (++taken > cap) throw StepCapExceeded("normal form exceeded " + std::to_string(cap) + " reduction steps");
        mpz_gcd(d.get_mpz_t(), top->second.get_mpz_t(), divisor->lead_coeff.get_mpz_t());
        a = divisor->lead_coeff / d;
        b = top->second / d;
        ExponentVector shift = top->first.quotient(divisor->lead);
        if (a != 1) {
            for (auto& [m, c] : work) c *= a;
            for (auto& [m, c] : rem) c *= a;
        }
        for (const auto& [e, c] : divisor->terms) {
            auto [it, inserted] = work.try_emplace(e + shift, 0);
            it->second -= b * c;
            if (sgn(it->second) == 0) work.erase(it);
        }
        if (taken % 8 == 0) shrink();
    }
    shrink();
    Polynomial out(f.arity());
    for (const auto& [m, c] : rem) out.add_term(m, Rational(c));
    return out;
}

void require_usable(const MatrixOrder& o, const GroebnerOptions& opts) {
    if (!o.is_total()) throw InvalidOrder("order does not separate monomials");
    if (!opts.group_order && !o.is_term_order())
        throw InvalidOrder("not a term order; group-order mode must be requested explicitly");
}

std::string describe_member(const MarkedBasis& B, std::size_t i, const Describe& describe) {
    if (describe) return "'" + describe(B.members[i]) + "'";
    return "member " + std::to_string(i) + " (marked " + IntegerVector(B.members[i].marked()).to_string() + ")";
}

}  // namespace

MarkedBasis buchberger(std::span<const Polynomial> gens, const MatrixOrder& o, const GroebnerOptions& opts) {
    require_usable(o, opts);
    std::vector<MarkedPolynomial> basis;
    for (const auto& f : gens) {
        require_same_arity(o.arity(), f.arity(), "buchberger");
        if (!f.is_zero()) basis.push_back(mark(f, o).monic());
    }
    if (basis.empty()) throw EmptyIdeal("ideal has no nonzero generator");

    std::vector<bool> active(basis.size(), true);
    std::vector<IntMember> ints;
    for (const auto& g : basis) ints.push_back(primitive(g));
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> open;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!active[i]) continue;
            pending.push_back({i, j, lcm(basis[i].marked(), basis[j].marked())});
            open.insert({i, j});
        }
    };
    // Members whose marked term is a multiple of a newer one drop out of future pairs and reductions.
    auto retire_multiples = [&](std::size_t j) {
        for (std::size_t k = 0; k < j; ++k)
            if (active[k] && basis[j].marked().divides(basis[k].marked())) active[k] = false;
    };
    // Keeps the tails of older members reduced against a newcomer; this curbs coefficient growth.
    auto tidy_tails = [&](std::size_t j) {
        const auto& lead = basis[j].marked();
        for (std::size_t k = 0; k < j; ++k) {
            if (!active[k]) continue;
            const auto& g = basis[k];
            bool touched = false;
            for (const auto& [m, c] : g.body().terms())
                if (m != g.marked() && lead.divides(m)) touched = true;
            if (!touched) continue;
            // The marked term is irreducible by the other active members, so it survives.
            active[k] = false;
            Polynomial body = reduce_scaled(g.body(), ints, active, o, opts.step_cap);
            active[k] = true;
            basis[k] = MarkedPolynomial(std::move(body), g.marked()).monic();
            ints[k] = primitive(basis[k]);
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t j = 0; j < basis.size() && active[k]; ++j)
            if (j != k && active[j] && basis[j].marked().divides(basis[k].marked())) active[k] = false;

    // Normal strategy: smallest lcm under o. Degree-first selection blows up coefficients under lex.
    auto before = [&o](const Pair& a, const Pair& b) {
        auto c = o.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    auto is_open = [&open](std::size_t a, std::size_t b) {
        return open.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), before);
        Pair p = std::move(*it);
        pending.erase(it);
        open.erase({p.i, p.j});

        if (coprime(basis[p.i].marked(), basis[p.j].marked())) continue;
        // Retired members may lack pairs with later ones, so the criterion is only sound among active members.
        if (opts.chain_criterion && o.is_term_order() && active[p.i] && active[p.j]) {
            bool chained = false;
            for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
                if (k == p.i || k == p.j || !active[k]) continue;
                chained = basis[k].marked().divides(p.lcm) && !is_open(p.i, k) && !is_open(p.j, k);
            }
            if (chained) continue;
        }

        Polynomial r = reduce_scaled(s_polynomial(basis[p.i], basis[p.j]), ints, active, o, opts.step_cap);
        if (r.is_zero()) continue;
        basis.push_back(mark(r, o).monic());
        ints.push_back(primitive(basis.back()));
        active.push_back(true);
        add_pairs(basis.size() - 1);
        retire_multiples(basis.size() - 1);
        tidy_tails(basis.size() - 1);
    }

    std::vector<MarkedPolynomial> live;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (active[k]) live.push_back(std::move(basis[k]));
    basis = std::move(live);
    MarkedBasis reduced = autoreduce(std::move(basis), opts, &o);
    sort_basis(reduced, o);
    return reduced;
}

MarkedBasis autoreduce(std::vector<MarkedPolynomial> B, const GroebnerOptions& opts, const MatrixOrder* order) {
    std::vector<MarkedPolynomial> kept;
    for (std::size_t i = 0; i < B.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < B.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& mi = B[i].marked();
            const auto& mj = B[j].marked();
            redundant = mj.divides(mi) && (mj != mi || j < i);
        }
        if (!redundant) kept.push_back(B[i].monic());
    }

    const ReduceOptions reduce{opts.step_cap, order};
    std::vector<MarkedPolynomial> others;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        others.clear();
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        const auto& u = kept[i].marked();
        Polynomial tail = kept[i].body();
        tail.add_term(u, -kept[i].marked_coefficient());
        Polynomial body = normal_form(tail, others, reduce);
        body.add_term(u, kept[i].marked_coefficient());
        if (!body.contains(u)) throw InvalidMarking("marked term cancelled during autoreduction");
        kept[i] = MarkedPolynomial(std::move(body), u).monic();
    }
    return MarkedBasis{std::move(kept), std::nullopt};
}

std::vector<IntegerVector> bounding_vectors(const MarkedBasis& G) {
    std::vector<IntegerVector> out;
    for (const auto& g : G) {
        auto v = bounding_vectors(g);
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    return out;
}

bool cone_contains(const MarkedBasis& G, const IntegerVector& w, bool require_nonneg) {
    if (require_nonneg)
        for (const auto& x : w.entries())
            if (sgn(x) < 0) return false;
    for (const auto& g : G) {
        require_same_arity(g.arity(), w.size(), "cone_contains");
        for (const auto& v : bounding_vectors(g))
            if (sgn(dot(w, v)) < 0) return false;
    }
    return true;
}

bool markings_agree(const MarkedBasis& B, const MatrixOrder& o) {
    return std::all_of(B.begin(), B.end(),
                       [&o](const MarkedPolynomial& g) { return g.body().leading_exponent(o) == g.marked(); });
}

bool is_reduced(const MarkedBasis& B) {
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (B[i].marked_coefficient() != 1) return false;
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (i == j) continue;
            for (const auto& [m, c] : B[j].body().terms())
                if (B[i].marked().divides(m)) return false;
        }
    }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> failing_s_pair(const MarkedBasis& B, const MatrixOrder& o,
                                                                  const GroebnerOptions& opts) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Polynomial> spolys;
    for (std::size_t j = 0; j < B.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            pairs.emplace_back(i, j);
            spolys.push_back(s_polynomial(B[i], B[j]));
        }
    }
    const ReduceOptions reduce{opts.step_cap, o.is_total() ? &o : nullptr};
    auto remainders = normal_forms(spolys, B.members, reduce, opts.execution);
    for (std::size_t k = 0; k < remainders.size(); ++k)
        if (!remainders[k].is_zero()) return pairs[k];
    return std::nullopt;
}

bool is_groebner_basis(const MarkedBasis& B, const MatrixOrder& o, const GroebnerOptions& opts) {
    if (!markings_agree(B, o)) return false;
    return !failing_s_pair(B, o, opts).has_value();
}

MarkedBasis remark(const MarkedBasis& B, const MatrixOrder& o) {
    MarkedBasis out{{}, o};
    out.members.reserve(B.size());
    for (const auto& g : B) out.members.push_back(mark(g.body(), o));
    return out;
}

void sort_basis(MarkedBasis& B, const MatrixOrder& o) {
    std::sort(B.members.begin(), B.members.end(), [&o](const MarkedPolynomial& a, const MarkedPolynomial& b) {
        return o.compare(a.marked(), b.marked()) < 0;
    });
    B.order = o;
}

bool same_marked_set(const MarkedBasis& a, const MarkedBasis& b) {
    if (a.size() != b.size()) return false;
    auto key = [](const MarkedPolynomial& g) { return std::make_pair(g.marked(), g.body().terms()); };
    std::vector<decltype(key(a[0]))> ka, kb;
    for (const auto& g : a) ka.push_back(key(g));
    for (const auto& g : b) kb.push_back(key(g));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

void validate_reduced_basis(const MarkedBasis& B, const MatrixOrder& o, const GroebnerOptions& opts,
                            const Describe& describe) {
    if (B.empty()) throw InvalidInputBasis("input basis is empty");
    for (std::size_t i = 0; i < B.size(); ++i) {
        require_same_arity(o.arity(), B[i].arity(), "validate");
        if (B[i].body().leading_exponent(o) != B[i].marked())
            throw InvalidInputBasis("marking of " + describe_member(B, i, describe) +
                                    " is not its leading term under the source order");
        if (B[i].marked_coefficient() != 1)
            throw InvalidInputBasis("marked coefficient of " + describe_member(B, i, describe) + " is not 1");
    }
    for (std::size_t i = 0; i < B.size(); ++i) {
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (i == j) continue;
            for (const auto& [m, c] : B[j].body().terms()) {
                if (B[i].marked().divides(m))
                    throw InvalidInputBasis("basis is not reduced: marked term of " + describe_member(B, i, describe) +
                                            " divides a term of " + describe_member(B, j, describe));
            }
        }
    }
    if (auto bad = failing_s_pair(B, o, opts)) {
        throw InvalidInputBasis("not a Gröbner basis: S-pair of " + describe_member(B, bad->first, describe) +
                                " and " + describe_member(B, bad->second, describe) + " does not reduce to zero");
    }
}

}  // namespace gwalk
