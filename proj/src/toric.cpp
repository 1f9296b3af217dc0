#include "gwalk/toric.hpp"

#include <algorithm>
#include <sstream>

#include "gwalk/errors.hpp"

namespace gwalk {

KnapsackInstance::KnapsackInstance(std::vector<std::int64_t> coefficients) : a_(std::move(coefficients)) {
    if (a_.empty()) throw Error("knapsack instance needs at least one coefficient");
    for (auto a : a_)
        if (a < 1) throw Error("knapsack coefficients must be positive");
}

std::int64_t KnapsackInstance::max_coefficient() const { return *std::max_element(a_.begin(), a_.end()); }

Ring KnapsackInstance::ring() const {
    std::vector<std::string> names{"t"};
    for (std::size_t i = 1; i <= a_.size(); ++i) names.push_back("x" + std::to_string(i));
    return Ring(std::move(names));
}

KnapsackInstance KnapsackInstance::parse(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::int64_t> a;
    std::string token;
    while (is >> token) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value < 1) throw ParseError("expected a positive integer, got '" + token + "'");
        a.push_back(value);
    }
    if (a.empty()) throw ParseError("empty knapsack instance");
    return KnapsackInstance(std::move(a));
}

std::string FeasibilityResult::to_line() const {
    std::ostringstream os;
    if (feasible()) {
        os << "FEASIBLE";
        for (std::size_t i = 1; i < exponents.size(); ++i) os << ' ' << exponents[i];
    } else {
        os << "INFEASIBLE " << t();
    }
    return os.str();
}

std::vector<Polynomial> knapsack_ideal(const KnapsackInstance& inst) {
    const std::size_t n = inst.size() + 1;
    std::vector<Polynomial> gens;
    gens.reserve(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
        Polynomial f = Polynomial::monomial(ExponentVector::unit(n, i + 1));
        std::vector<std::int64_t> t_power(n, 0);
        t_power[0] = inst.coefficients()[i];
        f.add_term(ExponentVector(std::move(t_power)), -1);
        gens.push_back(std::move(f));
    }
    return gens;
}

std::pair<MatrixOrder, MatrixOrder> sigma_tau_orders(std::size_t n) {
    if (n < 1) throw Error("knapsack orders need n >= 1");
    return {named_order(OrderKind::KnapsackSource, n + 1), named_order(OrderKind::KnapsackTarget, n + 1)};
}

MarkedBasis source_basis(const KnapsackInstance& inst) {
    const std::size_t n = inst.size() + 1;
    MarkedBasis G{{}, sigma_tau_orders(inst.size()).first};
    for (auto& f : knapsack_ideal(inst)) {
        // Generators may repeat when coefficients do; x_i stays distinct.
        G.members.emplace_back(std::move(f), ExponentVector::unit(n, G.members.size() + 1));
    }
    return G;
}

WalkResult compute_test_set(const KnapsackInstance& inst, const WalkOptions& opts) {
    auto [source, target] = sigma_tau_orders(inst.size());
    WalkOptions o = opts;
    o.groebner.group_order = true;
    return generic_walk(source_basis(inst), source, target, o);
}

namespace {

FeasibilityResult to_result(const Polynomial& nf, std::int64_t b) {
    if (nf.size() != 1) throw NonMonomialNormalForm("normal form of t^" + std::to_string(b) + " has " +
                                                    std::to_string(nf.size()) + " terms");
    FeasibilityResult r;
    r.b = b;
    r.exponents = nf.terms().begin()->first.entries();
    return r;
}

Polynomial t_power(std::size_t n, std::int64_t b) {
    if (b < 0) throw Error("right-hand side must be non-negative");
    std::vector<std::int64_t> e(n, 0);
    e[0] = b;
    return Polynomial::monomial(ExponentVector(std::move(e)));
}

}  // namespace

FeasibilityResult solve_feasibility(const MarkedBasis& test_set, const KnapsackInstance& inst, std::int64_t b,
                                    const GroebnerOptions& opts) {
    const std::size_t n = inst.size() + 1;
    const MatrixOrder target = sigma_tau_orders(inst.size()).second;
    const ReduceOptions reduce{opts.step_cap, &target};
    return to_result(normal_form(t_power(n, b), test_set.members, reduce), b);
}

std::vector<FeasibilityResult> solve_feasibility_batch(const MarkedBasis& test_set, const KnapsackInstance& inst,
                                                       std::span<const std::int64_t> bs,
                                                       const GroebnerOptions& opts) {
    const std::size_t n = inst.size() + 1;
    const MatrixOrder target = sigma_tau_orders(inst.size()).second;
    std::vector<Polynomial> queries;
    queries.reserve(bs.size());
    for (auto b : bs) queries.push_back(t_power(n, b));
    auto nfs = normal_forms(queries, test_set.members, ReduceOptions{opts.step_cap, &target}, opts.execution);
    std::vector<FeasibilityResult> out;
    out.reserve(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) out.push_back(to_result(nfs[i], bs[i]));
    return out;
}

}  // namespace gwalk
