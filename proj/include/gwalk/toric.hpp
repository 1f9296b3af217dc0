#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gwalk/groebner.hpp"
#include "gwalk/io.hpp"
#include "gwalk/order.hpp"
#include "gwalk/walk.hpp"

namespace gwalk {

/// Coefficients of x_1 a_1 + ... + x_n a_n = b.
class KnapsackInstance {
public:
    /// Throws Error unless n >= 1 and every a_i >= 1.
    explicit KnapsackInstance(std::vector<std::int64_t> coefficients);

    std::size_t size() const noexcept { return a_.size(); }
    const std::vector<std::int64_t>& coefficients() const noexcept { return a_; }
    std::int64_t max_coefficient() const;

    /// Ring Q[t, x1, ..., xn]; t is variable 0.
    Ring ring() const;

    /// One line of whitespace-separated positive integers.
    static KnapsackInstance parse(const std::string& line);

private:
    std::vector<std::int64_t> a_;
};

/// Either a solution (t, x_1, ..., x_n) of t + sum a_i x_i = b minimizing t,
/// which answers the knapsack equation exactly when t = 0.
struct FeasibilityResult {
    std::int64_t b = 0;
    std::vector<std::int64_t> exponents;  // (t, x_1, ..., x_n)

    bool feasible() const { return !exponents.empty() && exponents.front() == 0; }
    std::int64_t t() const { return exponents.front(); }
    /// `FEASIBLE x1 ... xn` or `INFEASIBLE t*`.
    std::string to_line() const;
};

/// The binomials x_i - t^{a_i}.
std::vector<Polynomial> knapsack_ideal(const KnapsackInstance& inst);

/// Source order (first row (-1,0,...,0)) and target order (first row (1,0,...,0)),
/// both tie-broken by degree reverse lexicographic order with t < x_1 < ... < x_n.
std::pair<MatrixOrder, MatrixOrder> sigma_tau_orders(std::size_t n);

/// The generators marked at x_i; a Gröbner basis over the source order.
MarkedBasis source_basis(const KnapsackInstance& inst);

/// Walks from the source basis to the target order. Runs in group-order mode.
WalkResult compute_test_set(const KnapsackInstance& inst, const WalkOptions& opts = {});

/// Normal form of t^b modulo the test set. Throws NonMonomialNormalForm if the
/// remainder is not a single term.
FeasibilityResult solve_feasibility(const MarkedBasis& test_set, const KnapsackInstance& inst, std::int64_t b,
                                    const GroebnerOptions& opts = {});

/// Answers every query in `bs`; the queries are reduced through the batched kernel.
std::vector<FeasibilityResult> solve_feasibility_batch(const MarkedBasis& test_set, const KnapsackInstance& inst,
                                                       std::span<const std::int64_t> bs,
                                                       const GroebnerOptions& opts = {});

}  // namespace gwalk
