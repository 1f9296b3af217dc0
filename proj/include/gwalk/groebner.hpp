#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gwalk/kernels.hpp"
#include "gwalk/order.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk {

/// A set of marked polynomials, optionally tagged with the order that produced
/// the markings. Reduced bases have monic markings and no marked term dividing
/// any term of another member.
struct MarkedBasis {
    std::vector<MarkedPolynomial> members;
    std::optional<MatrixOrder> order;

    std::size_t size() const noexcept { return members.size(); }
    bool empty() const noexcept { return members.empty(); }
    auto begin() const { return members.begin(); }
    auto end() const { return members.end(); }
    const MarkedPolynomial& operator[](std::size_t i) const { return members[i]; }

    std::vector<Polynomial> bodies() const;
};

struct GroebnerOptions {
    /// Cap on the reduction steps of every single normal form.
    std::size_t step_cap = 1'000'000;
    /// Allow orders that are not term orders. Reductions then rely on the step cap.
    bool group_order = false;
    /// Skip pairs by Buchberger's chain criterion (term orders only).
    bool chain_criterion = true;
    /// Execution of batched reductions (S-pair verification).
    Execution execution = Execution::Parallel;
};

/// S-polynomial of two marked polynomials; the marked terms cancel.
Polynomial s_polynomial(const MarkedPolynomial& f, const MarkedPolynomial& g);

/// Marked reduced Gröbner basis of <gens> over `o`, sorted by ascending marked term.
///
/// Throws EmptyIdeal if every generator is zero, InvalidOrder if `o` is not a
/// term order (unless group_order is set) or not total.
MarkedBasis buchberger(std::span<const Polynomial> gens, const MatrixOrder& o, const GroebnerOptions& opts = {});

/// Drops members whose marked term is divisible by another marked term, reduces
/// every other term modulo the remaining members and makes markings monic.
/// `order`, when given, only steers the reduction strategy.
MarkedBasis autoreduce(std::vector<MarkedPolynomial> B, const GroebnerOptions& opts = {},
                       const MatrixOrder* order = nullptr);

/// Union of the bounding vectors of all members.
std::vector<IntegerVector> bounding_vectors(const MarkedBasis& G);

/// <w, v> >= 0 for every bounding vector v of G, and w >= 0 if `require_nonneg`.
bool cone_contains(const MarkedBasis& G, const IntegerVector& w, bool require_nonneg);

/// Every marked term is the leading term of its polynomial under `o`.
bool markings_agree(const MarkedBasis& B, const MatrixOrder& o);

/// Monic markings and no marked term divides a term of another member.
bool is_reduced(const MarkedBasis& B);

/// First pair (i, j) whose S-polynomial does not reduce to zero modulo B.
std::optional<std::pair<std::size_t, std::size_t>> failing_s_pair(const MarkedBasis& B, const MatrixOrder& o,
                                                                  const GroebnerOptions& opts = {});

/// Markings agree with `o` and every S-polynomial reduces to zero.
bool is_groebner_basis(const MarkedBasis& B, const MatrixOrder& o, const GroebnerOptions& opts = {});

/// Re-marks every member by its leading term under `o`.
MarkedBasis remark(const MarkedBasis& B, const MatrixOrder& o);

/// Sorts members by ascending marked term under `o` and tags the basis with it.
void sort_basis(MarkedBasis& B, const MatrixOrder& o);

/// Set equality of (marking, body) pairs, ignoring member order.
bool same_marked_set(const MarkedBasis& a, const MarkedBasis& b);

using Describe = std::function<std::string(const MarkedPolynomial&)>;

/// Throws InvalidInputBasis unless B is a marked reduced Gröbner basis over `o`.
/// `describe` renders members for the error message.
void validate_reduced_basis(const MarkedBasis& B, const MatrixOrder& o, const GroebnerOptions& opts = {},
                            const Describe& describe = {});

}  // namespace gwalk
