#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwalk/groebner.hpp"
#include "gwalk/order.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk {

enum class FacetOrder { Less, Equivalent, Greater };

/// Position of the formal line: before every facet, at one facet (stored as a
/// primitive vector), or past every facet.
class FacetCursor {
public:
    enum class Kind { NegInfinity, Vector, PosInfinity };

    static FacetCursor neg_infinity() { return FacetCursor(Kind::NegInfinity, {}); }
    static FacetCursor pos_infinity() { return FacetCursor(Kind::PosInfinity, {}); }
    static FacetCursor at(const IntegerVector& v) { return FacetCursor(Kind::Vector, v.primitive()); }

    Kind kind() const noexcept { return kind_; }
    bool is_vector() const noexcept { return kind_ == Kind::Vector; }
    /// Only meaningful when is_vector().
    const IntegerVector& vector() const noexcept { return v_; }

    friend bool operator==(const FacetCursor&, const FacetCursor&) = default;

private:
    FacetCursor(Kind k, IntegerVector v) : kind_(k), v_(std::move(v)) {}

    Kind kind_;
    IntegerVector v_;
};

struct WalkOptions {
    /// Comparison depths: rows of the source (p) and target (q) order used by the
    /// facet preorder. 0 means all rows.
    std::size_t p = 0;
    std::size_t q = 0;
    GroebnerOptions groebner;
    /// Check that the input is a marked reduced Gröbner basis over the source order.
    bool validate = true;
    /// Keep the facet ideal basis and the new basis of every step in the trace.
    bool record_bases = false;
    std::size_t max_iterations = 10'000;

    bool truncated(const MatrixOrder& o1, const MatrixOrder& o2) const;
};

struct WalkStep {
    /// Primitive normal of the crossed facet (for the classical walk: of the
    /// first vector attaining the crossing parameter).
    IntegerVector facet;
    /// Crossing parameter on the line; classical walk only.
    std::optional<Rational> t;
    std::size_t initial_forms = 0;
    std::size_t facet_basis_size = 0;
    std::size_t basis_size = 0;
    /// Reduction steps spent by lifting and autoreduction, cumulative.
    std::size_t reduction_steps = 0;
    std::optional<MarkedBasis> facet_basis;
    std::optional<MarkedBasis> basis;
};

struct WalkTrace {
    std::vector<WalkStep> steps;
    std::size_t total_reduction_steps = 0;
    /// Set when a truncated walk needed a final Buchberger pass to reach the target.
    bool completed_by_buchberger = false;
};

struct WalkResult {
    MarkedBasis basis;
    WalkTrace trace;
};

/// Facet preorder: u < v iff the rows of T u v^t precede those of T v u^t under
/// the source order, T being the target order's matrix. `p`, `q` truncate the
/// source and target rows (0 = all).
FacetOrder facet_cmp(const IntegerVector& u, const IntegerVector& v, const MatrixOrder& o1, const MatrixOrder& o2,
                     std::size_t p = 0, std::size_t q = 0);

/// 0 < v under o1 and v < 0 under o2.
bool in_crossing_cone(const IntegerVector& v, const MatrixOrder& o1, const MatrixOrder& o2);

/// Smallest primitive bounding vector of G inside the crossing cone that lies
/// strictly after `w` in the facet preorder; PosInfinity if there is none.
/// In truncated mode, vectors equivalent to a `visited` facet are skipped and
/// vectors equivalent to `w` are admitted.
FacetCursor compute_last_w(const MarkedBasis& G, const FacetCursor& w, const MatrixOrder& o1, const MatrixOrder& o2,
                           const WalkOptions& opts = {}, std::span<const IntegerVector> visited = {});

/// Marked term of every member plus the terms v whose difference u - v is
/// preorder-equivalent to the facet `w`.
std::vector<MarkedPolynomial> facet_initial_forms(const MarkedBasis& G, const IntegerVector& w,
                                                  const MatrixOrder& o1, const MatrixOrder& o2,
                                                  const WalkOptions& opts = {});

/// {f - f^G : f in H}, each marked where f was marked in H.
std::vector<MarkedPolynomial> lift(const MarkedBasis& H, const MarkedBasis& G, const GroebnerOptions& opts = {},
                                   std::size_t* steps = nullptr);

/// Converts the marked reduced basis G over o1 into the reduced basis over o2.
WalkResult generic_walk(const MarkedBasis& G, const MatrixOrder& o1, const MatrixOrder& o2,
                        const WalkOptions& opts = {});

/// Baseline: tracks the segment (1-t) w0 + t t0 with exact rational t.
/// Throws W0NotInCone if w0 is not a nonnegative vector of G's Gröbner cone.
WalkResult classic_walk(const MarkedBasis& G, const MatrixOrder& o1, const MatrixOrder& o2,
                        const std::vector<Rational>& w0, const std::vector<Rational>& t0,
                        const WalkOptions& opts = {});

/// Facet vectors separated by spaces, e.g. `(-2,3) (-1,4) (-1,7)`.
std::string format_facets(const WalkTrace& trace);
/// One line per step with basis sizes and cumulative reduction steps.
std::string format_trace(const WalkTrace& trace);
/// Structured trace: {"steps": [...], "total_reduction_steps": n, ...}.
std::string trace_json(const WalkTrace& trace);

}  // namespace gwalk
