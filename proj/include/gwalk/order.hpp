#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwalk/vectors.hpp"

namespace gwalk {

enum class Sign { Negative, Zero, Positive };

/// Rational group order given by integer weight rows, compared lexicographically.
///
/// A square invertible matrix defines a total group order on Q^n. Weight-refined
/// orders carry an extra leading row and are kept only for comparisons; they
/// skip the rank check.
class MatrixOrder {
public:
    MatrixOrder() = default;
    /// Throws InvalidOrder if `check_full_rank` and the rows are not an invertible square matrix.
    explicit MatrixOrder(std::vector<IntegerVector> rows, bool check_full_rank = true);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    const std::vector<IntegerVector>& rows() const noexcept { return rows_; }
    const IntegerVector& row(std::size_t i) const { return rows_.at(i); }

    std::strong_ordering compare(const IntegerVector& u, const IntegerVector& v) const;
    std::strong_ordering compare(const ExponentVector& u, const ExponentVector& v) const;
    Sign sign(const IntegerVector& v) const;

    /// 0 < e_i for every unit vector.
    bool is_term_order() const;
    bool is_full_rank() const;
    /// Rank equals arity, so distinct vectors never compare equal.
    bool is_total() const noexcept { return total_; }

    /// Order comparing by `w` first, then by these rows.
    MatrixOrder weight_refine(const IntegerVector& w) const;
    /// Order built from the first `p` rows only (used by truncated comparisons).
    MatrixOrder truncated(std::size_t p) const;

    friend bool operator==(const MatrixOrder& a, const MatrixOrder& b) { return a.rows_ == b.rows_; }

private:
    std::size_t arity_ = 0;
    std::vector<IntegerVector> rows_;
    bool total_ = false;
    // Machine-word copy of the rows when every entry fits; enables the fast
    // exponent comparison path.
    std::vector<std::vector<std::int64_t>> small_rows_;
};

std::strong_ordering compare(const MatrixOrder& o, const IntegerVector& u, const IntegerVector& v);
Sign sign(const MatrixOrder& o, const IntegerVector& v);
bool is_term_order(const MatrixOrder& o);
MatrixOrder weight_refine(const MatrixOrder& o, const IntegerVector& w);

enum class OrderKind { Lex, DegRevLex, DegLex, KnapsackSource, KnapsackTarget };

/// Standard integer matrices.
///
/// Lex and DegRevLex follow x_1 > x_2 > ... > x_n. The knapsack orders live on
/// n variables (t, x_1, ..., x_{n-1}) and put (-1,0,...,0) resp. (1,0,...,0)
/// first, with ties broken by degree reverse lexicographic order where t is the
/// smallest variable.
MatrixOrder named_order(OrderKind kind, std::size_t n);

/// Parses `lex`, `degrevlex`, `deglex`, `knapsack-source`, `knapsack-target`,
/// `matrix[[..],[..]]` and `weight[w1,...,wn]:<base>` for an n-variable ring.
MatrixOrder parse_order(std::string_view spec, std::size_t n);

}  // namespace gwalk
