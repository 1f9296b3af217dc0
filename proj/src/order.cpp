#include "gwalk/order.hpp"

#include <cctype>
#include <limits>

#include "gwalk/errors.hpp"

namespace gwalk {

namespace {

std::size_t rank_of(const std::vector<IntegerVector>& rows, std::size_t n) {
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = r[j];
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (sgn(m[i][col]) == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::strong_ordering from_int(int c) {
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

MatrixOrder::MatrixOrder(std::vector<IntegerVector> rows, bool check_full_rank) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InvalidOrder("order matrix has no rows");
    arity_ = rows_.front().size();
    if (arity_ == 0) throw InvalidOrder("order matrix has no columns");
    for (const auto& r : rows_)
        if (r.size() != arity_) throw InvalidOrder("order matrix rows have different lengths");
    total_ = rank_of(rows_, arity_) == arity_;
    if (check_full_rank && !(total_ && rows_.size() == arity_))
        throw InvalidOrder("order matrix is not square and invertible");

    bool small = true;
    for (const auto& r : rows_)
        for (std::size_t j = 0; j < arity_ && small; ++j) small = r[j].fits_slong_p();
    if (small) {
        small_rows_.reserve(rows_.size());
        for (const auto& r : rows_) {
            std::vector<std::int64_t> s(arity_);
            for (std::size_t j = 0; j < arity_; ++j) s[j] = r[j].get_si();
            small_rows_.push_back(std::move(s));
        }
    }
}

bool MatrixOrder::is_full_rank() const {
    return rows_.size() == arity_ && total_;
}

std::strong_ordering MatrixOrder::compare(const IntegerVector& u, const IntegerVector& v) const {
    require_same_arity(arity_, u.size(), "order compare");
    require_same_arity(arity_, v.size(), "order compare");
    for (const auto& r : rows_) {
        int c = cmp(dot(r, u), dot(r, v));
        if (c != 0) return from_int(c);
    }
    return std::strong_ordering::equal;
}

std::strong_ordering MatrixOrder::compare(const ExponentVector& u, const ExponentVector& v) const {
    require_same_arity(arity_, u.size(), "order compare");
    require_same_arity(arity_, v.size(), "order compare");
    if (small_rows_.empty()) return compare(IntegerVector(u), IntegerVector(v));
    for (const auto& r : small_rows_) {
        __int128 acc = 0;
        bool overflow = false;
        for (std::size_t j = 0; j < arity_; ++j) {
            __int128 d = static_cast<__int128>(u[j]) - static_cast<__int128>(v[j]);
            overflow |= __builtin_add_overflow(acc, d * r[j], &acc);
        }
        if (overflow) return compare(IntegerVector(u), IntegerVector(v));
        if (acc != 0) return acc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Sign MatrixOrder::sign(const IntegerVector& v) const {
    require_same_arity(arity_, v.size(), "order sign");
    for (const auto& r : rows_) {
        int s = sgn(dot(r, v));
        if (s > 0) return Sign::Positive;
        if (s < 0) return Sign::Negative;
    }
    return Sign::Zero;
}

bool MatrixOrder::is_term_order() const {
    for (std::size_t i = 0; i < arity_; ++i) {
        IntegerVector e(arity_);
        e[i] = 1;
        if (sign(e) != Sign::Positive) return false;
    }
    return true;
}

MatrixOrder MatrixOrder::weight_refine(const IntegerVector& w) const {
    require_same_arity(arity_, w.size(), "weight_refine");
    std::vector<IntegerVector> rows;
    rows.reserve(rows_.size() + 1);
    rows.push_back(w);
    rows.insert(rows.end(), rows_.begin(), rows_.end());
    return MatrixOrder(std::move(rows), false);
}

MatrixOrder MatrixOrder::truncated(std::size_t p) const {
    if (p == 0 || p > rows_.size()) throw InvalidOrder("truncation depth out of range");
    return MatrixOrder(std::vector<IntegerVector>(rows_.begin(), rows_.begin() + p), false);
}

std::strong_ordering compare(const MatrixOrder& o, const IntegerVector& u, const IntegerVector& v) {
    return o.compare(u, v);
}

Sign sign(const MatrixOrder& o, const IntegerVector& v) { return o.sign(v); }

bool is_term_order(const MatrixOrder& o) { return o.is_term_order(); }

MatrixOrder weight_refine(const MatrixOrder& o, const IntegerVector& w) { return o.weight_refine(w); }

MatrixOrder named_order(OrderKind kind, std::size_t n) {
    if (n == 0) throw InvalidOrder("order needs at least one variable");
    std::vector<IntegerVector> rows;
    auto unit = [n](std::size_t i, long value) {
        IntegerVector e(n);
        e[i] = value;
        return e;
    };
    IntegerVector ones(n);
    for (std::size_t i = 0; i < n; ++i) ones[i] = 1;

    switch (kind) {
        case OrderKind::Lex:
            for (std::size_t i = 0; i < n; ++i) rows.push_back(unit(i, 1));
            break;
        case OrderKind::DegLex:
            rows.push_back(ones);
            for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(unit(i, 1));
            break;
        case OrderKind::DegRevLex:
            rows.push_back(ones);
            for (std::size_t i = n - 1; i >= 1; --i) rows.push_back(unit(i, -1));
            break;
        case OrderKind::KnapsackSource:
        case OrderKind::KnapsackTarget: {
            if (n < 2) throw InvalidOrder("knapsack orders need t and at least one x variable");
            rows.push_back(unit(0, kind == OrderKind::KnapsackSource ? -1 : 1));
            rows.push_back(ones);
            // t is the smallest variable, so revlex looks at t first; the leading
            // row already fixes t, leaving x_1, ..., x_{n-2} (x_{n-1} follows from the degree).
            for (std::size_t i = 1; i + 1 < n; ++i) rows.push_back(unit(i, -1));
            break;
        }
    }
    return MatrixOrder(std::move(rows));
}

namespace {

class SpecParser {
public:
    SpecParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

    MatrixOrder parse() {
        auto o = parse_order();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return o;
    }

private:
    MatrixOrder parse_order() {
        skip_ws();
        std::string word;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                    s_[pos_] == '_'))
            word += s_[pos_++];
        if (word == "lex") return named_order(OrderKind::Lex, n_);
        if (word == "degrevlex" || word == "grevlex") return named_order(OrderKind::DegRevLex, n_);
        if (word == "deglex" || word == "grlex") return named_order(OrderKind::DegLex, n_);
        if (word == "knapsack-source") return named_order(OrderKind::KnapsackSource, n_);
        if (word == "knapsack-target") return named_order(OrderKind::KnapsackTarget, n_);
        if (word == "matrix") {
            expect('[');
            std::vector<IntegerVector> rows;
            rows.push_back(parse_vector());
            while (peek() == ',') {
                ++pos_;
                rows.push_back(parse_vector());
            }
            expect(']');
            for (const auto& r : rows)
                if (r.size() != n_) fail("matrix row length does not match the ring");
            return MatrixOrder(std::move(rows));
        }
        if (word == "weight") {
            IntegerVector w = parse_vector();
            if (w.size() != n_) fail("weight length does not match the ring");
            expect(':');
            return parse_order().weight_refine(w);
        }
        fail(word.empty() ? "expected an order" : "unknown order '" + word + "'");
    }

    IntegerVector parse_vector() {
        expect('[');
        std::vector<BigInt> entries;
        entries.push_back(parse_int());
        while (peek() == ',') {
            ++pos_;
            entries.push_back(parse_int());
        }
        expect(']');
        return IntegerVector(std::move(entries));
    }

    BigInt parse_int() {
        skip_ws();
        std::string digits;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) digits += s_[pos_++];
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
        if (digits[0] == '+') digits.erase(0, 1);
        return BigInt(digits);
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("order spec: " + what, 1, pos_ + 1);
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

MatrixOrder parse_order(std::string_view spec, std::size_t n) { return SpecParser(spec, n).parse(); }

}  // namespace gwalk
