#include "gwalk/io.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "gwalk/errors.hpp"

namespace gwalk {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolyParser {
public:
    PolyParser(const Ring& ring, std::string_view text, std::size_t line, bool allow_mark)
        : ring_(ring), s_(text), line_(line), allow_mark_(allow_mark) {}

    Polynomial parse() {
        Polynomial result(ring_.arity());
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip_ws();
            bool bracketed = false;
            if (peek() == '[') {
                if (!allow_mark_) fail("unexpected '['");
                if (marked_) fail("more than one marked term");
                bracketed = true;
                ++pos_;
            }
            auto [coeff, exps] = parse_term();
            if (bracketed) {
                skip_ws();
                if (peek() != ']') fail("expected ']'");
                ++pos_;
                marked_ = exps;
            }
            result.add_term(exps, coeff * sign);
            first = false;
            skip_ws();
            if (at_end()) break;
        }
        return result;
    }

    const std::optional<ExponentVector>& marked() const { return marked_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

private:
    std::pair<Rational, ExponentVector> parse_term() {
        Rational coeff = 1;
        std::vector<std::int64_t> exps(ring_.arity(), 0);
        parse_factor(coeff, exps);
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                parse_factor(coeff, exps);
            } else if (is_digit(peek()) || is_ident_start(peek())) {
                parse_factor(coeff, exps);
            } else {
                break;
            }
        }
        return {coeff, ExponentVector(std::move(exps))};
    }

    void parse_factor(Rational& coeff, std::vector<std::int64_t>& exps) {
        skip_ws();
        if (is_digit(peek())) {
            BigInt num = parse_natural();
            BigInt den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (!is_digit(peek())) fail("expected a denominator");
                den = parse_natural();
                if (den == 0) fail("zero denominator");
            }
            Rational q(num, den);
            q.canonicalize();
            coeff *= q;
            return;
        }
        if (!is_ident_start(peek())) fail("expected a coefficient or a variable");
        std::size_t start = pos_;
        while (!at_end() && is_ident_char(s_[pos_])) ++pos_;
        std::string ident(s_.substr(start, pos_ - start));
        std::vector<std::size_t> vars = split_identifier(ident, start);
        std::int64_t power = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!is_digit(peek())) fail("expected an exponent");
            BigInt p = parse_natural();
            if (!p.fits_slong_p()) fail("exponent too large");
            power = p.get_si();
        }
        for (std::size_t i = 0; i < vars.size(); ++i) {
            std::int64_t add = i + 1 == vars.size() ? power : 1;
            if (__builtin_add_overflow(exps[vars[i]], add, &exps[vars[i]])) fail("exponent overflow");
        }
    }

    // Splits an identifier into declared variable names, longest match first,
    // so that `xy` reads as x*y when both are variables.
    std::vector<std::size_t> split_identifier(const std::string& ident, std::size_t start) const {
        std::vector<std::size_t> out;
        std::size_t at = 0;
        const auto& vars = ring_.variables();
        while (at < ident.size()) {
            std::size_t best = vars.size();
            std::size_t best_len = 0;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                const auto& name = vars[v];
                if (name.size() > best_len && ident.compare(at, name.size(), name) == 0) {
                    best = v;
                    best_len = name.size();
                }
            }
            if (best == vars.size()) throw ParseError("unknown variable '" + ident + "'", line_, start + 1);
            out.push_back(best);
            at += best_len;
        }
        return out;
    }

    BigInt parse_natural() {
        std::size_t start = pos_;
        while (!at_end() && is_digit(s_[pos_])) ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const Ring& ring_;
    std::string_view s_;
    std::size_t line_;
    bool allow_mark_;
    std::size_t pos_ = 0;
    std::optional<ExponentVector> marked_;
};

void append_term(std::ostringstream& os, const Ring& ring, const Rational& c, const ExponentVector& m, bool first,
                 bool bracket) {
    bool negative = sgn(c) < 0;
    Rational a = negative ? Rational(-c) : c;
    if (first) {
        if (negative) os << '-';
    } else {
        os << (negative ? " - " : " + ");
    }
    if (bracket) os << '[';
    if (m.is_zero()) {
        os << a.get_str();
    } else {
        if (a != 1) os << a.get_str() << '*';
        os << ring.format_monomial(m);
    }
    if (bracket) os << ']';
}

}  // namespace

Ring::Ring(std::vector<std::string> variables) : vars_(std::move(variables)) {
    if (vars_.empty()) throw ParseError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty() || !is_ident_start(v[0])) throw ParseError("invalid variable name '" + v + "'");
        for (char c : v)
            if (!is_ident_char(c)) throw ParseError("invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'");
    }
}

Polynomial Ring::parse(std::string_view text, std::size_t line) const {
    return PolyParser(*this, text, line, false).parse();
}

MarkedPolynomial Ring::parse_marked(std::string_view text, const MatrixOrder* fallback, std::size_t line) const {
    PolyParser parser(*this, text, line, true);
    Polynomial body = parser.parse();
    if (body.is_zero()) throw ParseError("zero polynomial cannot be marked", line, 1);
    if (parser.marked()) {
        if (!body.contains(*parser.marked()))
            throw InvalidMarking("line " + std::to_string(line) + ": marked term cancels in '" + std::string(text) +
                                 "'");
        return MarkedPolynomial(std::move(body), *parser.marked());
    }
    if (fallback == nullptr) throw ParseError("no marked term and no order to derive one", line, 1);
    return mark(body, *fallback);
}

std::string Ring::format_monomial(const ExponentVector& m) const {
    require_same_arity(arity(), m.size(), "format");
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        os << vars_[i];
        if (m[i] != 1) os << '^' << m[i];
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

std::string Ring::format(const Polynomial& f, const MatrixOrder& o) const {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : f.sorted_exponents(o)) {
        append_term(os, *this, f.coefficient(m), m, first, false);
        first = false;
    }
    return os.str();
}

std::string Ring::format(const MarkedPolynomial& g, const MatrixOrder& o, bool bracket_mark) const {
    std::ostringstream os;
    append_term(os, *this, g.marked_coefficient(), g.marked(), true, bracket_mark);
    for (const auto& m : g.body().sorted_exponents(o))
        if (m != g.marked()) append_term(os, *this, g.body().coefficient(m), m, false, false);
    return os.str();
}

std::vector<Rational> parse_rational_vector(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' && c != ']') s += c;
    std::vector<Rational> out;
    std::size_t at = 0;
    while (at <= s.size()) {
        std::size_t comma = s.find(',', at);
        std::string item = s.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
        if (item.empty()) throw ParseError("empty vector entry in '" + std::string(text) + "'");
        Rational q;
        if (q.set_str(item, 10) != 0) throw ParseError("invalid rational '" + item + "'");
        if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + item + "'");
        q.canonicalize();
        out.push_back(q);
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return out;
}

}  // namespace gwalk
