#include "gwalk/walk.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gwalk/errors.hpp"

namespace gwalk {

namespace {

std::size_t depth_or_full(std::size_t d, const MatrixOrder& o) {
    if (d > o.row_count()) throw InvalidOrder("comparison depth exceeds the order's rows");
    return d == 0 ? o.row_count() : d;
}

void require_walk_orders(const MatrixOrder& o1, const MatrixOrder& o2) {
    require_same_arity(o1.arity(), o2.arity(), "walk orders");
    if (!o1.is_full_rank()) throw InvalidOrder("source order matrix is not invertible");
    if (!o2.is_full_rank()) throw InvalidOrder("target order matrix is not invertible");
}

void require_walk_input(const MarkedBasis& G, const MatrixOrder& o1, const MatrixOrder& o2,
                        const WalkOptions& opts) {
    if (G.empty()) throw InvalidInputBasis("input basis is empty");
    for (const auto& g : G) require_same_arity(o1.arity(), g.arity(), "walk input");
    if (!opts.groebner.group_order) {
        if (!o1.is_term_order()) throw InvalidOrder("source order is not a term order; use group-order mode");
        if (!o2.is_term_order()) throw InvalidOrder("target order is not a term order; use group-order mode");
    }
    if (opts.validate) validate_reduced_basis(G, o1, opts.groebner);
}

WalkStep make_step(IntegerVector facet, std::size_t forms, const MarkedBasis& H, const MarkedBasis& G,
                   std::size_t steps, bool record) {
    WalkStep s;
    s.facet = std::move(facet);
    s.initial_forms = forms;
    s.facet_basis_size = H.size();
    s.basis_size = G.size();
    s.reduction_steps = steps;
    if (record) {
        s.facet_basis = H;
        s.basis = G;
    }
    return s;
}

std::vector<Polynomial> bodies_of(const std::vector<MarkedPolynomial>& forms) {
    std::vector<Polynomial> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(f.body());
    return out;
}

bool merges_rays(const MarkedBasis& G, const IntegerVector& w, const MatrixOrder& o1, const MatrixOrder& o2,
                 const WalkOptions& opts) {
    for (const auto& v : bounding_vectors(G)) {
        if (!in_crossing_cone(v, o1, o2)) continue;
        if (facet_cmp(v, w, o1, o2, opts.p, opts.q) == FacetOrder::Equivalent &&
            facet_cmp(v, w, o1, o2, 0, 0) != FacetOrder::Equivalent)
            return true;
    }
    return false;
}

}  // namespace

bool WalkOptions::truncated(const MatrixOrder& o1, const MatrixOrder& o2) const {
    return (p != 0 && p < o1.row_count()) || (q != 0 && q < o2.row_count());
}

FacetOrder facet_cmp(const IntegerVector& u, const IntegerVector& v, const MatrixOrder& o1, const MatrixOrder& o2,
                     std::size_t p, std::size_t q) {
    require_same_arity(u.size(), v.size(), "facet_cmp");
    require_same_arity(o1.arity(), u.size(), "facet_cmp");
    require_same_arity(o2.arity(), u.size(), "facet_cmp");
    const std::size_t rows1 = depth_or_full(p, o1);
    const std::size_t rows2 = depth_or_full(q, o2);

    std::vector<BigInt> wu(rows1), wv(rows1);
    for (std::size_t j = 0; j < rows1; ++j) {
        wu[j] = dot(o1.row(j), u);
        wv[j] = dot(o1.row(j), v);
    }
    BigInt lhs, rhs;
    for (std::size_t i = 0; i < rows2; ++i) {
        const BigInt tu = dot(o2.row(i), u);
        const BigInt tv = dot(o2.row(i), v);
        // Row i compares <tau_i,u> v against <tau_i,v> u under the source order.
        for (std::size_t j = 0; j < rows1; ++j) {
            lhs = tu * wv[j];
            rhs = tv * wu[j];
            int c = cmp(lhs, rhs);
            if (c != 0) return c < 0 ? FacetOrder::Less : FacetOrder::Greater;
        }
    }
    return FacetOrder::Equivalent;
}

bool in_crossing_cone(const IntegerVector& v, const MatrixOrder& o1, const MatrixOrder& o2) {
    return o1.sign(v) == Sign::Positive && o2.sign(v) == Sign::Negative;
}

FacetCursor compute_last_w(const MarkedBasis& G, const FacetCursor& w, const MatrixOrder& o1, const MatrixOrder& o2,
                           const WalkOptions& opts, std::span<const IntegerVector> visited) {
    if (G.empty()) throw InvalidInputBasis("compute_last_w on an empty basis");
    if (w.kind() == FacetCursor::Kind::PosInfinity) return w;
    const bool truncated = opts.truncated(o1, o2);
    std::optional<IntegerVector> best;
    for (const auto& raw : bounding_vectors(G)) {
        if (!in_crossing_cone(raw, o1, o2)) continue;
        IntegerVector v = raw.primitive();
        if (w.is_vector()) {
            FacetOrder c = facet_cmp(w.vector(), v, o1, o2, opts.p, opts.q);
            if (truncated ? c == FacetOrder::Greater : c != FacetOrder::Less) continue;
        }
        if (truncated && std::any_of(visited.begin(), visited.end(), [&](const IntegerVector& seen) {
                return facet_cmp(seen, v, o1, o2, opts.p, opts.q) == FacetOrder::Equivalent;
            }))
            continue;
        if (!best || facet_cmp(v, *best, o1, o2, opts.p, opts.q) == FacetOrder::Less) best = std::move(v);
    }
    return best ? FacetCursor::at(*best) : FacetCursor::pos_infinity();
}

std::vector<MarkedPolynomial> facet_initial_forms(const MarkedBasis& G, const IntegerVector& w,
                                                  const MatrixOrder& o1, const MatrixOrder& o2,
                                                  const WalkOptions& opts) {
    std::vector<MarkedPolynomial> out;
    out.reserve(G.size());
    for (const auto& g : G) {
        const ExponentVector& u = g.marked();
        Polynomial form(g.arity());
        for (const auto& [m, c] : g.body().terms()) {
            if (m == u) {
                form.add_term(m, c);
                continue;
            }
            IntegerVector d = u.minus(m);
            if (in_crossing_cone(d, o1, o2) && facet_cmp(d, w, o1, o2, opts.p, opts.q) == FacetOrder::Equivalent)
                form.add_term(m, c);
        }
        out.emplace_back(std::move(form), u);
    }
    return out;
}

std::vector<MarkedPolynomial> lift(const MarkedBasis& H, const MarkedBasis& G, const GroebnerOptions& opts,
                                   std::size_t* steps) {
    const std::vector<Polynomial> fs = H.bodies();
    const ReduceOptions reduce{opts.step_cap, nullptr};
    std::vector<Polynomial> remainders = normal_forms(fs, G.members, reduce, opts.execution, steps);
    std::vector<MarkedPolynomial> out;
    out.reserve(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Polynomial lifted = fs[i] - remainders[i];
        if (!lifted.contains(H[i].marked())) throw InvalidMarking("lifting cancelled a marked term");
        out.emplace_back(std::move(lifted), H[i].marked());
    }
    return out;
}

WalkResult generic_walk(const MarkedBasis& G, const MatrixOrder& o1, const MatrixOrder& o2,
                        const WalkOptions& opts) {
    require_walk_orders(o1, o2);
    depth_or_full(opts.p, o1);
    depth_or_full(opts.q, o2);
    require_walk_input(G, o1, o2, opts);

    const bool truncated = opts.truncated(o1, o2);
    WalkResult result{G, {}};
    MarkedBasis& current = result.basis;
    FacetCursor cursor = FacetCursor::neg_infinity();
    std::vector<IntegerVector> visited;
    std::size_t steps = 0;

    for (std::size_t iter = 0;; ++iter) {
        if (iter >= opts.max_iterations)
            throw StepCapExceeded("walk exceeded " + std::to_string(opts.max_iterations) + " iterations");
        cursor = compute_last_w(current, cursor, o1, o2, opts, visited);
        if (cursor.kind() == FacetCursor::Kind::PosInfinity) break;
        const IntegerVector& w = cursor.vector();
        visited.push_back(w);
        // A coarse class that merges distinct rays has no facet ideal; finish with Buchberger instead.
        if (truncated && merges_rays(current, w, o1, o2, opts)) break;

        auto forms = facet_initial_forms(current, w, o1, o2, opts);
        MarkedBasis H = buchberger(bodies_of(forms), o2, opts.groebner);
        auto lifted = lift(H, current, opts.groebner, &steps);
        MarkedBasis next = autoreduce(std::move(lifted), opts.groebner);
        result.trace.steps.push_back(make_step(w, forms.size(), H, next, steps, opts.record_bases));
        current = std::move(next);
    }

    const bool arrived = markings_agree(current, o2) && is_reduced(current);
    if (!arrived && !truncated) throw Error("internal: walk ended outside the target cone");
    if (truncated && (!arrived || !is_groebner_basis(current, o2, opts.groebner))) {
        // A coarse preorder may cross lower-dimensional faces and stop short.
        std::vector<Polynomial> gens = current.bodies();
        for (const auto& g : G) gens.push_back(g.body());
        current = buchberger(gens, o2, opts.groebner);
        result.trace.completed_by_buchberger = true;
    }

    sort_basis(current, o2);
    result.trace.total_reduction_steps = steps;
    return result;
}

WalkResult classic_walk(const MarkedBasis& G, const MatrixOrder& o1, const MatrixOrder& o2,
                        const std::vector<Rational>& w0, const std::vector<Rational>& t0, const WalkOptions& opts) {
    require_walk_orders(o1, o2);
    require_walk_input(G, o1, o2, opts);
    const std::size_t n = o1.arity();
    require_same_arity(n, w0.size(), "classic_walk start vector");
    require_same_arity(n, t0.size(), "classic_walk target vector");

    for (const auto& x : w0)
        if (sgn(x) < 0) throw W0NotInCone("start vector has a negative entry");
    for (const auto& v : bounding_vectors(G))
        if (sgn(dot(w0, v)) < 0) throw W0NotInCone("start vector is not in the Gröbner cone of the input basis");
    bool t0_zero = true;
    for (const auto& x : t0) {
        if (sgn(x) < 0) throw InvalidOrder("target vector has a negative entry");
        t0_zero = t0_zero && sgn(x) == 0;
    }
    if (t0_zero) throw InvalidOrder("target vector is zero");

    auto integral = [n](const std::vector<Rational>& r) {
        BigInt den = 1;
        for (const auto& x : r) den = lcm(den, BigInt(x.get_den()));
        IntegerVector out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = BigInt(r[i].get_num() * (den / r[i].get_den()));
        return out;
    };
    // Ties on the segment's end are broken by the target vector first, so that
    // every crossing leaves a basis whose markings already respect t0.
    const MatrixOrder target = o2.weight_refine(integral(t0));

    WalkResult result{G, {}};
    MarkedBasis& current = result.basis;
    Rational t = 0;
    std::size_t steps = 0;

    for (std::size_t iter = 0;; ++iter) {
        if (iter >= opts.max_iterations)
            throw StepCapExceeded("walk exceeded " + std::to_string(opts.max_iterations) + " iterations");
        std::optional<Rational> next_t;
        IntegerVector facet;
        for (const auto& v : bounding_vectors(current)) {
            if (target.sign(v) != Sign::Negative) continue;
            const Rational a = dot(w0, v);
            const Rational b = dot(t0, v);
            Rational tv = a == b ? t : Rational(a / (a - b));
            if (tv < t) throw Error("internal: line left the current Gröbner cone");
            if (!next_t || tv < *next_t) {
                next_t = tv;
                facet = v.primitive();
            }
        }
        if (!next_t) break;
        t = *next_t;

        std::vector<Rational> point(n);
        for (std::size_t i = 0; i < n; ++i) point[i] = (1 - t) * w0[i] + t * t0[i];
        const IntegerVector weight = integral(point);

        std::vector<Polynomial> forms;
        forms.reserve(current.size());
        for (const auto& g : current) {
            Polynomial form(n);
            for (const auto& [m, c] : g.body().terms())
                if (m == g.marked() || sgn(dot(weight, g.marked().minus(m))) == 0) form.add_term(m, c);
            forms.push_back(std::move(form));
        }
        MarkedBasis H = buchberger(forms, target, opts.groebner);
        auto lifted = lift(H, current, opts.groebner, &steps);
        MarkedBasis next = autoreduce(std::move(lifted), opts.groebner);
        WalkStep step = make_step(std::move(facet), forms.size(), H, next, steps, opts.record_bases);
        step.t = t;
        result.trace.steps.push_back(std::move(step));
        current = std::move(next);
    }

    sort_basis(current, o2);
    result.trace.total_reduction_steps = steps;
    return result;
}

std::string format_facets(const WalkTrace& trace) {
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (i) os << ' ';
        os << trace.steps[i].facet.to_string();
    }
    return os.str();
}

std::string format_trace(const WalkTrace& trace) {
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        os << "step " << i + 1 << ": facet " << s.facet.to_string();
        if (s.t) os << " t=" << s.t->get_str();
        os << " initial_forms=" << s.initial_forms << " facet_basis=" << s.facet_basis_size
           << " basis=" << s.basis_size << " reductions=" << s.reduction_steps << '\n';
    }
    os << "steps=" << trace.steps.size() << " reductions=" << trace.total_reduction_steps;
    if (trace.completed_by_buchberger) os << " completed_by_buchberger";
    os << '\n';
    return os.str();
}

std::string trace_json(const WalkTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        nlohmann::json facet = nlohmann::json::array();
        for (const auto& x : s.facet.entries()) {
            if (x.fits_slong_p())
                facet.push_back(x.get_si());
            else
                facet.push_back(x.get_str());
        }
        nlohmann::json step = {{"facet", facet},
                               {"initial_forms", s.initial_forms},
                               {"facet_basis_size", s.facet_basis_size},
                               {"basis_size", s.basis_size},
                               {"reduction_steps", s.reduction_steps}};
        if (s.t) step["t"] = s.t->get_str();
        steps.push_back(std::move(step));
    }
    nlohmann::json j = {{"steps", steps},
                        {"total_reduction_steps", trace.total_reduction_steps},
                        {"completed_by_buchberger", trace.completed_by_buchberger}};
    return j.dump();
}

}  // namespace gwalk
