// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gwalk/errors.hpp"
#include "gwalk/groebner.hpp"
#include "gwalk/toric.hpp"
#include "gwalk/walk.hpp"
#include "oracles.hpp"

using namespace gwalk;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<std::string> XY{"x", "y"};

MarkedBasis basis(std::initializer_list<const char*> marked) {
    MarkedBasis B;
    for (const char* s : marked) B.members.push_back(oracle::M(XY, s));
    return B;
}

// Facet sequences of every walk run by criteria 1 and 2, for the monotonicity check.
struct WalkRecord {
    MatrixOrder o1, o2;
    std::vector<IntegerVector> facets;
};
std::vector<WalkRecord> g_walks;

void remember(const WalkResult& r, const MatrixOrder& o1, const MatrixOrder& o2) {
    WalkRecord rec{o1, o2, {}};
    for (const auto& s : r.trace.steps) rec.facets.push_back(s.facet);
    g_walks.push_back(std::move(rec));
}

struct Corpus {
    oracle::RandomIdeal ideal;
    MatrixOrder o1, o2;
    MarkedBasis source, target;
};

std::vector<Corpus> build_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Corpus> out;
    while (out.size() < count) {
        auto I = oracle::random_ideal(rng);
        auto o1 = named_order(OrderKind::DegRevLex, I.n);
        auto o2 = named_order(OrderKind::Lex, I.n);
        auto src = buchberger(I.gens, o1);
        auto tgt = buchberger(I.gens, o2);
        out.push_back({std::move(I), std::move(o1), std::move(o2), std::move(src), std::move(tgt)});
    }
    return out;
}

Verdict criterion1() {
    const auto t0 = Clock::now();
    const auto drl = named_order(OrderKind::DegRevLex, 2);
    const auto lex = named_order(OrderKind::Lex, 2);
    WalkOptions opts;
    opts.record_bases = true;
    auto r = generic_walk(basis({"[y^3] - x^2", "[x^3] - y^2 - x"}), drl, lex, opts);
    const double secs = seconds_since(t0);
    remember(r, drl, lex);

    Verdict v;
    const std::vector<MarkedBasis> shown{
        basis({"[x^2] - y^3", "[x*y^3] - y^2 - x", "[y^6] - x*y^2 - y^3"}),
        basis({"[x^2] - y^3", "[x*y^2] - y^6 + y^3", "[y^7] - y^4 - y^2 - x"}),
        basis({"[y^9] - 2y^6 - y^4 + y^3", "[x] - y^7 + y^4 + y^2"}),
    };
    const std::string facets = format_facets(r.trace);
    v.ok = facets == "(-2,3) (-1,4) (-1,7)" && r.trace.steps.size() == 3;
    for (std::size_t i = 0; v.ok && i < 3; ++i) v.ok = same_marked_set(*r.trace.steps[i].basis, shown[i]);
    v.ok = v.ok && same_marked_set(r.basis, shown[2]) && secs < 1.0;
    std::ostringstream os;
    os << "facets " << facets << ", intermediate and final bases " << (v.ok ? "match" : "differ") << ", "
       << secs << " s";
    v.detail = os.str();
    return v;
}

Verdict criterion2(const std::vector<Corpus>& corpus) {
    const auto t0 = Clock::now();
    std::size_t agree = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& c = corpus[i];
        auto r = generic_walk(c.source, c.o1, c.o2);
        remember(r, c.o1, c.o2);
        if (same_marked_set(r.basis, c.target))
            ++agree;
        else if (first_bad.empty())
            first_bad = " first mismatch at ideal " + std::to_string(i);
    }
    std::ostringstream os;
    os << agree << "/" << corpus.size() << " walks equal Buchberger over lex, " << seconds_since(t0) << " s"
       << first_bad;
    return {agree == corpus.size() && corpus.size() >= 200, os.str()};
}

Verdict criterion3(const std::vector<Corpus>& corpus) {
    const auto t0 = Clock::now();
    std::size_t agree = 0, crossings = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& c = corpus[i];
        auto w0 = oracle::interior_weight(c.source, c.o1);
        auto tau0 = oracle::interior_weight(c.target, c.o2);
        bool ok = w0 && tau0;
        if (ok) {
            auto r = classic_walk(c.source, c.o1, c.o2, *w0, *tau0);
            auto g = generic_walk(c.source, c.o1, c.o2);
            crossings += r.trace.steps.size();
            ok = same_marked_set(r.basis, g.basis) && same_marked_set(r.basis, c.target);
        }
        if (ok)
            ++agree;
        else if (first_bad.empty())
            first_bad = " first mismatch at ideal " + std::to_string(i);
    }
    std::ostringstream os;
    os << agree << "/" << corpus.size() << " classical walks agree (" << crossings << " crossings), "
       << seconds_since(t0) << " s" << first_bad;
    return {agree == corpus.size(), os.str()};
}

Verdict criterion4() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(404);
    std::size_t pairs = 0, agree = 0, equivalent = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<std::pair<MatrixOrder, MatrixOrder>> orders{
            {named_order(OrderKind::DegRevLex, n), named_order(OrderKind::Lex, n)},
            {named_order(OrderKind::Lex, n), named_order(OrderKind::DegRevLex, n)},
            {named_order(OrderKind::DegLex, n), named_order(OrderKind::Lex, n)},
            // In two variables degrevlex and deglex coincide, leaving no crossing vectors.
            {named_order(n == 2 ? OrderKind::Lex : OrderKind::DegRevLex, n), named_order(OrderKind::DegLex, n)},
        };
        for (const auto& [o1, o2] : orders) {
            for (int k = 0; k < 100; ++k) {
                auto u = oracle::random_crossing_vector(rng, n, o1, o2);
                auto v = k % 10 == 0 ? u.scaled(2 + k % 3) : oracle::random_crossing_vector(rng, n, o1, o2);
                ++pairs;
                auto verdict = facet_cmp(u, v, o1, o2);
                auto pert = oracle::perturb_pair(u, v, o1, o2);
                if (!pert) continue;
                int s = oracle::qsign(pert->t_u - pert->t_v);
                bool ok = (s < 0 && verdict == FacetOrder::Less) || (s > 0 && verdict == FacetOrder::Greater) ||
                          (s == 0 && verdict == FacetOrder::Equivalent);
                ok = ok && pert->t_u > 0 && pert->t_u < 1 && pert->t_v > 0 && pert->t_v < 1;
                if (ok) ++agree;
                if (s == 0) ++equivalent;
            }
        }
    }
    std::ostringstream os;
    os << agree << "/" << pairs << " pairs agree with explicit delta/epsilon (" << equivalent << " equivalent), "
       << seconds_since(t0) << " s";
    return {agree == pairs && pairs >= 1000, os.str()};
}

Verdict criterion5() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<int> size(1, 4), coef(1, 30);
    std::size_t instances = 0, queries = 0, agree = 0, witnesses_ok = 0, feasible = 0;
    for (; instances < 20; ++instances) {
        std::vector<std::int64_t> a;
        for (int i = size(rng); i > 0; --i) a.push_back(coef(rng));
        KnapsackInstance inst(a);
        auto G = compute_test_set(inst).basis;
        std::vector<std::int64_t> bs;
        for (std::int64_t b = 0; b <= 10 * inst.max_coefficient(); ++b) bs.push_back(b);
        auto answers = solve_feasibility_batch(G, inst, bs);
        for (std::size_t k = 0; k < bs.size(); ++k) {
            const auto& r = answers[k];
            const std::int64_t b = bs[k];
            ++queries;
            const std::int64_t best = oracle::max_reachable(a, b);
            if (r.feasible() == (best == b) && r.t() == b - best) ++agree;
            std::int64_t lhs = 0;
            bool nonneg = true;
            for (std::size_t i = 0; i < a.size(); ++i) {
                lhs += a[i] * r.exponents[i + 1];
                nonneg = nonneg && r.exponents[i + 1] >= 0;
            }
            if (r.feasible()) ++feasible;
            if (nonneg && r.t() >= 0 && r.t() + lhs == b && (!r.feasible() || lhs == b)) ++witnesses_ok;
        }
    }
    std::ostringstream os;
    os << instances << " instances, " << agree << "/" << queries << " verdicts match the DP oracle, " << witnesses_ok
       << "/" << queries << " witnesses exact (" << feasible << " feasible), " << seconds_since(t0) << " s";
    return {agree == queries && witnesses_ok == queries && instances >= 20, os.str()};
}

Verdict criterion6(const std::vector<Corpus>& corpus) {
    const auto t0 = Clock::now();
    std::size_t ideals = 0, facets = 0, agree = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < corpus.size() && ideals < 60; ++i) {
        const auto& c = corpus[i];
        WalkOptions opts;
        opts.record_bases = true;
        auto r = generic_walk(c.source, c.o1, c.o2, opts);
        if (r.trace.steps.empty()) continue;
        ++ideals;
        MarkedBasis prev = c.source;
        for (const auto& st : r.trace.steps) {
            ++facets;
            bool ok = false;
            if (auto pt = oracle::facet_point(prev, st.facet, c.o1, c.o2)) {
                const auto refined = weight_refine(c.o2, *pt);
                auto over_refined = buchberger(c.ideal.gens, refined);
                std::vector<Polynomial> forms;
                for (const auto& g : over_refined) forms.push_back(initial_form(g.body(), *pt));
                auto of_initial = buchberger(forms, c.o2);
                ok = oracle::marked_terms(of_initial) == oracle::marked_terms(over_refined) &&
                     same_marked_set(of_initial, *st.facet_basis) && same_marked_set(over_refined, *st.basis);
            }
            if (ok)
                ++agree;
            else if (first_bad.empty())
                first_bad = " first mismatch at ideal " + std::to_string(i) + " facet " + st.facet.to_string();
            prev = *st.basis;
        }
    }
    std::ostringstream os;
    os << agree << "/" << facets << " facets over " << ideals
       << " ideals: in(in_w(I)) and in over the refined order coincide, " << seconds_since(t0) << " s"
       << first_bad;
    return {agree == facets && ideals >= 50, os.str()};
}

Verdict criterion7() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(707);
    std::size_t triples = 0, violations = 0, samples = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<std::pair<MatrixOrder, MatrixOrder>> orders{
            {named_order(OrderKind::DegRevLex, n), named_order(OrderKind::Lex, n)},
            {named_order(OrderKind::Lex, n), named_order(OrderKind::DegRevLex, n)},
        };
        for (const auto& [o1, o2] : orders) {
            for (int rep = 0; rep < 2; ++rep, ++samples) {
                std::vector<IntegerVector> vs;
                while (vs.size() < 30) {
                    auto v = oracle::random_crossing_vector(rng, n, o1, o2, 4);
                    vs.push_back(v);
                    if (vs.size() % 6 == 0) vs.push_back(v.scaled(3));
                }
                const std::size_t m = vs.size();
                std::vector<std::vector<FacetOrder>> cmp(m, std::vector<FacetOrder>(m));
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b) cmp[a][b] = facet_cmp(vs[a], vs[b], o1, o2);
                for (std::size_t a = 0; a < m; ++a) {
                    for (std::size_t b = 0; b < m; ++b) {
                        auto flip = cmp[a][b] == FacetOrder::Less      ? FacetOrder::Greater
                                    : cmp[a][b] == FacetOrder::Greater ? FacetOrder::Less
                                                                       : FacetOrder::Equivalent;
                        if (cmp[b][a] != flip) ++violations;
                        if ((cmp[a][b] == FacetOrder::Equivalent) != (vs[a].primitive() == vs[b].primitive()))
                            ++violations;
                        for (std::size_t c = 0; c < m; ++c) {
                            ++triples;
                            const bool ab = cmp[a][b] != FacetOrder::Greater, bc = cmp[b][c] != FacetOrder::Greater;
                            if (ab && bc && cmp[a][c] == FacetOrder::Greater) ++violations;
                            if (cmp[a][b] == FacetOrder::Less && bc && cmp[a][c] != FacetOrder::Less) ++violations;
                        }
                    }
                }
            }
        }
    }
    std::size_t steps = 0, bad_steps = 0;
    for (const auto& w : g_walks) {
        for (std::size_t i = 0; i < w.facets.size(); ++i) {
            ++steps;
            if (!in_crossing_cone(w.facets[i], w.o1, w.o2)) ++bad_steps;
            if (i > 0 && facet_cmp(w.facets[i - 1], w.facets[i], w.o1, w.o2) != FacetOrder::Less) ++bad_steps;
        }
    }
    std::ostringstream os;
    os << samples << " samples, " << triples << " triples, " << violations << " law violations; " << bad_steps
       << "/" << steps << " non-increasing cursor steps over " << g_walks.size() << " walks, " << seconds_since(t0)
       << " s";
    return {violations == 0 && bad_steps == 0 && !g_walks.empty(), os.str()};
}

}  // namespace

int main() {
    const auto corpus = build_corpus(200, 2718);
    std::vector<std::pair<int, std::function<Verdict()>>> criteria{
        {1, criterion1},
        {2, [&] { return criterion2(corpus); }},
        {3, [&] { return criterion3(corpus); }},
        {4, criterion4},
        {5, criterion5},
        {6, [&] { return criterion6(corpus); }},
        {7, criterion7},
    };
    int failures = 0;
    for (auto& [id, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %d: %s\n", v.ok ? "PASS" : "FAIL", id, v.detail.c_str());
        std::fflush(stdout);
        if (!v.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
