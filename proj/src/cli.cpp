#include "gwalk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwalk/errors.hpp"
#include "gwalk/groebner.hpp"
#include "gwalk/toric.hpp"
#include "gwalk/walk.hpp"

namespace gwalk::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFailure = 3;

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool keyword(const std::string& line, std::string_view word, std::string& rest) {
    if (line.size() <= word.size() || line.compare(0, word.size(), word) != 0) return false;
    char next = line[word.size()];
    if (next != ' ' && next != '\t' && next != ':') return false;
    rest = trim(std::string_view(line).substr(word.size() + 1));
    return true;
}

struct Settings {
    std::size_t step_cap = 1'000'000;
    bool group_order = false;
    bool json = false;
    bool trace = false;
    bool stats = false;
};

GroebnerOptions groebner_options(const Settings& s) {
    GroebnerOptions o;
    o.step_cap = s.step_cap;
    o.group_order = s.group_order;
    return o;
}

MatrixOrder pick_order(const std::string& flag, const std::optional<std::string>& from_file, const char* what,
                       std::size_t n) {
    if (!flag.empty()) return parse_order(flag, n);
    if (from_file) return parse_order(*from_file, n);
    throw ParseError(std::string("no ") + what + " order given");
}

std::vector<Polynomial> parse_generators(const ProblemFile& pf, const Ring& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < pf.generators.size(); ++i) {
        // Markings are irrelevant here; blank the brackets so error columns stay put.
        std::string text = pf.generators[i];
        std::replace_if(text.begin(), text.end(), [](char c) { return c == '[' || c == ']'; }, ' ');
        Polynomial f = ring.parse(text, pf.generator_lines[i]);
        if (f.is_zero())
            throw ParseError("generator '" + pf.generators[i] + "' is the zero polynomial", pf.generator_lines[i], 1);
        gens.push_back(std::move(f));
    }
    if (gens.empty()) throw EmptyIdeal("no generators given");
    return gens;
}

MarkedBasis parse_marked_basis(const ProblemFile& pf, const Ring& ring, const MatrixOrder& o) {
    MarkedBasis G;
    for (std::size_t i = 0; i < pf.generators.size(); ++i)
        G.members.push_back(ring.parse_marked(pf.generators[i], &o, pf.generator_lines[i]).monic());
    if (G.empty()) throw EmptyIdeal("no generators given");
    return G;
}

void print_basis(std::ostream& out, const Ring& ring, const MarkedBasis& G, const MatrixOrder& o) {
    for (const auto& g : G) out << ring.format(g, o) << '\n';
}

nlohmann::json basis_json(const Ring& ring, const MarkedBasis& G, const MatrixOrder& o) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : G)
        arr.push_back({{"marked", ring.format_monomial(g.marked())}, {"polynomial", ring.format(g, o)}});
    return arr;
}

void print_walk(std::ostream& out, const Ring& ring, const WalkResult& r, const MatrixOrder& o2, const Settings& s) {
    if (s.json) {
        nlohmann::json j = {{"basis", basis_json(ring, r.basis, o2)},
                            {"trace", nlohmann::json::parse(trace_json(r.trace))}};
        out << j.dump() << '\n';
        return;
    }
    if (s.trace && !r.trace.steps.empty()) out << format_facets(r.trace) << '\n';
    print_basis(out, ring, r.basis, o2);
    if (s.stats) out << format_trace(r.trace);
}

std::size_t parse_size(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw ParseError(std::string("invalid ") + what + " '" + text + "'");
    return v;
}

std::vector<std::int64_t> parse_queries(const std::string& text) {
    std::vector<std::int64_t> bs;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t used = 0;
        long long b = -1;
        try {
            b = std::stoll(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t.size() || b < 0) throw ParseError("expected a non-negative integer", lineno, 1);
        bs.push_back(b);
    }
    return bs;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
    ProblemFile pf;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    bool have_ring = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::string rest;
        if (keyword(line, "ring", rest)) {
            if (have_ring) throw ParseError("ring declared twice", lineno, 1);
            std::string names = rest;
            std::replace(names.begin(), names.end(), ',', ' ');
            std::istringstream ns(names);
            std::string v;
            while (ns >> v) pf.variables.push_back(v);
            if (pf.variables.empty()) throw ParseError("ring declares no variables", lineno, 1);
            have_ring = true;
        } else if (keyword(line, "order", rest)) {
            pf.order = rest;
        } else if (keyword(line, "from", rest)) {
            pf.from = rest;
        } else if (keyword(line, "to", rest)) {
            pf.to = rest;
        } else {
            if (!have_ring) throw ParseError("generator before the ring declaration", lineno, 1);
            while (!line.empty() && (line.back() == ',' || line.back() == ';')) line.pop_back();
            pf.generators.push_back(trim(line));
            pf.generator_lines.push_back(lineno);
        }
    }
    if (!have_ring) throw ParseError("missing 'ring' declaration");
    Ring check(pf.variables);
    return pf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gröbner basis computation and conversion by the generic Gröbner walk", "gwalk"};
    app.require_subcommand(1);

    Settings s;
    std::string file, order_spec, from_spec, to_spec, truncate, w0_text, t0_text, queries_file;
    bool no_validate = false, from_generators = false, no_basis = false;
    std::vector<std::int64_t> extra_bs;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--step-cap", s.step_cap, "Reduction steps allowed per normal form");
        sub->add_flag("--json", s.json, "Emit JSON");
    };

    auto* gb = app.add_subcommand("gb", "Reduced Gröbner basis by Buchberger's algorithm");
    gb->add_option("file", file, "Problem file")->required();
    gb->add_option("--order", order_spec, "Order spec (overrides the file)");
    gb->add_flag("--group-order", s.group_order, "Allow non-term group orders");
    add_common(gb);

    auto add_walk_options = [&](CLI::App* sub) {
        sub->add_option("file", file, "Problem file holding the marked reduced basis")->required();
        sub->add_option("--from", from_spec, "Source order spec");
        sub->add_option("--to", to_spec, "Target order spec");
        sub->add_flag("--trace", s.trace, "Print the crossed facets");
        sub->add_flag("--stats", s.stats, "Print per-step statistics");
        sub->add_flag("--group-order", s.group_order, "Allow non-term group orders");
        sub->add_flag("--no-validate", no_validate, "Skip checking the input basis");
        sub->add_flag("--from-generators", from_generators,
                      "Compute the source basis from the generators first");
        add_common(sub);
    };

    auto* walk = app.add_subcommand("walk", "Generic Gröbner walk");
    add_walk_options(walk);
    walk->add_option("--truncate", truncate, "Comparison depths p,q");

    auto* classic = app.add_subcommand("walk-classic", "Classical Gröbner walk along a segment");
    add_walk_options(classic);
    classic->add_option("--w0", w0_text, "Start vector in the source cone, e.g. 3,1")->required();
    classic->add_option("--t0", t0_text, "Target vector in the target cone, e.g. 9,1")->required();

    auto* knap = app.add_subcommand("knapsack", "Knapsack test set and feasibility queries");
    knap->add_option("file", file, "Instance file: a_1 ... a_n on one line")->required();
    knap->add_option("queries", queries_file, "File with one right-hand side b per line");
    knap->add_option("--b", extra_bs, "Additional right-hand sides");
    knap->add_flag("--stats", s.stats, "Print |Gsigma|, |Gtau| and the walk length");
    knap->add_flag("--trace", s.trace, "Print the crossed facets");
    knap->add_flag("--no-basis", no_basis, "Do not print the test set");
    add_common(knap);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (gb->parsed()) {
            ProblemFile pf = parse_problem(read_file(file));
            Ring ring = pf.ring();
            MatrixOrder o = pick_order(order_spec, pf.order ? pf.order : pf.to, "target", ring.arity());
            MarkedBasis G = buchberger(parse_generators(pf, ring), o, groebner_options(s));
            if (s.json)
                out << nlohmann::json{{"basis", basis_json(ring, G, o)}}.dump() << '\n';
            else
                print_basis(out, ring, G, o);
            return kExitOk;
        }

        if (walk->parsed() || classic->parsed()) {
            ProblemFile pf = parse_problem(read_file(file));
            Ring ring = pf.ring();
            const std::size_t n = ring.arity();
            MatrixOrder o1 = pick_order(from_spec, pf.from ? pf.from : pf.order, "source", n);
            MatrixOrder o2 = pick_order(to_spec, pf.to, "target", n);
            WalkOptions opts;
            opts.groebner = groebner_options(s);
            opts.validate = !no_validate;
            MarkedBasis G = from_generators ? buchberger(parse_generators(pf, ring), o1, opts.groebner)
                                            : parse_marked_basis(pf, ring, o1);
            if (opts.validate) {
                validate_reduced_basis(G, o1, opts.groebner,
                                       [&](const MarkedPolynomial& g) { return ring.format(g, o1, true); });
                opts.validate = false;
            }
            WalkResult r;
            if (walk->parsed()) {
                if (!truncate.empty()) {
                    auto comma = truncate.find(',');
                    if (comma == std::string::npos) throw ParseError("--truncate expects p,q");
                    opts.p = parse_size(truncate.substr(0, comma), "depth");
                    opts.q = parse_size(truncate.substr(comma + 1), "depth");
                    if (opts.p < 1 || opts.p > n || opts.q < 1 || opts.q > n)
                        throw ParseError("--truncate depths must lie in 1.." + std::to_string(n));
                }
                r = generic_walk(G, o1, o2, opts);
            } else {
                r = classic_walk(G, o1, o2, parse_rational_vector(w0_text), parse_rational_vector(t0_text), opts);
            }
            print_walk(out, ring, r, o2, s);
            return kExitOk;
        }

        if (knap->parsed()) {
            std::string text = read_file(file);
            std::string first;
            {
                std::istringstream in(text);
                std::string line;
                while (std::getline(in, line)) {
                    first = trim(line);
                    if (!first.empty() && first[0] != '#') break;
                    first.clear();
                }
            }
            KnapsackInstance inst = KnapsackInstance::parse(first);
            Ring ring = inst.ring();
            WalkOptions opts;
            opts.groebner = groebner_options(s);
            WalkResult r = compute_test_set(inst, opts);
            const MatrixOrder target = sigma_tau_orders(inst.size()).second;

            std::vector<std::int64_t> bs;
            if (!queries_file.empty()) bs = parse_queries(read_file(queries_file));
            bs.insert(bs.end(), extra_bs.begin(), extra_bs.end());
            for (auto b : bs)
                if (b < 0) throw ParseError("right-hand sides must be non-negative");
            auto answers = solve_feasibility_batch(r.basis, inst, bs, opts.groebner);

            if (s.json) {
                nlohmann::json results = nlohmann::json::array();
                for (const auto& a : answers)
                    results.push_back({{"b", a.b}, {"feasible", a.feasible()}, {"exponents", a.exponents}});
                nlohmann::json j = {{"gsigma", inst.size()},
                                    {"gtau", r.basis.size()},
                                    {"steps", r.trace.steps.size()},
                                    {"results", results}};
                if (!no_basis) j["basis"] = basis_json(ring, r.basis, target);
                if (s.trace) j["trace"] = nlohmann::json::parse(trace_json(r.trace));
                out << j.dump() << '\n';
                return kExitOk;
            }
            if (s.trace && !r.trace.steps.empty()) out << format_facets(r.trace) << '\n';
            if (!no_basis) print_basis(out, ring, r.basis, target);
            if (s.stats)
                out << "|Gsigma|=" << inst.size() << " |Gtau|=" << r.basis.size() << " steps=" << r.trace.steps.size()
                    << '\n';
            for (const auto& a : answers) out << a.to_line() << '\n';
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const StepCapExceeded& e) {
        err << "step cap exceeded: " << e.what() << '\n';
        return kExitFailure;
    } catch (const NonMonomialNormalForm& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const EmptyIdeal& e) {
        err << "EmptyIdeal: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidInputBasis& e) {
        err << "InvalidInputBasis: " << e.what() << '\n';
        return kExitInput;
    } catch (const W0NotInCone& e) {
        err << "W0NotInCone: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidOrder& e) {
        err << "InvalidOrder: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidMarking& e) {
        err << "InvalidMarking: " << e.what() << '\n';
        return kExitInput;
    } catch (const ArityMismatch& e) {
        err << "ArityMismatch: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitInput;
}

}  // namespace gwalk::cli
