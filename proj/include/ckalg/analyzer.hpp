#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "graph.hpp"
#include "graph_analysis.hpp"
#include "matrix_spec.hpp"
#include "sampling.hpp"

namespace ckalg {

struct Verdicts {
    Verdict terminal_circuit;
    Verdict transitory_literal;
    Verdict transitory_edge_departure;
    Verdict transitive;
    Verdict permutation;
    Verdict cofinal;
    Verdict reaches_circuit;

    Verdict topologically_free;
    Verdict uniqueness_applies;
    Verdict simple_sufficient;
    Verdict ideal_classification_applies;
    Verdict purely_infinite_sufficient;
};

// A point of E_x lying in no E_y with A(x,y) = 1: E_x is a proper invariant set.
struct InvariantSetWitness {
    Index x;
    SpectrumPoint point;
    std::vector<Index> checked_y;  // first row elements, all outside
};

struct AnalysisReport {
    std::string summary;
    bool tracked = false;
    UnitalReport unital;
    std::vector<ClusterPoint> clusters;
    Verdicts verdicts;
    Reading reading = Reading::literal;
    std::vector<SpectrumPoint> samples;
    std::optional<InvariantSetWitness> invariant_set;
};

namespace detail {

inline bool exact_yes(const Verdict& v) { return v.answer == Answer::yes && v.cert.exact; }
inline bool exact_no(const Verdict& v) { return v.answer == Answer::no && v.cert.exact; }

inline Verdict negate(const Verdict& v, const std::string& why) {
    Verdict out;
    out.cert = v.cert;
    out.cert.note = why + "; " + v.cert.note;
    if (exact_yes(v)) out.answer = Answer::no;
    else if (exact_no(v)) out.answer = Answer::yes;
    else out.answer = Answer::unknown, out.cert.exact = false;
    return out;
}

} // namespace detail

inline Verdicts compose_verdicts(const ClassGraph& G, Reading reading) {
    const auto& A = G.spec();
    Verdicts v;
    v.terminal_circuit = has_terminal_circuit(G);
    v.transitory_literal = has_transitory_circuit(G, Reading::literal);
    v.transitory_edge_departure = has_transitory_circuit(G, Reading::edge_departure);
    v.transitive = is_transitive(G);
    v.permutation = is_permutation(G);
    v.cofinal = is_cofinal(G);
    v.reaches_circuit = every_vertex_reaches_circuit(G);

    v.topologically_free = detail::negate(v.terminal_circuit, "topologically free iff no terminal circuit");
    v.uniqueness_applies = v.topologically_free;

    bool infinite = A.universe().tracked();
    if (detail::exact_yes(v.transitive) && (infinite || detail::exact_no(v.permutation))) {
        v.simple_sufficient.answer = Answer::yes;
        v.simple_sufficient.cert = {"hypotheses", {}, infinite ? "transitive, infinite universe" : "transitive, not a permutation matrix", true};
    } else {
        v.simple_sufficient.answer = Answer::unknown;
        v.simple_sufficient.cert = {"hypotheses", {}, "sufficient condition not met", true};
    }

    const auto& tr = reading == Reading::literal ? v.transitory_literal : v.transitory_edge_departure;
    v.ideal_classification_applies =
        detail::negate(tr, std::string("no transitory circuits (") + to_string(reading) + " reading)");

    if (detail::exact_no(v.terminal_circuit) && detail::exact_yes(v.reaches_circuit)) {
        v.purely_infinite_sufficient.answer = Answer::yes;
        v.purely_infinite_sufficient.cert = {"hypotheses", {}, "no terminal circuit and every vertex reaches a circuit", true};
    } else {
        v.purely_infinite_sufficient.answer = Answer::unknown;
        v.purely_infinite_sufficient.cert = {"hypotheses", {}, "sufficient condition not met", true};
    }
    return v;
}

inline std::optional<InvariantSetWitness> find_invariant_set(const ClassGraph& G) {
    const auto& A = G.spec();
    if (!A.universe().tracked()) return std::nullopt;
    for (auto& x : A.universe().sample(A.bound() + A.modulus())) {
        if (A.is_row_finite(x)) continue;
        auto w = garfo_counterexample_search(G, x, 0);
        if (!w) continue;
        InvariantSetWitness out{x, *w, {}};
        for (auto& y : A.row_support(x).members_upto(10)) {
            if (e_x_contains(G, *w, y)) return std::nullopt;  // would contradict the exact search
            out.checked_y.push_back(y);
        }
        return out;
    }
    return std::nullopt;
}

inline AnalysisReport analyze(const MatrixSpec& A, Reading reading = Reading::literal, std::uint64_t seed = 1) {
    ClassGraph G(A);
    AnalysisReport r;
    r.summary = A.summary();
    r.tracked = A.universe().tracked();
    r.unital = A.is_unital();
    r.clusters = A.column_cluster_points();
    r.reading = reading;
    r.verdicts = compose_verdicts(G, reading);
    r.invariant_set = find_invariant_set(G);
    if (r.invariant_set) {
        auto& s = r.verdicts.simple_sufficient;
        s.cert.kind = "invariant-set";
        s.cert.words = {{r.invariant_set->x}};
        s.cert.note += "; E_x is a proper nontrivial invariant set (see invariant_set)";
    }
    Sampler smp(G, seed);
    for (int k = 0; k < 3; ++k)
        if (auto p = smp.point(Ambient::tilde); p && in_tilde_omega(A, *p)) r.samples.push_back(*p);
    return r;
}

} // namespace ckalg
