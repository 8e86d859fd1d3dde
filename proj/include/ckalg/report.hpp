#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "analyzer.hpp"
#include "diagonal_algebra.hpp"
#include "representation.hpp"

namespace ckalg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ck-report/1";

inline Json to_json(const DescribableSet& s, const IndexUniverse& u) { return s.to_string(u); }

inline Json to_json(const SpectrumPoint& p, const IndexUniverse& u) {
    Json j;
    j["bounded"] = p.bounded();
    if (p.bounded()) {
        j["stem"] = to_string(p.stem(), u);
        j["root"] = p.root().to_string(u);
    } else {
        j["stem"] = to_string(p.infinite_stem(), u);
    }
    j["text"] = to_string(p, u);
    return j;
}

inline Json to_json(const Certificate& c, const IndexUniverse& u) {
    Json j;
    j["kind"] = c.kind;
    Json words = Json::array();
    for (auto& w : c.words) words.push_back(to_string(w, u));
    j["words"] = words;
    j["note"] = c.note;
    j["exact"] = c.exact;
    return j;
}

inline Json to_json(const Verdict& v, const IndexUniverse& u) {
    Json j;
    j["answer"] = to_string(v.answer);
    j["witness"] = to_json(v.cert, u);
    return j;
}

inline Json to_json(const ClusterPoint& c, const IndexUniverse& u) {
    Json j;
    j["set"] = c.column.to_string(u);
    j["column_track"] = u.names()[c.track];
    j["residue"] = c.residue;
    j["modulus"] = c.modulus;
    return j;
}

inline Json to_json(const UnitalReport& r, const IndexUniverse& u) {
    Json j;
    j["answer"] = r.unital ? "yes" : "no";
    if (r.witness_y) {
        Json ys = Json::array();
        for (auto& y : *r.witness_y) ys.push_back(u.name(y));
        j["witness_y"] = ys;
    }
    if (r.zero_cluster) j["zero_cluster_point"] = to_json(*r.zero_cluster, u);
    return j;
}

inline Json to_json(const Verdicts& v, const IndexUniverse& u) {
    Json j;
    j["topologically_free"] = to_json(v.topologically_free, u);
    j["uniqueness_applies"] = to_json(v.uniqueness_applies, u);
    j["simple_sufficient"] = to_json(v.simple_sufficient, u);
    j["ideal_classification_applies"] = to_json(v.ideal_classification_applies, u);
    j["purely_infinite_sufficient"] = to_json(v.purely_infinite_sufficient, u);
    j["terminal_circuit"] = to_json(v.terminal_circuit, u);
    j["transitory_circuit_literal"] = to_json(v.transitory_literal, u);
    j["transitory_circuit_edge_departure"] = to_json(v.transitory_edge_departure, u);
    j["transitive"] = to_json(v.transitive, u);
    j["permutation"] = to_json(v.permutation, u);
    j["cofinal"] = to_json(v.cofinal, u);
    j["reaches_circuit"] = to_json(v.reaches_circuit, u);
    return j;
}

inline Json to_json(const AnalysisReport& r, const IndexUniverse& u) {
    Json j;
    j["schema"] = kSchema;
    j["matrix"] = r.summary;
    j["unital"] = to_json(r.unital, u);
    Json cl = Json::array();
    for (auto& c : r.clusters) cl.push_back(to_json(c, u));
    j["cluster_points"] = cl;
    j["reading"] = to_string(r.reading);
    j["verdicts"] = to_json(r.verdicts, u);
    Json smp = Json::array();
    for (auto& p : r.samples) smp.push_back(to_json(p, u));
    j["spectrum_samples"] = smp;
    if (r.invariant_set) {
        Json w;
        w["x"] = u.name(r.invariant_set->x);
        w["point"] = to_json(r.invariant_set->point, u);
        w["in_E_x"] = true;
        Json ys = Json::array();
        for (auto& y : r.invariant_set->checked_y) ys.push_back(u.name(y));
        w["outside_E_y_for"] = ys;
        j["invariant_set"] = w;
    } else {
        j["invariant_set"] = nullptr;
    }
    return j;
}

inline Json to_json(const WindowReport& w, const IndexUniverse& u) {
    Json j;
    j["relation"] = w.relation;
    j["window"] = {w.lo, w.hi};
    j["result"] = w.pass ? "exact-pass" : "fail";
    if (w.witness) j["witness"] = to_string(*w.witness, u);
    return j;
}

inline Json to_json(const EmptinessResult& r, const IndexUniverse& u) {
    Json j;
    j["empty"] = r.empty;
    if (r.witness) j["witness"] = to_json(*r.witness, u);
    if (!r.witness_note.empty()) j["witness_note"] = r.witness_note;
    if (r.empty) j["derivation"] = r.derivation;
    return j;
}

// Human-readable analysis.
inline std::string render_text(const AnalysisReport& r, const IndexUniverse& u) {
    std::string s = r.summary + "\n";
    s += std::string("unital: ") + (r.unital.unital ? "yes" : "no");
    if (r.unital.zero_cluster) s += " (zero vector is a column cluster point)";
    if (r.unital.witness_y && !r.unital.witness_y->empty()) {
        s += " (Y = {";
        for (std::size_t k = 0; k < r.unital.witness_y->size(); ++k) s += (k ? "," : "") + u.name((*r.unital.witness_y)[k]);
        s += "})";
    }
    s += "\n";
    auto line = [&](const char* name, const Verdict& v) {
        s += std::string(name) + ": " + to_string(v.answer);
        if (!v.cert.exact) s += " [conservative]";
        if (!v.cert.words.empty()) {
            s += " (";
            for (std::size_t k = 0; k < v.cert.words.size(); ++k) s += (k ? " | " : "") + to_string(v.cert.words[k], u);
            s += ")";
        }
        s += "\n";
    };
    const auto& v = r.verdicts;
    line("terminal circuit", v.terminal_circuit);
    line("transitory circuit (literal)", v.transitory_literal);
    line("transitory circuit (edge departure)", v.transitory_edge_departure);
    line("transitive", v.transitive);
    line("permutation", v.permutation);
    line("cofinal", v.cofinal);
    line("every vertex reaches a circuit", v.reaches_circuit);
    line("topologically free", v.topologically_free);
    line("uniqueness applies", v.uniqueness_applies);
    line("simple (sufficient)", v.simple_sufficient);
    line("ideal classification applies", v.ideal_classification_applies);
    line("purely infinite (sufficient)", v.purely_infinite_sufficient);
    if (r.invariant_set) {
        s += "invariant set: E_" + u.name(r.invariant_set->x) + " contains " + to_string(r.invariant_set->point, u) +
             ", which lies in no E_y for y in row " + u.name(r.invariant_set->x) + "\n";
    }
    return s;
}

} // namespace ckalg
