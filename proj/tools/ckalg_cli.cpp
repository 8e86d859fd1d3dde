#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ckalg/ckalg.hpp"
#include "ckalg/report.hpp"

using namespace ckalg;

namespace {

struct Failure {
    int code;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Index> parse_list(const std::string& text, const IndexUniverse& u) {
    std::vector<Index> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(u.require(tok.substr(b, e - b + 1)));
    }
    return out;
}

Index parse_generator(const std::string& text, const IndexUniverse& u) { return u.require(text); }

struct Options {
    std::string spec_path;
    bool json = false;
    bool strict = false;
};

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json) std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
}

// "no" answers fail only under --strict
void verdict_exit(const Options& o, bool ok) {
    if (o.strict && !ok) throw Failure{1};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cuntz-Krieger workbench for 0-1 matrices"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("spec", o.spec_path, "matrix spec file")->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->add_flag("--strict", o.strict, "exit 1 on negative or undecided results");
    };

    auto* validate = app.add_subcommand("validate", "parse and validate a spec");
    common(validate);

    std::string reading_name = "literal";
    auto* analyze_cmd = app.add_subcommand("analyze", "graph verdicts, unitality and witnesses");
    common(analyze_cmd);
    analyze_cmd->add_option("--reading", reading_name, "transitory reading")->check(CLI::IsMember({"literal", "edge_departure"}));

    std::string gi, gj;
    auto* entry = app.add_subcommand("entry", "matrix entry A(i,j)");
    common(entry);
    entry->add_option("i", gi)->required();
    entry->add_option("j", gj)->required();

    auto* unital = app.add_subcommand("unital", "unitality with certificate");
    common(unital);
    auto* clusters = app.add_subcommand("clusters", "column cluster points");
    common(clusters);

    std::string word_text;
    auto* rewrite_cmd = app.add_subcommand("rewrite", "normal form of a word in S, S*, Q, P");
    common(rewrite_cmd);
    rewrite_cmd->add_option("word", word_text)->required();

    std::string point_text, t_text, x_text;
    auto* member = app.add_subcommand("member", "is t in the point?");
    common(member);
    member->add_option("point", point_text, "point, e.g. \"stem=1 2;root={1,2}\"")->required();
    member->add_option("t", t_text)->required();

    auto* act_cmd = app.add_subcommand("act", "apply t to the point");
    common(act_cmd);
    act_cmd->add_option("point", point_text, "point, e.g. \"stem=1 2;root={1,2}\"")->required();
    act_cmd->add_option("t", t_text)->required();

    auto* fixed = app.add_subcommand("fixed", "fixed point of t");
    common(fixed);
    fixed->add_option("t", t_text)->required();

    auto* ex = app.add_subcommand("ex", "is the point in E_x?");
    common(ex);
    ex->add_option("point", point_text, "point, e.g. \"stem=1 2;root={1,2}\"")->required();
    ex->add_option("x", x_text)->required();

    std::string X_text, Y_text, Z_text, base_text;
    auto* orbit = app.add_subcommand("orbit-member", "does the orbit of the point meet the pattern set?");
    common(orbit);
    orbit->add_option("--X", X_text, "generators x with b x^-1 in the point");
    orbit->add_option("--Y", Y_text, "generators y with b y^-1 not in the point");
    orbit->add_option("--Z", Z_text, "generators z with b z not in the point");
    orbit->add_option("--base", base_text, "positive base word b (default e)");
    orbit->add_option("point", point_text, "point, e.g. \"stem=1 2;root={1,2}\"")->required();

    std::size_t window = 8, max_len = 3;
    std::string gens_text, relations_text = "tck,ck,elcond,claims,projections";
    auto* verify = app.add_subcommand("verify", "exact window verification of the relations");
    common(verify);
    verify->add_option("--window", window, "truncation length N");
    verify->add_option("--gens", gens_text, "generator names, comma separated");
    verify->add_option("--relations", relations_text, "families: tck,ck,elcond,claims,projections");
    verify->add_option("--max-len", max_len, "word length for claims and semi-saturation");

    std::size_t oracle_len = 4;
    auto* oracle = app.add_subcommand("oracle", "symbolic zero test against the matrix representation");
    common(oracle);
    oracle->add_option("--max-len", oracle_len);
    oracle->add_option("--window", window, "truncation length N");
    oracle->add_option("--gens", gens_text, "generator names, comma separated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto A = parse_spec(slurp(o.spec_path));
        const auto& u = A.universe();
        ClassGraph G(A);
        auto default_gens = [&] { return gens_text.empty() ? u.sample(3) : parse_list(gens_text, u); };

        if (*validate) {
            A.validate();
            emit(o, Json{{"schema", kSchema}, {"valid", true}, {"matrix", A.summary()}}, "ok: " + A.summary());
        } else if (*analyze_cmd) {
            A.validate();
            auto reading = reading_name == "literal" ? Reading::literal : Reading::edge_departure;
            auto r = analyze(A, reading);
            emit(o, to_json(r, u), render_text(r, u));
            if (o.strict) {
                const auto& v = r.verdicts;
                for (auto* x : {&v.terminal_circuit, &v.transitive, &v.permutation, &v.cofinal, &v.reaches_circuit,
                                &v.transitory_literal, &v.transitory_edge_departure})
                    verdict_exit(o, x->answer != Answer::unknown && x->cert.exact);
            }
        } else if (*entry) {
            bool a = A.entry(parse_generator(gi, u), parse_generator(gj, u));
            emit(o, Json{{"schema", kSchema}, {"i", gi}, {"j", gj}, {"entry", a ? 1 : 0}}, a ? "1" : "0");
        } else if (*unital) {
            auto r = A.is_unital();
            Json j = to_json(r, u);
            j["schema"] = kSchema;
            std::string text = r.unital ? "yes" : "no";
            if (r.zero_cluster) text += " (zero cluster point along column track " + u.names()[r.zero_cluster->track] + ")";
            if (r.witness_y && !r.witness_y->empty()) {
                text += " (Y =";
                for (auto& y : *r.witness_y) text += " " + u.name(y);
                text += ")";
            }
            emit(o, j, text);
            verdict_exit(o, r.unital);
        } else if (*clusters) {
            Json arr = Json::array();
            std::string text;
            for (auto& c : A.column_cluster_points()) {
                arr.push_back(to_json(c, u));
                text += c.column.to_string(u) + "\n";
            }
            if (text.empty()) text = "(none)\n";
            text.pop_back();
            emit(o, Json{{"schema", kSchema}, {"cluster_points", arr}}, text);
        } else if (*rewrite_cmd) {
            auto w = parse_opword(word_text, u);
            auto m = w ? rewrite(A, *w) : Monomial::zero();
            emit(o, Json{{"schema", kSchema}, {"word", word_text}, {"normal_form", render(m, u)}}, render(m, u));
        } else if (*member) {
            auto xi = parse_point(point_text, A);
            bool in = contains(A, xi, parse_word(t_text, u));
            emit(o, Json{{"schema", kSchema}, {"point", to_json(xi, u)}, {"t", t_text}, {"member", in}}, in ? "yes" : "no");
            verdict_exit(o, in);
        } else if (*act_cmd) {
            auto xi = parse_point(point_text, A);
            auto t = parse_word(t_text, u);
            if (!in_domain(A, xi, t)) throw DomainError("t is not in the domain: t^-1 is not in the point");
            auto eta = act(A, xi, t);
            emit(o, Json{{"schema", kSchema}, {"t", t_text}, {"source", to_json(xi, u)}, {"target", to_json(eta, u)}},
                 to_string(eta, u));
        } else if (*fixed) {
            auto f = fixed_point(A, parse_word(t_text, u));
            Json j{{"schema", kSchema}, {"t", t_text}};
            j["fixed_point"] = f ? to_json(*f, u) : Json(nullptr);
            emit(o, j, f ? to_string(*f, u) : "none");
            verdict_exit(o, f.has_value());
        } else if (*ex) {
            auto xi = parse_point(point_text, A);
            auto q = e_x_query(G, xi, parse_generator(x_text, u));
            Json j{{"schema", kSchema}, {"point", to_json(xi, u)}, {"x", x_text}, {"member", q.yes}, {"exact", q.exact}};
            if (q.t) j["s"] = to_string(*q.t, u);
            emit(o, j, std::string(q.yes ? "yes" : "no") + (q.exact ? "" : " [conservative]"));
            verdict_exit(o, q.yes && q.exact);
        } else if (*orbit) {
            auto xi = parse_point(point_text, A);
            Pattern p{parse_positive(base_text, u), parse_list(X_text, u), parse_list(Y_text, u), parse_list(Z_text, u)};
            auto q = pattern_query(G, normalize_pattern(A, p), xi);
            Json j{{"schema", kSchema}, {"point", to_json(xi, u)}, {"member", q.yes}, {"exact", q.exact}};
            if (q.t) j["t"] = to_string(*q.t, u);
            emit(o, j, std::string(q.yes ? "yes" : "no") + (q.exact ? "" : " [conservative]"));
            verdict_exit(o, q.yes && q.exact);
        } else if (*verify) {
            auto G0 = default_gens();
            TruncatedRep rep(A, G0, window);
            for (auto& w : rep.warnings()) std::cerr << "warning: " << w << "\n";
            std::vector<Relation> rels;
            std::vector<std::string> skipped;
            std::set<std::string> want;
            {
                std::stringstream ss(relations_text);
                for (std::string name; std::getline(ss, name, ',');) want.insert(name);
            }
            auto add = [&](std::vector<Relation> v) { rels.insert(rels.end(), v.begin(), v.end()); };
            if (want.count("tck")) add(tck_relations(A, G0));
            if (want.count("ck")) add(ck_relations(A, G0, &skipped));
            if (want.count("elcond")) {
                // (X, Y) with |X| + |Y| <= 2 whose support stays inside G0
                auto g0 = DescribableSet::of(A.shape(), G0);
                std::vector<std::pair<std::vector<Index>, std::vector<Index>>> cases;
                for (auto& a : G0) {
                    cases.push_back({{a}, {}});
                    cases.push_back({{}, {a}});
                    for (auto& b : G0) {
                        if (a < b) cases.push_back({{a, b}, {}});
                        if (a != b) cases.push_back({{a}, {b}});
                    }
                }
                for (auto& [X, Y] : cases) {
                    auto sup = A.axyj_support(X, Y);
                    if (sup.finite && sup.set.subset_of(g0)) rels.push_back(elcond_relation(A, X, Y, G0));
                }
            }
            if (want.count("claims")) {
                add(claim_relations(A, G0, max_len));
                add(semi_saturation_relations(A, G0, max_len));
            }
            Json arr = Json::array();
            std::string text;
            bool all = true;
            for (auto& r : rels) {
                WindowReport w;
                try {
                    w = rep.verify(r);
                } catch (const DomainError& e) {
                    skipped.push_back(r.id + " (" + e.what() + ")");
                    continue;
                }
                all &= w.pass;
                arr.push_back(to_json(w, u));
                if (!w.pass) text += "FAIL " + w.relation + ": " + w.detail + "\n";
            }
            Json proj = Json::array();
            if (want.count("projections")) {
                auto circuits = enumerate_circuits(G, 2);
                for (auto& c : circuits.circuits) {
                    bool inside = true;
                    for (auto& g : c.circuit) inside &= rep.in_gens(g);
                    if (!inside) continue;
                    auto gamma = GroupWord::positive(c.circuit);
                    auto cmp = projection_compare(rep, rel::e(gamma), rel::e(gamma.inverse()));
                    auto ip = infinite_projection_witness(rep, {c.circuit.back()}, c.circuit);
                    Json pj{{"circuit", to_string(c.circuit, u)},
                            {"e_gamma_vs_e_gamma_inverse", to_string(cmp.order)},
                            {"window", {cmp.lo, cmp.hi}},
                            {"vv*<=v*v", ip.leq},
                            {"strict", ip.strict}};
                    if (ip.separating) pj["separating_vector"] = to_string(*ip.separating, u);
                    proj.push_back(pj);
                    all &= ip.leq && (cmp.order == Order::less || cmp.order == Order::equal);
                    text += "circuit " + to_string(c.circuit, u) + ": e(g) " + to_string(cmp.order) + " e(g^-1); vv* " +
                            (ip.strict ? "<" : ip.leq ? "=" : "not <=") + " v*v\n";
                }
            }
            text += std::to_string(arr.size()) + " relations at depth " + std::to_string(window) + ": " +
                    (all ? "all exact-pass" : "FAILURES");
            if (!skipped.empty())
                text += "\n" + std::to_string(skipped.size()) + " skipped (window empty at this depth; see --json)";
            emit(o, Json{{"schema", kSchema}, {"depth", window}, {"basis_size", rep.basis().size()}, {"reports", arr},
                         {"projections", proj}, {"skipped", skipped}, {"pass", all}},
                 text);
            if (!all) throw Failure{1};
        } else if (*oracle) {
            auto G0 = default_gens();
            TruncatedRep rep(A, G0, window);
            Json mism = Json::array();
            std::size_t n = 0;
            for (auto& t : all_reduced_words(G0, oracle_len)) {
                ++n;
                bool sym = is_zero_u(G, t, Ambient::tau);
                bool mat = rep.matrix(u_word(t)).is_zero();
                if (sym != mat) mism.push_back({{"t", to_string(t, u)}, {"symbolic_zero", sym}, {"matrix_zero", mat}});
            }
            std::string text = std::to_string(n) + " words, " + std::to_string(mism.size()) + " mismatches";
            emit(o, Json{{"schema", kSchema}, {"words", n}, {"mismatches", mism}}, text);
            if (!mism.empty()) throw Failure{1};
        }
    } catch (const Failure& f) {
        return f.code;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
