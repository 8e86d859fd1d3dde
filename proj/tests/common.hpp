#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ckalg/ckalg.hpp"

namespace testkit {

using namespace ckalg;

inline MatrixSpec fixture(const std::string& name) {
    std::ifstream in(std::string(CKALG_FIXTURES) + "/" + name + ".ckm");
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

inline MatrixSpec o2() { return fixture("o2"); }
inline MatrixSpec golden() { return fixture("golden_mean"); }
inline MatrixSpec flip() { return fixture("permutation"); }
inline MatrixSpec ones() { return fixture("all_ones_infinite"); }
inline MatrixSpec tenth() { return fixture("cofinal_not_simple"); }

inline Index ix(const MatrixSpec& A, const std::string& s) { return A.universe().require(s); }
inline GroupWord gw(const MatrixSpec& A, const std::string& s) { return parse_word(s, A.universe()); }
inline PositiveWord pw(const MatrixSpec& A, const std::string& s) { return parse_positive(s, A.universe()); }
inline SpectrumPoint pt(const MatrixSpec& A, const std::string& s) { return parse_point(s, A); }
inline DescribableSet set(const MatrixSpec& A, const std::string& s) { return parse_set(s, A.universe()); }
inline std::string str(const MatrixSpec& A, const GroupWord& t) { return to_string(t, A.universe()); }
inline std::string str(const MatrixSpec& A, const PositiveWord& w) { return to_string(w, A.universe()); }
inline std::string str(const MatrixSpec& A, const SpectrumPoint& p) { return to_string(p, A.universe()); }

// Reduced words built letter by letter, independent of GroupWord's reduction.
inline std::vector<GroupWord> reduced_upto(const std::vector<Index>& gens, std::size_t len) {
    std::vector<std::vector<Letter>> layer{{}}, all{{}};
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<std::vector<Letter>> next;
        for (auto& w : layer)
            for (auto& g : gens)
                for (int s : {1, -1}) {
                    if (!w.empty() && w.back().g == g && w.back().sign == -s) continue;
                    auto v = w;
                    v.push_back({g, s});
                    next.push_back(v);
                }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::vector<GroupWord> out;
    for (auto& w : all) out.push_back(GroupWord(w));
    return out;
}

inline bool admissible(const MatrixSpec& A, const PositiveWord& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (!A.entry(w[k], w[k + 1])) return false;
    return true;
}

// Membership read straight off the definition: t = alpha beta^-1 with alpha a stem
// prefix, beta admissible, and last(beta) in the root seen at alpha.
inline bool oracle_contains(const MatrixSpec& A, const SpectrumPoint& xi, const GroupWord& t) {
    const auto& ls = t.letters();
    std::size_t k = 0;
    PositiveWord alpha, beta;
    while (k < ls.size() && ls[k].sign > 0) alpha.push_back(ls[k++].g);
    for (std::size_t j = ls.size(); j > k; --j) {
        if (ls[j - 1].sign > 0) return false;
        beta.push_back(ls[j - 1].g);
    }
    if (!xi.has_prefix(alpha) || xi.prefix(alpha.size()).size() != alpha.size()) return false;
    if (beta.empty()) return true;
    if (!admissible(A, beta)) return false;
    auto next = xi.letter(alpha.size());
    bool in_root = next ? A.entry(beta.back(), *next) : xi.root().contains(beta.back());
    return in_root;
}

// Finite universes: reachability by Warshall on the adjacency matrix.
inline std::vector<std::vector<char>> closure(const MatrixSpec& A) {
    auto V = A.universe().sample(1);
    std::size_t n = V.size();
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = A.entry(V[i], V[j]);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = 1;
    return r;
}

inline MatrixSpec from_matrix(const std::vector<std::vector<int>>& a) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < a.size(); ++k) names.push_back(std::to_string(k + 1));
    return MatrixSpec::from_rows(names, a);
}

// Circuits with no exit, by brute force over vertex sequences.
inline std::set<std::set<int>> terminal_cycles(const std::vector<std::vector<int>>& a) {
    int n = static_cast<int>(a.size());
    std::set<std::set<int>> out;
    for (int s = 0; s < n; ++s) {
        // follow out-degree-one vertices from s
        std::vector<int> seq{s};
        std::set<int> seen{s};
        int v = s;
        bool ok = true;
        while (true) {
            int deg = 0, nxt = -1;
            for (int j = 0; j < n; ++j)
                if (a[v][j]) ++deg, nxt = j;
            if (deg != 1) { ok = false; break; }
            if (nxt == s) break;
            if (seen.count(nxt)) { ok = false; break; }
            seen.insert(nxt);
            seq.push_back(nxt);
            v = nxt;
        }
        if (ok) out.insert(seen);
    }
    return out;
}

} // namespace testkit
