#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix_spec.hpp"
#include "universe.hpp"

namespace ckalg {

struct Letter {
    Index g;
    int sign = 1;  // +1 or -1
    Letter inverse() const { return {g, -sign}; }
    auto operator<=>(const Letter&) const = default;
};

using PositiveWord = std::vector<Index>;

// Reduced word in the free group on the universe.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(const std::vector<Letter>& ls) {
        for (auto& l : ls) push(l);
    }
    static GroupWord positive(const PositiveWord& w) {
        GroupWord r;
        for (auto& g : w) r.push({g, 1});
        return r;
    }
    static GroupWord letter(const Index& g, int sign = 1) { return GroupWord({{g, sign}}); }

    const std::vector<Letter>& letters() const { return ls_; }
    std::size_t length() const { return ls_.size(); }
    bool is_identity() const { return ls_.empty(); }
    const Letter& operator[](std::size_t k) const { return ls_[k]; }

    GroupWord inverse() const {
        GroupWord r;
        for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.ls_.push_back(it->inverse());
        return r;
    }

    GroupWord operator*(const GroupWord& o) const {
        GroupWord r = *this;
        for (auto& l : o.ls_) r.push(l);
        return r;
    }

    bool operator==(const GroupWord&) const = default;
    auto operator<=>(const GroupWord& o) const { return ls_ <=> o.ls_; }

private:
    void push(const Letter& l) {
        if (!ls_.empty() && ls_.back().g == l.g && ls_.back().sign == -l.sign) ls_.pop_back();
        else ls_.push_back(l);
    }
    std::vector<Letter> ls_;
};

inline GroupWord reduce_concat(const GroupWord& t, const GroupWord& s) { return t * s; }
inline GroupWord invert(const GroupWord& t) { return t.inverse(); }
inline std::size_t length(const GroupWord& t) { return t.length(); }

// t = alpha beta^-1 with |t| = |alpha| + |beta|.
inline std::optional<std::pair<PositiveWord, PositiveWord>> decompose_pos_neg(const GroupWord& t) {
    const auto& ls = t.letters();
    std::size_t k = 0;
    while (k < ls.size() && ls[k].sign > 0) ++k;
    PositiveWord alpha, beta;
    for (std::size_t a = 0; a < k; ++a) alpha.push_back(ls[a].g);
    for (std::size_t a = k; a < ls.size(); ++a) {
        if (ls[a].sign > 0) return std::nullopt;
        beta.push_back(ls[a].g);
    }
    std::reverse(beta.begin(), beta.end());
    return std::make_pair(alpha, beta);
}

inline PositiveWord concat(PositiveWord a, const PositiveWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline bool is_prefix(const PositiveWord& p, const PositiveWord& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

// Eventually periodic infinite word pre (per)^inf, kept normalized.
class EvPeriodicWord {
public:
    EvPeriodicWord() = default;
    EvPeriodicWord(PositiveWord pre, PositiveWord per) : pre_(std::move(pre)), per_(std::move(per)) {
        if (per_.empty()) throw DomainError("period must be nonempty");
        normalize();
    }

    const PositiveWord& preperiod() const { return pre_; }
    const PositiveWord& period() const { return per_; }

    const Index& at(std::size_t k) const {
        return k < pre_.size() ? pre_[k] : per_[(k - pre_.size()) % per_.size()];
    }
    PositiveWord prefix(std::size_t n) const {
        PositiveWord w;
        for (std::size_t k = 0; k < n; ++k) w.push_back(at(k));
        return w;
    }
    bool has_prefix(const PositiveWord& p) const {
        for (std::size_t k = 0; k < p.size(); ++k)
            if (!(at(k) == p[k])) return false;
        return true;
    }
    // Prefix lengths up to which every position-dependent quantity repeats.
    std::size_t horizon() const { return pre_.size() + per_.size(); }

    EvPeriodicWord drop(std::size_t k) const {
        if (k <= pre_.size()) return EvPeriodicWord(PositiveWord(pre_.begin() + k, pre_.end()), per_);
        std::size_t r = (k - pre_.size()) % per_.size();
        PositiveWord rot(per_.begin() + r, per_.end());
        rot.insert(rot.end(), per_.begin(), per_.begin() + r);
        return EvPeriodicWord({}, rot);
    }
    EvPeriodicWord prepend(const PositiveWord& b) const { return EvPeriodicWord(concat(b, pre_), per_); }

    bool operator==(const EvPeriodicWord&) const = default;

private:
    void normalize() {
        std::size_t P = per_.size();
        for (std::size_t p = 1; p < P; ++p) {
            if (P % p) continue;
            bool ok = true;
            for (std::size_t k = p; k < P && ok; ++k) ok = per_[k] == per_[k - p];
            if (ok) {
                per_.resize(p);
                break;
            }
        }
        while (!pre_.empty() && pre_.back() == per_.back()) {
            pre_.pop_back();
            std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
        }
    }
    PositiveWord pre_, per_;
};

inline bool is_admissible(const MatrixSpec& A, const PositiveWord& w) {
    for (auto& g : w) A.check_index(g);
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (!A.entry(w[k], w[k + 1])) return false;
    return true;
}

inline bool is_admissible(const MatrixSpec& A, const EvPeriodicWord& w) {
    auto whole = concat(w.preperiod(), w.period());
    whole.push_back(w.period().front());
    return is_admissible(A, whole);
}

struct CircuitDecomposition {
    PositiveWord alpha, gamma;
    int sign = 1;
};

// t = alpha gamma^{+-1} alpha^-1 with |t| = 2|alpha| + |gamma|.
inline std::optional<CircuitDecomposition> conjugate_circuit_decomposition(const GroupWord& t) {
    if (t.is_identity()) throw DomainError("conjugate_circuit_decomposition: t = e");
    auto d = decompose_pos_neg(t);
    if (!d) return std::nullopt;
    auto& [pos, neg] = *d;  // t = pos neg^-1
    if (pos.size() == neg.size()) return std::nullopt;
    CircuitDecomposition r;
    if (pos.size() > neg.size()) {
        // pos = alpha gamma, neg = alpha
        if (!is_prefix(neg, pos)) return std::nullopt;
        r.alpha = neg;
        r.gamma.assign(pos.begin() + neg.size(), pos.end());
        r.sign = 1;
    } else {
        // neg = alpha gamma, pos = alpha
        if (!is_prefix(pos, neg)) return std::nullopt;
        r.alpha = pos;
        r.gamma.assign(neg.begin() + pos.size(), neg.end());
        r.sign = -1;
    }
    return r;
}

inline GroupWord rebuild(const CircuitDecomposition& d) {
    auto a = GroupWord::positive(d.alpha);
    auto g = GroupWord::positive(d.gamma);
    return a * (d.sign > 0 ? g : g.inverse()) * a.inverse();
}

// r in F(t/s): |r^-1 s| = |r^-1 t| + 1. Requires t^-1 s to be one letter.
inline bool in_subtree(const GroupWord& t, const GroupWord& s, const GroupWord& r) {
    if ((t.inverse() * s).length() != 1) throw DomainError("in_subtree: t^-1 s must be a single letter");
    return (r.inverse() * s).length() == (r.inverse() * t).length() + 1;
}

// ---- text forms ----

inline std::string to_string(const PositiveWord& w, const IndexUniverse& u) {
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + u.name(w[k]);
    return s;
}

inline std::string to_string(const GroupWord& t, const IndexUniverse& u) {
    if (t.is_identity()) return "e";
    std::string s;
    for (std::size_t k = 0; k < t.length(); ++k)
        s += (k ? " " : "") + std::string(t[k].sign < 0 ? "~" : "") + u.name(t[k].g);
    return s;
}

inline std::string to_string(const EvPeriodicWord& w, const IndexUniverse& u) {
    std::string s = w.preperiod().empty() ? "" : to_string(w.preperiod(), u) + " ";
    return s + "(" + to_string(w.period(), u) + ")^inf";
}

namespace detail {

inline std::vector<std::string> word_tokens(const std::string& text) {
    std::string spaced;
    for (char c : text) {
        if (c == '(' || c == ')') {
            spaced += ' ';
            spaced += c;
            spaced += ' ';
        } else {
            spaced += c;
        }
    }
    std::istringstream in(spaced);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline Letter parse_letter(std::string tok, const IndexUniverse& u) {
    int sign = 1;
    if (!tok.empty() && tok[0] == '~') {
        sign = -1;
        tok.erase(0, 1);
    }
    auto i = u.lookup(tok);
    if (!i) throw InputError("unknown letter '" + tok + "'");
    return {*i, sign};
}

inline bool is_identity_token(const std::string& tok, const IndexUniverse& u) {
    return tok == "e" && !u.lookup("e");
}

} // namespace detail

// "x1 x2 ~y3"; "e" or "" is the identity.
inline GroupWord parse_word(const std::string& text, const IndexUniverse& u) {
    std::vector<Letter> ls;
    for (auto& tok : detail::word_tokens(text)) {
        if (detail::is_identity_token(tok, u)) continue;
        if (tok == "(" || tok == ")" || tok.rfind(")", 0) == 0) throw InputError("unexpected parenthesis in finite word");
        ls.push_back(detail::parse_letter(tok, u));
    }
    return GroupWord(ls);
}

inline PositiveWord parse_positive(const std::string& text, const IndexUniverse& u) {
    PositiveWord w;
    for (auto& tok : detail::word_tokens(text)) {
        if (detail::is_identity_token(tok, u)) continue;
        auto l = detail::parse_letter(tok, u);
        if (l.sign < 0) throw InputError("positive word expected, got '~" + u.name(l.g) + "'");
        w.push_back(l.g);
    }
    return w;
}

inline bool looks_periodic(const std::string& text) { return text.find("^inf") != std::string::npos; }

// "<pre> ( <per> )^inf"
inline EvPeriodicWord parse_periodic(const std::string& text, const IndexUniverse& u) {
    auto toks = detail::word_tokens(text);
    PositiveWord pre, per;
    std::size_t k = 0;
    auto letter = [&](const std::string& tok) {
        auto l = detail::parse_letter(tok, u);
        if (l.sign < 0) throw InputError("infinite words must be positive");
        return l.g;
    };
    for (; k < toks.size() && toks[k] != "("; ++k)
        if (!detail::is_identity_token(toks[k], u)) pre.push_back(letter(toks[k]));
    if (k == toks.size()) throw InputError("expected '(' in eventually periodic word");
    for (++k; k < toks.size() && toks[k] != ")"; ++k) per.push_back(letter(toks[k]));
    if (k + 1 >= toks.size() || toks[k] != ")" || toks[k + 1] != "^inf" || k + 2 != toks.size())
        throw InputError("expected ')^inf' at the end of an eventually periodic word");
    if (per.empty()) throw InputError("empty period");
    return EvPeriodicWord(pre, per);
}

} // namespace ckalg
