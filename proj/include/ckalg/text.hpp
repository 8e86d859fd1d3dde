#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "describable_set.hpp"
#include "error.hpp"
#include "universe.hpp"

namespace ckalg {

// Character cursor over one line of input; errors carry line/column.
class Cursor {
public:
    Cursor(std::string_view s, int line = 0) : s_(s), line_(line) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }
    int column() const { return static_cast<int>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg, line_ > 0 ? line_ : 1, column()); }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) != w) return false;
        std::size_t e = pos_ + w.size();
        if (e < s_.size() && is_ident(s_[e])) return false;
        pos_ = e;
        return true;
    }
    void expect_word(std::string_view w) {
        if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
    }

    static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string ident() {
        skip_ws();
        std::size_t b = pos_;
        while (pos_ < s_.size() && is_ident(s_[pos_])) ++pos_;
        if (b == pos_) fail("expected a name");
        return std::string(s_.substr(b, pos_ - b));
    }

    long integer() {
        skip_ws();
        std::size_t b = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t d = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d == pos_ || pos_ - d > 15) {
            pos_ = b;
            fail("expected an integer");
        }
        return std::stol(std::string(s_.substr(b, pos_ - b)));
    }

    bool bit() {
        long v = integer();
        if (v != 0 && v != 1) fail("expected 0 or 1");
        return v == 1;
    }

private:
    std::string_view s_;
    int line_;
    std::size_t pos_ = 0;
};

namespace detail {

// One item of a set expression; appends to `acc`.
inline void parse_set_item(Cursor& c, const IndexUniverse& u, DescribableSet& acc) {
    if (c.accept('{')) {
        if (c.accept('}')) return;
        do parse_set_item(c, u, acc);
        while (c.accept(','));
        c.expect('}');
        return;
    }
    std::size_t start = c.pos();
    std::string name = c.ident();
    if (c.peek_raw() != '[') {
        auto i = u.lookup(name);
        if (!i) {
            c.set_pos(start);
            c.fail("unknown index '" + name + "'");
        }
        acc.insert(*i);
        return;
    }
    auto t = u.track_id(name);
    if (!u.tracked() || !t) {
        c.set_pos(start);
        c.fail("unknown track '" + name + "'");
    }
    c.expect('[');
    if (c.accept('*')) {
        c.expect(']');
        acc = acc.unite(DescribableSet::tail(u.shape(), *t, 1));
        return;
    }
    long n = c.integer();
    if (n < 1) c.fail("track positions start at 1");
    if (c.accept('.')) {
        c.expect('.');
        long step = 1;
        if (c.accept_word("step")) {
            step = c.integer();
            if (step < 1) c.fail("step must be positive");
        }
        c.expect(']');
        acc = acc.unite(DescribableSet::tail(u.shape(), *t, n, step));
        return;
    }
    c.expect(']');
    acc.insert(Index{*t, n});
}

} // namespace detail

// setexpr := item (',' item)*
inline DescribableSet parse_setexpr(Cursor& c, const IndexUniverse& u) {
    DescribableSet acc = DescribableSet::empty(u.shape());
    do detail::parse_set_item(c, u, acc);
    while (c.accept(','));
    return acc;
}

inline DescribableSet parse_set(std::string_view text, const IndexUniverse& u) {
    Cursor c(text);
    auto s = parse_setexpr(c, u);
    if (!c.at_end()) c.fail("trailing input in set");
    return s;
}

inline Index parse_index(Cursor& c, const IndexUniverse& u) {
    c.skip_ws();
    std::size_t b = c.pos();
    std::string full = c.ident();
    if (c.peek_raw() == '[') {
        c.expect('[');
        full += "[" + std::to_string(c.integer()) + "]";
        c.expect(']');
    }
    auto i = u.lookup(full);
    if (!i) {
        c.set_pos(b);
        c.fail("unknown index '" + full + "'");
    }
    return *i;
}

} // namespace ckalg
