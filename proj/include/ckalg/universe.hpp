#pragma once

#include <algorithm>
#include <compare>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace ckalg {

// A generator. Finite universes use t = generator id and n = 0;
// tracked universes use t = track id and n >= 1.
struct Index {
    int t = 0;
    long n = 0;
    auto operator<=>(const Index&) const = default;
};

struct Shape {
    bool tracked = false;
    int width = 0;  // generator count or track count
    bool operator==(const Shape&) const = default;
};

class IndexUniverse {
public:
    enum class Kind { finite, tracked };

    IndexUniverse() = default;
    IndexUniverse(Kind k, std::vector<std::string> names) : kind_(k), names_(std::move(names)) {
        if (names_.empty())
            throw InputError("universe needs at least one name");
        auto sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("duplicate name in universe");
    }

    Kind kind() const { return kind_; }
    bool tracked() const { return kind_ == Kind::tracked; }
    bool finite() const { return kind_ == Kind::finite; }
    int width() const { return static_cast<int>(names_.size()); }
    Shape shape() const { return {tracked(), width()}; }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const Index& i) const {
        if (i.t < 0 || i.t >= width()) return false;
        return tracked() ? i.n >= 1 : i.n == 0;
    }

    std::string name(const Index& i) const {
        if (!contains(i)) return "?";
        if (finite()) return names_[i.t];
        return names_[i.t] + "[" + std::to_string(i.n) + "]";
    }

    std::optional<int> track_id(std::string_view s) const {
        for (int k = 0; k < width(); ++k)
            if (names_[k] == s) return k;
        return std::nullopt;
    }

    // Accepts `a` (finite), `T[n]`, and the shorthand `Tn` / `T_n` (tracked).
    std::optional<Index> lookup(std::string_view s) const {
        if (finite()) {
            auto k = track_id(s);
            if (!k) return std::nullopt;
            return Index{*k, 0};
        }
        std::string_view name, num;
        auto lb = s.find('[');
        if (lb != std::string_view::npos) {
            if (s.back() != ']') return std::nullopt;
            name = s.substr(0, lb);
            num = s.substr(lb + 1, s.size() - lb - 2);
        } else {
            std::size_t p = s.size();
            while (p > 0 && std::isdigit(static_cast<unsigned char>(s[p - 1]))) --p;
            if (p == s.size() || p == 0) return std::nullopt;
            name = s.substr(0, p);
            num = s.substr(p);
            if (name.size() > 1 && name.back() == '_' && !track_id(name)) name.remove_suffix(1);
        }
        auto k = track_id(name);
        if (!k || num.empty() || num.size() > 15) return std::nullopt;
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        long n = std::stol(std::string(num));
        if (n < 1) return std::nullopt;
        return Index{*k, n};
    }

    Index require(std::string_view s) const {
        auto i = lookup(s);
        if (!i) throw InputError("unknown index '" + std::string(s) + "'");
        return *i;
    }

    // First `count` generators in a fixed order (all of them when finite).
    std::vector<Index> sample(long per_track) const {
        std::vector<Index> out;
        if (finite()) {
            for (int k = 0; k < width(); ++k) out.push_back({k, 0});
        } else {
            for (int k = 0; k < width(); ++k)
                for (long n = 1; n <= per_track; ++n) out.push_back({k, n});
        }
        return out;
    }

private:
    Kind kind_ = Kind::finite;
    std::vector<std::string> names_;
};

} // namespace ckalg
