#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dnq {

// Vertex of the affine D~n diagram.  The four outer vertices are named
// a, b, c, d; the inner chain vertices are numbered 0 .. n-4.  The canonical
// order used everywhere (printing, term orders, tie-breaking) is
//   a < b < 0 < 1 < ... < n-4 < c < d.
class VarId {
public:
    enum class Kind : std::uint8_t { A = 0, B = 1, Inner = 2, C = 3, D = 4 };

    constexpr VarId() : kind_(Kind::A), idx_(0) {}
    constexpr VarId(Kind k, int idx = 0) : kind_(k), idx_(static_cast<std::int16_t>(idx)) {}

    static constexpr VarId a() { return VarId(Kind::A); }
    static constexpr VarId b() { return VarId(Kind::B); }
    static constexpr VarId c() { return VarId(Kind::C); }
    static constexpr VarId d() { return VarId(Kind::D); }
    static constexpr VarId inner(int i) { return VarId(Kind::Inner, i); }

    Kind kind() const { return kind_; }
    int inner_index() const { return idx_; }
    bool is_inner() const { return kind_ == Kind::Inner; }
    bool is_outer() const { return !is_inner(); }

    friend constexpr auto operator<=>(const VarId& x, const VarId& y) = default;

    std::string name() const {
        switch (kind_) {
            case Kind::A: return "a";
            case Kind::B: return "b";
            case Kind::C: return "c";
            case Kind::D: return "d";
            case Kind::Inner: return std::to_string(idx_);
        }
        return "?";
    }

    static VarId parse(const std::string& s) {
        if (s == "a") return a();
        if (s == "b") return b();
        if (s == "c") return c();
        if (s == "d") return d();
        try {
            size_t pos = 0;
            int i = std::stoi(s, &pos);
            if (pos == s.size() && i >= 0) return inner(i);
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("not a vertex name: '" + s + "'");
    }

private:
    Kind kind_;
    std::int16_t idx_;
};

}  // namespace dnq
