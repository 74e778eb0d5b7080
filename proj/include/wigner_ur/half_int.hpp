#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wigner_ur {

/// Half-integer angular-momentum label, stored as twice its value so that
/// parity never gets lost. Used for j, m, tensor ranks and alpha offsets.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice) : twice_(twice) {}

    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

    /// Accepts "3/2", "-1/2", "2", "+1". Throws std::invalid_argument otherwise.
    static HalfInt parse(const std::string& s);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
    double value() const { return twice_ / 2.0; }

    /// Integer value; throws if the label is half-odd.
    int as_int() const {
        if (!is_integer()) throw std::invalid_argument("HalfInt: not an integer: " + str());
        return twice_ / 2;
    }

    std::string str() const;

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

private:
    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt x) { return HalfInt(x.twice() < 0 ? -x.twice() : x.twice()); }

/// (-1)^x for an integer-valued HalfInt; throws on half-odd exponents.
inline int neg1pow(HalfInt x) {
    if (!x.is_integer()) throw std::invalid_argument("neg1pow: half-odd exponent " + x.str());
    return (x.twice() / 2) % 2 == 0 ? 1 : -1;
}

/// (-1)^(t/2) for even t (t is a twice-value).
inline int neg1pow_twice(int t) {
    if (t % 2 != 0) throw std::invalid_argument("neg1pow_twice: odd twice-value");
    return (t / 2) % 2 == 0 ? 1 : -1;
}

/// A (j, m) pair is valid when |m| <= j and j - m is an integer.
inline bool valid_jm(HalfInt j, HalfInt m) {
    return j.twice() >= 0 && abs(m) <= j && (j.twice() - m.twice()) % 2 == 0;
}

inline void require_jm(HalfInt j, HalfInt m, const char* where) {
    if (!valid_jm(j, m))
        throw std::invalid_argument(std::string(where) + ": invalid (j,m) = (" + j.str() + "," + m.str() + ")");
}

/// Triangle rule |j1-j2| <= j3 <= j1+j2 together with j1+j2+j3 integer.
inline bool triangle(HalfInt j1, HalfInt j2, HalfInt j3) {
    if (j1.twice() < 0 || j2.twice() < 0 || j3.twice() < 0) return false;
    if ((j1.twice() + j2.twice() + j3.twice()) % 2 != 0) return false;
    return abs(j1 - j2) <= j3 && j3 <= j1 + j2;
}

struct Triad {
    HalfInt j1, j2, j3;
    bool satisfies_triangle() const { return triangle(j1, j2, j3); }
};

/// Delta(0 | j1 x j2 x j3): 1 when the triple product contains the scalar irrep.
inline int delta_triad(HalfInt j1, HalfInt j2, HalfInt j3) {
    return triangle(j1, j2, j3) ? 1 : 0;
}

}  // namespace wigner_ur
