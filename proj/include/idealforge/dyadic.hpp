#pragma once

#include "idealforge/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace idealforge {

/// Exact dyadic rational num / 2^exp with exp >= 0, normalized so that exp = 0
/// or num is odd. Normalization happens at construction; no unnormalized value
/// escapes, so structural equality equals semantic equality.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}
    Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}
    Dyadic(BigInt num, int exp);

    const BigInt& num() const { return num_; }
    int exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    Rat to_rat() const { return Rat(num_, BigInt(1) << exp_); }

    /// Exact conversion from a rational; nullopt unless den is a power of two.
    static std::optional<Dyadic> from_rat(const Rat& r);

    /// Value times 2^s (s of either sign); stays dyadic.
    Dyadic mul_pow2(int s) const;

    BigInt floor() const;
    Dyadic frac() const { return *this - Dyadic(floor()); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const { Dyadic d; d.num_ = -num_; d.exp_ = exp_; return d; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.exp_ == b.exp_ && a.num_ == b.num_; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b);
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    /// "p/2^k", with "/2^k" omitted when k = 0.
    std::string str() const;

    /// Accepts "p", "p/2^k", and "p/q" with q a power of two.
    static std::optional<Dyadic> parse(std::string_view text);

private:
    BigInt num_;
    int exp_;
};

inline bool operator<(const Dyadic& a, const Rat& b) { return a.to_rat() < b; }
inline bool operator<(const Rat& a, const Dyadic& b) { return a < b.to_rat(); }
inline bool operator<=(const Dyadic& a, const Rat& b) { return a.to_rat() <= b; }
inline bool operator<=(const Rat& a, const Dyadic& b) { return a <= b.to_rat(); }
inline bool operator==(const Dyadic& a, const Rat& b) { return a.to_rat() == b; }
inline bool operator==(const Rat& a, const Dyadic& b) { return a == b.to_rat(); }

/// The spec'd normalizer: returns the unique normalized representation of
/// num / 2^exp. Same as the constructor; kept as a named entry point.
inline Dyadic dyadic_normalize(BigInt num, int exp) { return Dyadic(std::move(num), exp); }

/// The smallest-exponent, then smallest-numerator dyadic strictly inside
/// (lo, hi). Deterministic; total because dyadics are dense. Requires lo < hi.
Dyadic dyadic_in_open_interval(const Rat& lo, const Rat& hi);

}  // namespace idealforge
