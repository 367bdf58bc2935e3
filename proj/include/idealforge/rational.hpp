#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idealforge {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical reduced form: den > 0, gcd(|num|, den) = 1,
/// zero represented as 0/1. Canonicalized at construction, so structural equality
/// coincides with equality of values.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rat inverse() const;

    /// Largest integer <= value (rounds toward -inf, unlike integer division).
    BigInt floor() const;

    /// Value times 2^s, exact for any sign of s.
    Rat mul_pow2(int s) const;

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// "p/q", with "/q" omitted for integers.
    std::string str() const;

    /// Accepts "p", "p/q" and the dyadic form "p/2^k". Returns nullopt on syntax
    /// errors or a zero denominator.
    static std::optional<Rat> parse(std::string_view text);

private:
    BigInt num_;
    BigInt den_;
};

inline int cmp(const Rat& a, const Rat& b) { return a < b ? -1 : (b < a ? 1 : 0); }

}  // namespace idealforge
