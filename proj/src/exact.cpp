#include "idealforge/dyadic.hpp"
#include "idealforge/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

namespace idealforge {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lsb;

// Parses a decimal integer with optional leading '-'. Returns false on junk.
bool parse_int(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-') {
        neg = true;
        i = 1;
        if (s.size() == 1) return false;
    }
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

bool is_power_of_two(const BigInt& x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(BigInt(abs(num_)), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::inverse() const {
    if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
    return Rat(den_, num_);
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

BigInt Rat::floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && num_ % den_ != 0) --q;
    return q;
}

Rat Rat::mul_pow2(int s) const {
    if (s >= 0) return Rat(num_ << s, den_);
    return Rat(num_, den_ << (-s));
}

std::string Rat::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

std::optional<Rat> Rat::parse(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        BigInt n;
        if (!parse_int(text, n)) return std::nullopt;
        return Rat(std::move(n));
    }
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = text.substr(slash + 1);
    BigInt n;
    if (!parse_int(num_part, n)) return std::nullopt;
    if (den_part.size() > 2 && den_part.substr(0, 2) == "2^") {
        BigInt k;
        if (!parse_int(den_part.substr(2), k) || k < 0 || k > 1000000) return std::nullopt;
        return Rat(std::move(n), BigInt(1) << static_cast<unsigned>(k));
    }
    BigInt d;
    if (!parse_int(den_part, d) || d == 0) return std::nullopt;
    return Rat(std::move(n), std::move(d));
}

Dyadic::Dyadic(BigInt num, int exp) : num_(std::move(num)), exp_(exp) {
    if (exp_ < 0) throw std::domain_error("Dyadic: negative exponent");
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    int tz = static_cast<int>(lsb(BigInt(abs(num_))));
    int k = tz < exp_ ? tz : exp_;
    if (k > 0) {
        num_ >>= k;  // num_/2^k is exact: k <= number of trailing zero bits
        exp_ -= k;
    }
}

std::optional<Dyadic> Dyadic::from_rat(const Rat& r) {
    if (!is_power_of_two(r.den())) {
        if (r.den() == 1) return Dyadic(r.num());
        return std::nullopt;
    }
    return Dyadic(r.num(), static_cast<int>(lsb(r.den())));
}

Dyadic Dyadic::mul_pow2(int s) const {
    if (num_ == 0) return Dyadic();
    if (s >= 0) {
        if (exp_ >= s) return Dyadic(num_, exp_ - s);
        return Dyadic(num_ << (s - exp_), 0);
    }
    return Dyadic(num_, exp_ - s);
}

BigInt Dyadic::floor() const {
    if (exp_ == 0) return num_;
    BigInt p2 = BigInt(1) << exp_;
    BigInt q = num_ / p2;
    if (num_ < 0 && num_ % p2 != 0) --q;
    return q;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_); }

bool operator<(const Dyadic& a, const Dyadic& b) {
    int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
}

std::string Dyadic::str() const {
    std::string s = num_.str();
    if (exp_ != 0) s += "/2^" + std::to_string(exp_);
    return s;
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
    auto r = Rat::parse(text);
    if (!r) return std::nullopt;
    return from_rat(*r);
}

Dyadic dyadic_in_open_interval(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("dyadic_in_open_interval: requires lo < hi");
    for (int k = 0;; ++k) {
        // Smallest integer n with n/2^k > lo; candidate admits a solution iff
        // also n/2^k < hi. At the first admitting exponent every interior grid
        // numerator is odd (an even one would have appeared one level earlier),
        // so the result is already normalized and the tie-break is exact.
        BigInt n = lo.mul_pow2(k).floor() + 1;
        if (Rat(n, BigInt(1) << k) < hi) return Dyadic(n, k);
    }
}

}  // namespace idealforge
