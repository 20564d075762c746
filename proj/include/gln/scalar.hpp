#pragma once

// Exact scalar types.  Everything downstream is templated on a field type F
// satisfying the Field concept below; parameters are always carried through
// their square roots, so no field ever needs a sqrt operation.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gln {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational parse(const std::string& s);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    Rational inv() const;
    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

private:
    mpq_class v_;
};

// Z/pZ with the Mersenne prime 2^61 - 1.
class ModP {
public:
    static constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;

    ModP() : v_(0) {}
    ModP(long n);
    static ModP raw(std::uint64_t v) { ModP r; r.v_ = v % P; return r; }

    ModP& operator+=(const ModP& o) { v_ += o.v_; if (v_ >= P) v_ -= P; return *this; }
    ModP& operator-=(const ModP& o) { v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_; return *this; }
    ModP& operator*=(const ModP& o) { v_ = mulmod(v_, o.v_); return *this; }
    ModP& operator/=(const ModP& o) { return *this *= o.inv(); }

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    ModP operator-() const { return raw(v_ == 0 ? 0 : P - v_); }

    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
    friend bool operator<(const ModP& a, const ModP& b) { return a.v_ < b.v_; }

    bool is_zero() const { return v_ == 0; }
    ModP inv() const;
    std::string str() const { return std::to_string(v_); }
    std::uint64_t value() const { return v_; }

private:
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
        unsigned __int128 x = (unsigned __int128)a * b;
        std::uint64_t lo = (std::uint64_t)(x & P), hi = (std::uint64_t)(x >> 61);
        std::uint64_t r = lo + hi;
        if (r >= P) r -= P;
        return r;
    }
    std::uint64_t v_;
};

// First-order jets a + b h with h^2 = 0; used for the q = 1 + h expansion.
class Jet2 {
public:
    Jet2() = default;
    Jet2(long n) : a_(n), b_(0) {}
    Jet2(Rational a, Rational b = Rational(0)) : a_(std::move(a)), b_(std::move(b)) {}
    static Jet2 h() { return Jet2(Rational(0), Rational(1)); }

    Jet2& operator+=(const Jet2& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Jet2& operator-=(const Jet2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Jet2& operator*=(const Jet2& o) { b_ = a_ * o.b_ + b_ * o.a_; a_ *= o.a_; return *this; }
    Jet2& operator/=(const Jet2& o) { return *this *= o.inv(); }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
    friend Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
    Jet2 operator-() const { return Jet2(-a_, -b_); }

    friend bool operator==(const Jet2& x, const Jet2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    Jet2 inv() const;
    std::string str() const { return a_.str() + " + (" + b_.str() + ")h"; }
    const Rational& value() const { return a_; }
    const Rational& slope() const { return b_; }

private:
    Rational a_, b_;
};

template <class F>
concept Field = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inv() } -> std::convertible_to<F>;
    { a.str() } -> std::convertible_to<std::string>;
    F(1);
};

// x^e for any integer e; throws on 0^(negative).
template <Field F>
F power(F x, long e) {
    if (e < 0) {
        x = x.inv();
        e = -e;
    }
    F r(1);
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

template <Field F>
F sign_power(long e) { return (e % 2 == 0) ? F(1) : F(-1); }

enum class Mode { Rational, PrimeField };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

}  // namespace gln
