#include "gln/scalar.hpp"

namespace gln {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(mpz_class(n), mpz_class(d));
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (v.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

ModP::ModP(long n) {
    long m = n % (long)P;
    if (m < 0) m += (long)P;
    v_ = (std::uint64_t)m;
}

ModP ModP::inv() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    std::uint64_t base = v_, e = P - 2, r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    return raw(r);
}

Jet2 Jet2::inv() const {
    if (a_.is_zero()) throw std::domain_error("jet with zero value part is not invertible");
    Rational ai = a_.inv();
    return Jet2(ai, -(ai * ai * b_));
}

std::string mode_name(Mode m) { return m == Mode::Rational ? "rational" : "prime-field"; }

Mode parse_mode(const std::string& s) {
    if (s == "rational") return Mode::Rational;
    if (s == "prime-field" || s == "prime") return Mode::PrimeField;
    throw std::invalid_argument("unknown mode: " + s);
}

}  // namespace gln
