#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sw {

// Arbitrary-precision rational, always reduced with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    long to_long() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }
    Rational abs() const { return v_ < 0 ? -*this : *this; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class v_;
};

// Element of the cyclotomic field Q(zeta_N), stored as the canonical residue
// modulo the N-th cyclotomic polynomial and always reduced to the minimal
// conductor (rationals live at N=1).  Mixed-conductor arithmetic lifts both
// operands into Q(zeta_lcm) first.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
    Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}
    Cyclotomic(long n) : conductor_(1), coeffs_{Rational(n)} {}

    // Canonical residue of sum raw[j] * zeta_N^j modulo Phi_N.
    static Cyclotomic from_coeffs(const std::vector<Rational>& raw, long N);
    static Cyclotomic zeta(long N);
    static Cyclotomic parse(const std::string& s);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return conductor_ == 1 && coeffs_[0].is_zero(); }
    bool is_rational() const { return conductor_ == 1; }
    Rational rational_part() const; // requires is_rational()

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic inverse() const; // DivisionByZero on 0
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    Cyclotomic pow(long e) const;

    bool operator==(const Cyclotomic& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // Total order on canonical representations, used for map keys.
    bool operator<(const Cyclotomic& o) const;

    // Rationals serialize as "p/q"; proper cyclotomics as
    // "poly(zN): c0 + c1*z + c2*z^2 + ...".  Round-trips exactly.
    std::string str() const;

private:
    long conductor_;
    std::vector<Rational> coeffs_; // length = phi(conductor_)
    void canonicalize();
    Cyclotomic lifted_to(long M) const;
};

Cyclotomic cyclo_normalize(const std::vector<Rational>& raw, long N);
Cyclotomic cyclo_invert(const Cyclotomic& x);

long euler_phi(long n);
std::vector<long> divisors_of(long n);
// Coefficients of Phi_N, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(long N);

// Parses either a rational or a cyclotomic string; also accepts the
// shorthand "zN" / "zN^k" for powers of roots of unity.
Cyclotomic parse_scalar(const std::string& s);

} // namespace sw
