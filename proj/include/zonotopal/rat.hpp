#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "zonotopal/errors.hpp"

namespace zono {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (0 is 0/1).  Thin value wrapper over GMP's mpq_class.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)
    Rat(int n) : v_(n) {}                     // NOLINT(google-explicit-constructor)
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw ParseError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q"; whitespace is not tolerated.
    static Rat parse(const std::string& s) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0)
            throw ParseError("cannot parse rational '" + s + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    Rat pow(unsigned e) const {
        mpq_class r(1);
        mpq_class base = v_;
        for (unsigned i = 0; i < e; ++i) r *= base;
        return Rat(r);
    }

    Rat inverse() const {
        if (is_zero()) throw Error("inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    /// Exact conversion; throws if the value is not an integer that fits.
    long long to_int() const {
        if (v_.get_den() != 1) throw Error("not an integer: " + str());
        if (!v_.get_num().fits_slong_p()) throw Error("integer overflow: " + str());
        return v_.get_num().get_si();
    }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Exact factorial as a Rat (used for apolar pairings and multinomials).
inline Rat factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(mpq_class(f));
}

} // namespace zono

#include <ostream>

namespace zono {
inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
} // namespace zono
