#ifndef DIVPOW_FIELD_HPP
#define DIVPOW_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "divpow/errors.hpp"

namespace divpow {

/// Coefficient field descriptor: the rationals (characteristic 0) or a prime
/// field F_p with p <= 2^31.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    static bool is_prime_u32(std::uint32_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    static FieldSpec rationals() { return FieldSpec{0}; }

    static FieldSpec prime(std::uint32_t p) {
        FieldSpec f{p};
        f.validate();
        return f;
    }

    void validate() const {
        if (characteristic == 0) return;
        if (characteristic > (1u << 31))
            throw validation_error("characteristic exceeds 2^31");
        if (!is_prime_u32(characteristic))
            throw validation_error("characteristic " + std::to_string(characteristic) +
                                   " is not prime");
    }

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;
};

/// Exact element of a FieldSpec field. Rationals are reduced fractions with
/// positive denominator (gmp canonical form); F_p elements are residues in
/// [0, p). Equality is representational equality.
class Scalar {
public:
    Scalar() : field_{0}, q_(0), r_(0) {}

    static Scalar zero(FieldSpec f) { return Scalar(f); }

    static Scalar one(FieldSpec f) {
        Scalar s(f);
        if (f.is_rational()) s.q_ = 1;
        else s.r_ = 1 % f.characteristic;
        return s;
    }

    static Scalar of_int(FieldSpec f, long v) { return of_mpz(f, mpz_class(v)); }

    static Scalar of_mpz(FieldSpec f, const mpz_class& v) {
        Scalar s(f);
        if (f.is_rational()) {
            s.q_ = mpq_class(v);
        } else {
            mpz_class m = v % f.characteristic;
            if (m < 0) m += f.characteristic;
            s.r_ = m.get_ui();
        }
        return s;
    }

    static Scalar of_mpq(FieldSpec f, const mpq_class& v) {
        if (!f.is_rational())
            throw validation_error("rational literal over a finite field");
        Scalar s(f);
        s.q_ = v;
        s.q_.canonicalize();
        return s;
    }

    FieldSpec field() const { return field_; }
    bool is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return *this == one(field_); }

    const mpq_class& rational() const {
        if (!field_.is_rational()) throw validation_error("not a rational scalar");
        return q_;
    }
    std::uint64_t residue() const {
        if (field_.is_rational()) throw validation_error("not a residue scalar");
        return r_;
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_rational()) s.q_ = q_ + o.q_;
        else s.r_ = (r_ + o.r_) % field_.characteristic;
        return s;
    }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_rational()) s.q_ = -q_;
        else s.r_ = r_ == 0 ? 0 : field_.characteristic - r_;
        return s;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_rational()) {
            s.q_ = q_ * o.q_;
        } else {
            unsigned __int128 prod = static_cast<unsigned __int128>(r_) * o.r_;
            s.r_ = static_cast<std::uint64_t>(prod % field_.characteristic);
        }
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw validation_error("inverse of zero");
        Scalar s(field_);
        if (field_.is_rational()) {
            s.q_ = 1 / q_;
        } else {
            // extended euclid on (r_, p)
            std::int64_t t = 0, newt = 1;
            std::int64_t r = field_.characteristic, newr = static_cast<std::int64_t>(r_);
            while (newr != 0) {
                std::int64_t q = r / newr;
                std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
                tmp = r - q * newr; r = newr; newr = tmp;
            }
            if (t < 0) t += field_.characteristic;
            s.r_ = static_cast<std::uint64_t>(t);
        }
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar pow(unsigned long e) const {
        Scalar acc = one(field_), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ &&
               (field_.is_rational() ? q_ == o.q_ : r_ == o.r_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const {
        if (field_.is_rational()) return q_.get_str();
        return std::to_string(r_);
    }

private:
    explicit Scalar(FieldSpec f) : field_(f), q_(0), r_(0) {}

    void check(const Scalar& o) const {
        if (!(field_ == o.field_))
            throw validation_error("scalar field mismatch");
    }

    FieldSpec field_;
    mpq_class q_;
    std::uint64_t r_;
};

/// C(a+b, a), exactly. Mirrors the convention that the coefficient attached
/// to gamma^a * gamma^b collisions is the number of (a,b)-shuffles.
inline mpz_class binomial(unsigned long a, unsigned long b) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), a + b, a);
    return out;
}

/// binomial(a, b) reduced into a coefficient field.
inline Scalar binomial_scalar(FieldSpec f, unsigned long a, unsigned long b) {
    return Scalar::of_mpz(f, binomial(a, b));
}

/// Plain C(n, k).
inline mpz_class choose(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// True iff p divides C(n,k) for every 1 <= k <= n-1. Equivalent to n being
/// a power of p; the equivalence is asserted by tests, the implementation is
/// the literal divisibility check.
inline bool binomial_row_all_divisible(unsigned long n, std::uint32_t p) {
    if (n == 0) throw validation_error("binomial_row_all_divisible requires n >= 1");
    if (!FieldSpec::is_prime_u32(p))
        throw validation_error(std::to_string(p) + " is not prime");
    for (unsigned long k = 1; k + 1 <= n; ++k) {
        if (!mpz_divisible_ui_p(choose(n, k).get_mpz_t(), p)) return false;
    }
    return true;
}

} // namespace divpow

#endif
