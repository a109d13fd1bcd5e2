#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace pbwkit {

// Element of Q or of F_p. Rationals stay in a pair of machine words while they
// fit and move to GMP otherwise. Mixing a rational with an F_p value reduces the
// rational modulo p.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : a_(v) {}
    Scalar(int v) : a_(v) {}
    static Scalar ratio(long long num, long long den);
    static Scalar from_mpq(const mpq_class& q);
    static Scalar modular(long long v, std::uint64_t p);

    Scalar(const Scalar& o);
    Scalar(Scalar&& o) noexcept;
    Scalar& operator=(const Scalar& o);
    Scalar& operator=(Scalar&& o) noexcept;
    ~Scalar();

    bool is_zero() const;
    bool is_one() const;
    bool is_modular() const { return kind_ == Kind::Mod; }
    std::uint64_t modulus() const { return kind_ == Kind::Mod ? std::uint64_t(b_) : 0; }

    Scalar operator-() const;
    Scalar inverse() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }
    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Rational value; throws for F_p scalars.
    mpq_class to_mpq() const;
    // Residue in [0, p) for F_p scalars.
    std::uint64_t residue() const { return std::uint64_t(a_); }
    bool is_integer() const;
    bool is_negative() const;
    std::string str() const;

private:
    enum class Kind : std::uint8_t { Small, Big, Mod };
    Kind kind_ = Kind::Small;
    std::int64_t a_ = 0; // numerator or residue
    std::int64_t b_ = 1; // positive denominator or modulus
    mpq_class* big_ = nullptr;

    static Scalar from_i128(__int128 num, __int128 den);
    static Scalar mod_of(const Scalar& x, std::uint64_t p);
    static std::uint64_t common_modulus(const Scalar& x, const Scalar& y);
    void demote();
};

class Field {
public:
    Field() = default;
    static Field rational() { return Field(); }
    // Validates that p is a prime below 2^62.
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    Scalar make(long long v) const;
    Scalar make(const mpq_class& q) const;
    Scalar convert(const Scalar& s) const;
    std::string name() const;
    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

} // namespace pbwkit
