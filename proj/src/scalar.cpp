#include "pbwkit/scalar.hpp"

#include "pbwkit/error.hpp"

#include <numeric>
#include <utility>

namespace pbwkit {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::uint64_t limbs[2] = {std::uint64_t(u), std::uint64_t(u >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (neg) z = -z;
    return z;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return std::uint64_t((unsigned __int128)a * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_class pp;
    mpz_import(pp.get_mpz_t(), 1, -1, sizeof(std::uint64_t), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(std::uint64_t), 0, 0, r.get_mpz_t());
    return out;
}

} // namespace

Scalar::Scalar(const Scalar& o) : kind_(o.kind_), a_(o.a_), b_(o.b_) {
    if (o.big_) big_ = new mpq_class(*o.big_);
}

Scalar::Scalar(Scalar&& o) noexcept : kind_(o.kind_), a_(o.a_), b_(o.b_), big_(o.big_) {
    o.big_ = nullptr;
    o.kind_ = Kind::Small;
    o.a_ = 0;
    o.b_ = 1;
}

Scalar& Scalar::operator=(const Scalar& o) {
    if (this == &o) return *this;
    Scalar tmp(o);
    *this = std::move(tmp);
    return *this;
}

Scalar& Scalar::operator=(Scalar&& o) noexcept {
    if (this == &o) return *this;
    delete big_;
    kind_ = o.kind_;
    a_ = o.a_;
    b_ = o.b_;
    big_ = o.big_;
    o.big_ = nullptr;
    o.kind_ = Kind::Small;
    o.a_ = 0;
    o.b_ = 1;
    return *this;
}

Scalar::~Scalar() { delete big_; }

Scalar Scalar::ratio(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return from_i128(num, den);
}

Scalar Scalar::from_mpq(const mpq_class& q) {
    Scalar s;
    s.kind_ = Kind::Big;
    s.big_ = new mpq_class(q);
    s.big_->canonicalize();
    s.demote();
    return s;
}

Scalar Scalar::modular(long long v, std::uint64_t p) {
    Scalar s;
    s.kind_ = Kind::Mod;
    long long m = (long long)p;
    long long r = v % m;
    if (r < 0) r += m;
    s.a_ = r;
    s.b_ = m;
    return s;
}

Scalar Scalar::from_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    Scalar s;
    if (fits64(num) && fits64(den)) {
        s.a_ = std::int64_t(num);
        s.b_ = std::int64_t(den);
        return s;
    }
    s.kind_ = Kind::Big;
    s.big_ = new mpq_class(mpz_from_i128(num), mpz_from_i128(den));
    s.demote();
    return s;
}

void Scalar::demote() {
    if (kind_ != Kind::Big) return;
    if (big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
        a_ = big_->get_num().get_si();
        b_ = big_->get_den().get_si();
        delete big_;
        big_ = nullptr;
        kind_ = Kind::Small;
    }
}

Scalar Scalar::mod_of(const Scalar& x, std::uint64_t p) {
    if (x.kind_ == Kind::Mod) return x;
    std::uint64_t num, den;
    if (x.kind_ == Kind::Small) {
        num = Scalar::modular(x.a_, p).residue();
        den = Scalar::modular(x.b_, p).residue();
    } else {
        num = mpz_mod_u(x.big_->get_num(), p);
        den = mpz_mod_u(x.big_->get_den(), p);
    }
    if (den == 0) throw Error(ErrorCode::FieldMismatch, "denominator divisible by the characteristic");
    Scalar s;
    s.kind_ = Kind::Mod;
    s.b_ = std::int64_t(p);
    s.a_ = std::int64_t(mulmod(num, powmod(den, p - 2, p), p));
    return s;
}

std::uint64_t Scalar::common_modulus(const Scalar& x, const Scalar& y) {
    std::uint64_t p = x.modulus(), q = y.modulus();
    if (p && q && p != q) throw Error(ErrorCode::FieldMismatch, "scalars over different prime fields");
    return p ? p : q;
}

bool Scalar::is_zero() const {
    return kind_ == Kind::Big ? sgn(*big_) == 0 : a_ == 0;
}

bool Scalar::is_one() const {
    if (kind_ == Kind::Big) return *big_ == 1;
    if (kind_ == Kind::Mod) return a_ == 1 % b_;
    return a_ == 1 && b_ == 1;
}

bool Scalar::is_integer() const {
    if (kind_ == Kind::Big) return big_->get_den() == 1;
    return kind_ == Kind::Mod || b_ == 1;
}

bool Scalar::is_negative() const {
    if (kind_ == Kind::Big) return sgn(*big_) < 0;
    return kind_ == Kind::Small && a_ < 0;
}

mpq_class Scalar::to_mpq() const {
    if (kind_ == Kind::Mod) throw Error(ErrorCode::FieldMismatch, "no rational value for an F_p scalar");
    if (kind_ == Kind::Big) return *big_;
    return mpq_class(mpz_class(std::to_string(a_)), mpz_class(std::to_string(b_)));
}

std::string Scalar::str() const {
    if (kind_ == Kind::Big) return big_->get_str();
    if (kind_ == Kind::Mod || b_ == 1) return std::to_string(a_);
    return std::to_string(a_) + "/" + std::to_string(b_);
}

Scalar Scalar::operator-() const {
    if (kind_ == Kind::Mod) {
        Scalar s = *this;
        if (s.a_) s.a_ = b_ - a_;
        return s;
    }
    if (kind_ == Kind::Big) return from_mpq(-*big_);
    return from_i128(-(i128)a_, b_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (kind_ == Kind::Mod) {
        Scalar s = *this;
        s.a_ = std::int64_t(powmod(std::uint64_t(a_), std::uint64_t(b_) - 2, std::uint64_t(b_)));
        return s;
    }
    if (kind_ == Kind::Big) return from_mpq(1 / *big_);
    return from_i128(b_, a_);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    using K = Scalar::Kind;
    if (x.kind_ == K::Small && y.kind_ == K::Small) {
        if (x.b_ == y.b_) return Scalar::from_i128((i128)x.a_ + y.a_, x.b_);
        return Scalar::from_i128((i128)x.a_ * y.b_ + (i128)y.a_ * x.b_, (i128)x.b_ * y.b_);
    }
    if (std::uint64_t p = Scalar::common_modulus(x, y)) {
        Scalar u = Scalar::mod_of(x, p), v = Scalar::mod_of(y, p);
        std::uint64_t r = std::uint64_t(u.a_) + std::uint64_t(v.a_);
        if (r >= p) r -= p;
        u.a_ = std::int64_t(r);
        return u;
    }
    return Scalar::from_mpq(x.to_mpq() + y.to_mpq());
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    using K = Scalar::Kind;
    if (x.kind_ == K::Small && y.kind_ == K::Small) {
        if (x.a_ == 0 || y.a_ == 0) return Scalar();
        return Scalar::from_i128((i128)x.a_ * y.a_, (i128)x.b_ * y.b_);
    }
    if (std::uint64_t p = Scalar::common_modulus(x, y)) {
        Scalar u = Scalar::mod_of(x, p), v = Scalar::mod_of(y, p);
        u.a_ = std::int64_t(mulmod(std::uint64_t(u.a_), std::uint64_t(v.a_), p));
        return u;
    }
    return Scalar::from_mpq(x.to_mpq() * y.to_mpq());
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
    using K = Scalar::Kind;
    if (x.kind_ == K::Small && y.kind_ == K::Small) return x.a_ == y.a_ && x.b_ == y.b_;
    if (std::uint64_t p = Scalar::common_modulus(x, y))
        return Scalar::mod_of(x, p).a_ == Scalar::mod_of(y, p).a_;
    return x.to_mpq() == y.to_mpq();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 62) || !is_prime(p))
        throw Error(ErrorCode::ValidationError, "characteristic " + std::to_string(p) + " is not a supported prime");
    Field f;
    f.p_ = p;
    return f;
}

Scalar Field::make(long long v) const { return p_ ? Scalar::modular(v, p_) : Scalar(v); }

Scalar Field::make(const mpq_class& q) const { return convert(Scalar::from_mpq(q)); }

Scalar Field::convert(const Scalar& s) const {
    if (!p_) {
        if (s.is_modular()) throw Error(ErrorCode::FieldMismatch, "F_p scalar used over Q");
        return s;
    }
    if (s.is_modular() && s.modulus() != p_) throw Error(ErrorCode::FieldMismatch, "scalars over different prime fields");
    return s * Scalar::modular(1, p_);
}

std::string Field::name() const { return p_ ? "Fp(" + std::to_string(p_) + ")" : "Q"; }

} // namespace pbwkit
