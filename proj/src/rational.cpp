#include "fsprim/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fsprim {

namespace {

using i128 = __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v > kMin && v <= kMax; }

mpq_class make_mpq(std::int64_t num, std::int64_t den)
{
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num);
    mpz_set_si(q.get_den_mpz_t(), den);
    return q;
}

i128 gcd128(i128 a, i128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool mpz_fits_i64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (num == kMin || den == kMin) {
        assign_big(make_mpq(num, den) /* canonicalized below */);
        big_->canonicalize();
        demote_if_small();
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational::Rational(const mpq_class& value) { assign_big(value); demote_if_small(); }

Rational::Rational(const mpz_class& value) { assign_big(mpq_class(value)); demote_if_small(); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
{
}

Rational& Rational::operator=(const Rational& other)
{
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
        if (big_) *big_ = *other.big_;
        else big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Rational::assign_big(mpq_class value)
{
    if (big_) *big_ = std::move(value);
    else big_ = std::make_unique<mpq_class>(std::move(value));
}

void Rational::demote_if_small()
{
    if (!big_) return;
    const mpz_class& n = big_->get_num();
    const mpz_class& d = big_->get_den();
    if (mpz_fits_i64(n) && mpz_fits_i64(d)) {
        std::int64_t nn = mpz_get_si(n.get_mpz_t());
        std::int64_t dd = mpz_get_si(d.get_mpz_t());
        if (nn != kMin && dd != kMin) {
            num_ = nn;
            den_ = dd;
            big_.reset();
        }
    }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept
{
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::uint64_t Rational::numerator_weight() const noexcept
{
    if (big_) return std::numeric_limits<std::uint64_t>::max();
    std::uint64_t mag = num_ < 0 ? static_cast<std::uint64_t>(-num_) : static_cast<std::uint64_t>(num_);
    return mag == 0 ? 0 : mag - 1 + (den_ == 1 ? 0 : static_cast<std::uint64_t>(den_));
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : make_mpq(num_, den_); }

std::int64_t Rational::to_int64() const
{
    if (big_ || den_ != 1) throw std::domain_error("Rational: not a 64-bit integer: " + to_string());
    return num_;
}

std::string Rational::to_string() const
{
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != kMin) {
                num_ = out;
                return *this;
            }
        } else {
            // Knuth's reduced addition.
            std::int64_t g = std::gcd(den_, rhs.den_);
            i128 t = i128(num_) * (rhs.den_ / g) + i128(rhs.num_) * (den_ / g);
            i128 g2 = gcd128(t, g);
            i128 n = t / g2;
            i128 d = i128(den_ / g) * (rhs.den_ / g2);
            if (fits(n) && fits(d)) {
                num_ = static_cast<std::int64_t>(n);
                den_ = static_cast<std::int64_t>(d);
                if (num_ == 0) den_ = 1;
                return *this;
            }
        }
    }
    assign_big(to_mpq() + rhs.to_mpq());
    demote_if_small();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    if (!rhs.big_ && rhs.num_ != kMin) {
        Rational neg;
        neg.num_ = -rhs.num_;
        neg.den_ = rhs.den_;
        return *this += neg;
    }
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    if (!big_ && !rhs.big_) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        std::int64_t g1 = std::gcd(num_, rhs.den_);
        std::int64_t g2 = std::gcd(rhs.num_, den_);
        i128 n = i128(num_ / g1) * (rhs.num_ / g2);
        i128 d = i128(den_ / g2) * (rhs.den_ / g1);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    assign_big(to_mpq() * rhs.to_mpq());
    demote_if_small();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.reciprocal(); }

Rational Rational::operator-() const
{
    Rational out(*this);
    if (out.big_) {
        *out.big_ = -*out.big_;
        out.demote_if_small();
    } else if (out.num_ == kMin) {
        out.assign_big(-make_mpq(out.num_, out.den_));
    } else {
        out.num_ = -out.num_;
    }
    return out;
}

void Rational::sub_mul(const Rational& factor, const Rational& rhs)
{
    if (!big_ && !factor.big_ && !rhs.big_ && den_ == 1 && factor.den_ == 1 && rhs.den_ == 1) {
        std::int64_t prod;
        std::int64_t out;
        if (!__builtin_mul_overflow(factor.num_, rhs.num_, &prod) &&
            !__builtin_sub_overflow(num_, prod, &out) && out != kMin) {
            num_ = out;
            return;
        }
    }
    Rational prod = factor;
    prod *= rhs;
    *this -= prod;
}

Rational Rational::reciprocal() const
{
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    if (big_) {
        Rational out;
        out.assign_big(1 / *big_);
        out.demote_if_small();
        return out;
    }
    return Rational(den_, num_);
}

bool operator==(const Rational& lhs, const Rational& rhs)
{
    if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
    // Canonical forms: a heap value never fits inline, so mixed never compares equal.
    return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    if (!lhs.big_ && !rhs.big_) {
        i128 l = i128(lhs.num_) * rhs.den_;
        i128 r = i128(rhs.num_) * lhs.den_;
        return l <=> r;
    }
    int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

} // namespace fsprim
