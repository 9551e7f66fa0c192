#pragma once

// Exact rational numbers.
//
// Values whose numerator and denominator fit in 64 bits are stored inline;
// anything larger spills into a heap-allocated mpq_class and is demoted again
// as soon as a result fits. Almost every entry the elimination engine touches
// is a small integer, so the inline path is the hot one.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace fsprim {

class Rational {
public:
    Rational() noexcept = default;
    Rational(std::int64_t value) noexcept : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);
    explicit Rational(const mpz_class& value);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const noexcept;

    /// Numerator magnitude bucket used by pivot heuristics: 0 for |num| == 1,
    /// growing with size; heap values report a large bucket.
    [[nodiscard]] std::uint64_t numerator_weight() const noexcept;

    [[nodiscard]] mpq_class to_mpq() const;
    /// Throws std::domain_error unless the value is an integer fitting in 64 bits.
    [[nodiscard]] std::int64_t to_int64() const;
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    /// this -= factor * rhs, the elimination kernel.
    void sub_mul(const Rational& factor, const Rational& rhs);

    [[nodiscard]] Rational reciprocal() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    void assign_big(mpq_class value);
    void demote_if_small();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace fsprim
