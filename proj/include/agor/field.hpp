#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "agor/error.hpp"

namespace agor {

enum class FieldKind { Rationals, PrimeField };

// Coefficient field: either QQ (exact rationals) or F_p for a prime p.
// Characteristics 2 and 3 are rejected at construction.
struct Field {
    FieldKind kind = FieldKind::Rationals;
    uint64_t p = 0; // 0 for QQ

    static Field rationals() { return Field{FieldKind::Rationals, 0}; }
    static Field prime(uint64_t p);

    bool operator==(const Field&) const = default;

    uint64_t characteristic() const { return p; }
    bool is_prime_field() const { return kind == FieldKind::PrimeField; }
    std::string str() const;
};

bool is_prime_u64(uint64_t n);

// Square root mod p via Tonelli-Shanks; throws MathError if none exists.
uint64_t sqrt_mod(uint64_t a, uint64_t p);

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p);

// An exact field element. All arithmetic is exact; division by zero throws.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), v_(mpq_class(0)) {}
    explicit Scalar(const Field& f)
        : field_(f),
          v_(f.is_prime_field() ? Rep(uint64_t{0}) : Rep(mpq_class(0))) {}
    Scalar(const Field& f, long n);
    Scalar(const Field& f, const mpq_class& q);

    static Scalar from_decimal(const Field& f, const std::string& digits);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for canonical printing/sorting, not algebra.
    bool less_canonical(const Scalar& o) const;

    const mpq_class& rat() const;
    uint64_t residue() const;

    std::string str() const;

private:
    using Rep = std::variant<mpq_class, uint64_t>;
    void check_same(const Scalar& o) const;

    Field field_;
    Rep v_;
};

} // namespace agor
