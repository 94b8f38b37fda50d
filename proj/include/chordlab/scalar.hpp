#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chordlab {

using Rational = boost::multiprecision::cpp_rational;

/// Ground field: the rationals or a prime field F_p with p < 2^31.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    /// Throws invalid_algebra unless p is a prime below 2^31.
    static Field prime(std::int64_t p);
    /// Parses "Q", "F5" or "Fp 5".
    static Field parse(const std::string& text);

    bool is_rational() const noexcept { return modulus_ == 0; }
    /// 0 for the rationals.
    std::int64_t characteristic() const noexcept { return modulus_; }
    std::string to_string() const;

    bool operator==(const Field&) const = default;

private:
    std::int64_t modulus_ = 0;
};

/// Exact field element. Arithmetic between elements of different fields
/// throws field_mismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& field, std::int64_t value);
    /// Over F_p the denominator must be invertible (else invalid_algebra).
    Scalar(const Field& field, const Rational& value);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    /// Exact value over Q; the residue 0..p-1 over F_p.
    Rational value() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Throws internal on division by zero.
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    bool operator==(const Scalar& o) const;

    /// "num/den" over Q, the residue over F_p.
    std::string to_string() const;

private:
    void check(const Scalar& o) const;

    Field field_;
    Rational rational_ = 0;
    std::int64_t residue_ = 0;
};

/// Parses "3", "-3/4"; throws syntax_error otherwise.
Rational parse_rational(const std::string& text);

}  // namespace chordlab
