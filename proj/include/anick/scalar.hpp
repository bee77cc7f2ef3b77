/*
 * Copyright 2026 The Anick Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ANICK_SCALAR_HPP
#define ANICK_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace anick {

/// Coefficient field: exact rationals (modulus 0) or Z/pZ for a prime p.
class Field {
public:
    static Field rational() { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return modulus_ == 0; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
    std::uint64_t modulus_;
};

/// An element of a Field, always in canonical form: a reduced fraction with
/// positive denominator, or a residue in [0, p).
///
/// Binary operations between a prime-field element and a rational one map
/// the rational into the prime field first; two different primes never mix.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Scalar(long value, const Field& field);
    Scalar(const mpq_class& value, const Field& field);

    /// Parses "n" or "n/d" (optional sign, surrounding whitespace allowed).
    static Scalar parse(std::string_view text, const Field& field);

    static Scalar zero(const Field& field) { return Scalar(0, field); }
    static Scalar one(const Field& field) { return Scalar(1, field); }

    Field field() const;
    std::uint64_t modulus() const noexcept { return modulus_; }
    const mpq_class& value() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "3", "-1/2"; prime residues print as their representative in [0, p).
    std::string to_string() const;

private:
    void canonicalize();
    void unify(Scalar& other);

    mpq_class value_{0};
    std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace anick

#endif // ANICK_SCALAR_HPP
