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

#include "anick/scalar.hpp"

#include <cctype>
#include <ostream>

#include "anick/error.hpp"

namespace anick {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::NotAnOim: return "NotAnOim";
    case ErrorCode::NotAnAntichain: return "NotAnAntichain";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

bool is_probable_prime(std::uint64_t p) {
    mpz_class z(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

mpz_class residue(const mpz_class& v, std::uint64_t p) {
    mpz_class m(static_cast<unsigned long>(p));
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p < 2 || !is_probable_prime(p)) {
        throw Error(ErrorCode::InvalidInput, "field modulus " + std::to_string(p) + " is not prime");
    }
    return Field(p);
}

Scalar::Scalar(long value, const Field& field) : value_(value), modulus_(field.modulus()) {
    canonicalize();
}

Scalar::Scalar(const mpq_class& value, const Field& field) : value_(value), modulus_(field.modulus()) {
    value_.canonicalize();
    canonicalize();
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw Error(ErrorCode::InvalidInput, "malformed coefficient '" + std::string(text) + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) {
        throw Error(ErrorCode::InvalidInput, "zero denominator in coefficient '" + std::string(text) + "'");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(q, field);
}

Field Scalar::field() const {
    return modulus_ == 0 ? Field::rational() : Field::prime(modulus_);
}

void Scalar::canonicalize() {
    if (modulus_ == 0) return;
    mpz_class m(static_cast<unsigned long>(modulus_));
    mpz_class num = residue(value_.get_num(), modulus_);
    mpz_class den = residue(value_.get_den(), modulus_);
    if (den == 0) {
        throw Error(ErrorCode::FieldMismatch,
                    "denominator of " + value_.get_str() + " vanishes mod " + std::to_string(modulus_));
    }
    if (den != 1) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        num = residue(num * inv, modulus_);
    }
    value_ = mpq_class(num);
}

void Scalar::unify(Scalar& other) {
    if (modulus_ == other.modulus_) return;
    if (modulus_ == 0) {
        modulus_ = other.modulus_;
        canonicalize();
    } else if (other.modulus_ == 0) {
        other.modulus_ = modulus_;
        other.canonicalize();
    } else {
        throw Error(ErrorCode::FieldMismatch, "cannot combine residues mod " + std::to_string(modulus_) +
                                                  " and mod " + std::to_string(other.modulus_));
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.value_ = -r.value_;
    r.canonicalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    Scalar r = rhs;
    unify(r);
    value_ += r.value_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    Scalar r = rhs;
    unify(r);
    value_ -= r.value_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    Scalar r = rhs;
    unify(r);
    value_ *= r.value_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
    Scalar r = *this;
    r.value_ = 1 / r.value_;
    r.canonicalize();
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
    Scalar x = a, y = b;
    x.unify(y);
    return x.value_ == y.value_;
}

std::string Scalar::to_string() const {
    return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

} // namespace anick
