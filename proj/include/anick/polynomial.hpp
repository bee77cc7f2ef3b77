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

#ifndef ANICK_POLYNOMIAL_HPP
#define ANICK_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anick/scalar.hpp"
#include "anick/word.hpp"

namespace anick {

/// Element of the free algebra K<X>: a finite map from words to nonzero
/// coefficients. The map is keyed structurally; anything order-dependent
/// (leading monomial, printing) takes the MonomialOrder explicitly.
class Polynomial {
public:
    using Terms = std::map<Word, Scalar>;

    Polynomial() = default;
    explicit Polynomial(const Word& w, const Scalar& c = Scalar(1));
    static Polynomial constant(const Scalar& c) { return Polynomial(Word{}, c); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    Scalar coefficient(const Word& w) const;

    /// Adds c·w, dropping the term if it cancels.
    void add_term(const Word& w, const Scalar& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Scalar& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// left·p·right for words left, right.
    Polynomial sandwich(const Word& left, const Word& right) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    const Word& lm(const MonomialOrder& order) const;
    const Scalar& lc(const MonomialOrder& order) const;

    /// Terms sorted by the monomial order, largest first.
    std::vector<std::pair<Word, Scalar>> sorted_terms(const MonomialOrder& order) const;

    /// Maximum weight over the support; 0 for the zero polynomial.
    std::uint64_t max_weight(const MonomialOrder& order) const;

    /// Text form, largest term first: "x*x*x - x*x", "2*x*y + 1/2", "0".
    std::string to_string(const Alphabet& alphabet, const MonomialOrder& order) const;

private:
    Terms terms_;
};

Polynomial scale(const Scalar& c, const Polynomial& p);

/// Parses the polynomial grammar: `+`/`-` separated terms, each an optional
/// integer or fraction coefficient followed by `*`-separated generator
/// names; `1` is the empty word.
Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet, const Field& field);

} // namespace anick

#endif // ANICK_POLYNOMIAL_HPP
