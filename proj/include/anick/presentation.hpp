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

#ifndef ANICK_PRESENTATION_HPP
#define ANICK_PRESENTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "anick/polynomial.hpp"
#include "anick/scalar.hpp"
#include "anick/word.hpp"

namespace anick {

/// An augmented algebra <X | R>: generators, graded order, coefficient
/// field, relations and the evaluation point defining the augmentation.
///
/// The augmentation sends each generator to a scalar; it must annihilate
/// every relation so that it descends to the quotient. Its section sends
/// 1 to the empty word.
class Presentation {
public:
    /// Validates every invariant; throws Error(InvalidPresentation) naming
    /// the offending relation otherwise.
    Presentation(Alphabet alphabet, MonomialOrder order, Field field, std::vector<Polynomial> relations,
                 std::vector<Scalar> augmentation = {});

    /// Convenience for tests and examples: deglex over `generators`,
    /// rational coefficients, zero augmentation unless given.
    static Presentation from_strings(const std::vector<std::string>& generators,
                                     const std::vector<std::string>& relations,
                                     const std::vector<std::string>& augmentation = {});

    static Presentation from_json(std::string_view text);
    std::string to_json() const;

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const Field& field() const noexcept { return field_; }
    const std::vector<Polynomial>& relations() const noexcept { return relations_; }
    const std::vector<Scalar>& augmentation() const noexcept { return augmentation_; }
    bool has_trivial_augmentation() const;

    /// Evaluation of a word at the augmentation point.
    Scalar augment(const Word& w) const;

    Polynomial parse(std::string_view text) const { return parse_polynomial(text, alphabet_, field_); }
    Word word(std::string_view text) const { return parse_word(text, alphabet_); }
    std::string str(const Word& w) const { return w.to_string(alphabet_); }
    std::string str(const Polynomial& p) const { return p.to_string(alphabet_, order_); }

private:
    Alphabet alphabet_;
    MonomialOrder order_;
    Field field_;
    std::vector<Polynomial> relations_;
    std::vector<Scalar> augmentation_;
};

/// Evaluates every generator at its augmentation value and sums.
Scalar augmentation_eval(const Presentation& pres, const Polynomial& p);

} // namespace anick

#endif // ANICK_PRESENTATION_HPP
