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

#ifndef ANICK_GROEBNER_HPP
#define ANICK_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "anick/polynomial.hpp"
#include "anick/presentation.hpp"

namespace anick {

/// A monic rewriting rule lm -> lm - poly.
struct Rule {
    Polynomial poly; // monic
    Word lm;
    Polynomial replacement; // lm - poly, every term strictly smaller than lm
};

/// Monic rules sorted by leading monomial, largest first. Flags describe
/// what is known about the rule set.
class RewriteSystem {
public:
    RewriteSystem(Alphabet alphabet, MonomialOrder order, Field field, const std::vector<Polynomial>& polys);

    static RewriteSystem from_presentation(const Presentation& pres);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const Field& field() const noexcept { return field_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }
    std::vector<Polynomial> polynomials() const;
    std::vector<Word> leading_monomials() const;
    std::size_t max_lm_weight() const;

    /// No rule's leading monomial is a subword of another's.
    bool minimal() const noexcept { return minimal_; }
    /// Minimal, and no replacement word contains a leading monomial.
    bool reduced() const noexcept { return reduced_; }
    /// Overlaps up to this weight are known to resolve; nullopt if never checked.
    std::optional<std::uint64_t> verified_to_degree() const noexcept { return verified_to_; }
    void mark_verified(std::uint64_t degree) { verified_to_ = degree; }

    /// Index of the first rule (stored order) whose lm occurs in `w`,
    /// and the leftmost position of that occurrence.
    std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const Word& w) const;

    std::string str(const Polynomial& p) const { return p.to_string(alphabet_, order_); }
    std::string str(const Word& w) const { return w.to_string(alphabet_); }

private:
    Alphabet alphabet_;
    MonomialOrder order_;
    Field field_;
    std::vector<Rule> rules_;
    bool minimal_ = false;
    bool reduced_ = false;
    std::optional<std::uint64_t> verified_to_;
};

/// Reduces every support word until none contains a rule lm. Always
/// rewrites the largest reducible word, at the leftmost occurrence of the
/// first matching rule.
Polynomial normal_form(const Polynomial& p, const RewriteSystem& rs);
Polynomial normal_form(const Word& w, const RewriteSystem& rs);

/// One rewrite of the word `w` with `rule` applied at `pos`.
Polynomial rewrite_at(const Word& w, const Rule& rule, std::size_t pos);

/// A word on which two rules apply with overlapping (or nested) matches.
/// `second` starts at `offset` inside the occurrence of `first` at 0.
struct Overlap {
    std::size_t first;
    std::size_t second;
    Word word;
    std::size_t offset;
    bool containment; // second's lm lies entirely inside first's lm

    friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// All proper suffix/prefix overlaps (including self-overlaps) and all
/// containments between rule leading monomials, ordered by (first, second,
/// offset).
std::vector<Overlap> overlaps(const RewriteSystem& rs);

struct Counterexample {
    Overlap overlap;
    Polynomial left;       // normal form after applying `first`
    Polynomial right;      // normal form after applying `second`
    Polynomial difference; // left - right, nonzero
};

struct GroebnerCheck {
    std::uint64_t max_degree = 0;
    std::size_t overlaps_checked = 0;
    std::optional<Counterexample> counterexample;

    bool verified() const noexcept { return !counterexample.has_value(); }
};

/// Checks that every overlap word of weight <= max_degree resolves.
GroebnerCheck check_groebner(const RewriteSystem& rs, std::uint64_t max_degree);

/// Bounded Buchberger completion with full interreduction. The result is
/// the reduced Groebner basis, independent of input rule order. Throws
/// Error(BoundExceeded) if a new rule would have leading weight above
/// `max_degree`.
RewriteSystem complete(const RewriteSystem& rs, std::uint64_t max_degree);

/// Deterministic automaton (Aho-Corasick) recognizing words that avoid
/// every pattern as a subword.
class NormalWordAutomaton {
public:
    NormalWordAutomaton(std::size_t alphabet_size, const std::vector<Word>& patterns);

    std::size_t state_count() const noexcept { return transitions_.size(); }
    std::size_t start() const noexcept { return 0; }
    /// Next state, or nullopt when a pattern has just been completed.
    std::optional<std::size_t> step(std::size_t state, Letter l) const;
    bool accepts(const Word& w) const;

    /// Number of accepted words of each length 0..max_length.
    std::vector<std::uint64_t> count_by_length(std::size_t max_length) const;

private:
    static constexpr std::size_t kDead = static_cast<std::size_t>(-1);
    std::size_t alphabet_size_;
    std::vector<std::vector<std::size_t>> transitions_;
};

/// Words of length <= max_length containing no rule lm; by length, then
/// alphabet order.
std::vector<Word> normal_words(const RewriteSystem& rs, std::size_t max_length);

/// Per-length counts via the automaton transfer matrix.
std::vector<std::uint64_t> count_normal_words(const RewriteSystem& rs, std::size_t max_length);

/// Brute-force LM(I(R)) restricted to weight <= max_degree: row-reduces
/// the span of all u*g*v of weight <= max_degree and returns pivot words.
std::set<Word> leading_monomials_oracle(const Presentation& pres, std::uint64_t max_degree);

} // namespace anick

#endif // ANICK_GROEBNER_HPP
