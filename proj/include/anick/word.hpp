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

#ifndef ANICK_WORD_HPP
#define ANICK_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anick {

using Letter = std::uint16_t;

/// Generator names in precedence order: index 0 is the largest letter.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Letter l) const { return names_.at(l); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Letter> find(std::string_view name) const;

    /// True when every name is one character, so words can be printed
    /// without separators.
    bool compact() const noexcept { return compact_; }

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    bool compact_ = true;
};

/// Element of the free monoid: a sequence of letter indices. The empty
/// word is the identity 1.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    explicit Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

    static Word letter(Letter l) { return Word{l}; }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// Subword starting at `pos` of length `len` (clamped to the end).
    Word sub(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
    Word prefix(std::size_t len) const { return sub(0, len); }
    Word suffix(std::size_t len) const { return sub(size() - len, len); }

    /// Leftmost position i with this = a·u·b and |a| = i.
    std::optional<std::size_t> find(const Word& u, std::size_t from = 0) const;
    bool contains(const Word& u) const { return find(u).has_value(); }
    bool starts_with(const Word& u) const;
    bool ends_with(const Word& u) const;

    Word& operator*=(const Word& rhs);
    friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

    /// Structural comparison (length, then indices). Not the monomial order;
    /// used for containers only.
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

    /// "xxyx", "1" for the empty word; "ab*c" style when the alphabet has
    /// multi-character names.
    std::string to_string(const Alphabet& alphabet) const;

    std::size_t hash() const noexcept;

private:
    std::vector<Letter> letters_;
};

/// Leftmost occurrence of `u` in `w`; `u` must be nonempty.
std::optional<std::size_t> find_subword(const Word& w, const Word& u);

/// Parses a word written either as `*`-separated names or, for compact
/// alphabets, as a run of letters ("xxyx"). "1" is the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Every word over `alphabet_size` letters of length exactly `length`,
/// in index-lexicographic order.
std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length);

/// Every word of length at most `max_length`, by length then index-lex.
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length);

/// Weighted degree-lexicographic order. Words are graded by the sum of
/// their letter weights; ties are broken lexicographically using the
/// alphabet precedence (lower index is larger).
class MonomialOrder {
public:
    MonomialOrder() = default;
    /// All weights 1: plain deglex.
    explicit MonomialOrder(std::size_t alphabet_size);
    explicit MonomialOrder(std::vector<std::uint32_t> weights);

    std::size_t alphabet_size() const noexcept { return weights_.size(); }
    std::uint32_t weight(Letter l) const { return weights_.at(l); }
    const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
    std::uint64_t weight(const Word& w) const;
    bool is_deglex() const;

    std::weak_ordering compare(const Word& a, const Word& b) const;

    /// Compares the concatenations a1·a2 and b1·b2 without building them.
    std::weak_ordering compare_concat(const Word& a1, const Word& a2, const Word& b1, const Word& b2) const;

    bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder&) const = default;

private:
    std::vector<std::uint32_t> weights_;
};

/// Strict "greater in the monomial order" functor for ordered containers.
struct OrderGreater {
    const MonomialOrder* order;
    bool operator()(const Word& a, const Word& b) const { return order->compare(a, b) > 0; }
};

} // namespace anick

template <>
struct std::hash<anick::Word> {
    std::size_t operator()(const anick::Word& w) const noexcept { return w.hash(); }
};

#endif // ANICK_WORD_HPP
