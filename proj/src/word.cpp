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

#include "anick/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "anick/error.hpp"

namespace anick {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error(ErrorCode::InvalidPresentation, "alphabet must not be empty");
    if (names_.size() > 0xFFFF) throw Error(ErrorCode::InvalidPresentation, "alphabet too large");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw Error(ErrorCode::InvalidPresentation, "empty generator name");
        if (n == "1") throw Error(ErrorCode::InvalidPresentation, "generator name '1' is reserved for the empty word");
        for (char c : n) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '+' || c == '-' || c == '/' ||
                std::isdigit(static_cast<unsigned char>(c))) {
                throw Error(ErrorCode::InvalidPresentation, "invalid character in generator name '" + n + "'");
            }
        }
        if (!seen.insert(n).second) throw Error(ErrorCode::InvalidPresentation, "duplicate generator '" + n + "'");
        if (n.size() != 1) compact_ = false;
    }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Letter>(it - names_.begin());
}

Word Word::sub(std::size_t pos, std::size_t len) const {
    if (pos > size()) pos = size();
    len = std::min(len, size() - pos);
    return Word(std::span<const Letter>(letters_).subspan(pos, len));
}

std::optional<std::size_t> Word::find(const Word& u, std::size_t from) const {
    if (u.size() > size()) return std::nullopt;
    for (std::size_t i = from; i + u.size() <= size(); ++i) {
        if (std::equal(u.begin(), u.end(), letters_.begin() + static_cast<std::ptrdiff_t>(i))) return i;
    }
    return std::nullopt;
}

bool Word::starts_with(const Word& u) const {
    return u.size() <= size() && std::equal(u.begin(), u.end(), letters_.begin());
}

bool Word::ends_with(const Word& u) const {
    return u.size() <= size() && std::equal(u.begin(), u.end(), letters_.end() - static_cast<std::ptrdiff_t>(u.size()));
}

Word& Word::operator*=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
}

std::string Word::to_string(const Alphabet& alphabet) const {
    if (empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i > 0 && !alphabet.compact()) out += '*';
        out += alphabet.name(letters_[i]);
    }
    return out;
}

std::size_t Word::hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Letter l : letters_) {
        h ^= l + 1;
        h *= 1099511628211ULL;
    }
    return h;
}

std::optional<std::size_t> find_subword(const Word& w, const Word& u) {
    if (u.empty()) throw Error(ErrorCode::InvalidInput, "find_subword requires a nonempty pattern");
    return w.find(u);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s == "1") return {};
    if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty word text");
    std::vector<Letter> letters;
    if (s.find('*') != std::string::npos || !alphabet.compact()) {
        std::size_t start = 0;
        while (true) {
            auto star = s.find('*', start);
            std::string tok = s.substr(start, star == std::string::npos ? std::string::npos : star - start);
            if (tok != "1") {
                auto l = alphabet.find(tok);
                if (!l) throw Error(ErrorCode::InvalidInput, "unknown generator '" + tok + "' in '" + s + "'");
                letters.push_back(*l);
            }
            if (star == std::string::npos) break;
            start = star + 1;
        }
    } else {
        for (char c : s) {
            auto l = alphabet.find(std::string_view(&c, 1));
            if (!l) throw Error(ErrorCode::InvalidInput, "unknown generator '" + std::string(1, c) + "' in '" + s + "'");
            letters.push_back(*l);
        }
    }
    return Word(std::move(letters));
}

std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length) {
    std::vector<Word> out;
    std::vector<Letter> cur(length, 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = length;
        while (i > 0) {
            --i;
            if (cur[i] + 1u < alphabet_size) {
                ++cur[i];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), Letter{0});
                break;
            }
            if (i == 0) return out;
        }
        if (length == 0) return out;
    }
}

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
        auto layer = words_of_length(alphabet_size, len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

MonomialOrder::MonomialOrder(std::size_t alphabet_size) : weights_(alphabet_size, 1) {}

MonomialOrder::MonomialOrder(std::vector<std::uint32_t> weights) : weights_(std::move(weights)) {
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] == 0) {
            throw Error(ErrorCode::InvalidPresentation, "weight of generator #" + std::to_string(i) + " must be >= 1");
        }
    }
}

std::uint64_t MonomialOrder::weight(const Word& w) const {
    std::uint64_t total = 0;
    for (Letter l : w) total += weights_[l];
    return total;
}

bool MonomialOrder::is_deglex() const {
    return std::all_of(weights_.begin(), weights_.end(), [](auto v) { return v == 1; });
}

std::weak_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
    if (auto c = weight(a) <=> weight(b); c != 0) return c;
    // Equal positive weight means neither word is a proper prefix of the other.
    auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return a.size() <=> b.size();
}

std::weak_ordering MonomialOrder::compare_concat(const Word& a1, const Word& a2, const Word& b1,
                                                 const Word& b2) const {
    if (auto c = weight(a1) + weight(a2) <=> weight(b1) + weight(b2); c != 0) return c;
    auto at = [](const Word& p, const Word& q, std::size_t i) { return i < p.size() ? p[i] : q[i - p.size()]; };
    auto na = a1.size() + a2.size();
    auto nb = b1.size() + b2.size();
    auto n = std::min(na, nb);
    for (std::size_t i = 0; i < n; ++i) {
        Letter x = at(a1, a2, i), y = at(b1, b2, i);
        if (x != y) return y <=> x;
    }
    return na <=> nb;
}

} // namespace anick
