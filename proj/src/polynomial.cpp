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

#include "anick/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "anick/error.hpp"

namespace anick {

Polynomial::Polynomial(const Word& w, const Scalar& c) {
    add_term(w, c);
}

Scalar Polynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) r.add_term(u * v, cu * cv);
    }
    return r;
}

Polynomial Polynomial::sandwich(const Word& left, const Word& right) const {
    Polynomial r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(left * w * right, c);
    return r;
}

const Word& Polynomial::lm(const MonomialOrder& order) const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading monomial of the zero polynomial");
    auto it = std::max_element(terms_.begin(), terms_.end(),
                               [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
    return it->first;
}

const Scalar& Polynomial::lc(const MonomialOrder& order) const {
    return terms_.find(lm(order))->second;
}

std::vector<std::pair<Word, Scalar>> Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Word, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
    return out;
}

std::uint64_t Polynomial::max_weight(const MonomialOrder& order) const {
    std::uint64_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, order.weight(w));
    return m;
}

std::string Polynomial::to_string(const Alphabet& alphabet, const MonomialOrder& order) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : sorted_terms(order)) {
        bool negative = sgn(c.value()) < 0;
        Scalar magnitude = negative ? -c : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string word;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0) word += '*';
            word += alphabet.name(w[i]);
        }
        if (w.empty()) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += word;
        } else {
            out += magnitude.to_string() + "*" + word;
        }
    }
    return out;
}

Polynomial scale(const Scalar& c, const Polynomial& p) {
    return p * c;
}

namespace {

bool is_number(std::string_view tok) {
    if (tok.empty()) return false;
    bool digit_seen = false;
    for (char c : tok) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit_seen = true;
        } else if (c != '/') {
            return false;
        }
    }
    return digit_seen;
}

void append_factor(std::vector<Letter>& letters, const std::string& tok, const Alphabet& alphabet,
                   std::string_view whole) {
    if (auto l = alphabet.find(tok)) {
        letters.push_back(*l);
        return;
    }
    // Compact alphabets also accept runs like "xxyx" inside a factor.
    if (alphabet.compact()) {
        std::vector<Letter> run;
        for (char c : tok) {
            auto l = alphabet.find(std::string_view(&c, 1));
            if (!l) {
                run.clear();
                break;
            }
            run.push_back(*l);
        }
        if (!run.empty()) {
            letters.insert(letters.end(), run.begin(), run.end());
            return;
        }
    }
    throw Error(ErrorCode::InvalidInput, "unknown generator '" + tok + "' in '" + std::string(whole) + "'");
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet, const Field& field) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty polynomial text");

    Polynomial result;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (!first) {
            throw Error(ErrorCode::InvalidInput, "expected '+' or '-' in '" + std::string(text) + "'");
        }
        first = false;
        std::size_t end = s.find_first_of("+-", i);
        std::string term = s.substr(i, end == std::string::npos ? std::string::npos : end - i);
        i = end == std::string::npos ? s.size() : end;
        if (term.empty()) throw Error(ErrorCode::InvalidInput, "empty term in '" + std::string(text) + "'");

        std::vector<std::string> tokens;
        std::size_t start = 0;
        while (true) {
            auto star = term.find('*', start);
            tokens.push_back(term.substr(start, star == std::string::npos ? std::string::npos : star - start));
            if (star == std::string::npos) break;
            start = star + 1;
        }
        Scalar coeff = Scalar::one(field);
        std::size_t k = 0;
        if (is_number(tokens[0])) {
            coeff = Scalar::parse(tokens[0], field);
            k = 1;
        }
        std::vector<Letter> letters;
        for (; k < tokens.size(); ++k) {
            if (tokens[k].empty()) throw Error(ErrorCode::InvalidInput, "dangling '*' in '" + std::string(text) + "'");
            if (tokens[k] == "1") continue;
            if (is_number(tokens[k])) {
                throw Error(ErrorCode::InvalidInput, "coefficient must lead its term in '" + std::string(text) + "'");
            }
            append_factor(letters, tokens[k], alphabet, text);
        }
        result.add_term(Word(std::move(letters)), negative ? -coeff : coeff);
    }
    return result;
}

} // namespace anick
