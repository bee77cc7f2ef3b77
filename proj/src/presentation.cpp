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

#include "anick/presentation.hpp"

#include <json.hpp>

#include "anick/error.hpp"

namespace anick {

using nlohmann::json;

Presentation::Presentation(Alphabet alphabet, MonomialOrder order, Field field, std::vector<Polynomial> relations,
                           std::vector<Scalar> augmentation)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), field_(field), relations_(std::move(relations)),
      augmentation_(std::move(augmentation)) {
    if (alphabet_.size() == 0) throw Error(ErrorCode::InvalidPresentation, "alphabet must not be empty");
    if (order_.alphabet_size() != alphabet_.size()) {
        throw Error(ErrorCode::InvalidPresentation, "order has " + std::to_string(order_.alphabet_size()) +
                                                        " weights for " + std::to_string(alphabet_.size()) +
                                                        " generators");
    }
    if (augmentation_.empty()) augmentation_.assign(alphabet_.size(), Scalar::zero(field_));
    if (augmentation_.size() != alphabet_.size()) {
        throw Error(ErrorCode::InvalidPresentation, "augmentation must give one value per generator");
    }
    for (auto& a : augmentation_) a = Scalar(a.value(), field_);
    for (auto& r : relations_) {
        Polynomial fixed;
        for (const auto& [w, c] : r.terms()) {
            for (Letter l : w) {
                if (l >= alphabet_.size()) throw Error(ErrorCode::InvalidPresentation, "relation uses unknown letter");
            }
            fixed.add_term(w, Scalar(c.value(), field_));
        }
        r = std::move(fixed);
    }
    for (const auto& r : relations_) {
        if (r.is_zero()) throw Error(ErrorCode::InvalidPresentation, "relation is zero");
        const Word& lm = r.lm(order_);
        if (lm.size() <= 1) {
            throw Error(ErrorCode::InvalidPresentation,
                        "relation '" + str(r) + "' has leading monomial '" + str(lm) +
                            "' of length <= 1; eliminate that generator from the presentation first");
        }
        if (!augmentation_eval(*this, r).is_zero()) {
            throw Error(ErrorCode::InvalidPresentation,
                        "relation '" + str(r) + "' does not vanish at the augmentation point");
        }
    }
}

Presentation Presentation::from_strings(const std::vector<std::string>& generators,
                                        const std::vector<std::string>& relations,
                                        const std::vector<std::string>& augmentation) {
    Alphabet alphabet(generators);
    Field field = Field::rational();
    std::vector<Polynomial> rels;
    for (const auto& r : relations) rels.push_back(parse_polynomial(r, alphabet, field));
    std::vector<Scalar> aug;
    for (const auto& a : augmentation) aug.push_back(Scalar::parse(a, field));
    return Presentation(alphabet, MonomialOrder(alphabet.size()), field, std::move(rels), std::move(aug));
}

namespace {

std::string scalar_text(const json& v, const std::string& what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorCode::InvalidInput, what + " must be an integer or a decimal string");
}

} // namespace

Presentation Presentation::from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("presentation JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw Error(ErrorCode::InvalidInput, "presentation must be a JSON object");
        if (!doc.contains("generators")) throw Error(ErrorCode::InvalidInput, "presentation lacks \"generators\"");
        Alphabet alphabet(doc.at("generators").get<std::vector<std::string>>());

        std::vector<std::uint32_t> weights(alphabet.size(), 1);
        if (doc.contains("weights")) {
            for (const auto& [name, w] : doc.at("weights").items()) {
                auto l = alphabet.find(name);
                if (!l) throw Error(ErrorCode::InvalidInput, "weight given for unknown generator '" + name + "'");
                auto value = w.get<long long>();
                if (value < 1) {
                    throw Error(ErrorCode::InvalidPresentation, "weight of '" + name + "' must be >= 1");
                }
                weights[*l] = static_cast<std::uint32_t>(value);
            }
        }

        Field field = Field::rational();
        if (doc.contains("field")) {
            const auto& f = doc.at("field");
            auto type = f.at("type").get<std::string>();
            if (type == "prime") {
                field = Field::prime(f.at("p").get<std::uint64_t>());
            } else if (type != "rational") {
                throw Error(ErrorCode::InvalidInput, "unknown field type '" + type + "'");
            }
        }

        std::vector<Polynomial> relations;
        if (doc.contains("relations")) {
            for (const auto& r : doc.at("relations")) {
                relations.push_back(parse_polynomial(r.get<std::string>(), alphabet, field));
            }
        }

        std::vector<Scalar> augmentation(alphabet.size(), Scalar::zero(field));
        if (doc.contains("augmentation")) {
            for (const auto& [name, v] : doc.at("augmentation").items()) {
                auto l = alphabet.find(name);
                if (!l) throw Error(ErrorCode::InvalidInput, "augmentation given for unknown generator '" + name + "'");
                augmentation[*l] = Scalar::parse(scalar_text(v, "augmentation of '" + name + "'"), field);
            }
        }
        return Presentation(alphabet, MonomialOrder(weights), field, std::move(relations), std::move(augmentation));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("presentation JSON: ") + e.what());
    }
}

std::string Presentation::to_json() const {
    json doc;
    doc["generators"] = alphabet_.names();
    json weights = json::object();
    for (std::size_t i = 0; i < alphabet_.size(); ++i) weights[alphabet_.name(static_cast<Letter>(i))] = order_.weights()[i];
    doc["weights"] = weights;
    if (field_.is_rational()) {
        doc["field"] = {{"type", "rational"}};
    } else {
        doc["field"] = {{"type", "prime"}, {"p", field_.modulus()}};
    }
    json rels = json::array();
    for (const auto& r : relations_) rels.push_back(str(r));
    doc["relations"] = rels;
    json aug = json::object();
    for (std::size_t i = 0; i < alphabet_.size(); ++i) aug[alphabet_.name(static_cast<Letter>(i))] = augmentation_[i].to_string();
    doc["augmentation"] = aug;
    return doc.dump();
}

bool Presentation::has_trivial_augmentation() const {
    for (const auto& a : augmentation_) {
        if (!a.is_zero()) return false;
    }
    return true;
}

Scalar Presentation::augment(const Word& w) const {
    Scalar value = Scalar::one(field_);
    for (Letter l : w) {
        value *= augmentation_[l];
        if (value.is_zero()) break;
    }
    return value;
}

Scalar augmentation_eval(const Presentation& pres, const Polynomial& p) {
    Scalar total = Scalar::zero(pres.field());
    for (const auto& [w, c] : p.terms()) total += c * pres.augment(w);
    return total;
}

} // namespace anick
