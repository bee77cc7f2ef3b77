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

#include "anick/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "anick/error.hpp"

namespace anick {

namespace {

Rule make_rule(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "rewriting rule from the zero polynomial");
    Rule r;
    r.poly = p * p.lc(order).inverse();
    r.lm = r.poly.lm(order);
    r.replacement = Polynomial(r.lm) - r.poly;
    return r;
}

std::optional<std::pair<std::size_t, std::size_t>> find_reducer_in(const std::vector<Rule>& rules, const Word& w) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (auto pos = w.find(rules[i].lm)) return std::make_pair(i, *pos);
    }
    return std::nullopt;
}

Polynomial reduce_with(const std::vector<Rule>& rules, const MonomialOrder& order, const Polynomial& p) {
    std::map<Word, Scalar, OrderGreater> work(OrderGreater{&order});
    for (const auto& [w, c] : p.terms()) work.emplace(w, c);
    Polynomial result;
    while (!work.empty()) {
        auto top = work.begin();
        Word w = top->first;
        Scalar c = top->second;
        work.erase(top);
        auto hit = find_reducer_in(rules, w);
        if (!hit) {
            result.add_term(w, c);
            continue;
        }
        const Rule& rule = rules[hit->first];
        Word left = w.prefix(hit->second);
        Word right = w.sub(hit->second + rule.lm.size());
        for (const auto& [u, cu] : rule.replacement.terms()) {
            Word nw = left * u * right;
            Scalar nc = c * cu;
            auto [it, inserted] = work.try_emplace(std::move(nw), nc);
            if (!inserted) {
                it->second += nc;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return result;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> polys, const MonomialOrder& order) {
    std::vector<Polynomial> g;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        g.push_back(p * p.lc(order).inverse());
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
            std::vector<Rule> others;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (j != idx) others.push_back(make_rule(g[j], order));
            }
            Polynomial h = reduce_with(others, order, g[idx]);
            if (h.is_zero()) {
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(idx));
                changed = true;
                break;
            }
            h *= h.lc(order).inverse();
            if (h != g[idx]) {
                g[idx] = std::move(h);
                changed = true;
            }
        }
    }
    std::sort(g.begin(), g.end(),
              [&](const Polynomial& a, const Polynomial& b) { return order.compare(a.lm(order), b.lm(order)) > 0; });
    return g;
}

std::pair<Polynomial, Polynomial> one_step_pair(const Overlap& ov, const std::vector<Rule>& rules) {
    return {rewrite_at(ov.word, rules[ov.first], 0), rewrite_at(ov.word, rules[ov.second], ov.offset)};
}

} // namespace

RewriteSystem::RewriteSystem(Alphabet alphabet, MonomialOrder order, Field field, const std::vector<Polynomial>& polys)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), field_(field) {
    for (const auto& p : polys) rules_.push_back(make_rule(p, order_));
    std::stable_sort(rules_.begin(), rules_.end(),
                     [&](const Rule& a, const Rule& b) { return order_.compare(a.lm, b.lm) > 0; });
    minimal_ = true;
    for (std::size_t i = 0; i < rules_.size() && minimal_; ++i) {
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            if (i != j && rules_[i].lm.contains(rules_[j].lm)) {
                minimal_ = false;
                break;
            }
        }
    }
    reduced_ = minimal_;
    for (const auto& r : rules_) {
        for (const auto& [w, c] : r.replacement.terms()) {
            if (find_reducer_in(rules_, w)) reduced_ = false;
        }
    }
}

RewriteSystem RewriteSystem::from_presentation(const Presentation& pres) {
    return RewriteSystem(pres.alphabet(), pres.order(), pres.field(), pres.relations());
}

std::vector<Polynomial> RewriteSystem::polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& r : rules_) out.push_back(r.poly);
    return out;
}

std::vector<Word> RewriteSystem::leading_monomials() const {
    std::vector<Word> out;
    for (const auto& r : rules_) out.push_back(r.lm);
    return out;
}

std::size_t RewriteSystem::max_lm_weight() const {
    std::size_t m = 0;
    for (const auto& r : rules_) m = std::max<std::size_t>(m, order_.weight(r.lm));
    return m;
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_reducer(const Word& w) const {
    return find_reducer_in(rules_, w);
}

Polynomial normal_form(const Polynomial& p, const RewriteSystem& rs) {
    return reduce_with(rs.rules(), rs.order(), p);
}

Polynomial normal_form(const Word& w, const RewriteSystem& rs) {
    return normal_form(Polynomial(w, Scalar::one(rs.field())), rs);
}

Polynomial rewrite_at(const Word& w, const Rule& rule, std::size_t pos) {
    if (pos + rule.lm.size() > w.size() || w.sub(pos, rule.lm.size()) != rule.lm) {
        throw Error(ErrorCode::Internal, "rule does not match at the given position");
    }
    return rule.replacement.sandwich(w.prefix(pos), w.sub(pos + rule.lm.size()));
}

std::vector<Overlap> overlaps(const RewriteSystem& rs) {
    const auto& rules = rs.rules();
    std::vector<Overlap> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Word& t = rules[i].lm;
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& s = rules[j].lm;
            for (std::size_t a = 0; a < t.size(); ++a) {
                if (a + s.size() <= t.size()) {
                    // s nested inside t; the trivial self-match is not an overlap.
                    if (i != j && t.sub(a, s.size()) == s) out.push_back({i, j, t, a, true});
                } else if (a > 0) {
                    std::size_t shared = t.size() - a;
                    if (t.sub(a) == s.prefix(shared)) out.push_back({i, j, t * s.sub(shared), a, false});
                }
            }
        }
    }
    return out;
}

GroebnerCheck check_groebner(const RewriteSystem& rs, std::uint64_t max_degree) {
    if (max_degree < rs.max_lm_weight()) {
        throw Error(ErrorCode::InvalidInput, "degree bound " + std::to_string(max_degree) +
                                                 " is below the largest leading weight " +
                                                 std::to_string(rs.max_lm_weight()));
    }
    GroebnerCheck report;
    report.max_degree = max_degree;
    for (const auto& ov : overlaps(rs)) {
        if (rs.order().weight(ov.word) > max_degree) continue;
        ++report.overlaps_checked;
        auto [l, r] = one_step_pair(ov, rs.rules());
        Polynomial left = normal_form(l, rs);
        Polynomial right = normal_form(r, rs);
        if (left != right) {
            Polynomial diff = left - right;
            report.counterexample = Counterexample{ov, std::move(left), std::move(right), std::move(diff)};
            return report;
        }
    }
    return report;
}

RewriteSystem complete(const RewriteSystem& rs, std::uint64_t max_degree) {
    const auto& order = rs.order();
    std::vector<Polynomial> current = interreduce(rs.polynomials(), order);
    while (true) {
        RewriteSystem sys(rs.alphabet(), order, rs.field(), current);
        std::vector<Polynomial> fresh;
        for (const auto& ov : overlaps(sys)) {
            auto [l, r] = one_step_pair(ov, sys.rules());
            Polynomial diff = normal_form(l, sys) - normal_form(r, sys);
            if (diff.is_zero()) continue;
            diff *= diff.lc(order).inverse();
            if (order.weight(diff.lm(order)) > max_degree) {
                throw Error(ErrorCode::BoundExceeded,
                            "completion needs rule '" + sys.str(diff) + "' from overlap '" + sys.str(ov.word) +
                                "', above degree bound " + std::to_string(max_degree));
            }
            if (std::find(fresh.begin(), fresh.end(), diff) == fresh.end()) fresh.push_back(std::move(diff));
        }
        if (fresh.empty()) {
            sys.mark_verified(max_degree);
            return sys;
        }
        current.insert(current.end(), fresh.begin(), fresh.end());
        current = interreduce(std::move(current), order);
    }
}

NormalWordAutomaton::NormalWordAutomaton(std::size_t alphabet_size, const std::vector<Word>& patterns)
    : alphabet_size_(alphabet_size) {
    std::vector<std::vector<std::size_t>> go(1, std::vector<std::size_t>(alphabet_size, kDead));
    std::vector<bool> terminal(1, false);
    for (const auto& p : patterns) {
        if (p.empty()) throw Error(ErrorCode::InvalidInput, "automaton pattern must be nonempty");
        std::size_t node = 0;
        for (Letter l : p) {
            if (go[node][l] == kDead) {
                go[node][l] = go.size();
                go.emplace_back(alphabet_size, kDead);
                terminal.push_back(false);
            }
            node = go[node][l];
        }
        terminal[node] = true;
    }
    std::vector<std::size_t> fail(go.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t l = 0; l < alphabet_size; ++l) {
        if (go[0][l] == kDead) {
            go[0][l] = 0;
        } else {
            fail[go[0][l]] = 0;
            queue.push_back(go[0][l]);
        }
    }
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        if (terminal[fail[u]]) terminal[u] = true;
        for (std::size_t l = 0; l < alphabet_size; ++l) {
            std::size_t v = go[u][l];
            if (v == kDead) {
                go[u][l] = go[fail[u]][l];
            } else {
                fail[v] = go[fail[u]][l];
                queue.push_back(v);
            }
        }
    }
    transitions_.assign(go.size(), std::vector<std::size_t>(alphabet_size, kDead));
    for (std::size_t u = 0; u < go.size(); ++u) {
        for (std::size_t l = 0; l < alphabet_size; ++l) {
            if (!terminal[go[u][l]]) transitions_[u][l] = go[u][l];
        }
    }
}

std::optional<std::size_t> NormalWordAutomaton::step(std::size_t state, Letter l) const {
    std::size_t next = transitions_.at(state).at(l);
    if (next == kDead) return std::nullopt;
    return next;
}

bool NormalWordAutomaton::accepts(const Word& w) const {
    std::size_t state = start();
    for (Letter l : w) {
        auto next = step(state, l);
        if (!next) return false;
        state = *next;
    }
    return true;
}

std::vector<std::uint64_t> NormalWordAutomaton::count_by_length(std::size_t max_length) const {
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> dist(state_count(), 0);
    dist[start()] = 1;
    for (std::size_t len = 0; len <= max_length; ++len) {
        std::uint64_t total = 0;
        for (auto d : dist) total += d;
        counts.push_back(total);
        std::vector<std::uint64_t> next(state_count(), 0);
        for (std::size_t u = 0; u < state_count(); ++u) {
            if (dist[u] == 0) continue;
            for (std::size_t l = 0; l < alphabet_size_; ++l) {
                if (transitions_[u][l] != kDead) next[transitions_[u][l]] += dist[u];
            }
        }
        dist = std::move(next);
    }
    return counts;
}

std::vector<Word> normal_words(const RewriteSystem& rs, std::size_t max_length) {
    auto lms = rs.leading_monomials();
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (std::size_t l = 0; l < rs.alphabet().size(); ++l) {
                Word candidate = w * Word::letter(static_cast<Letter>(l));
                bool normal = std::none_of(lms.begin(), lms.end(), [&](const Word& lm) { return candidate.ends_with(lm); });
                if (normal) next.push_back(std::move(candidate));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::vector<std::uint64_t> count_normal_words(const RewriteSystem& rs, std::size_t max_length) {
    return NormalWordAutomaton(rs.alphabet().size(), rs.leading_monomials()).count_by_length(max_length);
}

std::set<Word> leading_monomials_oracle(const Presentation& pres, std::uint64_t max_degree) {
    const auto& order = pres.order();
    std::map<Word, Polynomial, OrderGreater> pivots(OrderGreater{&order});
    auto insert_row = [&](Polynomial row) {
        while (!row.is_zero()) {
            Word lm = row.lm(order);
            auto it = pivots.find(lm);
            if (it == pivots.end()) {
                Scalar lc = row.coefficient(lm);
                pivots.emplace(lm, row * lc.inverse());
                return;
            }
            row -= it->second * row.coefficient(lm);
        }
    };
    for (const auto& g : pres.relations()) {
        std::uint64_t wg = g.max_weight(order);
        if (wg > max_degree) continue;
        std::uint64_t slack = max_degree - wg;
        std::vector<Word> padding;
        for (auto& w : words_up_to(pres.alphabet().size(), slack)) {
            if (order.weight(w) <= slack) padding.push_back(std::move(w));
        }
        for (const auto& u : padding) {
            for (const auto& v : padding) {
                if (order.weight(u) + order.weight(v) <= slack) insert_row(g.sandwich(u, v));
            }
        }
    }
    std::set<Word> out;
    for (const auto& [w, row] : pivots) out.insert(w);
    return out;
}

} // namespace anick
