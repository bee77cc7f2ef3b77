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

#include "anick/chains.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "anick/error.hpp"

namespace anick {

ObstructionSet::ObstructionSet(std::vector<Word> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    for (const auto& w : words_) {
        if (w.size() < 2) {
            throw Error(ErrorCode::NotAnAntichain, "obstruction of length " + std::to_string(w.size()) +
                                                       " (obstructions need at least two letters)");
        }
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (std::size_t j = 0; j < words_.size(); ++j) {
            if (i != j && words_[i].contains(words_[j])) {
                throw Error(ErrorCode::NotAnAntichain, "obstruction #" + std::to_string(j) +
                                                           " is a subword of obstruction #" + std::to_string(i));
            }
        }
    }
}

bool ObstructionSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::vector<std::pair<std::size_t, std::size_t>> ObstructionSet::occurrences(const Word& w) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            const Word& o = words_[k];
            if (pos + o.size() <= w.size() && std::equal(o.begin(), o.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
                out.emplace_back(pos, k);
            }
        }
    }
    return out;
}

ObstructionSet obstructions(const RewriteSystem& rs) {
    if (!rs.minimal()) {
        const auto& rules = rs.rules();
        for (std::size_t i = 0; i < rules.size(); ++i) {
            for (std::size_t j = 0; j < rules.size(); ++j) {
                if (i != j && rules[i].lm.contains(rules[j].lm)) {
                    throw Error(ErrorCode::NotMinimal, "rewrite system is not minimal: '" + rs.str(rules[j].lm) +
                                                           "' is a subword of '" + rs.str(rules[i].lm) + "'");
                }
            }
        }
        throw Error(ErrorCode::NotMinimal, "rewrite system is not minimal");
    }
    return ObstructionSet(rs.leading_monomials());
}

namespace {

bool strictly_below(const Word& a, const Word& b) {
    return a.size() < b.size() && b.contains(a);
}

bool comparable(const Word& a, const Word& b) {
    return a.contains(b) || b.contains(a);
}

} // namespace

std::set<Word> antichain_from_oim(const std::vector<Word>& poset, const std::set<Word>& oim) {
    std::set<Word> universe(poset.begin(), poset.end());
    for (const auto& w : oim) {
        if (!universe.count(w)) throw Error(ErrorCode::NotAnOim, "o.i.m. element outside the poset");
        for (const auto& v : poset) {
            if (strictly_below(v, w) && !oim.count(v)) {
                throw Error(ErrorCode::NotAnOim, "set is not closed under subwords");
            }
        }
    }
    std::set<Word> out;
    for (const auto& y : poset) {
        if (oim.count(y)) continue;
        bool minimal = std::none_of(poset.begin(), poset.end(),
                                    [&](const Word& x) { return !oim.count(x) && strictly_below(x, y); });
        if (minimal) out.insert(y);
    }
    return out;
}

std::set<Word> oim_from_antichain(const std::vector<Word>& poset, const std::set<Word>& antichain) {
    std::set<Word> universe(poset.begin(), poset.end());
    for (const auto& a : antichain) {
        if (!universe.count(a)) throw Error(ErrorCode::NotAnAntichain, "anti-chain element outside the poset");
        for (const auto& b : antichain) {
            if (a != b && comparable(a, b)) throw Error(ErrorCode::NotAnAntichain, "elements are comparable");
        }
    }
    std::set<Word> out;
    for (const auto& y : poset) {
        bool keep = std::all_of(antichain.begin(), antichain.end(),
                                [&](const Word& x) { return !comparable(x, y) || strictly_below(y, x); });
        if (keep) out.insert(y);
    }
    return out;
}

std::optional<std::size_t> ChainGraph::node_index(const Word& w) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), w);
    if (it == nodes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::optional<std::size_t> ChainGraph::edge_between(std::size_t from, std::size_t to) const {
    for (auto e : adjacency_.at(from)) {
        if (edges_[e].to == to) return e;
    }
    return std::nullopt;
}

ChainGraph ChainGraph::pruned() const {
    std::vector<bool> seen(nodes_.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto e : adjacency_[u]) {
            if (!seen[edges_[e].to]) {
                seen[edges_[e].to] = true;
                queue.push_back(edges_[e].to);
            }
        }
    }
    ChainGraph g;
    g.obstructions_ = obstructions_;
    g.order_ = order_;
    g.alphabet_size_ = alphabet_size_;
    std::vector<std::size_t> remap(nodes_.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (seen[i]) {
            remap[i] = g.nodes_.size();
            g.nodes_.push_back(nodes_[i]);
        }
    }
    g.adjacency_.resize(g.nodes_.size());
    for (const auto& e : edges_) {
        if (seen[e.from] && seen[e.to]) {
            g.adjacency_[remap[e.from]].push_back(g.edges_.size());
            g.edges_.push_back({remap[e.from], remap[e.to], e.witness});
        }
    }
    return g;
}

ChainGraph build_chain_graph(const ObstructionSet& obs, const Alphabet& alphabet, const MonomialOrder& order) {
    ChainGraph g;
    g.obstructions_ = obs;
    g.order_ = order;
    g.alphabet_size_ = alphabet.size();

    g.nodes_.push_back(Word{});
    for (std::size_t l = 0; l < alphabet.size(); ++l) g.nodes_.push_back(Word::letter(static_cast<Letter>(l)));
    std::set<Word> suffixes;
    for (const auto& o : obs.words()) {
        for (std::size_t len = 2; len < o.size(); ++len) suffixes.insert(o.suffix(len));
    }
    g.nodes_.insert(g.nodes_.end(), suffixes.begin(), suffixes.end());
    g.adjacency_.resize(g.nodes_.size());

    for (std::size_t l = 1; l <= alphabet.size(); ++l) {
        g.adjacency_[0].push_back(g.edges_.size());
        g.edges_.push_back({0, l, std::nullopt});
    }
    for (std::size_t s = 1; s < g.nodes_.size(); ++s) {
        for (std::size_t t = 1; t < g.nodes_.size(); ++t) {
            Word st = g.nodes_[s] * g.nodes_[t];
            auto occ = obs.occurrences(st);
            if (occ.size() != 1) continue;
            const Word& o = obs.words()[occ.front().second];
            if (occ.front().first + o.size() != st.size()) continue;
            g.adjacency_[s].push_back(g.edges_.size());
            g.edges_.push_back({s, t, o});
        }
    }
    return g;
}

ChainGraph build_chain_graph(const ObstructionSet& obs, const Alphabet& alphabet) {
    return build_chain_graph(obs, alphabet, MonomialOrder(alphabet.size()));
}

std::string to_dot(const ChainGraph& g, const Alphabet& alphabet) {
    std::ostringstream os;
    os << "digraph chains {\n";
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        os << "  n" << i << " [label=\"" << g.nodes()[i].to_string(alphabet) << "\"];\n";
    }
    for (const auto& e : g.edges()) {
        os << "  n" << e.from << " -> n" << e.to;
        if (e.witness) os << " [label=\"" << e.witness->to_string(alphabet) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::size_t Chain::prefix_length(std::size_t m) const {
    std::size_t len = 0;
    for (std::size_t i = 1; i <= m && i < path.size(); ++i) len += path[i].size();
    return len;
}

Chain root_chain() {
    Chain c;
    c.path.push_back(Word{});
    return c;
}

std::vector<Chain> extend_chain(const ChainGraph& g, const Chain& c) {
    auto node = g.node_index(c.last_node());
    if (!node) throw Error(ErrorCode::Internal, "chain ends at a node missing from the graph");
    std::vector<Chain> out;
    for (auto e : g.out_edges(*node)) {
        const auto& edge = g.edges()[e];
        const Word& u = g.nodes()[edge.to];
        Chain next = c;
        next.degree = c.degree + 1;
        next.word *= u;
        next.path.push_back(u);
        if (edge.witness) {
            std::size_t prev_end = c.ends.empty() ? 1 : c.ends.back();
            next.starts.push_back(prev_end + u.size() + 1 - edge.witness->size());
            next.ends.push_back(prev_end + u.size());
        }
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Chain> enumerate_chains(const ChainGraph& g, std::size_t n) {
    std::vector<Chain> level{root_chain()};
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<Chain> next;
        for (const auto& c : level) {
            auto ext = extend_chain(g, c);
            next.insert(next.end(), std::make_move_iterator(ext.begin()), std::make_move_iterator(ext.end()));
        }
        level = std::move(next);
    }
    const auto& order = g.order();
    std::sort(level.begin(), level.end(),
              [&](const Chain& a, const Chain& b) { return order.compare(a.word, b.word) > 0; });
    for (std::size_t i = 1; i < level.size(); ++i) {
        if (level[i].word == level[i - 1].word) {
            throw Error(ErrorCode::Internal, "two paths spell the same chain word");
        }
    }
    return level;
}

std::vector<Placement> prechain_placements(const Word& w, std::size_t count, const ObstructionSet& obs) {
    std::vector<Placement> out;
    if (count == 0 || w.empty()) return out;
    // ends_at[start] lists the 1-based ends of occurrences beginning at 1-based start.
    std::vector<std::vector<std::size_t>> ends_at(w.size() + 2);
    for (auto [pos, k] : obs.occurrences(w)) ends_at[pos + 1].push_back(pos + obs.words()[k].size());
    for (auto& v : ends_at) std::sort(v.begin(), v.end());

    const std::size_t len = w.size();
    Placement cur;
    std::function<void()> search = [&]() {
        std::size_t i = cur.starts.size(); // occurrences placed so far
        if (i == count) {
            if (cur.ends.back() == len) out.push_back(cur);
            return;
        }
        std::size_t lo, hi;
        if (i == 0) {
            lo = hi = 1;
        } else {
            lo = cur.starts[i - 1] + 1;
            if (i >= 2) lo = std::max(lo, cur.ends[i - 2] + 1);
            hi = cur.ends[i - 1];
        }
        for (std::size_t a = lo; a <= hi && a <= len; ++a) {
            for (std::size_t b : ends_at[a]) {
                if (i > 0 && b <= cur.ends[i - 1]) continue;
                if (i + 1 < count && b >= len) continue;
                if (i + 1 == count && b != len) continue;
                cur.starts.push_back(a);
                cur.ends.push_back(b);
                search();
                cur.starts.pop_back();
                cur.ends.pop_back();
            }
        }
    };
    search();
    return out;
}

bool is_prechain(const Word& w, std::size_t count, const ObstructionSet& obs) {
    return !prechain_placements(w, count, obs).empty();
}

std::vector<Placement> chain_placements(const Word& w, std::size_t count, const ObstructionSet& obs) {
    std::vector<Placement> out;
    auto candidates = prechain_placements(w, count, obs);
    if (candidates.empty()) return out;
    std::map<std::pair<std::size_t, std::size_t>, bool> memo;
    auto prefix_is_prechain = [&](std::size_t i, std::size_t m) {
        auto [it, inserted] = memo.try_emplace({i, m}, false);
        if (inserted) it->second = is_prechain(w.prefix(i), m, obs);
        return it->second;
    };
    for (const auto& p : candidates) {
        bool maximal = true;
        for (std::size_t m = 1; m <= count && maximal; ++m) {
            for (std::size_t i = 1; i + 1 <= p.ends[m - 1] && maximal; ++i) {
                if (prefix_is_prechain(i, m)) maximal = false;
            }
        }
        if (maximal) out.push_back(p);
    }
    return out;
}

std::optional<Placement> is_chain_top_down(const Word& w, std::size_t count, const ObstructionSet& obs) {
    auto all = chain_placements(w, count, obs);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::pair<Chain, Word> split_chain(const Chain& c) {
    if (c.degree == 0) throw Error(ErrorCode::OutOfRange, "cannot split the degree-0 chain");
    return {bracket_prefix(c, c.degree - 1), bracket_tail(c, c.degree - 1)};
}

Chain bracket_prefix(const Chain& c, std::size_t m) {
    if (m > c.degree) {
        throw Error(ErrorCode::OutOfRange,
                    "bracket index " + std::to_string(m) + " exceeds chain degree " + std::to_string(c.degree));
    }
    Chain p;
    p.degree = m;
    p.path.assign(c.path.begin(), c.path.begin() + static_cast<std::ptrdiff_t>(m) + 1);
    p.word = c.word.prefix(c.prefix_length(m));
    std::size_t k = m >= 1 ? m - 1 : 0;
    p.starts.assign(c.starts.begin(), c.starts.begin() + static_cast<std::ptrdiff_t>(std::min(k, c.starts.size())));
    p.ends.assign(c.ends.begin(), c.ends.begin() + static_cast<std::ptrdiff_t>(std::min(k, c.ends.size())));
    return p;
}

Word bracket_tail(const Chain& c, std::size_t m) {
    if (m > c.degree) {
        throw Error(ErrorCode::OutOfRange,
                    "bracket index " + std::to_string(m) + " exceeds chain degree " + std::to_string(c.degree));
    }
    return c.word.sub(c.prefix_length(m));
}

} // namespace anick
