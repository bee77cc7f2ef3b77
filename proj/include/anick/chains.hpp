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

#ifndef ANICK_CHAINS_HPP
#define ANICK_CHAINS_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "anick/groebner.hpp"
#include "anick/word.hpp"

namespace anick {

/// Anti-chain of words under the subword order, each of length >= 2.
class ObstructionSet {
public:
    ObstructionSet() = default;
    /// Throws Error(NotAnAntichain) if a word is a subword of another or
    /// shorter than two letters.
    explicit ObstructionSet(std::vector<Word> words);

    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    bool contains(const Word& w) const;

    /// Every occurrence (start, obstruction index) inside `w`, by start.
    std::vector<std::pair<std::size_t, std::size_t>> occurrences(const Word& w) const;

private:
    std::vector<Word> words_; // structural order
};

/// Leading monomials of a minimal rewrite system. Throws Error(NotMinimal).
ObstructionSet obstructions(const RewriteSystem& rs);

/// Maps between subword-closed sets ("order ideals of monomials") and
/// anti-chains of a finite set of words ordered by the subword relation.
///
/// antichain_from_oim returns the minimal elements of the complement;
/// oim_from_antichain returns every element that, whenever comparable to an
/// anti-chain element, lies strictly below it.
std::set<Word> antichain_from_oim(const std::vector<Word>& poset, const std::set<Word>& oim);
std::set<Word> oim_from_antichain(const std::vector<Word>& poset, const std::set<Word>& antichain);

/// One edge of the chain graph. Root edges carry no witness.
struct ChainEdge {
    std::size_t from;
    std::size_t to;
    std::optional<Word> witness;
};

/// Directed graph whose length-n paths from the root spell the n-chains.
///
/// Nodes are the root (empty word), the letters and the proper suffixes of
/// obstructions. There is an edge s -> t between non-root nodes exactly when
/// st contains a single obstruction occurrence and that occurrence is a
/// suffix of st.
class ChainGraph {
public:
    const std::vector<Word>& nodes() const noexcept { return nodes_; }
    const std::vector<ChainEdge>& edges() const noexcept { return edges_; }
    /// Edge indices leaving `node`, in edge order.
    const std::vector<std::size_t>& out_edges(std::size_t node) const { return adjacency_.at(node); }
    std::optional<std::size_t> node_index(const Word& w) const;
    std::optional<std::size_t> edge_between(std::size_t from, std::size_t to) const;

    const ObstructionSet& obstructions() const noexcept { return obstructions_; }
    const MonomialOrder& order() const noexcept { return order_; }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }

    /// Drops nodes not reachable from the root.
    ChainGraph pruned() const;

    friend ChainGraph build_chain_graph(const ObstructionSet& obs, const Alphabet& alphabet,
                                        const MonomialOrder& order);

private:
    std::vector<Word> nodes_;
    std::vector<ChainEdge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    ObstructionSet obstructions_;
    MonomialOrder order_;
    std::size_t alphabet_size_ = 0;
};

ChainGraph build_chain_graph(const ObstructionSet& obs, const Alphabet& alphabet, const MonomialOrder& order);
ChainGraph build_chain_graph(const ObstructionSet& obs, const Alphabet& alphabet);

/// Graphviz rendering; node and edge order follow the graph's own order.
std::string to_dot(const ChainGraph& g, const Alphabet& alphabet);

/// A chain of homological degree n: C_0 = {1}, C_1 = letters,
/// C_2 = obstructions, and so on.
///
/// `path` is the node sequence 1 = w_0, w_1, ..., w_n; the word is their
/// product. For n >= 2, `starts` and `ends` hold the 1-based positions of
/// the n-1 obstruction occurrences (first starts at 1, last ends at |word|).
struct Chain {
    std::size_t degree = 0;
    Word word;
    std::vector<Word> path;
    std::vector<std::size_t> starts;
    std::vector<std::size_t> ends;

    /// |w_1 ... w_m|.
    std::size_t prefix_length(std::size_t m) const;
    const Word& last_node() const { return path.back(); }

    friend bool operator==(const Chain& a, const Chain& b) { return a.degree == b.degree && a.word == b.word; }
};

/// The degree-0 chain (the empty word).
Chain root_chain();

/// Every chain obtained by extending `c` along one more edge.
std::vector<Chain> extend_chain(const ChainGraph& g, const Chain& c);

/// All chains of degree n, sorted by the monomial order, largest first.
std::vector<Chain> enumerate_chains(const ChainGraph& g, std::size_t n);

/// Placement tuples (1-based starts and ends) for `count` obstructions.
struct Placement {
    std::vector<std::size_t> starts;
    std::vector<std::size_t> ends;
    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Every placement making `w` a prechain with `count` obstructions:
/// 1 = a_1 < a_2 <= b_1 < a_3 <= b_2 < ... < a_n <= b_{n-1} < b_n = |w|.
std::vector<Placement> prechain_placements(const Word& w, std::size_t count, const ObstructionSet& obs);
bool is_prechain(const Word& w, std::size_t count, const ObstructionSet& obs);

/// Placements that additionally satisfy the maximality condition: for every
/// m <= count, no prefix of length < b_m is an m-prechain.
std::vector<Placement> chain_placements(const Word& w, std::size_t count, const ObstructionSet& obs);
std::optional<Placement> is_chain_top_down(const Word& w, std::size_t count, const ObstructionSet& obs);

/// (prefix chain of degree n-1, tail word); the tail is the last node.
std::pair<Chain, Word> split_chain(const Chain& c);

/// The m-chain prefix and the left-over tail; 0 <= m <= degree.
Chain bracket_prefix(const Chain& c, std::size_t m);
Word bracket_tail(const Chain& c, std::size_t m);

} // namespace anick

#endif // ANICK_CHAINS_HPP
