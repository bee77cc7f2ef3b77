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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "anick/chains.hpp"
#include "anick/error.hpp"
#include "anick/groebner.hpp"
#include "anick/presentation.hpp"
#include "oracles.hpp"

using namespace anick;

namespace {

const Alphabet kXYZ({"x", "y", "z"});
const MonomialOrder kDeglex(3);

Word W(std::string_view s) { return parse_word(s, kXYZ); }

ObstructionSet example_obstructions() { return ObstructionSet({W("xxyx"), W("xxx"), W("yxz")}); }

ChainGraph example_graph() { return build_chain_graph(example_obstructions(), kXYZ, kDeglex); }

std::vector<std::string> chain_words(const std::vector<Chain>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.word.to_string(kXYZ));
    return out;
}

} // namespace

TEST(ObstructionsTest, FromRewriteSystems) {
    auto rs = RewriteSystem::from_presentation(
        Presentation::from_strings({"x", "y", "z"}, {"xxyx", "xxx - xx", "yxz - yx"}));
    auto obs = obstructions(rs);
    EXPECT_EQ(std::set<Word>(obs.words().begin(), obs.words().end()),
              (std::set<Word>{W("xxyx"), W("xxx"), W("yxz")}));
    auto cube = RewriteSystem::from_presentation(Presentation::from_strings({"x"}, {"xxx - xx"}));
    EXPECT_EQ(obstructions(cube).words(), (std::vector<Word>{Word{0, 0, 0}}));
}

TEST(ObstructionsTest, NotMinimal) {
    auto rs = RewriteSystem::from_presentation(Presentation::from_strings({"x"}, {"xx - x", "xxx - x"}, {"1"}));
    try {
        obstructions(rs);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotMinimal);
    }
}

TEST(ObstructionsTest, ConstructorRejectsNonAntichain) {
    EXPECT_THROW(ObstructionSet({W("xx"), W("xxy")}), Error);
    EXPECT_THROW(ObstructionSet({W("x")}), Error);
}

TEST(ObstructionsTest, Occurrences) {
    auto occ = example_obstructions().occurrences(W("xxxyxz"));
    std::vector<std::size_t> starts;
    for (auto [pos, k] : occ) starts.push_back(pos);
    EXPECT_EQ(starts, (std::vector<std::size_t>{0, 1, 3}));
}

TEST(OimTest, ExampleNormalWordsGiveObstructions) {
    auto poset = words_up_to(3, 4);
    std::set<Word> oim;
    std::vector<Word> tips{W("xxyx"), W("xxx"), W("yxz")};
    for (const auto& w : poset)
        if (oracle::is_normal(w, tips)) oim.insert(w);
    EXPECT_EQ(antichain_from_oim(poset, oim), (std::set<Word>{W("xxyx"), W("xxx"), W("yxz")}));
    EXPECT_EQ(oim_from_antichain(poset, {W("xxyx"), W("xxx"), W("yxz")}), oim);
}

TEST(OimTest, WholePosetHasEmptyAntichain) {
    auto poset = words_up_to(2, 3);
    EXPECT_TRUE(antichain_from_oim(poset, std::set<Word>(poset.begin(), poset.end())).empty());
}

TEST(OimTest, InvalidInputs) {
    auto poset = words_up_to(2, 3);
    EXPECT_THROW(antichain_from_oim(poset, {Word{0, 0}}), Error); // missing x and 1
    EXPECT_THROW(oim_from_antichain(poset, {Word{0}, Word{0, 0}}), Error);
}

TEST(ChainGraphTest, ExampleNodes) {
    ChainGraph g = example_graph();
    std::set<Word> nodes(g.nodes().begin(), g.nodes().end());
    EXPECT_EQ(nodes, (std::set<Word>{Word{}, W("x"), W("y"), W("z"), W("xx"), W("xyx"), W("yx"), W("xz")}));
}

TEST(ChainGraphTest, ExampleEdges) {
    ChainGraph g = example_graph();
    auto edge = [&](const char* a, const char* b) {
        return g.edge_between(*g.node_index(a[0] == '1' ? Word{} : W(a)), *g.node_index(W(b)));
    };
    ASSERT_TRUE(edge("x", "xx"));
    EXPECT_EQ(*g.edges()[*edge("x", "xx")].witness, W("xxx"));
    EXPECT_TRUE(edge("xx", "x"));
    EXPECT_TRUE(edge("xx", "yx"));
    EXPECT_TRUE(edge("1", "z"));
    EXPECT_FALSE(edge("z", "x"));
}

TEST(ChainGraphTest, SoundnessEveryEdgeHasExactlyOneSuffixOccurrence) {
    ChainGraph g = example_graph();
    std::vector<Word> tips = g.obstructions().words();
    for (const auto& e : g.edges()) {
        if (g.nodes()[e.from].empty()) continue;
        Word st = g.nodes()[e.from] * g.nodes()[e.to];
        auto occ = oracle::tip_occurrences(st, tips);
        ASSERT_EQ(occ.size(), 1u) << st.to_string(kXYZ);
        EXPECT_EQ(occ[0].second, st.size());
    }
}

TEST(ChainGraphTest, FreeAlgebra) {
    ChainGraph g = build_chain_graph(ObstructionSet(), Alphabet({"x", "y"}));
    EXPECT_EQ(g.nodes().size(), 3u);
    EXPECT_EQ(g.edges().size(), 2u);
    EXPECT_TRUE(enumerate_chains(g, 2).empty());
    EXPECT_EQ(enumerate_chains(g, 1).size(), 2u);
}

TEST(ChainGraphTest, DotOutput) {
    std::string dot = to_dot(example_graph(), kXYZ);
    EXPECT_EQ(dot.rfind("digraph chains {", 0), 0u);
    EXPECT_NE(dot.find("[label=\"xxx\"]"), std::string::npos);
    EXPECT_EQ(dot, to_dot(example_graph(), kXYZ));
}

TEST(EnumerateChainsTest, ExampleCensus) {
    ChainGraph g = example_graph();
    EXPECT_EQ(chain_words(enumerate_chains(g, 0)), (std::vector<std::string>{"1"}));
    EXPECT_EQ(chain_words(enumerate_chains(g, 1)), (std::vector<std::string>{"x", "y", "z"}));
    EXPECT_EQ(chain_words(enumerate_chains(g, 2)), (std::vector<std::string>{"xxyx", "xxx", "yxz"}));
    auto c3 = chain_words(enumerate_chains(g, 3));
    EXPECT_EQ(std::set<std::string>(c3.begin(), c3.end()),
              (std::set<std::string>{"xxyxxyx", "xxyxxx", "xxyxz", "xxxyx", "xxxx"}));
    auto c4 = chain_words(enumerate_chains(g, 4));
    EXPECT_EQ(std::set<std::string>(c4.begin(), c4.end()),
              (std::set<std::string>{"xxyxxyxxyx", "xxyxxyxxx", "xxyxxyxz", "xxyxxxyx", "xxyxxxx", "xxxyxxyx",
                                     "xxxyxxx", "xxxyxz", "xxxxxyx", "xxxxxx"}));
}

TEST(EnumerateChainsTest, SortedLargestFirst) {
    auto cs = enumerate_chains(example_graph(), 4);
    for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_TRUE(kDeglex.compare(cs[i - 1].word, cs[i].word) > 0);
}

TEST(EnumerateChainsTest, AgreesWithOracleDefinition) {
    auto tips = example_obstructions().words();
    ChainGraph g = example_graph();
    for (std::size_t n = 2; n <= 4; ++n) {
        std::set<Word> bottom_up;
        for (const auto& c : enumerate_chains(g, n)) bottom_up.insert(c.word);
        std::set<Word> brute;
        for (std::size_t len = 2; len <= 3 * (n - 1) + 1; ++len)
            for (const auto& w : oracle::all_words(3, len))
                if (oracle::chain(w, n, tips)) brute.insert(w);
        EXPECT_EQ(bottom_up, brute) << "degree " << n;
    }
}

TEST(PrechainTest, CubeAndExampleWords) {
    ObstructionSet cube({W("xxx")});
    EXPECT_TRUE(is_prechain(W("xxxxx"), 2, cube));
    EXPECT_FALSE(is_chain_top_down(W("xxxxx"), 2, cube).has_value());
    auto p = is_chain_top_down(W("xxxx"), 2, cube);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->starts, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(p->ends, (std::vector<std::size_t>{3, 4}));
    EXPECT_TRUE(is_chain_top_down(W("xxyxxyxz"), 3, example_obstructions()).has_value());
}

TEST(PrechainTest, TupleIsUnique) {
    auto obs = example_obstructions();
    for (const auto& c : enumerate_chains(example_graph(), 5)) {
        auto all = chain_placements(c.word, 4, obs);
        ASSERT_EQ(all.size(), 1u) << c.word.to_string(kXYZ);
        EXPECT_EQ(all[0].ends, c.ends) << c.word.to_string(kXYZ);
        EXPECT_EQ(all[0].starts, c.starts) << c.word.to_string(kXYZ);
    }
}

TEST(SplitChainTest, Examples) {
    ChainGraph g = example_graph();
    auto find = [&](std::size_t n, const char* w) {
        for (const auto& c : enumerate_chains(g, n))
            if (c.word == W(w)) return c;
        throw std::runtime_error("missing chain");
    };
    auto [p1, t1] = split_chain(find(3, "xxxyx"));
    EXPECT_EQ(p1.word, W("xxx"));
    EXPECT_EQ(t1, W("yx"));
    auto [p2, t2] = split_chain(find(3, "xxxx"));
    EXPECT_EQ(p2.word, W("xxx"));
    EXPECT_EQ(t2, W("x"));
    auto [p3, t3] = split_chain(find(4, "xxyxxyxz"));
    EXPECT_EQ(p3.word, W("xxyxxyx"));
    EXPECT_EQ(t3, W("z"));
}

TEST(SplitChainTest, BracketsAndRange) {
    Chain c;
    for (const auto& cand : enumerate_chains(example_graph(), 3))
        if (cand.word == W("xxxyx")) c = cand;
    ASSERT_EQ(c.degree, 3u);
    EXPECT_EQ(bracket_prefix(c, 2).word, W("xxx"));
    EXPECT_EQ(bracket_tail(c, 2), W("yx"));
    EXPECT_EQ(bracket_prefix(c, 0).word, Word{});
    EXPECT_EQ(bracket_tail(c, 0), W("xxxyx"));
    EXPECT_EQ(bracket_prefix(c, 3).word, W("xxxyx"));
    EXPECT_EQ(bracket_tail(c, 3), Word{});
    EXPECT_THROW(bracket_prefix(c, 4), Error);
    EXPECT_THROW(split_chain(root_chain()), Error);
}

TEST(SplitChainTest, SplittingIsUniqueAndRecomposes) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& c : enumerate_chains(example_graph(), n)) {
            for (std::size_t m = 0; m <= n; ++m) {
                EXPECT_EQ(bracket_prefix(c, m).word * bracket_tail(c, m), c.word);
                EXPECT_EQ(bracket_prefix(c, m).degree, m);
            }
        }
    }
}
