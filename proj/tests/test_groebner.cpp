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

#include <gtest/gtest.h>

#include "anick/error.hpp"
#include "anick/groebner.hpp"
#include "anick/presentation.hpp"
#include "oracles.hpp"

using namespace anick;

namespace {

Presentation example() {
    return Presentation::from_strings({"x", "y", "z"}, {"xxyx", "xxx - xx", "yxz - yx"});
}

RewriteSystem system_of(const std::vector<std::string>& gens, const std::vector<std::string>& rels,
                        const std::vector<std::string>& aug = {}) {
    return RewriteSystem::from_presentation(Presentation::from_strings(gens, rels, aug));
}

std::vector<std::string> rule_strings(const RewriteSystem& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs.rules()) out.push_back(rs.str(r.poly));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(RewriteSystemTest, RulesAreMonicAndFlagged) {
    RewriteSystem rs = system_of({"x", "y"}, {"2*xy - 2*y"}, {"1", "1"});
    ASSERT_EQ(rs.rules().size(), 1u);
    EXPECT_EQ(rs.str(rs.rules()[0].poly), "x*y - y");
    EXPECT_EQ(rs.str(rs.rules()[0].replacement), "y");
    EXPECT_TRUE(rs.minimal());
    EXPECT_TRUE(rs.reduced());
    EXPECT_FALSE(rs.verified_to_degree().has_value());
}

TEST(NormalFormTest, Examples) {
    Presentation pres = example();
    RewriteSystem rs = RewriteSystem::from_presentation(pres);
    EXPECT_EQ(normal_form(pres.word("xxx"), rs), pres.parse("xx"));
    EXPECT_EQ(normal_form(pres.word("xyxz"), rs), pres.parse("xyx"));
    EXPECT_EQ(normal_form(pres.word("xx"), rs), pres.parse("xx"));
    EXPECT_EQ(normal_form(pres.word("xxyx"), rs), Polynomial());
    EXPECT_EQ(normal_form(Polynomial(), rs), Polynomial());
}

TEST(NormalFormTest, IdempotentAndConfluentAgainstRandomStrategy) {
    Presentation pres = example();
    RewriteSystem rs = RewriteSystem::from_presentation(pres);
    std::vector<oracle::Rewrite> rules;
    for (const auto& r : rs.rules()) rules.push_back({r.lm, r.replacement});
    std::mt19937 rng(11);
    for (const auto& w : words_up_to(3, 6)) {
        Polynomial nf = normal_form(w, rs);
        EXPECT_EQ(normal_form(nf, rs), nf);
        for (const auto& [u, c] : nf.terms()) EXPECT_TRUE(oracle::is_normal(u, rs.leading_monomials()));
        EXPECT_EQ(oracle::reduce_randomly(Polynomial(w), rules, rng), nf) << rs.str(w);
    }
}

TEST(NormalFormTest, DirectSumDecomposition) {
    // w - NF(w) must lie in the ideal: reducing it gives zero.
    Presentation pres = example();
    RewriteSystem rs = RewriteSystem::from_presentation(pres);
    for (const auto& w : words_up_to(3, 5)) {
        EXPECT_TRUE(normal_form(Polynomial(w) - normal_form(w, rs), rs).is_zero());
    }
}

TEST(OverlapsTest, SelfOverlapsOfCube) {
    RewriteSystem rs = system_of({"x"}, {"xxx - xx"});
    auto ov = overlaps(rs);
    std::vector<std::string> words;
    for (const auto& o : ov) words.push_back(rs.str(o.word));
    std::sort(words.begin(), words.end());
    EXPECT_EQ(words, (std::vector<std::string>{"xxxx", "xxxxx"}));
}

TEST(OverlapsTest, ExampleContainsXxxyx) {
    Presentation pres = example();
    RewriteSystem rs = RewriteSystem::from_presentation(pres);
    bool found = false;
    for (const auto& o : overlaps(rs)) {
        if (o.word == pres.word("xxxyx") && rs.rules()[o.first].lm == pres.word("xxx") && o.offset == 1) found = true;
    }
    EXPECT_TRUE(found);
}

TEST(OverlapsTest, NoSelfOverlapForYxz) {
    RewriteSystem rs = system_of({"x", "y", "z"}, {"yxz - yx"});
    EXPECT_TRUE(overlaps(rs).empty());
}

TEST(OverlapsTest, ContainmentIsReported) {
    RewriteSystem rs = system_of({"x", "y"}, {"xyx", "yx"});
    auto ov = overlaps(rs);
    EXPECT_TRUE(std::any_of(ov.begin(), ov.end(), [](const Overlap& o) { return o.containment; }));
    EXPECT_FALSE(rs.minimal());
}

TEST(GroebnerCheckTest, ExampleVerifies) {
    RewriteSystem rs = RewriteSystem::from_presentation(example());
    GroebnerCheck check = check_groebner(rs, 7);
    EXPECT_TRUE(check.verified());
    EXPECT_GT(check.overlaps_checked, 0u);
}

TEST(GroebnerCheckTest, CubeVerifies) {
    EXPECT_TRUE(check_groebner(system_of({"x"}, {"xxx - xx"}), 5).verified());
}

TEST(GroebnerCheckTest, FalsifiedAtXyx) {
    RewriteSystem rs = system_of({"x", "y"}, {"xy - y", "yx - x"}, {"1", "1"});
    GroebnerCheck check = check_groebner(rs, 5);
    ASSERT_FALSE(check.verified());
    const auto& ce = *check.counterexample;
    EXPECT_EQ(rs.str(ce.overlap.word), "xyx");
    std::vector<std::string> sides{rs.str(ce.left), rs.str(ce.right)};
    std::sort(sides.begin(), sides.end());
    EXPECT_EQ(sides, (std::vector<std::string>{"x", "x*x"}));
    EXPECT_EQ(ce.difference, ce.left - ce.right);
}

TEST(GroebnerCheckTest, BoundBelowLeadingWeightIsRejected) {
    EXPECT_THROW(check_groebner(RewriteSystem::from_presentation(example()), 3), Error);
}

TEST(CompleteTest, HandCompletion) {
    RewriteSystem done = complete(system_of({"x", "y"}, {"xy - y", "yx - x"}, {"1", "1"}), 6);
    EXPECT_EQ(rule_strings(done), (std::vector<std::string>{"x*x - x", "x*y - y", "y*x - x", "y*y - y"}));
    EXPECT_TRUE(done.reduced());
    EXPECT_TRUE(check_groebner(done, 6).verified());
}

TEST(CompleteTest, VerifiedSystemsUnchanged) {
    RewriteSystem cube = system_of({"x"}, {"xxx - xx"});
    EXPECT_EQ(complete(cube, 6).polynomials(), cube.polynomials());
    RewriteSystem ex = RewriteSystem::from_presentation(example());
    EXPECT_EQ(rule_strings(complete(ex, 7)), rule_strings(ex));
}

TEST(CompleteTest, IndependentOfRelationOrder) {
    std::vector<std::string> rels{"xy - y", "yx - x", "xxy - yy"};
    std::vector<std::string> base;
    std::sort(rels.begin(), rels.end());
    do {
        auto r = rule_strings(complete(system_of({"x", "y"}, rels, {"1", "1"}), 6));
        if (base.empty()) base = r;
        EXPECT_EQ(r, base);
    } while (std::next_permutation(rels.begin(), rels.end()));
}

TEST(CompleteTest, BoundExceeded) {
    // xy - yx style commutation with a cubic produces ever longer rules.
    RewriteSystem rs = system_of({"x", "y"}, {"xyx - yxy"});
    try {
        complete(rs, 4);
        FAIL() << "expected BoundExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
    }
}

TEST(NormalWordsTest, ShortWordsOfExample) {
    Presentation pres = example();
    RewriteSystem rs = RewriteSystem::from_presentation(pres);
    std::vector<std::string> got;
    for (const auto& w : normal_words(rs, 2)) got.push_back(rs.str(w));
    EXPECT_EQ(got, (std::vector<std::string>{"1", "x", "y", "z", "xx", "xy", "xz", "yx", "yy", "yz", "zx", "zy", "zz"}));
    EXPECT_EQ(normal_words(rs, 0), (std::vector<Word>{Word{}}));
    EXPECT_EQ(count_normal_words(rs, 3), (std::vector<std::uint64_t>{1, 3, 9, 25}));
}

TEST(NormalWordsTest, AutomatonMatchesBruteForce) {
    RewriteSystem rs = RewriteSystem::from_presentation(example());
    EXPECT_EQ(count_normal_words(rs, 8), oracle::count_normal(3, rs.leading_monomials(), 8));
    NormalWordAutomaton a(3, rs.leading_monomials());
    for (const auto& w : words_up_to(3, 5)) EXPECT_EQ(a.accepts(w), oracle::is_normal(w, rs.leading_monomials()));
}

TEST(NormalWordsTest, ListMatchesCounts) {
    RewriteSystem rs = RewriteSystem::from_presentation(example());
    auto words = normal_words(rs, 6);
    auto counts = count_normal_words(rs, 6);
    std::vector<std::uint64_t> tally(7, 0);
    for (const auto& w : words) ++tally[w.size()];
    EXPECT_EQ(tally, counts);
}

TEST(LeadingMonomialsOracleTest, ComplementOfNormalWords) {
    Presentation pres = example();
    RewriteSystem rs = RewriteSystem::from_presentation(pres);
    auto lms = leading_monomials_oracle(pres, 5);
    for (const char* w : {"xxx", "xxyx", "yxz", "xxxx"}) EXPECT_TRUE(lms.count(pres.word(w))) << w;
    for (const auto& w : words_up_to(3, 5)) {
        EXPECT_NE(lms.count(w) > 0, oracle::is_normal(w, rs.leading_monomials())) << rs.str(w);
    }
}

TEST(LeadingMonomialsOracleTest, FreeAlgebraHasNone) {
    Presentation free = Presentation::from_strings({"x", "y"}, {});
    EXPECT_TRUE(leading_monomials_oracle(free, 4).empty());
}
