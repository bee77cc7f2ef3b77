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

#ifndef ANICK_RESOLUTION_HPP
#define ANICK_RESOLUTION_HPP

#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "anick/chains.hpp"
#include "anick/groebner.hpp"
#include "anick/presentation.hpp"

namespace anick {

/// Basis element c (x) s of K C_n (x) A, with s a normal word.
struct TensorTerm {
    Word chain;
    Word tail;

    friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
    friend auto operator<=>(const TensorTerm&, const TensorTerm&) = default;
};

/// Orders basis terms of one degree by the monomial order on c*s.
std::weak_ordering basis_compare(const MonomialOrder& order, const TensorTerm& a, const TensorTerm& b);

/// Finite K-combination of tensor terms of a single degree. Degree 0 is
/// identified with A itself: its terms all carry the empty chain.
class ModuleElement {
public:
    using Terms = std::map<TensorTerm, Scalar>;

    ModuleElement() = default;
    explicit ModuleElement(std::size_t degree) : degree_(degree) {}
    ModuleElement(std::size_t degree, const TensorTerm& t, const Scalar& c = Scalar(1));

    /// Degree-0 element from a polynomial in normal words.
    static ModuleElement from_algebra(const Polynomial& a);
    /// Inverse of from_algebra; requires degree 0.
    Polynomial to_algebra() const;

    std::size_t degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    Scalar coefficient(const TensorTerm& t) const;

    void add_term(const TensorTerm& t, const Scalar& c);
    ModuleElement& operator+=(const ModuleElement& rhs);
    ModuleElement& operator-=(const ModuleElement& rhs);
    ModuleElement& operator*=(const Scalar& c);

    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(ModuleElement a, const Scalar& c) { return a *= c; }
    friend ModuleElement operator*(const Scalar& c, ModuleElement a) { return a *= c; }

    /// Zero elements compare equal regardless of degree.
    friend bool operator==(const ModuleElement& a, const ModuleElement& b);

    /// "[xxx | yx] + [xxyx | 1]", terms largest first, coefficient 1 elided.
    std::string to_string(const Alphabet& alphabet, const MonomialOrder& order) const;

private:
    void check_degree(const ModuleElement& rhs) const;

    std::size_t degree_ = 0;
    Terms terms_;
};

/// High-term of a module element: the largest concatenated word c*s, the
/// term achieving it and its coefficient.
struct LeadingTerm {
    Word word;
    TensorTerm term;
    Scalar coefficient;
};

/// Throws Error(ZeroElement) on zero.
LeadingTerm module_lm(const ModuleElement& p, const MonomialOrder& order);

struct DegreeCheck {
    std::size_t degree = 0;
    std::size_t chains = 0;
    bool zero = true;
    std::optional<Word> failing_chain;
    double seconds = 0.0;
};

struct ComplexReport {
    std::vector<DegreeCheck> degrees;
    bool ok() const;
};

/// Scalar matrix of K (x)_A d_n: rows are (n-1)-chains, columns n-chains.
struct DiagnosticMatrix {
    std::size_t degree = 0;
    std::vector<Word> rows;
    std::vector<Word> columns;
    std::vector<std::vector<Scalar>> entries; // entries[row][column]
    bool nonzero() const;
};

/// The Anick resolution of K over A = K<X | R> by free right A-modules.
///
/// Differentials are computed on basis chains on demand and cached per
/// degree; the contracting homotopy is a recursion on leading terms of
/// arbitrary kernel elements, memoized by element. A is represented by the
/// span of normal words throughout.
///
/// Single-writer: concurrent reads of already computed degrees are fine,
/// anything that may extend a cache needs exclusive access.
class ResolutionEngine {
public:
    struct Options {
        /// Re-check kernel membership after every homotopy step.
        bool check_each_step = false;
        /// Guard on homotopy iterations for a single call.
        std::size_t iteration_cap = 1'000'000;
    };

    /// Uses the presentation's relations as the rewrite system; they must
    /// already form a minimal Groebner basis (verify with check_groebner or
    /// run complete first).
    explicit ResolutionEngine(const Presentation& pres);
    ResolutionEngine(const Presentation& pres, Options options);
    ResolutionEngine(const Presentation& pres, RewriteSystem rs, Options options);

    const Presentation& presentation() const noexcept { return pres_; }
    const RewriteSystem& rewrite_system() const noexcept { return rs_; }
    const ChainGraph& graph() const noexcept { return graph_; }
    const MonomialOrder& order() const noexcept { return pres_.order(); }

    /// Chains of degree n, largest first.
    const std::vector<Chain>& chains(std::size_t n);
    /// Throws Error(OutOfRange) if `word` is not an n-chain.
    const Chain& chain(std::size_t n, const Word& word);
    bool is_chain(std::size_t n, const Word& word);

    /// Cached normal form of a word.
    const Polynomial& reduce(const Word& w);

    /// Right action P * w, renormalized into the normal-word basis.
    ModuleElement act(const ModuleElement& p, const Word& w);

    /// Augmentation on a degree-0 element.
    Scalar augmentation(const ModuleElement& a) const;

    /// d_1(x (x) s) = x s - eps(x) s in A, as a degree-0 element.
    ModuleElement d1(const TensorTerm& t);
    /// Homotopy in degree 0 on a kernel element of the augmentation.
    ModuleElement i0(const Polynomial& a);

    /// d_n(c (x) 1) for a basis chain of degree n >= 1.
    const ModuleElement& differential(std::size_t n, const Chain& c);
    const ModuleElement& differential(std::size_t n, const Word& chain_word);

    /// d_n on an arbitrary degree-n element (n >= 1), or the augmentation
    /// when n == 0 (returned as a constant degree-0 element).
    ModuleElement apply_differential(const ModuleElement& v);

    /// i_n on a kernel element of degree n; n == 0 dispatches to i0.
    /// Throws Error(NotInKernel) when d_n(v) != 0.
    ModuleElement homotopy(const ModuleElement& v);

    /// The correction term i_{n-2} d_{n-1} (c' (x) t) subtracted in d_n(c (x) 1);
    /// zero for n <= 1.
    ModuleElement correction(std::size_t n, const Chain& c);

    /// Checks d_{n-1} d_n (c (x) 1) = 0 for every chain of degree
    /// 1..max_degree (degree 1 uses the augmentation).
    ComplexReport verify_complex(std::size_t max_degree);

    /// Matrices of K (x)_A d_n for n = 1..max_degree.
    std::vector<DiagnosticMatrix> minimality_diagnostic(std::size_t max_degree);

    std::string str(const ModuleElement& m) const { return m.to_string(pres_.alphabet(), pres_.order()); }
    std::string str(const Word& w) const { return w.to_string(pres_.alphabet()); }

private:
    void ensure_chains(std::size_t n);
    ModuleElement homotopy_step_loop(ModuleElement v);
    void require_kernel(const ModuleElement& v, const char* where);

    Presentation pres_;
    RewriteSystem rs_;
    ChainGraph graph_;
    Options options_;

    // Deques keep references to earlier degrees valid while later ones grow.
    std::deque<std::vector<Chain>> chains_;
    std::deque<std::map<Word, std::size_t>> chain_index_;
    std::unordered_map<Word, Polynomial> nf_cache_;
    std::deque<std::map<Word, ModuleElement>> d_cache_;
    std::deque<std::unordered_map<std::string, ModuleElement>> i_cache_;
};

/// Canonical serialization used as the homotopy memo key.
std::string canonical_key(const ModuleElement& m);

} // namespace anick

#endif // ANICK_RESOLUTION_HPP
