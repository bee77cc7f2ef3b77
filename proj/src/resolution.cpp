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

#include "anick/resolution.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "anick/error.hpp"

namespace anick {

std::weak_ordering basis_compare(const MonomialOrder& order, const TensorTerm& a, const TensorTerm& b) {
    return order.compare_concat(a.chain, a.tail, b.chain, b.tail);
}

ModuleElement::ModuleElement(std::size_t degree, const TensorTerm& t, const Scalar& c) : degree_(degree) {
    add_term(t, c);
}

ModuleElement ModuleElement::from_algebra(const Polynomial& a) {
    ModuleElement m(0);
    for (const auto& [w, c] : a.terms()) m.add_term({Word{}, w}, c);
    return m;
}

Polynomial ModuleElement::to_algebra() const {
    if (degree_ != 0) throw Error(ErrorCode::Internal, "to_algebra on an element of degree " + std::to_string(degree_));
    Polynomial p;
    for (const auto& [t, c] : terms_) p.add_term(t.tail, c);
    return p;
}

Scalar ModuleElement::coefficient(const TensorTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void ModuleElement::add_term(const TensorTerm& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ModuleElement::check_degree(const ModuleElement& rhs) const {
    if (rhs.degree_ != degree_ && !rhs.is_zero() && !is_zero()) {
        throw Error(ErrorCode::Internal, "adding module elements of degrees " + std::to_string(degree_) + " and " +
                                             std::to_string(rhs.degree_));
    }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs) {
    check_degree(rhs);
    if (is_zero()) degree_ = rhs.degree_;
    for (const auto& [t, c] : rhs.terms_) add_term(t, c);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs) {
    check_degree(rhs);
    if (is_zero()) degree_ = rhs.degree_;
    for (const auto& [t, c] : rhs.terms_) add_term(t, -c);
    return *this;
}

ModuleElement& ModuleElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string ModuleElement::to_string(const Alphabet& alphabet, const MonomialOrder& order) const {
    if (is_zero()) return "0";
    std::vector<std::pair<TensorTerm, Scalar>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto& x, const auto& y) { return basis_compare(order, x.first, y.first) > 0; });
    std::string out;
    bool first = true;
    for (const auto& [t, c] : sorted) {
        bool negative = sgn(c.value()) < 0;
        Scalar magnitude = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (!magnitude.is_one()) out += magnitude.to_string() + "·";
        out += "[" + t.chain.to_string(alphabet) + " | " + t.tail.to_string(alphabet) + "]";
    }
    return out;
}

LeadingTerm module_lm(const ModuleElement& p, const MonomialOrder& order) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroElement, "leading term of the zero module element");
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it) {
        if (basis_compare(order, it->first, best->first) > 0) best = it;
    }
    return {best->first.chain * best->first.tail, best->first, best->second};
}

bool ComplexReport::ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeCheck& d) { return d.zero; });
}

bool DiagnosticMatrix::nonzero() const {
    for (const auto& row : entries) {
        for (const auto& e : row) {
            if (!e.is_zero()) return true;
        }
    }
    return false;
}

std::string canonical_key(const ModuleElement& m) {
    std::ostringstream os;
    os << m.degree();
    for (const auto& [t, c] : m.terms()) {
        os << '|';
        for (Letter l : t.chain) os << l << '.';
        os << ':';
        for (Letter l : t.tail) os << l << '.';
        os << '=' << c.to_string();
    }
    return os.str();
}

ResolutionEngine::ResolutionEngine(const Presentation& pres) : ResolutionEngine(pres, Options{}) {}

ResolutionEngine::ResolutionEngine(const Presentation& pres, Options options)
    : ResolutionEngine(pres, RewriteSystem::from_presentation(pres), options) {}

ResolutionEngine::ResolutionEngine(const Presentation& pres, RewriteSystem rs, Options options)
    : pres_(pres), rs_(std::move(rs)),
      graph_(build_chain_graph(obstructions(rs_), pres.alphabet(), pres.order())), options_(options) {
    chains_.push_back({root_chain()});
    chain_index_.push_back({{Word{}, 0}});
}

void ResolutionEngine::ensure_chains(std::size_t n) {
    while (chains_.size() <= n) {
        std::vector<Chain> next;
        for (const auto& c : chains_.back()) {
            auto ext = extend_chain(graph_, c);
            next.insert(next.end(), std::make_move_iterator(ext.begin()), std::make_move_iterator(ext.end()));
        }
        const auto& order = pres_.order();
        std::sort(next.begin(), next.end(),
                  [&](const Chain& a, const Chain& b) { return order.compare(a.word, b.word) > 0; });
        std::map<Word, std::size_t> index;
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (!index.emplace(next[i].word, i).second) {
                throw Error(ErrorCode::Internal, "two paths spell the chain '" + str(next[i].word) + "'");
            }
        }
        chains_.push_back(std::move(next));
        chain_index_.push_back(std::move(index));
    }
}

const std::vector<Chain>& ResolutionEngine::chains(std::size_t n) {
    ensure_chains(n);
    return chains_[n];
}

const Chain& ResolutionEngine::chain(std::size_t n, const Word& word) {
    ensure_chains(n);
    auto it = chain_index_[n].find(word);
    if (it == chain_index_[n].end()) {
        throw Error(ErrorCode::OutOfRange, "'" + str(word) + "' is not a chain of degree " + std::to_string(n));
    }
    return chains_[n][it->second];
}

bool ResolutionEngine::is_chain(std::size_t n, const Word& word) {
    ensure_chains(n);
    return chain_index_[n].count(word) > 0;
}

const Polynomial& ResolutionEngine::reduce(const Word& w) {
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;
    return nf_cache_.emplace(w, normal_form(w, rs_)).first->second;
}

ModuleElement ResolutionEngine::act(const ModuleElement& p, const Word& w) {
    ModuleElement out(p.degree());
    if (w.empty()) return p;
    for (const auto& [t, c] : p.terms()) {
        const Polynomial& nf = reduce(t.tail * w);
        for (const auto& [u, cu] : nf.terms()) out.add_term({t.chain, u}, c * cu);
    }
    return out;
}

Scalar ResolutionEngine::augmentation(const ModuleElement& a) const {
    Scalar total = Scalar::zero(pres_.field());
    for (const auto& [t, c] : a.terms()) total += c * pres_.augment(t.chain * t.tail);
    return total;
}

ModuleElement ResolutionEngine::d1(const TensorTerm& t) {
    if (t.chain.size() != 1) {
        throw Error(ErrorCode::OutOfRange, "d1 expects a letter, got '" + str(t.chain) + "'");
    }
    ModuleElement out = ModuleElement::from_algebra(reduce(t.chain * t.tail));
    out.add_term({Word{}, t.tail}, -pres_.augment(t.chain));
    return out;
}

ModuleElement ResolutionEngine::i0(const Polynomial& a) {
    if (!augmentation_eval(pres_, a).is_zero()) {
        throw Error(ErrorCode::NotInKernel, "i0 argument '" + pres_.str(a) + "' has nonzero augmentation");
    }
    ModuleElement out(1);
    for (const auto& [s, lambda] : a.terms()) {
        if (auto hit = rs_.find_reducer(s)) {
            throw Error(ErrorCode::InvalidInput, "i0 argument contains non-normal word '" + str(s) + "'");
        }
        // sum_j eps(x_1..x_{j-1}) x_j (x) x_{j+1}..x_l
        Scalar prefix_value = lambda;
        for (std::size_t j = 0; j < s.size() && !prefix_value.is_zero(); ++j) {
            out.add_term({s.sub(j, 1), s.sub(j + 1)}, prefix_value);
            prefix_value *= pres_.augmentation()[s[j]];
        }
    }
    return out;
}

const ModuleElement& ResolutionEngine::differential(std::size_t n, const Word& chain_word) {
    return differential(n, chain(n, chain_word));
}

const ModuleElement& ResolutionEngine::differential(std::size_t n, const Chain& c) {
    if (n == 0 || c.degree != n) {
        throw Error(ErrorCode::OutOfRange, "differential d_" + std::to_string(n) + " on chain '" + str(c.word) +
                                               "' of degree " + std::to_string(c.degree));
    }
    while (d_cache_.size() <= n) d_cache_.emplace_back();
    if (auto it = d_cache_[n].find(c.word); it != d_cache_[n].end()) return it->second;

    ModuleElement value;
    if (n == 1) {
        value = d1({c.word, Word{}});
    } else {
        Chain prefix = bracket_prefix(c, n - 1);
        Word tail = bracket_tail(c, n - 1);
        value = ModuleElement(n - 1, {prefix.word, tail}) - correction(n, c);
    }
    return d_cache_[n].emplace(c.word, std::move(value)).first->second;
}

ModuleElement ResolutionEngine::correction(std::size_t n, const Chain& c) {
    if (n <= 1) return ModuleElement(n == 0 ? 0 : n - 1);
    Chain prefix = bracket_prefix(c, n - 1);
    Word tail = bracket_tail(c, n - 1);
    ModuleElement lifted = apply_differential(ModuleElement(n - 1, {prefix.word, tail}));
    return homotopy(lifted);
}

ModuleElement ResolutionEngine::apply_differential(const ModuleElement& v) {
    std::size_t n = v.degree();
    if (n == 0) {
        ModuleElement out(0);
        out.add_term({Word{}, Word{}}, augmentation(v));
        return out;
    }
    ModuleElement out(n - 1);
    for (const auto& [t, c] : v.terms()) {
        const ModuleElement& base = differential(n, chain(n, t.chain));
        out += act(base, t.tail) * c;
    }
    return out;
}

void ResolutionEngine::require_kernel(const ModuleElement& v, const char* where) {
    if (v.is_zero()) return;
    ModuleElement image = apply_differential(v);
    if (!image.is_zero()) {
        throw Error(ErrorCode::NotInKernel, std::string(where) + ": '" + str(v) + "' is not a cycle (d = " +
                                                str(image) + ")");
    }
}

ModuleElement ResolutionEngine::homotopy(const ModuleElement& v) {
    std::size_t n = v.degree();
    if (v.is_zero()) return ModuleElement(n + 1);
    if (n == 0) return i0(v.to_algebra());

    require_kernel(v, "homotopy");
    while (i_cache_.size() <= n) i_cache_.emplace_back();
    std::string key = canonical_key(v);
    if (auto it = i_cache_[n].find(key); it != i_cache_[n].end()) return it->second;

    ModuleElement result = homotopy_step_loop(v);
    i_cache_[n].emplace(std::move(key), result);
    return result;
}

ModuleElement ResolutionEngine::homotopy_step_loop(ModuleElement v) {
    const std::size_t n = v.degree();
    const auto& order = pres_.order();
    const auto& obs = graph_.obstructions();
    ModuleElement result(n + 1);
    std::size_t steps = 0;
    std::optional<Word> previous;
    while (!v.is_zero()) {
        if (++steps > options_.iteration_cap) {
            throw Error(ErrorCode::NonTermination, "homotopy exceeded " + std::to_string(options_.iteration_cap) +
                                                       " steps at '" + str(v) + "'");
        }
        LeadingTerm lead = module_lm(v, order);
        if (previous && order.compare(lead.word, *previous) >= 0) {
            throw Error(ErrorCode::NonTermination, "homotopy leading term '" + str(lead.word) + "' did not decrease");
        }
        previous = lead.word;

        const Chain& c0 = chain(n, lead.term.chain);
        const Word& last = c0.last_node();
        Word r0 = last * lead.term.tail;
        auto occ = obs.occurrences(r0);
        if (occ.empty() || occ.front().first >= last.size()) {
            throw Error(ErrorCode::NotInKernel, "no obstruction overlaps the end of '" + str(c0.word) + "' in '" +
                                                    str(lead.word) + "'");
        }
        std::size_t end = occ.front().first + obs.words()[occ.front().second].size();
        Word node = r0.sub(last.size(), end - last.size());
        Word t = lead.term.tail.sub(node.size());
        const Chain& next = chain(n + 1, c0.word * node);

        result.add_term({next.word, t}, lead.coefficient);
        v -= act(differential(n + 1, next), t) * lead.coefficient;
        if (options_.check_each_step) require_kernel(v, "homotopy step");
    }
    return result;
}

ComplexReport ResolutionEngine::verify_complex(std::size_t max_degree) {
    ComplexReport report;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        auto start = std::chrono::steady_clock::now();
        DegreeCheck check;
        check.degree = n;
        const auto& cs = chains(n);
        check.chains = cs.size();
        for (const auto& c : cs) {
            ModuleElement image = apply_differential(differential(n, c));
            if (!image.is_zero()) {
                check.zero = false;
                check.failing_chain = c.word;
                break;
            }
        }
        check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.degrees.push_back(check);
    }
    return report;
}

std::vector<DiagnosticMatrix> ResolutionEngine::minimality_diagnostic(std::size_t max_degree) {
    std::vector<DiagnosticMatrix> out;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        DiagnosticMatrix m;
        m.degree = n;
        const auto& lower = chains(n - 1);
        const auto& upper = chains(n);
        std::map<Word, std::size_t> row_of;
        for (const auto& c : lower) {
            row_of.emplace(c.word, m.rows.size());
            m.rows.push_back(c.word);
        }
        for (const auto& c : upper) m.columns.push_back(c.word);
        m.entries.assign(m.rows.size(), std::vector<Scalar>(m.columns.size(), Scalar::zero(pres_.field())));
        for (std::size_t col = 0; col < upper.size(); ++col) {
            for (const auto& [t, c] : differential(n, upper[col]).terms()) {
                m.entries[row_of.at(t.chain)][col] += c * pres_.augment(t.tail);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace anick
