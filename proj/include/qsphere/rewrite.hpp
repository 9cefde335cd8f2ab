#pragma once

/**
 * @file rewrite.hpp
 * @brief Oriented relations of the quantum sphere algebra and normal forms.
 *
 * For arity n the generators are z_0..z_n and their stars. The base rules
 * (all left-hand sides have length two) are
 *
 *   R1  z_j z_i   -> q z_i z_j                                (i < j)
 *   R2  z_i* z_j  -> q z_j z_i*                               (i != j)
 *   R3  z_i* z_j* -> q z_j* z_i*                              (i < j)
 *   R4  z_i* z_i  -> z_i z_i* + (1-q^2) sum_{j>i} z_j z_j*
 *   R5  z_0 z_0*  -> 1 - sum_{j>=1} z_j z_j*
 *
 * and the gap schema, for every nonempty word W in letters of index >= 1,
 *
 *   R6  z_0 W z_0* -> q^{-|W|} W (1 - sum_{j>=1} z_j z_j*)
 *
 * Irreducible words have the shape z_0^{a_0}..z_n^{a_n} (z_n*)^{b_n}..(z_0*)^{b_0}
 * with min(a_0, b_0) = 0.
 *
 * Normalization is innermost-leftmost on each word, with R1-R5 taking
 * priority over R6. R6 needs q invertible, so it is switched off in the
 * fixed mode q = 0.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ncpoly.hpp"
#include "qmode.hpp"

namespace qsphere {

enum class RuleFamily { R1, R2, R3, R4, R5, R6 };

inline std::string to_string(RuleFamily f) {
    static constexpr std::array<const char*, 6> names{"R1", "R2", "R3", "R4", "R5", "R6"};
    return names[static_cast<std::size_t>(f)];
}

template <class C>
struct Rule {
    RuleFamily family;
    Word lhs;
    NCPoly<C> rhs;

    std::string name() const { return to_string(family) + ":" + lhs.str(); }
};

/// Lexicographic termination measure on words.
struct WordMeasure {
    std::size_t length = 0;
    std::size_t z0_pairs = 0;          ///< min(#z_0, #z_0*)
    std::size_t star_inversions = 0;   ///< starred letter before an unstarred one
    std::size_t index_weight = 0;      ///< sum over letters of (n - index)
    std::size_t block_inversions = 0;  ///< unstarred out of ascending order, starred out of descending order

    friend auto operator<=>(const WordMeasure&, const WordMeasure&) = default;

    std::string str() const {
        return "(" + std::to_string(length) + "," + std::to_string(z0_pairs) + "," +
               std::to_string(star_inversions) + "," + std::to_string(index_weight) + "," +
               std::to_string(block_inversions) + ")";
    }
};

inline WordMeasure word_measure(const Word& w, int n) {
    WordMeasure m;
    m.length = w.size();
    m.z0_pairs = std::min(w.count(z(0)), w.count(zs(0)));
    for (std::size_t a = 0; a < w.size(); ++a) {
        m.index_weight += static_cast<std::size_t>(n - w[a].index);
        for (std::size_t b = a + 1; b < w.size(); ++b) {
            if (w[a].starred && !w[b].starred) ++m.star_inversions;
            if (!w[a].starred && !w[b].starred && w[a].index > w[b].index) ++m.block_inversions;
            if (w[a].starred && w[b].starred && w[a].index < w[b].index) ++m.block_inversions;
        }
    }
    return m;
}

/// Irreducible-word shape: ascending unstarred block, descending starred block, not both z_0 and z_0*.
inline bool is_pbw_word(const Word& w) {
    std::size_t p = 0;
    while (p < w.size() && !w[p].starred) {
        if (p > 0 && w[p - 1].index > w[p].index) return false;
        ++p;
    }
    std::size_t split = p;
    for (; p < w.size(); ++p) {
        if (!w[p].starred) return false;
        if (p > split && w[p - 1].index < w[p].index) return false;
    }
    return !(w.count(z(0)) > 0 && w.count(zs(0)) > 0);
}

template <class C>
class RuleSet {
public:
    /// Builds and validates the rules. Throws InvalidQ for a fixed q outside [0,1)
    /// and Error if some rule fails to decrease the termination measure.
    RuleSet(int n, QMode qmode, std::size_t measure_check_bound = 3) : n_(n), qmode_(std::move(qmode)) {
        if (n < 0) throw Error("arity must be non-negative");
        qmode_.require_unit_interval();
        gap_enabled_ = n >= 1 && !qmode_.is_zero();
        build_base_rules();
        check_measure(measure_check_bound);
    }

    int arity() const noexcept { return n_; }
    const QMode& qmode() const noexcept { return qmode_; }
    C q() const { return qmode_.template q<C>(); }
    bool gap_rule_enabled() const noexcept { return gap_enabled_; }
    const std::vector<Rule<C>>& base_rules() const noexcept { return rules_; }

    /// Base rule whose left-hand side is the letter pair (a, b), or nullptr.
    const Rule<C>* match(Letter a, Letter b) const {
        int idx = table_[code(a) * letters() + code(b)];
        return idx < 0 ? nullptr : &rules_[static_cast<std::size_t>(idx)];
    }

    /// sum_{j >= from} z_j z_j*
    NCPoly<C> tail_sum(int from) const {
        NCPoly<C> s(n_);
        for (int j = from; j <= n_; ++j) s.add_term(Word{z(j), zs(j)}, C(1));
        return s;
    }

    /// Instance of the gap schema for the inner word W (nonempty, all indices >= 1).
    Rule<C> gap_rule(const Word& inner) const {
        Word lhs{z(0)};
        lhs *= inner;
        lhs.push_back(zs(0));
        NCPoly<C> rhs = (NCPoly<C>(n_, inner) * (NCPoly<C>(n_, C(1)) - tail_sum(1)))
                            .scaled(qmode_.template q_power<C>(-static_cast<long>(inner.size())));
        return Rule<C>{RuleFamily::R6, std::move(lhs), std::move(rhs)};
    }

    /// All words of the given length over letters of index >= 1.
    std::vector<Word> inner_words(std::size_t length) const {
        std::vector<Word> out{Word{}};
        for (std::size_t step = 0; step < length; ++step) {
            std::vector<Word> next;
            for (const auto& w : out)
                for (int i = 1; i <= n_; ++i)
                    for (bool s : {false, true}) {
                        Word v = w;
                        v.push_back(Letter{i, s});
                        next.push_back(std::move(v));
                    }
            out = std::move(next);
        }
        return out;
    }

private:
    int letters() const { return 2 * (n_ + 1); }
    static int code(Letter l) { return 2 * l.index + (l.starred ? 1 : 0); }

    void add(RuleFamily f, Word lhs, NCPoly<C> rhs) {
        table_[code(lhs[0]) * letters() + code(lhs[1])] = static_cast<int>(rules_.size());
        rules_.push_back(Rule<C>{f, std::move(lhs), std::move(rhs)});
    }

    void build_base_rules() {
        table_.assign(static_cast<std::size_t>(letters() * letters()), -1);
        const C q = this->q();
        const C one_minus_q2 = C(1) - q * q;
        for (int i = 0; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j) add(RuleFamily::R1, Word{z(j), z(i)}, NCPoly<C>(n_, Word{z(i), z(j)}, q));
        for (int i = 0; i <= n_; ++i)
            for (int j = 0; j <= n_; ++j)
                if (i != j) add(RuleFamily::R2, Word{zs(i), z(j)}, NCPoly<C>(n_, Word{z(j), zs(i)}, q));
        for (int i = 0; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                add(RuleFamily::R3, Word{zs(i), zs(j)}, NCPoly<C>(n_, Word{zs(j), zs(i)}, q));
        for (int i = 0; i <= n_; ++i)
            add(RuleFamily::R4, Word{zs(i), z(i)}, NCPoly<C>(n_, Word{z(i), zs(i)}) + tail_sum(i + 1).scaled(one_minus_q2));
        add(RuleFamily::R5, Word{z(0), zs(0)}, NCPoly<C>(n_, C(1)) - tail_sum(1));
    }

    void check_rule(const Rule<C>& r) const {
        WordMeasure top = word_measure(r.lhs, n_);
        for (const auto& [w, c] : r.rhs.terms()) {
            if (!(word_measure(w, n_) < top))
                throw Error("rule " + r.name() + " does not decrease the termination measure at " + w.str());
        }
    }

    void check_measure(std::size_t bound) const {
        for (const auto& r : rules_) check_rule(r);
        if (!gap_enabled_) return;
        for (std::size_t len = 1; len <= bound; ++len)
            for (const auto& w : inner_words(len)) check_rule(gap_rule(w));
    }

    int n_;
    QMode qmode_;
    bool gap_enabled_ = false;
    std::vector<Rule<C>> rules_;
    std::vector<int> table_;
};

/// Substitutes a fixed q into every coefficient; the identity in symbolic mode.
template <class C>
C specialize(const C& c, const QMode& qmode) {
    if (qmode.is_symbolic() || c.is_constant()) return c;
    return C(c.eval(typename C::scalar_type(qmode.value())));
}

template <class C>
NCPoly<C> specialize(const NCPoly<C>& a, const QMode& qmode) {
    if (qmode.is_symbolic()) return a;
    NCPoly<C> out(a.arity());
    for (const auto& [w, c] : a.terms()) out.add_term(w, specialize(c, qmode));
    return out;
}

template <class C>
RuleSet<C> build_rules(int n, const QMode& qmode) {
    return RuleSet<C>(n, qmode);
}

/// A polynomial all of whose words are irreducible.
template <class C>
class NormalForm {
public:
    const NCPoly<C>& value() const noexcept { return value_; }
    operator const NCPoly<C>&() const noexcept { return value_; }  // NOLINT(google-explicit-constructor)
    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    template <class>
    friend class Normalizer;
    explicit NormalForm(NCPoly<C> v) : value_(std::move(v)) {}
    NCPoly<C> value_;
};

/// Memoizing normalizer bound to one rule set. Not thread-safe; use one per thread.
template <class C>
class Normalizer {
public:
    explicit Normalizer(const RuleSet<C>& rules) : rules_(&rules) {}

    const RuleSet<C>& rules() const noexcept { return *rules_; }

    NormalForm<C> operator()(const NCPoly<C>& a) { return NormalForm<C>(reduce(a)); }

    NCPoly<C> reduce(const NCPoly<C>& a) {
        if (a.arity() != rules_->arity()) throw ArityMismatch(a.arity(), rules_->arity());
        NCPoly<C> out(a.arity());
        for (const auto& [w, c0] : a.terms()) {
            // symbolic q in the input means the fixed q of the rule set
            C c = specialize(c0, rules_->qmode());
            for (const auto& [v, d] : normalize_word(w).terms()) out.add_term(v, c * d);
        }
        return out;
    }

    const NCPoly<C>& normalize_word(const Word& w) {
        if (auto it = cache_.find(w); it != cache_.end()) return it->second;
        NCPoly<C> result = step_and_reduce(w);
        return cache_.emplace(w, std::move(result)).first->second;
    }

    /// One rewrite step of the strategy, or nullopt-like empty pair when w is irreducible.
    /// Returns (true, reduct) if a rule applied.
    std::pair<bool, NCPoly<C>> rewrite_once(const Word& w) const {
        const int n = rules_->arity();
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (const Rule<C>* r = rules_->match(w[p], w[p + 1])) return {true, splice(w, p, 2, r->rhs)};
        }
        if (rules_->gap_rule_enabled()) {
            // w is R1-R5 irreducible, so any z_0 precede any z_0* and only index >= 1 letters lie between
            std::size_t last_z0 = w.size(), first_z0s = w.size();
            for (std::size_t p = 0; p < w.size(); ++p) {
                if (w[p] == z(0)) last_z0 = p;
                if (w[p] == zs(0) && first_z0s == w.size()) first_z0s = p;
            }
            if (last_z0 < w.size() && first_z0s < w.size() && last_z0 < first_z0s) {
                Word inner = w.slice(last_z0 + 1, first_z0s);
                return {true, splice(w, last_z0, inner.size() + 2, rules_->gap_rule(inner).rhs)};
            }
        }
        return {false, NCPoly<C>(n, w)};
    }

    std::size_t cache_size() const noexcept { return cache_.size(); }

private:
    NCPoly<C> splice(const Word& w, std::size_t pos, std::size_t len, const NCPoly<C>& rhs) const {
        NCPoly<C> out(rules_->arity());
        Word prefix = w.slice(0, pos);
        Word suffix = w.slice(pos + len, w.size());
        for (const auto& [v, c] : rhs.terms()) out.add_term(prefix * v * suffix, c);
        return out;
    }

    NCPoly<C> step_and_reduce(const Word& w) {
        auto [applied, reduct] = rewrite_once(w);
        if (!applied) return reduct;
        NCPoly<C> out(rules_->arity());
        for (const auto& [v, c] : reduct.terms()) {
            // unordered_map references survive rehashing
            const NCPoly<C>& sub = normalize_word(v);
            for (const auto& [u, d] : sub.terms()) out.add_term(u, c * d);
        }
        return out;
    }

    const RuleSet<C>* rules_;
    std::unordered_map<Word, NCPoly<C>, WordHash> cache_;
};

template <class C>
NormalForm<C> normalize(const NCPoly<C>& a, const RuleSet<C>& rules) {
    Normalizer<C> norm(rules);
    return norm(a);
}

// ---------------------------------------------------------------------------
// Defining relations

struct RelationId {
    int equation = 0;  ///< 1..4
    int i = -1;
    int j = -1;

    std::string str() const {
        std::string s = "Eq" + std::to_string(equation);
        if (i >= 0) s += "(i=" + std::to_string(i) + (j >= 0 ? ",j=" + std::to_string(j) : "") + ")";
        return s;
    }
    friend bool operator==(const RelationId&, const RelationId&) = default;
};

template <class C>
struct Relation {
    RelationId id;
    NCPoly<C> lhs_minus_rhs;
};

/// The defining relations, each moved to one side (the element that must vanish).
template <class C>
std::vector<Relation<C>> defining_relations(int n, const QMode& qmode) {
    const C q = qmode.template q<C>();
    std::vector<Relation<C>> out;
    auto w = [n](std::initializer_list<Letter> ls) { return NCPoly<C>(n, Word(ls)); };
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({{1, i, j}, w({z(j), z(i)}) - w({z(i), z(j)}).scaled(q)});
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) out.push_back({{2, i, j}, w({zs(i), z(j)}) - w({z(j), zs(i)}).scaled(q)});
    for (int i = 0; i <= n; ++i) {
        NCPoly<C> tail(n);
        for (int j = i + 1; j <= n; ++j) tail += w({z(j), zs(j)});
        out.push_back({{3, i, -1}, w({zs(i), z(i)}) - w({z(i), zs(i)}) - tail.scaled(C(1) - q * q)});
    }
    NCPoly<C> sum(n);
    for (int j = 0; j <= n; ++j) sum += w({z(j), zs(j)});
    out.push_back({{4, -1, -1}, sum - NCPoly<C>(n, C(1))});
    return out;
}

// ---------------------------------------------------------------------------
// Critical-pair audit

template <class C>
struct CriticalPairReport {
    Word overlap;
    std::string first_rule;
    std::string second_rule;
    NCPoly<C> first_reduct;
    NCPoly<C> second_reduct;
    NCPoly<C> first_normal;
    NCPoly<C> second_normal;
    bool joined = false;
};

namespace detail {

template <class C>
NCPoly<C> apply_at(const Word& w, std::size_t pos, const Rule<C>& r, int n) {
    NCPoly<C> out(n);
    Word prefix = w.slice(0, pos);
    Word suffix = w.slice(pos + r.lhs.size(), w.size());
    for (const auto& [v, c] : r.rhs.terms()) out.add_term(prefix * v * suffix, c);
    return out;
}

}  // namespace detail

/// Enumerates every ambiguity of the rule system and checks that both
/// one-step reducts reach the same normal form. Base rules are covered
/// fully; gap-schema instances with inner word length <= schema_bound.
template <class C>
std::vector<CriticalPairReport<C>> check_local_confluence(const RuleSet<C>& rules, std::size_t schema_bound) {
    const int n = rules.arity();
    Normalizer<C> norm(rules);
    std::vector<CriticalPairReport<C>> reports;

    auto record = [&](const Word& overlap, const Rule<C>& ra, std::size_t pa, const Rule<C>& rb, std::size_t pb) {
        CriticalPairReport<C> rep;
        rep.overlap = overlap;
        rep.first_rule = ra.name();
        rep.second_rule = rb.name();
        rep.first_reduct = detail::apply_at(overlap, pa, ra, n);
        rep.second_reduct = detail::apply_at(overlap, pb, rb, n);
        rep.first_normal = norm.reduce(rep.first_reduct);
        rep.second_normal = norm.reduce(rep.second_reduct);
        rep.joined = rep.first_normal == rep.second_normal;
        reports.push_back(std::move(rep));
    };

    // base/base overlaps a b c with ab and bc both left-hand sides
    for (const auto& ra : rules.base_rules())
        for (const auto& rb : rules.base_rules())
            if (ra.lhs[1] == rb.lhs[0]) record(Word{ra.lhs[0], ra.lhs[1], rb.lhs[1]}, ra, 0, rb, 1);

    if (!rules.gap_rule_enabled()) return reports;

    for (std::size_t len = 1; len <= schema_bound; ++len) {
        for (const auto& inner : rules.inner_words(len)) {
            Rule<C> gap = rules.gap_rule(inner);
            const Word& lhs = gap.lhs;
            for (const auto& rb : rules.base_rules()) {
                // x z_0 W z_0*
                if (rb.lhs[1] == z(0)) record(Word{rb.lhs[0]} * lhs, rb, 0, gap, 1);
                // z_0 W z_0* y
                if (rb.lhs[0] == zs(0)) record(lhs * Word{rb.lhs[1]}, gap, 0, rb, lhs.size() - 1);
            }
            // base redexes strictly inside z_0 W z_0*
            for (std::size_t p = 1; p + 2 < lhs.size(); ++p) {
                if (const Rule<C>* rb = rules.match(lhs[p], lhs[p + 1])) record(lhs, gap, 0, *rb, p);
            }
        }
    }
    return reports;
}

}  // namespace qsphere
