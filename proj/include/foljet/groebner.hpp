#ifndef FOLJET_GROEBNER_HPP
#define FOLJET_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "gcd.hpp"
#include "polynomial.hpp"

namespace foljet {

struct Ideal {
    ContextPtr context;
    std::vector<Polynomial> generators;  // zero generators dropped

    Ideal() = default;
    Ideal(ContextPtr ctx, std::vector<Polynomial> gens) : context(std::move(ctx)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require_compatible(g.context(), context);
            generators.push_back(std::move(g));
        }
    }

    static Ideal zero(ContextPtr ctx) { return Ideal(std::move(ctx), {}); }

    Ideal operator+(const Ideal& o) const {
        require_compatible(context, o.context);
        std::vector<Polynomial> gens = generators;
        gens.insert(gens.end(), o.generators.begin(), o.generators.end());
        return Ideal(context, std::move(gens));
    }
};

/// Global default cap on S-pair reduction steps.
inline long& groebner_default_budget() {
    static long budget = 200000;
    return budget;
}

namespace detail {

/// Ordered-term view of a polynomial under an arbitrary monomial order.
struct OrderedPoly {
    // terms sorted descending by the active order
    std::vector<std::pair<Monomial, Rational>> terms;
    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().first; }
    const Rational& lc() const { return terms.front().second; }
};

inline OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
    OrderedPoly o;
    o.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(o.terms.begin(), o.terms.end(),
              [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
    return o;
}

inline Polynomial from_ordered(const OrderedPoly& o, const ContextPtr& ctx) {
    Polynomial p(ctx);
    for (auto& [m, c] : o.terms) p.add_term(m, c);
    return p;
}

inline void axpy(OrderedPoly& r, const Rational& c, const Monomial& m,
                 const OrderedPoly& g, const MonomialOrder& ord) {
    // r += c * m * g, merging sorted term lists
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(r.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < r.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size()) { out.push_back(r.terms[i++]); continue; }
        Monomial gm = g.terms[j].first * m;
        if (i == r.terms.size()) {
            Rational v = c * g.terms[j].second;
            if (v != 0) out.emplace_back(std::move(gm), std::move(v));
            ++j;
            continue;
        }
        int cmp = ord.cmp(r.terms[i].first, gm);
        if (cmp > 0) out.push_back(r.terms[i++]);
        else if (cmp < 0) {
            Rational v = c * g.terms[j].second;
            if (v != 0) out.emplace_back(std::move(gm), std::move(v));
            ++j;
        } else {
            Rational v = r.terms[i].second + c * g.terms[j].second;
            if (v != 0) out.emplace_back(std::move(gm), std::move(v));
            ++i, ++j;
        }
    }
    r.terms = std::move(out);
}

struct Budget {
    long remaining;
    void spend() {
        if (--remaining < 0)
            throw budget_exceeded_error("Groebner step budget exceeded");
    }
};

/// Full normal form of f modulo basis (every term reduced).
inline OrderedPoly reduce_full(OrderedPoly f, const std::vector<OrderedPoly>& basis,
                               const MonomialOrder& ord, Budget& budget) {
    OrderedPoly out;
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.lm().divides(f.lm())) {
                budget.spend();
                Rational c = -f.lc() / g.lc();
                axpy(f, c, f.lm().divide(g.lm()), g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.terms.push_back(f.terms.front());
            f.terms.erase(f.terms.begin());
        }
    }
    return out;
}

}  // namespace detail

struct GroebnerBasis {
    ContextPtr context;
    MonomialOrder order = MonomialOrder::grevlex(0);
    std::vector<Polynomial> basis;  // reduced, monic, sorted by leading monomial
};

/// Buchberger with the normal selection strategy and the product and chain
/// criteria; returns the unique reduced monic basis. Throws
/// budget_exceeded_error when the step cap runs out.
inline GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& ord,
                                std::optional<long> budget_opt = std::nullopt) {
    using detail::OrderedPoly;
    detail::Budget budget{budget_opt.value_or(groebner_default_budget())};
    std::vector<OrderedPoly> G;
    for (const auto& g : I.generators) {
        auto o = detail::to_ordered(g, ord);
        if (!o.is_zero()) G.push_back(std::move(o));
    }

    struct Pair {
        int deg;
        int i, j;
        Monomial lcm;
        bool operator<(const Pair& o) const {
            return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
        }
    };
    std::set<Pair> pairs;
    auto push_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) {
            if (G[static_cast<std::size_t>(i)].is_zero()) continue;
            Monomial l = Monomial::lcm(G[static_cast<std::size_t>(i)].lm(),
                                       G[static_cast<std::size_t>(k)].lm());
            pairs.insert(Pair{l.degree(), i, k, l});
        }
    };
    for (int k = 0; k < static_cast<int>(G.size()); ++k) push_pairs(k);

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const auto& gi = G[static_cast<std::size_t>(p.i)];
        const auto& gj = G[static_cast<std::size_t>(p.j)];
        if (gi.is_zero() || gj.is_zero()) continue;
        if (Monomial::coprime(gi.lm(), gj.lm())) continue;  // product criterion
        // chain criterion: some other basis element's lm divides the lcm and
        // both companion pairs are already processed (not pending)
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == p.i || k == p.j || G[static_cast<std::size_t>(k)].is_zero()) continue;
            if (!G[static_cast<std::size_t>(k)].lm().divides(p.lcm)) continue;
            auto mk = [&](int a, int b) {
                int i = std::min(a, b), j = std::max(a, b);
                Monomial l = Monomial::lcm(G[static_cast<std::size_t>(i)].lm(),
                                           G[static_cast<std::size_t>(j)].lm());
                return Pair{l.degree(), i, j, l};
            };
            if (!pairs.count(mk(p.i, k)) && !pairs.count(mk(p.j, k))) skip = true;
        }
        if (skip) continue;

        // S-polynomial
        OrderedPoly s;
        detail::axpy(s, Rational(1) / gi.lc(), p.lcm.divide(gi.lm()), gi, ord);
        detail::axpy(s, Rational(-1) / gj.lc(), p.lcm.divide(gj.lm()), gj, ord);
        OrderedPoly r = detail::reduce_full(std::move(s), G, ord, budget);
        if (!r.is_zero()) {
            G.push_back(std::move(r));
            push_pairs(static_cast<int>(G.size()) - 1);
        }
    }

    // interreduce: drop elements whose lm is divisible by another lm, then
    // fully reduce each survivor against the others and normalize monic
    std::vector<OrderedPoly> kept;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < G.size() && !dominated; ++j) {
            if (i == j || G[j].is_zero()) continue;
            if (G[j].lm().divides(G[i].lm()) && G[j].lm() != G[i].lm()) dominated = true;
            if (G[j].lm() == G[i].lm() && j < i) dominated = true;
        }
        if (!dominated) kept.push_back(G[i]);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<OrderedPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        OrderedPoly r = detail::reduce_full(kept[i], others, ord, budget);
        Rational lc = r.lc();
        for (auto& [m, c] : r.terms) c /= lc;
        kept[i] = std::move(r);
    }
    std::sort(kept.begin(), kept.end(),
              [&](const OrderedPoly& a, const OrderedPoly& b) {
                  return ord.less(b.lm(), a.lm());
              });

    GroebnerBasis gb;
    gb.context = I.context;
    gb.order = ord;
    for (auto& o : kept) gb.basis.push_back(detail::from_ordered(o, I.context));
    return gb;
}

inline GroebnerBasis buchberger(const Ideal& I,
                                std::optional<long> budget = std::nullopt) {
    return buchberger(I, MonomialOrder::grevlex(I.context->size()), budget);
}

/// Normal form of f modulo a precomputed basis.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                              std::optional<long> budget_opt = std::nullopt) {
    detail::Budget budget{budget_opt.value_or(groebner_default_budget())};
    std::vector<detail::OrderedPoly> basis;
    for (auto& g : gb.basis) basis.push_back(detail::to_ordered(g, gb.order));
    auto r = detail::reduce_full(detail::to_ordered(f, gb.order), basis, gb.order, budget);
    return detail::from_ordered(r, f.context());
}

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

inline bool ideal_member(const Polynomial& f, const Ideal& I) {
    return ideal_member(f, buchberger(I));
}

/// Rabinowitsch: f in sqrt(I) iff 1 in I + (1 - y f) for fresh y.
inline bool radical_member(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    auto ctx = I.context;
    auto ext = ctx->extended({VarInfo{ctx->fresh_name("rab"), VarRole::Aux, 0, 0}});
    int y = ext->size() - 1;
    std::vector<Polynomial> gens;
    for (auto& g : I.generators) gens.push_back(g.in_context(ext));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, y) * f.in_context(ext));
    auto gb = buchberger(Ideal(ext, std::move(gens)),
                         MonomialOrder::grevlex(ext->size()));
    return gb.basis.size() == 1 && gb.basis[0].is_constant();
}

/// I restricted to the subring without `vars` (computed with a block order).
inline Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
    if (vars.empty()) return I;
    auto ord = MonomialOrder::elimination(I.context->size(), vars);
    auto gb = buchberger(I, ord);
    std::vector<Polynomial> kept;
    for (auto& g : gb.basis) {
        bool uses = false;
        for (int v : vars)
            if (g.depends_on(v)) { uses = true; break; }
        if (!uses) kept.push_back(g);
    }
    return Ideal(I.context, std::move(kept));
}

/// Drops the named auxiliary variables from the context after elimination.
inline Ideal contract_to(const Ideal& I, const ContextPtr& small) {
    std::vector<Polynomial> gens;
    for (auto& g : I.generators) {
        Polynomial p(small);
        for (auto& [m, c] : g.terms()) {
            for (auto& [v, e] : m.exponents())
                if (v >= small->size())
                    throw std::invalid_argument("contract_to: generator uses dropped variable");
            p.add_term(m, c);
        }
        gens.push_back(std::move(p));
    }
    return Ideal(small, std::move(gens));
}

inline bool is_monomial_ideal(const Ideal& I) {
    for (auto& g : I.generators)
        if (g.terms().size() != 1) return false;
    return true;
}

inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    require_compatible(I.context, J.context);
    if (is_monomial_ideal(I) && is_monomial_ideal(J)) {
        // pairwise lcm fast path
        std::vector<Polynomial> gens;
        for (auto& f : I.generators)
            for (auto& g : J.generators) {
                Monomial l = Monomial::lcm(f.terms().begin()->first,
                                           g.terms().begin()->first);
                gens.push_back(Polynomial::term(I.context, 1, l));
            }
        auto gb = buchberger(Ideal(I.context, std::move(gens)));
        return Ideal(I.context, gb.basis);
    }
    auto ctx = I.context;
    auto ext = ctx->extended({VarInfo{ctx->fresh_name("isect"), VarRole::Aux, 0, 0}});
    int t = ext->size() - 1;
    Polynomial tv = Polynomial::variable(ext, t);
    Polynomial one = Polynomial::constant(ext, 1);
    std::vector<Polynomial> gens;
    for (auto& f : I.generators) gens.push_back(tv * f.in_context(ext));
    for (auto& g : J.generators) gens.push_back((one - tv) * g.in_context(ext));
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), {t});
    return contract_to(elim, ctx);
}

/// (I : f^infinity)
inline Ideal saturate_ideal(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("saturate_ideal: zero polynomial");
    auto ctx = I.context;
    auto ext = ctx->extended({VarInfo{ctx->fresh_name("sat"), VarRole::Aux, 0, 0}});
    int y = ext->size() - 1;
    std::vector<Polynomial> gens;
    for (auto& g : I.generators) gens.push_back(g.in_context(ext));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, y) * f.in_context(ext));
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), {y});
    return contract_to(elim, ctx);
}

/// True iff V(I) is a subscheme of V(J): every generator of J lies in I.
inline bool ideal_contains_scheme(const Ideal& I, const Ideal& J) {
    auto gb = buchberger(I);
    for (auto& g : J.generators)
        if (!ideal_member(g, gb)) return false;
    return true;
}

/// Set-level version: generators of J lie in the radical of I.
inline bool radical_contains(const Ideal& I, const Ideal& J) {
    for (auto& g : J.generators)
        if (!radical_member(g, I)) return false;
    return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
    return ideal_contains_scheme(I, J) && ideal_contains_scheme(J, I);
}

inline bool radical_equal(const Ideal& I, const Ideal& J) {
    return radical_contains(I, J) && radical_contains(J, I);
}

}  // namespace foljet

#endif
