#ifndef FOLJET_JETS_HPP
#define FOLJET_JETS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "polynomial.hpp"

namespace foljet {

/// Variables a_{i,j} for 1 <= i <= n (base variable index), 0 <= j <= m,
/// named "a_<i>_<j>", listed i-major. `with_a0` = false drops the j=0 layer
/// (fiber coordinates).
struct JetContext {
    ContextPtr base;   // the n base variables
    int m = 0;
    bool with_a0 = true;
    ContextPtr ctx;    // the jet variables

    int n() const { return base->size(); }

    /// Index of a_{i,j} in ctx (i is 1-based, j >= (with_a0 ? 0 : 1)).
    int index(int i, int j) const {
        int lo = with_a0 ? 0 : 1;
        if (i < 1 || i > n() || j < lo || j > m)
            throw std::invalid_argument("jet variable out of range");
        return (i - 1) * (m + 1 - lo) + (j - lo);
    }

    Polynomial var(int i, int j) const { return Polynomial::variable(ctx, index(i, j)); }

    static JetContext make(ContextPtr base, int m, bool with_a0 = true) {
        JetContext jc;
        jc.base = std::move(base);
        jc.m = m;
        jc.with_a0 = with_a0;
        std::vector<VarInfo> vars;
        int lo = with_a0 ? 0 : 1;
        for (int i = 1; i <= jc.base->size(); ++i)
            for (int j = lo; j <= m; ++j)
                vars.push_back(VarInfo{
                    "a_" + std::to_string(i) + "_" + std::to_string(j),
                    VarRole::Jet, i, j});
        jc.ctx = VarContext::make(std::move(vars));
        return jc;
    }
};

enum class JetKind { Scheme, Foliation };

/// Generators tagged with the t-power they came from; scheme jets carry
/// coefficients t^0..t^m, foliation jets t^0..t^{m-1}.
struct JetIdeal {
    JetContext jc;
    JetKind kind = JetKind::Scheme;
    std::vector<std::pair<int, Polynomial>> tagged;  // (t-index, generator)

    Ideal ideal() const {
        std::vector<Polynomial> gens;
        for (auto& [k, g] : tagged) gens.push_back(g);
        return Ideal(jc.ctx, std::move(gens));
    }
};

namespace detail {

/// Truncated power series: coefficient vector c[0..m] of t^0..t^m.
struct Series {
    ContextPtr ctx;
    int m;
    std::vector<Polynomial> c;

    static Series zero(ContextPtr ctx, int m) {
        Series s{ctx, m, {}};
        s.c.assign(static_cast<std::size_t>(m) + 1, Polynomial::zero(ctx));
        return s;
    }
    static Series constant(ContextPtr ctx, int m, Polynomial p) {
        Series s = zero(std::move(ctx), m);
        s.c[0] = std::move(p);
        return s;
    }
    Series operator+(const Series& o) const {
        Series r = *this;
        for (int k = 0; k <= m; ++k)
            r.c[static_cast<std::size_t>(k)] += o.c[static_cast<std::size_t>(k)];
        return r;
    }
    Series operator*(const Series& o) const {
        Series r = zero(ctx, m);
        for (int i = 0; i <= m; ++i) {
            if (c[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= m; ++j)
                r.c[static_cast<std::size_t>(i + j)] +=
                    c[static_cast<std::size_t>(i)] * o.c[static_cast<std::size_t>(j)];
        }
        return r;
    }
    Series pow(int e) const {
        Series r = constant(ctx, m, Polynomial::constant(ctx, 1));
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }
};

/// Evaluate f(x_1,...,x_n) at x_i = the given series.
inline Series series_substitute(const Polynomial& f, const std::vector<Series>& xs,
                                const ContextPtr& jctx, int m) {
    Series out = Series::zero(jctx, m);
    for (auto& [mono, coef] : f.terms()) {
        Series term = Series::constant(jctx, m, Polynomial::constant(jctx, coef));
        for (auto& [v, e] : mono.exponents())
            term = term * xs[static_cast<std::size_t>(v)].pow(e);
        out = out + term;
    }
    return out;
}

/// The arc x_i(t) = sum_j a_{ij} t^j in the jet context.
inline std::vector<Series> jet_arcs(const JetContext& jc) {
    std::vector<Series> xs;
    for (int i = 1; i <= jc.n(); ++i) {
        Series s = Series::zero(jc.ctx, jc.m);
        int lo = jc.with_a0 ? 0 : 1;
        for (int j = lo; j <= jc.m; ++j)
            s.c[static_cast<std::size_t>(j)] = jc.var(i, j);
        xs.push_back(std::move(s));
    }
    return xs;
}

}  // namespace detail

inline JetIdeal jet_ideal_scheme(const Ideal& I, int m) {
    JetIdeal out;
    out.jc = JetContext::make(I.context, m);
    out.kind = JetKind::Scheme;
    auto xs = detail::jet_arcs(out.jc);
    for (auto& g : I.generators) {
        auto s = detail::series_substitute(g, xs, out.jc.ctx, m);
        for (int k = 0; k <= m; ++k)
            if (!s.c[static_cast<std::size_t>(k)].is_zero())
                out.tagged.emplace_back(k, s.c[static_cast<std::size_t>(k)]);
    }
    return out;
}

/// tau* omega = sum_i b_i(x(t)) x_i'(t) dt, coefficients of t^0..t^{m-1}
/// (t^m dt is already zero at this truncation).
inline JetIdeal jet_ideal_foliation(const std::vector<Polynomial>& b, int m) {
    if (b.empty()) throw std::invalid_argument("empty form");
    JetIdeal out;
    out.jc = JetContext::make(b.front().context(), m);
    out.kind = JetKind::Foliation;
    auto xs = detail::jet_arcs(out.jc);
    auto total = detail::Series::zero(out.jc.ctx, m);
    for (int i = 1; i <= out.jc.n(); ++i) {
        detail::Series deriv = detail::Series::zero(out.jc.ctx, m);
        for (int j = 1; j <= m; ++j)
            deriv.c[static_cast<std::size_t>(j - 1)] = Rational(j) * out.jc.var(i, j);
        total = total +
                detail::series_substitute(b[static_cast<std::size_t>(i - 1)], xs,
                                          out.jc.ctx, m) *
                    deriv;
    }
    for (int k = 0; k < m; ++k)
        if (!total.c[static_cast<std::size_t>(k)].is_zero())
            out.tagged.emplace_back(k, total.c[static_cast<std::size_t>(k)]);
    return out;
}

/// Substitute a_{i0} = P_i; the context shrinks to the j >= 1 layers.
inline JetIdeal jet_fiber(const JetIdeal& J, const std::vector<Rational>& P) {
    if (!J.jc.with_a0) throw std::invalid_argument("jet_fiber: already a fiber");
    if (static_cast<int>(P.size()) != J.jc.n())
        throw std::invalid_argument("jet_fiber: point dimension mismatch");
    JetIdeal out;
    out.jc = JetContext::make(J.jc.base, J.jc.m, false);
    out.kind = J.kind;
    std::map<int, Polynomial> sigma;
    for (int i = 1; i <= J.jc.n(); ++i) {
        sigma[J.jc.index(i, 0)] =
            Polynomial::constant(out.jc.ctx, P[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j <= J.jc.m; ++j)
            sigma[J.jc.index(i, j)] = out.jc.var(i, j);
    }
    for (auto& [k, g] : J.tagged) {
        Polynomial h = g.substitute(sigma, out.jc.ctx);
        if (!h.is_zero()) out.tagged.emplace_back(k, h);
    }
    return out;
}

/// Projection to order p: keep coefficients with t-index <= p (scheme) or
/// < p (foliation), re-keyed in the order-p context.
inline JetIdeal jet_truncate(const JetIdeal& J, int p) {
    if (p >= J.jc.m) throw std::invalid_argument("jet_truncate: p must be < m");
    JetIdeal out;
    out.jc = JetContext::make(J.jc.base, p, J.jc.with_a0);
    out.kind = J.kind;
    int keep_below = (J.kind == JetKind::Scheme) ? p + 1 : p;
    std::map<int, Polynomial> sigma;
    int lo = J.jc.with_a0 ? 0 : 1;
    for (int i = 1; i <= J.jc.n(); ++i)
        for (int j = lo; j <= J.jc.m; ++j)
            sigma[J.jc.index(i, j)] =
                j <= p ? out.jc.var(i, j) : Polynomial::zero(out.jc.ctx);
    for (auto& [k, g] : J.tagged) {
        if (k >= keep_below) continue;
        // triangularity: a kept generator involves no a_{ij} with j > p, so
        // the zero images above never fire; substitution just re-keys
        out.tagged.emplace_back(k, g.substitute(sigma, out.jc.ctx));
    }
    return out;
}

/// Components and intersection ideal of the jets of V(x_1 ... x_n) at the
/// origin, per the composition formula j_1+...+j_n = m-n+1.
struct NCOracle {
    JetContext jc;                 // fiber context (no a_{i0})
    std::vector<Ideal> components;
    Ideal intersection;
};

inline NCOracle nc_jet_oracle(const ContextPtr& base, int m) {
    int n = base->size();
    NCOracle out;
    out.jc = JetContext::make(base, m, false);
    if (m < n) {  // every truncated arc kills the product: no constraints
        out.intersection = Ideal::zero(out.jc.ctx);
        return out;
    }
    int total = m - n + 1;
    std::vector<int> comp(static_cast<std::size_t>(n), 0);
    // enumerate compositions of `total` into n nonnegative parts
    std::vector<std::vector<int>> comps;
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            comp[static_cast<std::size_t>(pos)] = left;
            comps.push_back(comp);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            comp[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
    for (auto& c : comps) {
        std::vector<Polynomial> gens;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= c[static_cast<std::size_t>(i - 1)]; ++j)
                gens.push_back(out.jc.var(i, j));
        out.components.emplace_back(out.jc.ctx, std::move(gens));
    }
    Ideal acc = out.components.front();
    for (std::size_t k = 1; k < out.components.size(); ++k)
        acc = ideal_intersection(acc, out.components[k]);
    out.intersection = std::move(acc);
    return out;
}

/// The jet-variable substitution induced by a polynomial map phi between
/// base contexts: target a_{ij} maps to the t^j coefficient of
/// phi_i(sum a_{kl} t^l). Source and target jet contexts share order m.
struct InducedJetMap {
    JetContext source, target;
    std::map<int, Polynomial> sigma;  // target jet index -> source jet poly

    Polynomial apply(const Polynomial& f) const {
        return f.substitute(sigma, source.ctx);
    }

    JetIdeal pullback(const JetIdeal& J) const {
        JetIdeal out;
        out.jc = source;
        out.kind = J.kind;
        for (auto& [k, g] : J.tagged) {
            Polynomial h = apply(g);
            if (!h.is_zero()) out.tagged.emplace_back(k, h);
        }
        return out;
    }
};

inline InducedJetMap induced_jet_map(const std::vector<Polynomial>& phi,
                                     const ContextPtr& target_base, int m) {
    if (phi.empty()) throw std::invalid_argument("empty map");
    if (static_cast<int>(phi.size()) != target_base->size())
        throw std::invalid_argument("induced_jet_map: component count mismatch");
    InducedJetMap out;
    out.source = JetContext::make(phi.front().context(), m);
    out.target = JetContext::make(target_base, m);
    auto xs = detail::jet_arcs(out.source);
    for (int i = 1; i <= target_base->size(); ++i) {
        auto s = detail::series_substitute(phi[static_cast<std::size_t>(i - 1)], xs,
                                           out.source.ctx, m);
        for (int j = 0; j <= m; ++j)
            out.sigma[out.target.index(i, j)] = s.c[static_cast<std::size_t>(j)];
    }
    return out;
}

}  // namespace foljet

#endif
