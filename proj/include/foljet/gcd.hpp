#ifndef FOLJET_GCD_HPP
#define FOLJET_GCD_HPP

#include <optional>

#include "polynomial.hpp"

namespace foljet {

/// Exact quotient f/g, or nullopt when g does not divide f.
/// Multivariate long division by the leading term in the structural order;
/// any nonzero remainder step that cannot be cancelled means non-divisibility.
inline std::optional<Polynomial> try_exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) return std::nullopt;
    require_compatible(f.context(), g.context());
    Polynomial q(f.context());
    Polynomial r = f;
    const auto& [gm, gc] = g.leading_term();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        if (!gm.divides(rm)) return std::nullopt;
        Polynomial t = Polynomial::term(f.context(), rc / gc, rm.divide(gm));
        q += t;
        r -= t * g;
    }
    return q;
}

inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
    auto q = try_exact_divide(f, g);
    if (!q) throw std::invalid_argument("exact_divide: not divisible");
    return *q;
}

namespace detail {

/// View f as a univariate polynomial in `var` with Polynomial coefficients.
inline std::vector<Polynomial> coeffs_in(const Polynomial& f, int var) {
    int d = f.degree_in(var);
    std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1,
                                Polynomial::zero(f.context()));
    for (auto& [m, c] : f.terms()) {
        int e = m.degree_of(var);
        Monomial::Exps rest;
        for (auto& [v, k] : m.exponents())
            if (v != var) rest.emplace_back(v, k);
        out[static_cast<std::size_t>(e)].add_term(Monomial(std::move(rest)), c);
    }
    return out;
}

inline Polynomial from_coeffs(const std::vector<Polynomial>& cs, int var,
                              const ContextPtr& ctx) {
    Polynomial out(ctx);
    for (std::size_t e = 0; e < cs.size(); ++e) {
        Polynomial xe = Polynomial::term(ctx, 1, Monomial::var(var, static_cast<int>(e)));
        out += cs[e] * xe;
    }
    return out;
}

inline int top_var(const Polynomial& f) {
    int top = -1;
    for (auto& [m, c] : f.terms())
        for (auto& [v, e] : m.exponents()) top = std::max(top, v);
    return top;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g);

/// Content of f seen in `var`: gcd of its coefficient polynomials.
inline Polynomial content_in(const Polynomial& f, int var) {
    Polynomial c(f.context());
    for (auto& cf : coeffs_in(f, var))
        if (!cf.is_zero()) c = c.is_zero() ? cf : gcd_rec(c, cf);
    return c;
}

/// Pseudo-remainder of f by g in `var` (deg_var f >= deg_var g > 0 assumed).
inline Polynomial pseudo_rem(Polynomial f, const Polynomial& g, int var) {
    int dg = g.degree_in(var);
    auto gcs = coeffs_in(g, var);
    const Polynomial& lg = gcs.back();
    while (!f.is_zero() && f.degree_in(var) >= dg) {
        int df = f.degree_in(var);
        auto fcs = coeffs_in(f, var);
        Polynomial shift = Polynomial::term(f.context(), 1, Monomial::var(var, df - dg));
        f = lg * f - fcs.back() * shift * g;
    }
    return f;
}

inline Polynomial gcd_rec(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.context(), 1);
    int var = std::max(top_var(f), top_var(g));
    if (f.degree_in(var) == 0 || g.degree_in(var) == 0) {
        // One side is free of the top variable: gcd divides that side's
        // content together with the other's content in var.
        Polynomial cf = f.degree_in(var) == 0 ? f : content_in(f, var);
        Polynomial cg = g.degree_in(var) == 0 ? g : content_in(g, var);
        return gcd_rec(cf, cg);
    }
    Polynomial cf = content_in(f, var);
    Polynomial cg = content_in(g, var);
    Polynomial a = exact_divide(f, cf);
    Polynomial b = exact_divide(g, cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = pseudo_rem(a, b, var);
        a = b;
        b = r.is_zero() ? r : exact_divide(r, content_in(r, var));
        if (!b.is_zero() && a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    }
    return gcd_rec(cf, cg) * a;
}

}  // namespace detail

/// Monic (leading coefficient 1 in the structural order) polynomial gcd.
inline Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g) {
    require_compatible(f.context(), g.context());
    Polynomial d = detail::gcd_rec(f, g);
    if (d.is_zero()) return d;
    return d / d.leading_term().second;
}

}  // namespace foljet

#endif
