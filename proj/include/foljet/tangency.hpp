#ifndef FOLJET_TANGENCY_HPP
#define FOLJET_TANGENCY_HPP

#include <optional>
#include <string>

#include "jets.hpp"
#include "oneform.hpp"

namespace foljet {

enum class TangencyMode { Weak, Strong, Full };
enum class ContainmentMode { Scheme, Set };

struct TangencyVerdict {
    TangencyMode mode = TangencyMode::Strong;
    ContainmentMode containment = ContainmentMode::Scheme;
    int maxOrderChecked = 0;
    bool result = true;
    // present iff result is false
    std::optional<int> failureOrder;
    std::optional<Polynomial> failureGenerator;
};

namespace detail {

/// J_m(C) subset J_m(F) at one order: every foliation jet generator lies in
/// the scheme jet ideal (or its radical in set mode). Works on the full jet
/// ideals, a_{i0} included.
inline std::optional<Polynomial> containment_failure(const Ideal& scheme_jets,
                                                     const JetIdeal& fol,
                                                     ContainmentMode mode) {
    if (mode == ContainmentMode::Scheme) {
        auto gb = buchberger(scheme_jets);
        for (auto& [k, g] : fol.tagged)
            if (!ideal_member(g, gb)) return g;
    } else {
        for (auto& [k, g] : fol.tagged)
            if (!radical_member(g, scheme_jets)) return g;
    }
    return std::nullopt;
}

}  // namespace detail

/// J_1(C) subset J_1(F), scheme containment over the whole base.
inline TangencyVerdict weak_tangency(const Ideal& I_C, const OneForm& w,
                                     ContainmentMode mode = ContainmentMode::Scheme) {
    TangencyVerdict v;
    v.mode = TangencyMode::Weak;
    v.containment = mode;
    v.maxOrderChecked = 1;
    auto C = jet_ideal_scheme(I_C, 1);
    auto F = jet_ideal_foliation(w.b, 1);
    auto fail = detail::containment_failure(C.ideal(), F, mode);
    if (fail) {
        v.result = false;
        v.failureOrder = 1;
        v.failureGenerator = *fail;
    }
    return v;
}

inline TangencyVerdict strong_tangency_up_to(const Ideal& I_C, const OneForm& w, int m,
                                             ContainmentMode mode = ContainmentMode::Scheme) {
    TangencyVerdict v;
    v.mode = TangencyMode::Strong;
    v.containment = mode;
    v.maxOrderChecked = m;
    for (int k = 1; k <= m; ++k) {
        auto C = jet_ideal_scheme(I_C, k);
        auto F = jet_ideal_foliation(w.b, k);
        auto fail = detail::containment_failure(C.ideal(), F, mode);
        if (fail) {
            v.result = false;
            v.failureOrder = k;
            v.failureGenerator = *fail;
            return v;
        }
    }
    return v;
}

/// The restriction J_m(F)|_C: foliation jets plus I_C lifted into the a_{i0}
/// layer. Full tangency at order k is equality with J_k(C).
inline Ideal restricted_foliation_jets(const Ideal& I_C, const OneForm& w, int k) {
    auto F = jet_ideal_foliation(w.b, k);
    std::map<int, Polynomial> lift;
    for (int i = 1; i <= F.jc.n(); ++i)
        lift[i - 1] = F.jc.var(i, 0);
    std::vector<Polynomial> gens;
    for (auto& [t, g] : F.tagged) gens.push_back(g);
    for (auto& g : I_C.generators) gens.push_back(g.substitute(lift, F.jc.ctx));
    return Ideal(F.jc.ctx, std::move(gens));
}

inline TangencyVerdict full_tangency_up_to(const Ideal& I_C, const OneForm& w, int m,
                                           ContainmentMode mode = ContainmentMode::Scheme) {
    TangencyVerdict v;
    v.mode = TangencyMode::Full;
    v.containment = mode;
    v.maxOrderChecked = m;
    for (int k = 1; k <= m; ++k) {
        Ideal C = jet_ideal_scheme(I_C, k).ideal();
        Ideal R = restricted_foliation_jets(I_C, w, k);
        bool eq = (mode == ContainmentMode::Scheme) ? ideal_equal(C, R)
                                                    : radical_equal(C, R);
        if (!eq) {
            v.result = false;
            v.failureOrder = k;
            return v;
        }
    }
    return v;
}

/// Largest r <= maxProbe with J_k(V(I), P) the full affine space for all
/// k <= r; by the jet-depth lemma the (r+1)-st infinitesimal neighbourhood
/// of P then lies in V(I).
inline int full_jet_depth(const Ideal& I, const std::vector<Rational>& P, int maxProbe) {
    int r = 0;
    for (int k = 1; k <= maxProbe; ++k) {
        auto J = jet_fiber(jet_ideal_scheme(I, k), P);
        if (!J.tagged.empty()) break;
        r = k;
    }
    return r;
}

struct TransversalReport {
    bool smooth = false;
    bool invariant = false;
    bool restriction_saturated = false;
    bool truly_transversal = false;
    std::string note;
};

/// Smooth non-invariant hypersurface with saturated restriction. Only
/// coordinate-graph hypersurfaces g = x_i - h(other vars) are supported for
/// the restriction step.
inline TransversalReport truly_transversal_check(const Polynomial& g, const OneForm& w) {
    TransversalReport out;
    auto ctx = w.context;
    std::vector<Polynomial> jac{g};
    for (int i = 0; i < ctx->size(); ++i) jac.push_back(g.derivative(i));
    out.smooth = ideal_member(Polynomial::constant(ctx, 1), Ideal(ctx, jac));
    out.invariant = invariant_hypersurface_check(w, g);
    if (!out.smooth || out.invariant) {
        out.truly_transversal = false;
        if (!out.smooth) out.note = "hypersurface not smooth";
        else out.note = "hypersurface is invariant";
        return out;
    }
    // find a graph presentation x_i = h(...): g linear in x_i with constant
    // coefficient and h free of x_i
    int graph_var = -1;
    Polynomial h(ctx);
    for (int i = 0; i < ctx->size() && graph_var < 0; ++i) {
        if (g.degree_in(i) != 1) continue;
        Polynomial coeff = g.derivative(i);
        if (!coeff.is_constant()) continue;
        // g = c*x_i + rest  ->  x_i = -rest/c
        Polynomial rest = g - coeff * Polynomial::variable(ctx, i);
        if (rest.depends_on(i)) continue;
        graph_var = i;
        h = -(rest / coeff.constant_value());
    }
    if (graph_var < 0)
        throw unsupported_error("restriction only supported for graph hypersurfaces");
    // restrict: substitute x_i = h and drop the dx_i term via the chain rule
    std::map<int, Polynomial> sigma{{graph_var, h}};
    std::vector<Polynomial> rb;
    for (int s = 0; s < ctx->size(); ++s) {
        if (s == graph_var) continue;
        Polynomial c = w.b[static_cast<std::size_t>(s)].substitute(sigma, ctx) +
                       w.b[static_cast<std::size_t>(graph_var)].substitute(sigma, ctx) *
                           h.derivative(s);
        rb.push_back(std::move(c));
    }
    Polynomial gc(ctx);
    for (auto& p : rb)
        if (!p.is_zero()) gc = gc.is_zero() ? p : multivariate_gcd(gc, p);
    out.restriction_saturated = !gc.is_zero() && gc.is_constant();
    out.truly_transversal = out.restriction_saturated;
    if (!out.restriction_saturated) out.note = "restriction not saturated";
    return out;
}

}  // namespace foljet

#endif
