#ifndef FOLJET_BLOWUP_HPP
#define FOLJET_BLOWUP_HPP

#include <string>
#include <vector>

#include "oneform.hpp"

namespace foljet {

/// One coordinate chart of the blow-up at a point P. The exceptional
/// variable keeps its parent name and is not translated, so the exceptional
/// divisor in the chart is V(x_j - P_j); each other parent variable x_i is
/// replaced by a freshly named chart variable v_i via
///   x_i = P_i + (x_j - P_j) * v_i.
/// This matches the usual presentation of blow-up charts at non-origin
/// centres (e.g. "x = (v-1)s" for a centre with second coordinate 1).
struct Chart {
    ContextPtr parent;
    ContextPtr ctx;                 // chart coordinates, parent positional order
    int j = 0;                      // exceptional index (same position in both)
    std::vector<Rational> center;   // P in parent coordinates
    std::vector<Polynomial> phi;    // parent variable i as a chart polynomial

    Polynomial exceptional() const {
        return Polynomial::variable(ctx, j) -
               Polynomial::constant(ctx, center[static_cast<std::size_t>(j)]);
    }
    std::string description() const {
        std::string out;
        for (int i = 0; i < parent->size(); ++i) {
            if (i == j) continue;
            if (!out.empty()) out += ", ";
            out += parent->name(i) + " = " + phi[static_cast<std::size_t>(i)].to_string();
        }
        return out;
    }
};

/// The n charts of the point blow-up at P. `chart_names[c]` gives the fresh
/// names used for the renamed variables of chart c (in parent positional
/// order, skipping the exceptional one); empty entries fall back to
/// "<name>_bl" style fresh names.
inline std::vector<Chart> blowup_point_charts(
    const ContextPtr& parent, const std::vector<Rational>& P,
    const std::vector<std::vector<std::string>>& chart_names = {}) {
    int n = parent->size();
    if (n < 2) throw std::invalid_argument("blow-up needs dimension >= 2");
    if (static_cast<int>(P.size()) != n)
        throw std::invalid_argument("blow-up centre dimension mismatch");
    std::vector<Chart> out;
    for (int j = 0; j < n; ++j) {
        Chart c;
        c.parent = parent;
        c.j = j;
        c.center = P;
        std::vector<VarInfo> vars;
        std::size_t fresh_idx = 0;
        for (int i = 0; i < n; ++i) {
            if (i == j) {
                vars.push_back(VarInfo{parent->name(i), VarRole::Base, 0, 0});
                continue;
            }
            std::string nm;
            if (static_cast<int>(chart_names.size()) > j &&
                chart_names[static_cast<std::size_t>(j)].size() > fresh_idx)
                nm = chart_names[static_cast<std::size_t>(j)][fresh_idx];
            if (nm.empty() || parent->find(nm))
                nm = parent->fresh_name(parent->name(i) + "_bl");
            ++fresh_idx;
            vars.push_back(VarInfo{nm, VarRole::Base, 0, 0});
        }
        c.ctx = VarContext::make(std::move(vars));
        Polynomial e = c.exceptional();
        for (int i = 0; i < n; ++i) {
            if (i == j) {
                c.phi.push_back(Polynomial::variable(c.ctx, j));
            } else {
                c.phi.push_back(Polynomial::constant(c.ctx,
                                                     P[static_cast<std::size_t>(i)]) +
                                e * Polynomial::variable(c.ctx, i));
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

struct TransformResult {
    Chart chart;
    OneForm rawForm;            // total transform f* omega
    Polynomial removedFactor;   // monic gcd of the raw coefficients
    int exceptionalMultiplicity = 0;  // valuation of removedFactor in the exceptional
    OneForm saturatedForm;
    bool exceptionalInvariant = false;
};

inline TransformResult transform_form(const OneForm& w, const Chart& c) {
    TransformResult out;
    out.chart = c;
    out.rawForm = pullback_form(w, c.phi, c.ctx);
    auto [factor, sat] = saturate_form(out.rawForm);
    out.removedFactor = factor;
    out.saturatedForm = sat;
    Polynomial e = c.exceptional();
    Polynomial f = factor;
    while (true) {
        auto q = try_exact_divide(f, e);
        if (!q) break;
        f = *q;
        ++out.exceptionalMultiplicity;
    }
    out.exceptionalInvariant = invariant_hypersurface_check(out.saturatedForm, e);
    return out;
}

inline Ideal strict_transform_scheme(const Ideal& I, const Chart& c) {
    std::map<int, Polynomial> sigma;
    for (int i = 0; i < c.parent->size(); ++i) sigma[i] = c.phi[static_cast<std::size_t>(i)];
    std::vector<Polynomial> gens;
    for (auto& g : I.generators) gens.push_back(g.substitute(sigma, c.ctx));
    return saturate_ideal(Ideal(c.ctx, std::move(gens)), c.exceptional());
}

}  // namespace foljet

#endif
