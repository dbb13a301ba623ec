#ifndef FOLJET_RESOLVE_HPP
#define FOLJET_RESOLVE_HPP

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "blowup.hpp"
#include "classify.hpp"
#include "gcd.hpp"
#include "oneform.hpp"

namespace foljet {

namespace detail {

/// Clear denominators and integer content; drop the power of x dividing.
inline std::vector<Integer> integer_coeffs(const Polynomial& p, int var) {
    int d = p.degree_in(var);
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1, Rational(0));
    for (auto& [m, c] : p.terms()) {
        if (m.degree() != m.degree_of(var))
            throw std::invalid_argument("not univariate");
        cs[static_cast<std::size_t>(m.degree_of(var))] += c;
    }
    Integer den = 1;
    for (auto& c : cs) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    std::vector<Integer> out;
    for (auto& c : cs)
        out.push_back(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
    return out;
}

/// All rational roots of a nonzero univariate polynomial, each listed once,
/// sorted ascending.
inline std::vector<Rational> rational_roots(const Polynomial& p, int var) {
    auto cs = integer_coeffs(p, var);
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    if (cs.empty()) throw std::invalid_argument("rational_roots of zero polynomial");
    std::vector<Rational> roots;
    std::size_t lo = 0;
    while (lo < cs.size() && cs[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(0);
    if (lo + 1 >= cs.size()) return roots;  // constant after removing x^lo
    Integer a0 = boost::multiprecision::abs(cs[lo]);
    Integer an = boost::multiprecision::abs(cs.back());
    auto divisors = [](const Integer& n) {
        std::vector<Integer> out;
        for (Integer d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                out.push_back(d);
                if (d * d != n) out.push_back(n / d);
            }
        }
        return out;
    };
    auto value = [&](const Rational& x) {
        Rational v = 0;
        for (std::size_t k = cs.size(); k-- > lo;) v = v * x + Rational(cs[k]);
        return v;
    };
    for (auto& pnum : divisors(a0))
        for (auto& qden : divisors(an)) {
            if (boost::multiprecision::gcd(pnum, qden) != 1) continue;
            for (int sgn : {1, -1}) {
                Rational cand(sgn * pnum, qden);
                if (value(cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// Divide out every (x - r) factor with rational r; what remains has no
/// rational roots (used for the residual report).
inline Polynomial non_rational_part(const Polynomial& p, int var) {
    Polynomial q = p;
    const ContextPtr& ctx = p.context();
    bool progress = true;
    while (progress && !q.is_constant()) {
        progress = false;
        for (auto& r : rational_roots(q, var)) {
            Polynomial lin = Polynomial::variable(ctx, var) - Polynomial::constant(ctx, r);
            auto d = try_exact_divide(q, lin);
            if (d) {
                q = *d;
                progress = true;
                break;
            }
        }
    }
    return q;
}

}  // namespace detail

struct SingularPoints2d {
    std::vector<std::vector<Rational>> points;  // rational points, sorted
    Ideal residual;                             // cuts the non-rational points
};

/// Rational points of V(b_1, b_2), plus a residual ideal for the rest.
/// Requires a finite singular locus (saturated form).
inline SingularPoints2d singular_points_2d(const OneForm& w) {
    if (w.n() != 2) throw std::invalid_argument("singular_points_2d needs n=2");
    Ideal I = singular_ideal(w);
    const ContextPtr& ctx = w.context;
    SingularPoints2d out;
    out.residual = Ideal::zero(ctx);
    auto eliminant = [&](int keep, int drop) {
        Ideal E = eliminate(I, {drop});
        Polynomial g(ctx);
        for (auto& p : E.generators) g = g.is_zero() ? p : multivariate_gcd(g, p);
        return g;
    };
    Polynomial hx = eliminant(0, 1);
    Polynomial hy = eliminant(1, 0);
    if (hx.is_zero() || hy.is_zero())
        throw std::invalid_argument("singular locus not finite (unsaturated form?)");
    std::vector<Rational> xroots =
        hx.is_constant() ? std::vector<Rational>{} : detail::rational_roots(hx, 0);
    std::vector<Rational> yroots =
        hy.is_constant() ? std::vector<Rational>{} : detail::rational_roots(hy, 1);
    for (auto& x0 : xroots)
        for (auto& y0 : yroots) {
            std::vector<Rational> P{x0, y0};
            bool on = true;
            for (auto& b : w.b)
                if (b.evaluate(P) != 0) on = false;
            if (on) out.points.push_back(std::move(P));
        }
    Polynomial rx = hx.is_constant() ? hx : detail::non_rational_part(hx, 0);
    Polynomial ry = hy.is_constant() ? hy : detail::non_rational_part(hy, 1);
    if ((!rx.is_constant()) || (!ry.is_constant())) {
        std::vector<Polynomial> gens = I.generators;
        if (!rx.is_constant()) gens.push_back(rx);
        if (!ry.is_constant()) gens.push_back(ry);
        out.residual = Ideal(ctx, std::move(gens));
    }
    return out;
}

struct SingularPointEntry {
    std::vector<Rational> point;
    SingularityClass cls;
    bool blownUp = false;
    std::vector<int> children;  // indices into ResolutionTree::nodes
};

struct ResolutionNode {
    int parent = -1;
    int depth = 0;
    // how this node was reached (unset for the root)
    std::optional<Chart> chart;
    std::optional<TransformResult> transform;  // of the parent's saturated form
    OneForm form;  // saturated form at this node
    // pullback of the root form through the composed chart chain, with its
    // factorization (for recheck against the worked composite transforms)
    std::vector<Polynomial> compositeMap;  // root coordinates as node polynomials
    OneForm compositeRaw;
    Polynomial compositeFactor;
    std::vector<SingularPointEntry> points;
    Ideal residual;
    bool smoothLocus = false;  // saturated form has no singular points at all
};

enum class ResolveVerdict {
    AllReducedWithinDepth,
    DicriticalDetected,
    DepthExhausted,
    NonRationalPointsSkipped
};

inline std::string to_string(ResolveVerdict v) {
    switch (v) {
        case ResolveVerdict::AllReducedWithinDepth: return "AllReducedWithinDepth";
        case ResolveVerdict::DicriticalDetected: return "DicriticalDetected";
        case ResolveVerdict::DepthExhausted: return "DepthExhausted";
        case ResolveVerdict::NonRationalPointsSkipped: return "NonRationalPointsSkipped";
    }
    return "?";
}

struct ResolutionReport {
    std::vector<ResolutionNode> nodes;  // nodes[0] is the root
    ResolveVerdict verdict = ResolveVerdict::AllReducedWithinDepth;
    int blowupsPerformed = 0;
    bool dicritical = false;
    bool nonRationalSkipped = false;
    bool depthExhausted = false;
};

namespace detail {

/// Fresh-name table per blow-up depth (chart 1, chart 2), following the
/// letters of the worked surface examples.
inline std::vector<std::string> chart_names_2d(int depth) {
    static const std::vector<std::vector<std::string>> table = {
        {"v", "b"}, {"t", "s"}, {"u", "w"}, {"c", "e"}, {"p", "q"}, {"m", "k"}};
    if (depth >= 1 && depth <= static_cast<int>(table.size()))
        return table[static_cast<std::size_t>(depth - 1)];
    return {"", ""};
}

struct ResolveDriver {
    ResolutionReport report;
    OneForm rootForm;
    int maxDepth;
    bool blowReducedToo;  // dicritical probe blows up every rational point

    int build(const OneForm& saturated, int parent, int depth,
              std::optional<Chart> chart, std::optional<TransformResult> tr,
              std::vector<Polynomial> compositeMap) {
        int idx = static_cast<int>(report.nodes.size());
        report.nodes.push_back({});
        {
            ResolutionNode& node = report.nodes.back();
            node.parent = parent;
            node.depth = depth;
            node.chart = std::move(chart);
            node.transform = std::move(tr);
            node.form = saturated;
            node.compositeMap = compositeMap;
            node.compositeRaw = pullback_form(rootForm, compositeMap, saturated.context);
            auto [cf, cs] = saturate_form(node.compositeRaw);
            node.compositeFactor = cf;
            auto sp = singular_points_2d(saturated);
            node.residual = sp.residual;
            if (!node.residual.generators.empty()) report.nonRationalSkipped = true;
            node.smoothLocus = sp.points.empty() && node.residual.generators.empty();
            for (auto& P : sp.points) {
                SingularPointEntry e;
                e.point = P;
                e.cls = classify_reduced_2d(saturated, P);
                node.points.push_back(std::move(e));
            }
        }
        // recurse (node reference above is invalidated by recursion)
        for (std::size_t pi = 0; pi < report.nodes[static_cast<std::size_t>(idx)].points.size(); ++pi) {
            auto P = report.nodes[static_cast<std::size_t>(idx)].points[pi].point;
            auto tag = report.nodes[static_cast<std::size_t>(idx)].points[pi].cls.tag;
            bool nonReduced = tag != SingTag::Reduced && tag != SingTag::NotSingular;
            bool blow = blowReducedToo ? true : nonReduced;
            if (!blow) continue;
            if (depth >= maxDepth) {
                if (nonReduced) report.depthExhausted = true;
                continue;
            }
            ++report.blowupsPerformed;
            auto names = chart_names_2d(depth + 1);
            // copy, not reference: recursion below reallocates the node vector
            OneForm here = report.nodes[static_cast<std::size_t>(idx)].form;
            auto charts = blowup_point_charts(here.context, P, {{names[0]}, {names[1]}});
            for (auto& c : charts) {
                TransformResult t = transform_form(here, c);
                if (!t.exceptionalInvariant) report.dicritical = true;
                std::map<int, Polynomial> sigma;
                for (int i = 0; i < c.parent->size(); ++i)
                    sigma[i] = c.phi[static_cast<std::size_t>(i)];
                std::vector<Polynomial> comp;
                for (auto& f :
                     report.nodes[static_cast<std::size_t>(idx)].compositeMap)
                    comp.push_back(f.substitute(sigma, c.ctx));
                int child = build(t.saturatedForm, idx, depth + 1, c, t, std::move(comp));
                report.nodes[static_cast<std::size_t>(idx)]
                    .points[pi]
                    .children.push_back(child);
            }
            report.nodes[static_cast<std::size_t>(idx)].points[pi].blownUp = true;
        }
        return idx;
    }
};

}  // namespace detail

inline ResolutionReport resolve_2d_impl(const OneForm& w, int maxDepth,
                                        bool blowReducedToo) {
    auto [factor, sat] = saturate_form(w);
    detail::ResolveDriver drv;
    drv.rootForm = sat;
    drv.maxDepth = maxDepth;
    drv.blowReducedToo = blowReducedToo;
    std::vector<Polynomial> id;
    for (int i = 0; i < sat.context->size(); ++i)
        id.push_back(Polynomial::variable(sat.context, i));
    drv.build(sat, -1, 0, std::nullopt, std::nullopt, std::move(id));
    auto& r = drv.report;
    if (r.dicritical) r.verdict = ResolveVerdict::DicriticalDetected;
    else if (r.nonRationalSkipped) r.verdict = ResolveVerdict::NonRationalPointsSkipped;
    else if (r.depthExhausted) r.verdict = ResolveVerdict::DepthExhausted;
    else r.verdict = ResolveVerdict::AllReducedWithinDepth;
    return r;
}

inline ResolutionReport resolve_2d(const OneForm& w, int maxDepth = 6) {
    return resolve_2d_impl(w, maxDepth, false);
}

struct DicriticalReport {
    bool dicritical = false;
    std::vector<std::string> witnessChain;  // chart descriptions to the witness
    int depthSearched = 0;
    ResolutionReport tree;
};

/// Breadth-bounded search for a non-invariant exceptional divisor; blows up
/// every rational singular point, reduced or not.
inline DicriticalReport dicritical_probe(const OneForm& w, int maxDepth) {
    DicriticalReport out;
    out.depthSearched = maxDepth;
    out.tree = resolve_2d_impl(w, maxDepth, true);
    out.dicritical = out.tree.dicritical;
    if (out.dicritical) {
        // first node (BFS order = creation order is DFS; pick the shallowest)
        int best = -1;
        for (std::size_t i = 0; i < out.tree.nodes.size(); ++i) {
            auto& nd = out.tree.nodes[i];
            if (nd.transform && !nd.transform->exceptionalInvariant) {
                if (best < 0 ||
                    nd.depth < out.tree.nodes[static_cast<std::size_t>(best)].depth)
                    best = static_cast<int>(i);
            }
        }
        for (int at = best; at > 0; at = out.tree.nodes[static_cast<std::size_t>(at)].parent)
            out.witnessChain.insert(
                out.witnessChain.begin(),
                out.tree.nodes[static_cast<std::size_t>(at)].chart->description());
    }
    return out;
}

/// Plain text rendering of the tree, deterministic.
inline std::string report_render(const ResolutionReport& r) {
    std::ostringstream os;
    os << "verdict: " << to_string(r.verdict) << "\n";
    os << "blowups: " << r.blowupsPerformed << "\n";
    std::function<void(int, int)> walk = [&](int idx, int indent) {
        const auto& nd = r.nodes[static_cast<std::size_t>(idx)];
        std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
        if (nd.chart)
            os << pad << "chart " << nd.chart->description()
               << " (exceptional multiplicity "
               << nd.transform->exceptionalMultiplicity << ", exceptional "
               << (nd.transform->exceptionalInvariant ? "invariant" : "NON-invariant")
               << ")\n";
        os << pad << "form: " << nd.form.to_string() << "\n";
        if (nd.smoothLocus) os << pad << "no singular points\n";
        for (auto& e : nd.points) {
            os << pad << "point (";
            for (std::size_t i = 0; i < e.point.size(); ++i)
                os << (i ? "," : "") << to_string(e.point[i]);
            os << "): " << to_string(e.cls.tag);
            if (e.cls.typeC_r) os << " r=" << *e.cls.typeC_r;
            os << "\n";
            for (int c : e.children) walk(c, indent + 1);
        }
        if (!nd.residual.generators.empty())
            os << pad << "non-rational singular points skipped\n";
    };
    if (!r.nodes.empty()) walk(0, 0);
    return os.str();
}

}  // namespace foljet

#endif
