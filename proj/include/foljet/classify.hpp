#ifndef FOLJET_CLASSIFY_HPP
#define FOLJET_CLASSIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blowup.hpp"
#include "jets.hpp"
#include "linalg.hpp"
#include "oneform.hpp"

namespace foljet {

enum class EigenKind { RationalPair, Double, IrrationalRealPair, ComplexPair };

struct EigenData {
    Rational trace, det, discriminant;
    EigenKind kind = EigenKind::RationalPair;
    // populated when the eigenvalues live in Q
    std::optional<Rational> lambda1, lambda2;
    bool both_zero() const { return trace == 0 && det == 0; }
};

inline EigenData eigen_data(const Rational& trace, const Rational& det) {
    EigenData e;
    e.trace = trace;
    e.det = det;
    e.discriminant = trace * trace - 4 * det;
    if (e.discriminant == 0) {
        e.kind = EigenKind::Double;
        e.lambda1 = e.lambda2 = trace / 2;
    } else if (e.discriminant < 0) {
        e.kind = EigenKind::ComplexPair;
    } else if (auto s = rational_sqrt(e.discriminant)) {
        e.kind = EigenKind::RationalPair;
        e.lambda1 = (trace + *s) / 2;
        e.lambda2 = (trace - *s) / 2;
    } else {
        e.kind = EigenKind::IrrationalRealPair;
    }
    return e;
}

/// Is lambda1/lambda2 a positive rational? Exact in every eigenvalue class:
/// a rational ratio of real conjugate irrationals would force the
/// eigenvalues themselves rational, and a complex pair has non-real ratio
/// unless equal (excluded by disc < 0).
inline bool ratio_in_positive_rationals(const EigenData& e) {
    if (e.both_zero())
        throw std::invalid_argument("ratio undefined: both eigenvalues zero");
    switch (e.kind) {
        case EigenKind::Double:
            return *e.lambda1 != 0;  // ratio 1
        case EigenKind::RationalPair:
            if (*e.lambda1 == 0 || *e.lambda2 == 0) return false;  // ratio 0
            return (*e.lambda1) * (*e.lambda2) > 0;
        case EigenKind::IrrationalRealPair:
        case EigenKind::ComplexPair:
            return false;
    }
    return false;
}

enum class SingTag {
    Reduced,
    PreSimpleA_Resonant,
    TypeC_Shape,
    Nilpotent_NonPreSimple,
    ZeroLinear_NonPreSimple,
    Smooth,
    NotSingular
};

inline std::string to_string(SingTag t) {
    switch (t) {
        case SingTag::Reduced: return "Reduced";
        case SingTag::PreSimpleA_Resonant: return "PreSimpleA_Resonant";
        case SingTag::TypeC_Shape: return "TypeC_Shape";
        case SingTag::Nilpotent_NonPreSimple: return "Nilpotent_NonPreSimple";
        case SingTag::ZeroLinear_NonPreSimple: return "ZeroLinear_NonPreSimple";
        case SingTag::Smooth: return "Smooth";
        case SingTag::NotSingular: return "NotSingular";
    }
    return "?";
}

struct SingularityClass {
    SingTag tag = SingTag::NotSingular;
    std::optional<EigenData> eigen;
    // for TypeC_Shape: omega ~ u(x_j dx_i - (r x_i + a x_j^r) dx_j)
    std::optional<int> typeC_r;
    std::optional<Rational> typeC_a;
};

namespace detail {

/// Match the translated form against u(x_j dx_i - (r x_i + a x_j^r) dx_j)
/// over both index permutations.
inline bool match_type_c_2d(const OneForm& w0, SingularityClass& out) {
    const ContextPtr& ctx = w0.context;
    for (int i = 0; i < 2; ++i) {
        int j = 1 - i;
        const Polynomial& bi = w0.b[static_cast<std::size_t>(i)];
        const Polynomial& bj = w0.b[static_cast<std::size_t>(j)];
        // b_i must be u * x_j
        if (bi.terms().size() != 1) continue;
        auto& [mono, u] = *bi.terms().begin();
        if (mono != Monomial::var(j)) continue;
        Polynomial p = -(bj / u);  // should be r x_i + a x_j^r
        if (p.terms().size() != 2) continue;
        Rational rc = p.coefficient(Monomial::var(i));
        if (rc <= 0 || boost::multiprecision::denominator(rc) != 1) continue;
        int r = boost::multiprecision::numerator(rc).convert_to<int>();
        Rational a = p.coefficient(Monomial::var(j, r));
        if (a == 0) continue;
        // the two matched terms must be the whole of p
        Polynomial rebuilt = rc * Polynomial::variable(ctx, i) +
                             a * Polynomial::variable(ctx, j, r);
        if (rebuilt != p) continue;
        out.tag = SingTag::TypeC_Shape;
        out.typeC_r = r;
        out.typeC_a = a;
        return true;
    }
    return false;
}

}  // namespace detail

inline SingularityClass classify_reduced_2d(const OneForm& w,
                                            const std::vector<Rational>& P) {
    if (w.n() != 2) throw std::invalid_argument("classify_reduced_2d needs n=2");
    SingularityClass out;
    bool singular = true;
    for (auto& bi : w.b)
        if (bi.evaluate(P) != 0) singular = false;
    if (!singular) {
        out.tag = SingTag::NotSingular;
        return out;
    }
    OneForm w0 = w.translated(P);
    auto X = dual_field_2d(w0);
    bool linear_zero = X.linear[0][0] == 0 && X.linear[0][1] == 0 &&
                       X.linear[1][0] == 0 && X.linear[1][1] == 0;
    if (linear_zero) {
        out.tag = SingTag::ZeroLinear_NonPreSimple;
        return out;
    }
    EigenData e = eigen_data(X.trace(), X.det());
    out.eigen = e;
    if (e.both_zero()) {
        out.tag = SingTag::Nilpotent_NonPreSimple;
        return out;
    }
    if (!ratio_in_positive_rationals(e)) {
        out.tag = SingTag::Reduced;
        return out;
    }
    if (detail::match_type_c_2d(w0, out)) return out;
    out.tag = SingTag::PreSimpleA_Resonant;
    return out;
}

/// A nonzero vector phi of nonnegative integers with sum phi_j lambda_j = 0,
/// minimal in total sum (ties broken lexicographically), or nullopt when the
/// tuple is non-resonant. Over Q a witness exists iff some entry is zero or
/// the signs are mixed.
inline std::optional<std::vector<int>> resonance_check(const std::vector<Rational>& lambda) {
    std::size_t n = lambda.size();
    if (n == 0) return std::nullopt;
    long bound = 0;
    bool feasible = false;
    for (std::size_t j = 0; j < n; ++j) {
        if (lambda[j] == 0) {
            feasible = true;
            bound = std::max(bound, 1L);
        }
    }
    for (std::size_t p = 0; p < n && !feasible; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (lambda[p] > 0 && lambda[q] < 0) feasible = true;
    if (!feasible) return std::nullopt;
    // a two-entry witness bounds the minimal sum
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (!(lambda[p] > 0 && lambda[q] < 0)) continue;
            Integer np = boost::multiprecision::numerator(lambda[p]);
            Integer dp = boost::multiprecision::denominator(lambda[p]);
            Integer nq = -boost::multiprecision::numerator(lambda[q]);
            Integer dq = boost::multiprecision::denominator(lambda[q]);
            // phi_p = nq*dp, phi_q = np*dq gives a witness
            Integer s = nq * dp + np * dq;
            long sl = s.convert_to<long>();
            bound = (bound == 0) ? sl : std::min(bound, sl);
        }
    // enumerate by increasing sum, lexicographically within each sum
    std::vector<int> phi(n, 0);
    std::function<std::optional<std::vector<int>>(std::size_t, long, Rational)> rec =
        [&](std::size_t pos, long left, Rational acc) -> std::optional<std::vector<int>> {
        if (pos == n - 1) {
            phi[pos] = static_cast<int>(left);
            if (acc + Rational(left) * lambda[pos] == 0) return phi;
            return std::nullopt;
        }
        for (long v = left; v >= 0; --v) {
            phi[pos] = static_cast<int>(v);
            auto r = rec(pos + 1, left - v, acc + Rational(v) * lambda[pos]);
            if (r) return r;
        }
        return std::nullopt;
    };
    for (long s = 1; s <= bound; ++s) {
        auto r = rec(0, s, Rational(0));
        if (r) return r;
    }
    return std::nullopt;
}

struct AdaptedData {
    std::vector<Polynomial> adapted_b;  // the b_i of the logarithmic presentation
    int nu = 0;                         // adapted order
    int mu = 0;                         // adapted multiplicity
};

/// Presentation omega = (prod_{i in A} x_i)(sum_{i in A} b_i dx_i/x_i +
/// sum_{i not in A} b_i dx_i) at the point P. A is given as 0-based variable
/// indices; every V(x_i - P_i), i in A must be invariant and P_i = 0 in the
/// translated coordinates (the divisor passes through P).
inline AdaptedData adapted_order(const OneForm& w, const std::vector<int>& A,
                                 const std::vector<Rational>& P) {
    OneForm w0 = w.translated(P);
    const ContextPtr& ctx = w0.context;
    std::vector<bool> inA(static_cast<std::size_t>(w.n()), false);
    for (int i : A) {
        if (i < 0 || i >= w.n()) throw std::invalid_argument("adapted_order: bad index");
        inA[static_cast<std::size_t>(i)] = true;
        if (!invariant_hypersurface_check(w0, Polynomial::variable(ctx, i)))
            throw std::invalid_argument("adapted_order: divisor component not invariant");
    }
    Polynomial prodA = Polynomial::constant(ctx, 1);
    for (int i : A) prodA = prodA * Polynomial::variable(ctx, i);
    AdaptedData out;
    std::vector<Rational> O(static_cast<std::size_t>(w.n()), Rational(0));
    std::optional<int> nu, mu;
    for (int i = 0; i < w.n(); ++i) {
        Polynomial divisor = inA[static_cast<std::size_t>(i)]
                                 ? exact_divide(prodA, Polynomial::variable(ctx, i))
                                 : prodA;
        Polynomial bi = divisor.is_constant()
                            ? w0.b[static_cast<std::size_t>(i)]
                            : exact_divide(w0.b[static_cast<std::size_t>(i)], divisor);
        auto o = bi.order_at_point(O);
        if (o && (!nu || *o < *nu)) nu = o;
        if (inA[static_cast<std::size_t>(i)]) {
            if (o && (!mu || *o < *mu)) mu = o;
        } else {
            // contributes x_j * b_i for every variable x_j
            if (o && (!mu || *o + 1 < *mu)) mu = *o + 1;
        }
        out.adapted_b.push_back(std::move(bi));
    }
    if (!nu) throw std::invalid_argument("adapted_order: zero form");
    out.nu = *nu;
    out.mu = mu.value_or(*nu);
    return out;
}

inline int adapted_multiplicity(const OneForm& w, const std::vector<int>& A,
                                const std::vector<Rational>& P) {
    return adapted_order(w, A, P).mu;
}

struct PreSimpleResult {
    bool presimple = false;
    int nu = 0, mu = 0;
    std::string branch;  // "nu=0", "nu=mu=1", or a failure note
};

inline PreSimpleResult presimple_check(const OneForm& w, const std::vector<int>& A,
                                       const std::vector<Rational>& P) {
    AdaptedData d = adapted_order(w, A, P);
    PreSimpleResult out;
    out.nu = d.nu;
    out.mu = d.mu;
    if (d.nu == 0) {
        out.presimple = true;
        out.branch = "nu=0";
        return out;
    }
    if (d.nu == 1 && d.mu == 1) {
        // some i in A whose linear part involves a variable outside A
        for (int i : A) {
            const Polynomial& bi = d.adapted_b[static_cast<std::size_t>(i)];
            for (int v = 0; v < w.n(); ++v) {
                bool vinA = std::find(A.begin(), A.end(), v) != A.end();
                if (vinA) continue;
                if (bi.coefficient(Monomial::var(v)) != 0) {
                    out.presimple = true;
                    out.branch = "nu=mu=1";
                    return out;
                }
            }
        }
        out.branch = "nu=mu=1 but linear parts confined to the divisor variables";
        return out;
    }
    out.branch = "nu>=1 and not the nu=mu=1 case";
    return out;
}

enum class NormalFormType { A, B, C };

struct NormalFormSpec {
    NormalFormType type = NormalFormType::A;
    int t = 2;
    int k = 0;                    // B: 1<=k<=t; C: k>=2; A: 0
    std::vector<int> p;           // p_1..p_k (B) or p_2..p_k (C)
    std::vector<Rational> lambda; // A: lambda_1..t; B/C: lambda_2..t (B: may start later)
    Polynomial Psi;               // B only: one-variable polynomial, zero constant term
    // 2d type C shorthand omega = y dx - (r x + a y^r) dy
    std::optional<int> r;
    std::optional<Rational> a;
};

/// The literal polynomial 1-form of the normal-form display.
inline OneForm normal_form_generate(const NormalFormSpec& spec, const ContextPtr& ctx) {
    int t = spec.t;
    if (ctx->size() < t) throw std::invalid_argument("context too small for t");
    auto var = [&](int i) { return Polynomial::variable(ctx, i - 1); };  // 1-based
    auto prod_except = [&](int skip) {
        Polynomial p = Polynomial::constant(ctx, 1);
        for (int i = 1; i <= t; ++i)
            if (i != skip) p = p * var(i);
        return p;
    };
    std::vector<Polynomial> b(static_cast<std::size_t>(ctx->size()),
                              Polynomial::zero(ctx));
    switch (spec.type) {
        case NormalFormType::A: {
            if (static_cast<int>(spec.lambda.size()) != t)
                throw std::invalid_argument("type A needs t lambdas");
            for (int i = 1; i <= t; ++i) {
                if (spec.lambda[static_cast<std::size_t>(i - 1)] == 0)
                    throw std::invalid_argument("type A lambdas must be nonzero");
                b[static_cast<std::size_t>(i - 1)] =
                    spec.lambda[static_cast<std::size_t>(i - 1)] * prod_except(i);
            }
            break;
        }
        case NormalFormType::B: {
            int k = spec.k;
            if (k < 1 || k > t) throw std::invalid_argument("type B needs 1<=k<=t");
            if (static_cast<int>(spec.p.size()) != k)
                throw std::invalid_argument("type B needs k exponents p_i");
            if (spec.Psi.coefficient(Monomial::one()) != 0)
                throw std::invalid_argument("Psi needs zero constant term");
            // u = x_1^p_1 ... x_k^p_k
            Polynomial u = Polynomial::constant(ctx, 1);
            for (int i = 1; i <= k; ++i)
                u = u * var(i).pow(spec.p[static_cast<std::size_t>(i - 1)]);
            // Psi(u): substitute the single variable of Psi
            std::map<int, Polynomial> sig{{0, u}};
            Polynomial psi_u = spec.Psi.substitute(sig, ctx);
            for (int i = 1; i <= k; ++i)
                b[static_cast<std::size_t>(i - 1)] +=
                    Rational(spec.p[static_cast<std::size_t>(i - 1)]) * prod_except(i);
            for (int i = 2; i <= t; ++i) {
                Rational li = spec.lambda.size() >= static_cast<std::size_t>(t - 1)
                                  ? spec.lambda[static_cast<std::size_t>(i - 2)]
                                  : Rational(0);
                if (li == 0) continue;
                b[static_cast<std::size_t>(i - 1)] += li * psi_u * prod_except(i);
            }
            break;
        }
        case NormalFormType::C: {
            if (spec.r && spec.a) {  // 2d shorthand y dx - (r x + a y^r) dy
                b[0] = var(2);
                b[1] = -(Rational(*spec.r) * var(1) + *spec.a * var(2).pow(*spec.r));
                break;
            }
            int k = spec.k;
            if (k < 2) throw std::invalid_argument("type C needs k>=2");
            // omega = x_2...x_t (dx_1 - x_1 sum_{i=2}^k p_i dx_i/x_i
            //                     + x_2^{p_2}...x_k^{p_k} sum_{i=2}^t lambda_i dx_i/x_i)
            auto prodE = [&](int skip) {  // x_2..x_t without x_skip
                Polynomial p = Polynomial::constant(ctx, 1);
                for (int i = 2; i <= t; ++i)
                    if (i != skip) p = p * var(i);
                return p;
            };
            b[0] = prodE(0);
            Polynomial mon = Polynomial::constant(ctx, 1);
            for (int i = 2; i <= k; ++i)
                mon = mon * var(i).pow(spec.p[static_cast<std::size_t>(i - 2)]);
            for (int i = 2; i <= t; ++i) {
                Polynomial bi(ctx);
                if (i <= k)
                    bi -= Rational(spec.p[static_cast<std::size_t>(i - 2)]) * var(1) *
                          prodE(i);
                Rational li = spec.lambda.size() >= static_cast<std::size_t>(i - 1)
                                  ? spec.lambda[static_cast<std::size_t>(i - 2)]
                                  : Rational(0);
                if (li != 0) bi += li * mon * prodE(i);
                b[static_cast<std::size_t>(i - 1)] = bi;
            }
            break;
        }
    }
    return OneForm(ctx, std::move(b));
}

enum class ProbeVerdict { EqualsNCOracle, SchemeStrictlyLarger, Other };

inline std::string to_string(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::EqualsNCOracle: return "EqualsNCOracle";
        case ProbeVerdict::SchemeStrictlyLarger: return "SchemeStrictlyLarger";
        case ProbeVerdict::Other: return "Other";
    }
    return "?";
}

struct ProbeReport {
    ProbeVerdict verdict = ProbeVerdict::EqualsNCOracle;
    std::optional<int> firstDivergenceOrder;
    // at the divergence order: how many NC components the foliation jet
    // variety contains, out of how many
    std::optional<int> componentsContained, componentsTotal;
};

/// Compare the foliation jet fibres at P against the jets of the normal
/// crossings divisor V(x_1...x_t) order by order (set-theoretically).
inline ProbeReport jet_comparison_probe(const OneForm& w, int t, int m,
                                        const std::vector<Rational>& P) {
    ProbeReport out;
    std::vector<std::string> sub_names;
    for (int i = 0; i < t; ++i) sub_names.push_back(w.context->name(i));
    auto sub_base = VarContext::base(sub_names);
    for (int k = 1; k <= m; ++k) {
        Ideal F = jet_fiber(jet_ideal_foliation(w.b, k), P).ideal();
        NCOracle O = nc_jet_oracle(sub_base, k);
        std::vector<Polynomial> ogens;
        for (auto& g : O.intersection.generators) ogens.push_back(g.renamed(F.context));
        Ideal Oi(F.context, ogens);
        bool f_in_o = radical_contains(Oi, F);  // V(F) >= V(O)
        bool o_in_f = radical_contains(F, Oi);  // V(O) >= V(F)
        if (f_in_o && o_in_f) continue;
        out.firstDivergenceOrder = k;
        out.verdict = (f_in_o && !o_in_f) ? ProbeVerdict::SchemeStrictlyLarger
                                          : ProbeVerdict::Other;
        int contained = 0;
        for (auto& comp : O.components) {
            std::vector<Polynomial> cgens;
            for (auto& g : comp.generators) cgens.push_back(g.renamed(F.context));
            if (radical_contains(Ideal(F.context, cgens), F)) ++contained;
        }
        out.componentsContained = contained;
        out.componentsTotal = static_cast<int>(O.components.size());
        return out;
    }
    out.verdict = ProbeVerdict::EqualsNCOracle;
    return out;
}

/// n minus the rank at P of the polynomial vector fields annihilating omega
/// with coefficient degree <= degBound; an upper bound for the dimensional
/// type, exact on the normal forms once degBound is large enough.
inline int dimensional_type_estimate(const OneForm& w, const std::vector<Rational>& P,
                                     int degBound = 3) {
    int n = w.n();
    const ContextPtr& ctx = w.context;
    // enumerate monomials of degree <= degBound
    std::vector<Monomial> mons;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            Monomial::Exps e;
            for (int i = 0; i < n; ++i)
                if (exps[static_cast<std::size_t>(i)] > 0)
                    e.emplace_back(i, exps[static_cast<std::size_t>(i)]);
            mons.push_back(Monomial(std::move(e)));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            exps[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
        exps[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, degBound);
    std::size_t M = mons.size();
    // unknowns: c[i][m] coefficient of mons[m] in component i
    // equations: coefficients of sum_i b_i * c_i = 0
    std::map<Monomial, std::size_t, MonomialKeyLess> eq_index;
    std::vector<std::vector<Rational>> rows;
    auto eq_row = [&](const Monomial& mono) -> std::vector<Rational>& {
        auto it = eq_index.find(mono);
        if (it == eq_index.end()) {
            it = eq_index.emplace(mono, rows.size()).first;
            rows.emplace_back(static_cast<std::size_t>(n) * M, Rational(0));
        }
        return rows[it->second];
    };
    for (int i = 0; i < n; ++i)
        for (auto& [bm, bc] : w.b[static_cast<std::size_t>(i)].terms())
            for (std::size_t mi = 0; mi < M; ++mi)
                eq_row(bm * mons[mi])[static_cast<std::size_t>(i) * M + mi] += bc;
    auto kernel = nullspace(rows);
    // evaluate each kernel field at P and take the rank
    RationalMatrix vals;
    for (auto& v : kernel) {
        std::vector<Rational> at(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i)
            for (std::size_t mi = 0; mi < M; ++mi) {
                const Rational& c = v[static_cast<std::size_t>(i) * M + mi];
                if (c == 0) continue;
                at[static_cast<std::size_t>(i)] +=
                    c * Polynomial::term(ctx, 1, mons[mi]).evaluate(P);
            }
        vals.push_back(std::move(at));
    }
    return n - matrix_rank(vals);
}

}  // namespace foljet

#endif
