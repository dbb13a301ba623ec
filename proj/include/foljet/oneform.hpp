#ifndef FOLJET_ONEFORM_HPP
#define FOLJET_ONEFORM_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "gcd.hpp"
#include "groebner.hpp"
#include "jets.hpp"

namespace foljet {

/// omega = sum b_i dx_i over the n base variables of a shared context.
struct OneForm {
    ContextPtr context;
    std::vector<Polynomial> b;

    OneForm() = default;
    OneForm(ContextPtr ctx, std::vector<Polynomial> coeffs)
        : context(std::move(ctx)), b(std::move(coeffs)) {
        if (static_cast<int>(b.size()) != context->size())
            throw std::invalid_argument("OneForm: coefficient count mismatch");
        for (auto& p : b) require_compatible(p.context(), context);
    }

    int n() const { return context->size(); }
    bool is_zero() const {
        for (auto& p : b)
            if (!p.is_zero()) return false;
        return true;
    }
    bool operator==(const OneForm& o) const { return b == o.b; }

    OneForm operator*(const Polynomial& f) const {
        OneForm r = *this;
        for (auto& p : r.b) p = p * f;
        return r;
    }

    /// Coefficient-wise translation of the point P to the origin.
    OneForm translated(const std::vector<Rational>& P) const {
        OneForm r = *this;
        for (auto& p : r.b) p = p.translate(P);
        return r;
    }

    std::string to_string() const {
        std::string out;
        bool first = true;
        for (int i = 0; i < n(); ++i) {
            if (b[static_cast<std::size_t>(i)].is_zero()) continue;
            if (!first) out += " + ";
            first = false;
            out += "(" + b[static_cast<std::size_t>(i)].to_string() + ")*d(" +
                   context->name(i) + ")";
        }
        return first ? "0" : out;
    }
};

struct IntegrabilityResult {
    bool integrable = true;
    // first nonzero coefficient of omega ^ d omega, with its index triple
    std::optional<std::array<int, 3>> witness_indices;
    std::optional<Polynomial> witness;
};

/// omega ^ d omega = 0 test via the coefficients
/// c_ijk = b_i (d_j b_k - d_k b_j) + b_j (d_k b_i - d_i b_k) + b_k (d_i b_j - d_j b_i).
inline IntegrabilityResult integrability_check(const OneForm& w) {
    IntegrabilityResult out;
    int n = w.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                auto d = [&](int a, int x) {
                    return w.b[static_cast<std::size_t>(a)].derivative(x);
                };
                const auto& bi = w.b[static_cast<std::size_t>(i)];
                const auto& bj = w.b[static_cast<std::size_t>(j)];
                const auto& bk = w.b[static_cast<std::size_t>(k)];
                Polynomial c = bi * (d(k, j) - d(j, k)) + bj * (d(i, k) - d(k, i)) +
                               bk * (d(j, i) - d(i, j));
                if (!c.is_zero()) {
                    out.integrable = false;
                    out.witness_indices = {i, j, k};
                    out.witness = c;
                    return out;
                }
            }
    return out;
}

/// Divides out gcd(b_1,...,b_n); returns the (monic) factor and the
/// saturated form.
inline std::pair<Polynomial, OneForm> saturate_form(const OneForm& w) {
    if (w.is_zero()) throw std::invalid_argument("saturate_form: zero form");
    Polynomial g(w.context);
    for (auto& p : w.b)
        if (!p.is_zero()) g = g.is_zero() ? p : multivariate_gcd(g, p);
    g = g / g.leading_term().second;
    OneForm r = w;
    for (auto& p : r.b)
        if (!p.is_zero()) p = exact_divide(p, g);
    return {g, r};
}

inline bool is_saturated(const OneForm& w) {
    return saturate_form(w).first.is_constant();
}

inline Ideal singular_ideal(const OneForm& w) {
    return Ideal(w.context, w.b);
}

/// f* omega = sum_i (b_i o phi) d(phi_i), expanded by the chain rule into
/// the source differentials. phi maps the source context to w's context.
inline OneForm pullback_form(const OneForm& w, const std::vector<Polynomial>& phi,
                             const ContextPtr& source) {
    if (static_cast<int>(phi.size()) != w.n())
        throw std::invalid_argument("pullback_form: component count mismatch");
    std::map<int, Polynomial> sigma;
    for (int i = 0; i < w.n(); ++i) sigma[i] = phi[static_cast<std::size_t>(i)];
    std::vector<Polynomial> out(static_cast<std::size_t>(source->size()),
                                Polynomial::zero(source));
    for (int i = 0; i < w.n(); ++i) {
        Polynomial bi = w.b[static_cast<std::size_t>(i)].substitute(sigma, source);
        if (bi.is_zero()) continue;
        for (int s = 0; s < source->size(); ++s)
            out[static_cast<std::size_t>(s)] +=
                bi * phi[static_cast<std::size_t>(i)].derivative(s);
    }
    return OneForm(source, std::move(out));
}

/// omega^I_y: substitute x_i = y_i for i in the assignment and delete those
/// dx_i terms. Context is unchanged (the slice keeps its ambient names).
inline OneForm specialize(const OneForm& w, const std::map<int, Rational>& assignment) {
    std::map<int, Polynomial> sigma;
    for (auto& [i, v] : assignment) {
        if (i < 0 || i >= w.n()) throw std::invalid_argument("specialize: index out of range");
        sigma[i] = Polynomial::constant(w.context, v);
    }
    OneForm r = w;
    for (int i = 0; i < w.n(); ++i) {
        if (assignment.count(i)) {
            r.b[static_cast<std::size_t>(i)] = Polynomial::zero(w.context);
        } else {
            r.b[static_cast<std::size_t>(i)] =
                r.b[static_cast<std::size_t>(i)].substitute(sigma, w.context);
        }
    }
    return r;
}

/// V(g) is a solution iff g divides every coefficient of omega ^ dg.
inline bool invariant_hypersurface_check(const OneForm& w, const Polynomial& g) {
    if (g.is_constant()) throw std::invalid_argument("invariant check needs nonconstant g");
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j) {
            Polynomial c = w.b[static_cast<std::size_t>(i)] * g.derivative(j) -
                           w.b[static_cast<std::size_t>(j)] * g.derivative(i);
            if (!try_exact_divide(c, g)) return false;
        }
    return true;
}

/// For omega = a dx + b dy the dual field is X = (b, -a); its linear part at
/// P is the 2x2 matrix of degree-1 coefficients after translation.
struct DualField2d {
    Polynomial X1, X2;           // components of X
    std::array<std::array<Rational, 2>, 2> linear;  // rows: components, cols: variables
    Rational trace() const { return linear[0][0] + linear[1][1]; }
    Rational det() const {
        return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0];
    }
};

inline DualField2d dual_field_2d(const OneForm& w,
                                 const std::vector<Rational>& P = {}) {
    if (w.n() != 2) throw std::invalid_argument("dual_field_2d needs n=2");
    DualField2d out;
    out.X1 = w.b[1];
    out.X2 = -w.b[0];
    Polynomial f1 = P.empty() ? out.X1 : out.X1.translate(P);
    Polynomial f2 = P.empty() ? out.X2 : out.X2.translate(P);
    auto lin = [&](const Polynomial& f, int var) {
        return f.coefficient(Monomial::var(var));
    };
    out.linear = {{{lin(f1, 0), lin(f1, 1)}, {lin(f2, 0), lin(f2, 1)}}};
    return out;
}

struct OrderCriterionData {
    std::optional<int> ord_g;      // nullopt = infinity (g == 0)
    std::optional<int> min_ord_b;
    bool point_singular = true;
    bool holds = true;             // ord g <= 1 + min ord b_i
};

inline OrderCriterionData order_criterion_check(const OneForm& w, const Polynomial& g,
                                                const std::vector<Rational>& P) {
    OrderCriterionData out;
    out.ord_g = g.order_at_point(P);
    for (auto& bi : w.b) {
        auto o = bi.order_at_point(P);
        if (o && (!out.min_ord_b || *o < *out.min_ord_b)) out.min_ord_b = o;
    }
    out.point_singular = true;
    for (auto& bi : w.b)
        if (bi.evaluate(P) != 0) out.point_singular = false;
    if (!out.ord_g) out.holds = true;  // g = 0 vacuously
    else if (!out.min_ord_b) out.holds = false;
    else out.holds = *out.ord_g <= 1 + *out.min_ord_b;
    return out;
}

}  // namespace foljet

#endif
