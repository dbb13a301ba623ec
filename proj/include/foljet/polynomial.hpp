#ifndef FOLJET_POLYNOMIAL_HPP
#define FOLJET_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "context.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace foljet {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are keyed by grevlex over the full variable list, so iteration and
/// printing are canonical.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialKeyLess>;

    Polynomial() = default;
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(ContextPtr ctx, const Rational& c) {
        Polynomial p(std::move(ctx));
        if (c != 0) p.terms_[Monomial::one()] = c;
        return p;
    }

    static Polynomial variable(ContextPtr ctx, int i, int e = 1) {
        if (!ctx || i < 0 || i >= ctx->size())
            throw std::invalid_argument("variable index out of range");
        Polynomial p(std::move(ctx));
        p.terms_[Monomial::var(i, e)] = 1;
        return p;
    }

    static Polynomial variable(const ContextPtr& ctx, const std::string& name, int e = 1) {
        return variable(ctx, ctx->require(name), e);
    }

    static Polynomial term(ContextPtr ctx, const Rational& c, Monomial m) {
        Polynomial p(std::move(ctx));
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::invalid_argument("not a constant polynomial");
        return terms_.begin()->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    int degree_in(int var) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree_of(var));
        return d;
    }

    bool depends_on(int var) const {
        for (auto& [m, c] : terms_)
            if (m.degree_of(var) > 0) return true;
        return false;
    }

    /// Minimum total degree of a term; nullopt for the zero polynomial.
    std::optional<int> order() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first.degree();
        for (auto& [m, c] : terms_) d = std::min(d, m.degree());
        return d;
    }

    Polynomial operator-() const {
        Polynomial r(ctx_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_ctx(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_ctx(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_ctx(b);
        Polynomial r(a.ctx_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, Polynomial p) {
        if (c == 0) return Polynomial(p.ctx_);
        for (auto& [m, v] : p.terms_) v *= c;
        return p;
    }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return c * std::move(p); }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c) { return *this = c * std::move(*this); }

    friend Polynomial operator/(Polynomial p, const Rational& c) {
        if (c == 0) throw std::invalid_argument("division by zero");
        for (auto& [m, v] : p.terms_) v /= c;
        return p;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        Polynomial r = constant(ctx_, 1);
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    Polynomial derivative(int var) const {
        Polynomial r(ctx_);
        for (auto& [m, c] : terms_) {
            int e = m.degree_of(var);
            if (e == 0) continue;
            Monomial::Exps exps;
            for (auto& [v, k] : m.exponents()) {
                int nk = (v == var) ? k - 1 : k;
                if (nk != 0) exps.emplace_back(v, nk);
            }
            r.add_term(Monomial(std::move(exps)), c * e);
        }
        return r;
    }

    /// Substitute variables by polynomials. `sigma[i]` replaces variable i if
    /// present; absent variables stay fixed. Results live in `target` (which
    /// must contain the images and any fixed variables); `fixed_map` gives
    /// the target index of each fixed source variable.
    Polynomial substitute(const std::map<int, Polynomial>& sigma,
                          ContextPtr target = nullptr) const {
        ContextPtr tgt = target;
        if (!tgt) {
            tgt = sigma.empty() ? ctx_ : sigma.begin()->second.context();
        }
        Polynomial out(tgt);
        for (auto& [m, c] : terms_) {
            Polynomial acc = constant(tgt, c);
            for (auto& [v, e] : m.exponents()) {
                auto it = sigma.find(v);
                if (it != sigma.end()) {
                    require_compatible(it->second.context(), tgt);
                    acc = acc * it->second.pow(e);
                } else {
                    if (v >= tgt->size() || tgt->name(v) != ctx_->name(v))
                        throw std::invalid_argument(
                            "substitute: fixed variable missing in target context");
                    acc = acc * variable(tgt, v, e);
                }
            }
            out += acc;
        }
        return out;
    }

    /// f(x + P): shift each variable by the matching coordinate of P.
    Polynomial translate(const std::vector<Rational>& P) const {
        if (static_cast<int>(P.size()) != ctx_->size())
            throw std::invalid_argument("translate: point dimension mismatch");
        std::map<int, Polynomial> sigma;
        for (int i = 0; i < ctx_->size(); ++i) {
            if (P[static_cast<std::size_t>(i)] == 0) continue;
            sigma[i] =
                variable(ctx_, i) + constant(ctx_, P[static_cast<std::size_t>(i)]);
        }
        return substitute(sigma, ctx_);
    }

    /// Minimum total degree of translate(P); nullopt = infinity (f == 0).
    std::optional<int> order_at_point(const std::vector<Rational>& P) const {
        return translate(P).order();
    }

    Rational evaluate(const std::vector<Rational>& P) const {
        if (static_cast<int>(P.size()) != ctx_->size())
            throw std::invalid_argument("evaluate: point dimension mismatch");
        Rational out = 0;
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (auto& [v, e] : m.exponents()) {
                Rational base = P[static_cast<std::size_t>(v)];
                for (int k = 0; k < e; ++k) t *= base;
            }
            out += t;
        }
        return out;
    }

    /// Leading term w.r.t. the structural (full grevlex) order.
    const std::pair<const Monomial, Rational>& leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    /// Canonical rendering: terms in descending grevlex, `p/q` rationals,
    /// explicit `*` and `^`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Monomial& m = it->first;
            Rational c = it->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                if (c < 0) { os << " - "; c = -c; }
                else os << " + ";
            }
            first = false;
            bool need_coeff = (c != 1) || m.is_one();
            if (need_coeff) os << c;
            bool printed = need_coeff;
            for (auto& [v, e] : m.exponents()) {
                if (printed) os << "*";
                os << ctx_->name(v);
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
        return os.str();
    }

    /// Transport into another context by matching variable names.
    Polynomial renamed(const ContextPtr& target) const {
        std::map<int, int> remap;
        for (int i = 0; i < ctx_->size(); ++i) {
            auto t = target->find(ctx_->name(i));
            if (t) remap[i] = *t;
        }
        Polynomial r(target);
        for (auto& [m, c] : terms_) {
            Monomial::Exps exps;
            for (auto& [v, e] : m.exponents()) {
                auto it = remap.find(v);
                if (it == remap.end())
                    throw std::invalid_argument("renamed: variable " + ctx_->name(v) +
                                                " missing in target context");
                exps.emplace_back(it->second, e);
            }
            r.add_term(Monomial(std::move(exps)), c);
        }
        return r;
    }

    /// Same polynomial re-keyed in an extended context (indices must match).
    Polynomial in_context(ContextPtr bigger) const {
        if (!bigger->extends(*ctx_))
            throw std::invalid_argument("in_context: target does not extend source");
        Polynomial r(std::move(bigger));
        r.terms_ = terms_;
        return r;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void require_ctx(const Polynomial& o) const { require_compatible(ctx_, o.ctx_); }

    ContextPtr ctx_;
    TermMap terms_;
};

}  // namespace foljet

#endif
