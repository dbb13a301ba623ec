#ifndef FOLJET_MONOMIAL_HPP
#define FOLJET_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace foljet {

/// Sparse exponent vector; pairs (variable index, exponent) sorted by index,
/// no zero exponents stored.
class Monomial {
public:
    using Exps = std::vector<std::pair<int, int>>;

    Monomial() = default;
    explicit Monomial(Exps exps) : exps_(std::move(exps)) {
        std::sort(exps_.begin(), exps_.end());
        std::size_t out = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (i + 1 < exps_.size() && exps_[i].first == exps_[i + 1].first)
                throw std::invalid_argument("duplicate variable in monomial");
            if (exps_[i].second < 0) throw std::invalid_argument("negative exponent");
            if (exps_[i].second != 0) exps_[out++] = exps_[i];
        }
        exps_.resize(out);
    }

    static Monomial one() { return Monomial(); }
    static Monomial var(int i, int e = 1) {
        Monomial m;
        if (e != 0) m.exps_.emplace_back(i, e);
        return m;
    }

    const Exps& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : exps_) d += e;
        return d;
    }

    int degree_of(int var) const {
        for (auto& [v, e] : exps_)
            if (v == var) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = exps_.begin(), b = o.exps_.begin();
        while (a != exps_.end() || b != o.exps_.end()) {
            if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first))
                r.exps_.push_back(*a++);
            else if (a == exps_.end() || b->first < a->first)
                r.exps_.push_back(*b++);
            else {
                r.exps_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        auto b = o.exps_.begin();
        for (auto& [v, e] : exps_) {
            while (b != o.exps_.end() && b->first < v) ++b;
            if (b == o.exps_.end() || b->first != v || b->second < e) return false;
        }
        return true;
    }

    /// Quotient; requires divides(o)==false -> throws.
    Monomial divide(const Monomial& o) const {  // *this / o
        Monomial r;
        auto b = o.exps_.begin();
        for (auto& [v, e] : exps_) {
            int sub = 0;
            while (b != o.exps_.end() && b->first < v) {
                throw std::invalid_argument("monomial division failure");
            }
            if (b != o.exps_.end() && b->first == v) sub = (b++)->second;
            if (sub > e) throw std::invalid_argument("monomial division failure");
            if (e - sub != 0) r.exps_.emplace_back(v, e - sub);
        }
        if (b != o.exps_.end()) throw std::invalid_argument("monomial division failure");
        return r;
    }

    static Monomial lcm(const Monomial& x, const Monomial& y) {
        Monomial r;
        auto a = x.exps_.begin(), b = y.exps_.begin();
        while (a != x.exps_.end() || b != y.exps_.end()) {
            if (b == y.exps_.end() || (a != x.exps_.end() && a->first < b->first))
                r.exps_.push_back(*a++);
            else if (a == x.exps_.end() || b->first < a->first)
                r.exps_.push_back(*b++);
            else {
                r.exps_.emplace_back(a->first, std::max(a->second, b->second));
                ++a, ++b;
            }
        }
        return r;
    }

    static bool coprime(const Monomial& x, const Monomial& y) {
        auto a = x.exps_.begin(), b = y.exps_.begin();
        while (a != x.exps_.end() && b != y.exps_.end()) {
            if (a->first < b->first) ++a;
            else if (b->first < a->first) ++b;
            else return false;
        }
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    Exps exps_;
};

/// Graded reverse-lexicographic comparison restricted to one variable block.
/// Precedence x_{i} > x_{j} for i < j within the block.
namespace detail {
inline int grevlex_cmp_block(const Monomial& a, const Monomial& b,
                             const std::vector<int>& block_of, int block) {
    int da = 0, db = 0;
    for (auto& [v, e] : a.exponents())
        if (block_of[static_cast<std::size_t>(v)] == block) da += e;
    for (auto& [v, e] : b.exponents())
        if (block_of[static_cast<std::size_t>(v)] == block) db += e;
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: scan from the highest variable index down; at the last
    // variable where they differ, the monomial with the larger exponent is
    // the smaller one.
    auto ra = a.exponents().rbegin();
    auto rb = b.exponents().rbegin();
    auto next = [&](auto& it, auto end) -> std::pair<int, int> {
        while (it != end) {
            auto [v, e] = *it;
            ++it;
            if (block_of[static_cast<std::size_t>(v)] == block) return {v, e};
        }
        return {-1, 0};
    };
    auto pa = next(ra, a.exponents().rend());
    auto pb = next(rb, b.exponents().rend());
    while (pa.first >= 0 || pb.first >= 0) {
        if (pa.first == pb.first) {
            if (pa.second != pb.second) return pa.second > pb.second ? -1 : 1;
            pa = next(ra, a.exponents().rend());
            pb = next(rb, b.exponents().rend());
        } else if (pa.first > pb.first) {
            // a has a positive exponent at a later variable than b does.
            return -1;
        } else {
            return 1;
        }
    }
    return 0;
}
}  // namespace detail

/// Monomial order as a sequence of grevlex blocks; block 0 dominates.
/// A single block gives plain grevlex; two blocks give an elimination order
/// for the variables of block 0.
class MonomialOrder {
public:
    static MonomialOrder grevlex(int nvars) {
        MonomialOrder o;
        o.block_of_.assign(static_cast<std::size_t>(nvars), 0);
        o.nblocks_ = 1;
        return o;
    }

    /// Elimination order: `eliminated` variables form the dominant block.
    static MonomialOrder elimination(int nvars, const std::vector<int>& eliminated) {
        MonomialOrder o;
        o.block_of_.assign(static_cast<std::size_t>(nvars), 1);
        for (int v : eliminated) o.block_of_.at(static_cast<std::size_t>(v)) = 0;
        o.nblocks_ = 2;
        return o;
    }

    int nvars() const { return static_cast<int>(block_of_.size()); }

    bool less(const Monomial& a, const Monomial& b) const {
        for (int blk = 0; blk < nblocks_; ++blk) {
            int c = detail::grevlex_cmp_block(a, b, block_of_, blk);
            if (c != 0) return c < 0;
        }
        return false;
    }

    int cmp(const Monomial& a, const Monomial& b) const {
        for (int blk = 0; blk < nblocks_; ++blk) {
            int c = detail::grevlex_cmp_block(a, b, block_of_, blk);
            if (c != 0) return c;
        }
        return 0;
    }

    bool operator==(const MonomialOrder& o) const {
        return nblocks_ == o.nblocks_ && block_of_ == o.block_of_;
    }

private:
    std::vector<int> block_of_;
    int nblocks_ = 1;
};

/// Structural strict ordering used as the map key order inside Polynomial;
/// coincides with grevlex on the full variable list, so term iteration is
/// canonical and printing is byte-stable.
struct MonomialKeyLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto ra = a.exponents().rbegin();
        auto rb = b.exponents().rbegin();
        while (ra != a.exponents().rend() && rb != b.exponents().rend()) {
            if (ra->first != rb->first) return ra->first > rb->first;
            if (ra->second != rb->second) return ra->second > rb->second;
            ++ra, ++rb;
        }
        if (ra != a.exponents().rend()) return true;
        return false;
    }
};

}  // namespace foljet

#endif
