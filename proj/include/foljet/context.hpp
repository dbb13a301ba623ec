#ifndef FOLJET_CONTEXT_HPP
#define FOLJET_CONTEXT_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace foljet {

enum class VarRole { Base, Jet, Aux };

struct VarInfo {
    std::string name;
    VarRole role = VarRole::Base;
    // For jet variables a_{i,j}: i is the 1-based base-variable index,
    // j the t-power (0 <= j <= m). Unused otherwise.
    int jet_i = 0;
    int jet_j = 0;
};

/// Ordered list of named variables with role metadata. Immutable once built;
/// polynomials hold a shared_ptr to their context.
class VarContext {
public:
    static std::shared_ptr<const VarContext> base(std::vector<std::string> names) {
        std::vector<VarInfo> vars;
        vars.reserve(names.size());
        for (auto& n : names) vars.push_back(VarInfo{std::move(n), VarRole::Base, 0, 0});
        return make(std::move(vars));
    }

    static std::shared_ptr<const VarContext> make(std::vector<VarInfo> vars) {
        auto ctx = std::shared_ptr<VarContext>(new VarContext());
        ctx->vars_ = std::move(vars);
        for (std::size_t i = 0; i < ctx->vars_.size(); ++i) {
            if (!ctx->index_.emplace(ctx->vars_[i].name, static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate variable name: " + ctx->vars_[i].name);
        }
        return ctx;
    }

    int size() const { return static_cast<int>(vars_.size()); }
    const VarInfo& var(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
    const std::string& name(int i) const { return var(i).name; }

    std::optional<int> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int require(const std::string& name) const {
        auto i = find(name);
        if (!i) throw std::invalid_argument("unknown variable: " + name);
        return *i;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(vars_.size());
        for (const auto& v : vars_) out.push_back(v.name);
        return out;
    }

    /// A fresh name not present in the context, based on the given stem.
    std::string fresh_name(const std::string& stem) const {
        if (!find(stem)) return stem;
        for (int k = 1;; ++k) {
            std::string cand = stem + "_" + std::to_string(k);
            if (!find(cand)) return cand;
        }
    }

    /// New context with extra variables appended (existing indices unchanged).
    std::shared_ptr<const VarContext> extended(const std::vector<VarInfo>& extra) const {
        std::vector<VarInfo> vars = vars_;
        vars.insert(vars.end(), extra.begin(), extra.end());
        return make(std::move(vars));
    }

    bool same_vars(const VarContext& other) const {
        if (vars_.size() != other.vars_.size()) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name != other.vars_[i].name) return false;
        return true;
    }

    /// True if `other` lists exactly the first `other.size()` variables of
    /// this context, in order.
    bool extends(const VarContext& other) const {
        if (other.size() > size()) return false;
        for (int i = 0; i < other.size(); ++i)
            if (vars_[static_cast<std::size_t>(i)].name != other.name(i)) return false;
        return true;
    }

private:
    VarContext() = default;
    std::vector<VarInfo> vars_;
    std::map<std::string, int> index_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline bool compatible(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && a->same_vars(*b));
}

inline void require_compatible(const ContextPtr& a, const ContextPtr& b) {
    if (!compatible(a, b)) throw std::invalid_argument("variable context mismatch");
}

}  // namespace foljet

#endif
