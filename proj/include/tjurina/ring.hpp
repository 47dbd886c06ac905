#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "tjurina/errors.hpp"

namespace tjurina {

// Per-block order kind. Degrevlex blocks are global (1 is smallest within the
// block), NegDegrevlex blocks are local (1 is largest): the latter model power
// series variables, the former polynomial ones.
enum class BlockKind { Degrevlex, NegDegrevlex };

struct OrderBlock {
    BlockKind kind;
    std::vector<int> vars; // indices into the context variable list
};

// Exponent vector; the owning context fixes the variable count and the order.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(static_cast<int>(a.e.size()));
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b, i.e. componentwise a <= b
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(static_cast<int>(a.e.size()));
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(static_cast<int>(a.e.size()));
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

class RingContext;
using Ctx = std::shared_ptr<const RingContext>;

// Named variables partitioned into ordered blocks; the composite monomial
// order compares block by block in precedence order. Every variable belongs to
// exactly one block. Immutable after construction and freely shared.
class RingContext : public std::enable_shared_from_this<RingContext> {
  public:
    static Ctx make(std::vector<std::pair<std::vector<std::string>, BlockKind>> blocks);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[i]; }
    const std::vector<OrderBlock>& blocks() const { return blocks_; }

    // -1 when the name is unknown.
    int index_of(const std::string& name) const;
    int require(const std::string& name) const;

    bool is_global() const { return global_; }

    // <0, 0, >0 as a < b, a == b, a > b in the composite order.
    int compare(const Monomial& a, const Monomial& b) const;

    Monomial one() const { return Monomial(nvars()); }
    Monomial var_mono(int i, int exp = 1) const {
        Monomial m(nvars());
        m.e[i] = exp;
        return m;
    }

    // Context with the same blocks plus one fresh variable prepended as its
    // own block (used by the radical-membership trick; the new block takes
    // highest precedence so the induced localization is unchanged).
    Ctx extended_front(const std::string& fresh, BlockKind kind) const;

  private:
    std::vector<std::string> vars_;
    std::vector<OrderBlock> blocks_;
    std::vector<int> var_block_;
    bool global_ = true;
};

inline Ctx RingContext::make(std::vector<std::pair<std::vector<std::string>, BlockKind>> spec) {
    auto ctx = std::make_shared<RingContext>();
    for (auto& [names, kind] : spec) {
        OrderBlock blk;
        blk.kind = kind;
        for (auto& n : names) {
            if (n.empty()) throw Error(Errc::InputError, "empty variable name");
            if (ctx->index_of(n) >= 0)
                throw Error(Errc::InputError, "duplicate variable name: " + n);
            blk.vars.push_back(static_cast<int>(ctx->vars_.size()));
            ctx->vars_.push_back(n);
        }
        if (kind == BlockKind::NegDegrevlex) ctx->global_ = false;
        ctx->blocks_.push_back(std::move(blk));
    }
    ctx->var_block_.assign(ctx->vars_.size(), -1);
    for (size_t b = 0; b < ctx->blocks_.size(); ++b)
        for (int v : ctx->blocks_[b].vars) ctx->var_block_[v] = static_cast<int>(b);
    return ctx;
}

inline int RingContext::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

inline int RingContext::require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw Error(Errc::UnknownVariable, name);
    return i;
}

inline int RingContext::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
        int da = 0, db = 0;
        for (int v : blk.vars) {
            da += a.e[v];
            db += b.e[v];
        }
        if (da != db) {
            bool bigger = (blk.kind == BlockKind::Degrevlex) ? (da > db) : (da < db);
            return bigger ? 1 : -1;
        }
        // degree tie: reverse lexicographic, last differing variable decides,
        // smaller exponent there = larger monomial
        for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
            if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
        }
    }
    return 0;
}

inline Ctx RingContext::extended_front(const std::string& fresh, BlockKind kind) const {
    std::vector<std::pair<std::vector<std::string>, BlockKind>> spec;
    spec.push_back({{fresh}, kind});
    for (const auto& blk : blocks_) {
        std::vector<std::string> names;
        for (int v : blk.vars) names.push_back(vars_[v]);
        spec.push_back({std::move(names), blk.kind});
    }
    return make(std::move(spec));
}

} // namespace tjurina
