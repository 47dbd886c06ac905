#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tjurina/poly.hpp"

namespace tjurina {

// Element of a finite-rank free module: one polynomial per component. The
// component index i carries the basis symbol e_(i+1) when printed.
class ModuleElement {
  public:
    ModuleElement() = default;
    ModuleElement(Ctx ctx, int rank)
        : ctx_(ctx), comps_(static_cast<size_t>(rank), Polynomial::zero(ctx)) {}
    explicit ModuleElement(std::vector<Polynomial> comps);
    static ModuleElement from_poly(const Polynomial& p); // rank 1

    int rank() const { return static_cast<int>(comps_.size()); }
    const Ctx& ctx() const { return ctx_; }
    const Polynomial& comp(int i) const { return comps_[i]; }
    Polynomial& comp(int i) { return comps_[i]; }
    const std::vector<Polynomial>& comps() const { return comps_; }

    bool is_zero() const;
    int total_degree() const; // max over components, -1 for zero
    size_t term_count() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator-() const;
    bool operator==(const ModuleElement& o) const { return comps_ == o.comps_; }

    ModuleElement scaled(const Rat& c) const;
    ModuleElement mul_term(const Rat& c, const Monomial& m) const;
    ModuleElement mul_poly(const Polynomial& p) const;

    // Scales so all coefficients are coprime integers and the first nonzero
    // coefficient (in storage order) is positive; no-op on zero.
    ModuleElement primitive_part() const;

    std::string to_string() const;

  private:
    Ctx ctx_;
    std::vector<Polynomial> comps_;
};

// Leading term of a module element: (coefficient, monomial, component).
struct MLead {
    Rat c;
    Monomial m;
    int comp;
};

enum class CompStrategy { TermOverPosition, PositionOverTerm };

// Total order on (monomial, component) pairs. TermOverPosition compares
// monomials first (component index ascending breaks ties); PositionOverTerm
// gives the component precedence, which is the elimination flavour used for
// syzygy tags: components below `split` beat components at or above it.
struct ModuleOrder {
    Ctx ctx;
    CompStrategy strategy = CompStrategy::TermOverPosition;
    int split = -1; // PositionOverTerm only: comps < split dominate comps >= split

    static ModuleOrder top(Ctx ctx) { return {ctx, CompStrategy::TermOverPosition, -1}; }
    static ModuleOrder pot_elim(Ctx ctx, int split) {
        return {ctx, CompStrategy::PositionOverTerm, split};
    }

    int compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
        if (strategy == CompStrategy::PositionOverTerm) {
            bool a_front = ca < split, b_front = cb < split;
            if (a_front != b_front) return a_front ? 1 : -1;
        }
        int cmp = ctx->compare(ma, mb);
        if (cmp != 0) return cmp;
        if (ca != cb) return ca < cb ? 1 : -1; // lower component index is larger
        return 0;
    }
};

std::optional<MLead> leading_term(const ModuleElement& v, const ModuleOrder& ord);

} // namespace tjurina
