#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tjurina/rational.hpp"
#include "tjurina/ring.hpp"

namespace tjurina {

struct Term {
    Rat c;      // never zero
    Monomial m;
};

// Sparse exact polynomial. Terms are kept strictly descending in the context
// order; every operation maintains that invariant.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Ctx ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(Ctx ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(Ctx ctx, const Rat& c);
    static Polynomial variable(const Ctx& ctx, const std::string& name, int exp = 1);
    static Polynomial from_term(Ctx ctx, const Rat& c, Monomial m);
    // Sorts, combines and strips zeros.
    static Polynomial from_terms(Ctx ctx, std::vector<Term> terms);

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_one() const;

    const Term& lt() const; // leading term; throws on zero
    const Monomial& lm() const { return lt().m; }
    const Rat& lc() const { return lt().c; }
    int total_degree() const; // -1 for zero
    int degree_in(const std::vector<int>& vars) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial scaled(const Rat& c) const;                    // c*f
    Polynomial mul_term(const Rat& c, const Monomial& m) const; // c*m*f
    Polynomial pow(int n) const;

    Polynomial derivative(int var) const;
    Polynomial derivative(const std::string& var) const;

    // Exact composite substitution into a (possibly different) context.
    // Unbound variables must exist by name in the target context.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings, const Ctx& target) const;
    Polynomial substitute(const std::map<std::string, Rat>& values, const Ctx& target) const;

    // Truncation to total degree <= d in the given variables (empty = all).
    Polynomial jet(int d, const std::vector<int>& vars = {}) const;

    // Rename-free embedding into a context that contains all used variables.
    Polynomial transport(const Ctx& target) const;

    std::string to_string() const;

  private:
    Ctx ctx_;
    std::vector<Term> terms_;

    friend Polynomial add_impl(const Polynomial& f, const Polynomial& g, bool negate_g);
};

void require_same_ctx(const Polynomial& f, const Polynomial& g);

// Parses the ASCII polynomial grammar:
//   expr   := sign? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | variable | '(' expr ')'
// Whitespace is insignificant; implicit multiplication is a syntax error.
// Errors carry the byte offset of the offending character.
Polynomial parse_polynomial(const std::string& text, const Ctx& ctx);

} // namespace tjurina
