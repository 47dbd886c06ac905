#pragma once

#include <optional>
#include <vector>

#include "tjurina/module_element.hpp"

namespace tjurina {

// When enabled (CLI: TJURINA_TRACE=1), pair-reduction events stream to stderr
// as line-oriented text.
void set_engine_trace(bool on);
bool engine_trace();

// Standard basis of an ideal or submodule of a free module. For global orders
// this is a Groebner basis (Buchberger, normal selection, product and chain
// criteria); for local or mixed orders Mora's weak normal form with ecart
// selection is used. `complete` certifies the Buchberger fixed point.
struct StdBasis {
    ModuleOrder order;
    int rank = 1;
    std::vector<ModuleElement> gens;
    bool complete = false;
};

StdBasis std_basis(const std::vector<ModuleElement>& gens, const ModuleOrder& ord, int rank);
// rank-1 convenience: ideal in the context's own order
StdBasis std_basis(const std::vector<Polynomial>& gens, const Ctx& ctx);

// Weak normal form (Mora for non-global orders): zero iff f lies in the
// ideal/module generated by the (complete) basis. Global orders fully reduce
// all terms; non-global orders tail-reduce with a step budget.
ModuleElement normal_form(const ModuleElement& f, const StdBasis& b);
Polynomial normal_form(const Polynomial& f, const StdBasis& b);

bool is_member(const ModuleElement& f, const StdBasis& b);
bool is_member(const Polynomial& f, const StdBasis& b);

// Re-checks that every S-vector of the basis reduces to zero.
bool verify_spairs(const StdBasis& b);

struct VdimResult {
    bool finite = false;
    long value = 0; // standard monomial count when finite
};

// Counts (monomial, component) pairs outside the leading module.
VdimResult vdim(const StdBasis& b);

// Dimension of the quotient by a rank-1 ideal via the leading-term ideal
// (exact maximal-independent-set search). Unit ideal yields -1.
int krull_dim(const StdBasis& b);

// True when the basis contains a unit (leading monomial 1).
bool contains_one(const StdBasis& b);

// True iff f vanishes on V(I) (in the localization the context order induces).
// Rabinowitsch trick: 1 in I + (1 - z*f) over the context extended by one
// global variable of highest precedence.
bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const Ctx& ctx);

// Generating set of the full syzygy module of the given generators, via the
// tagged-module method (position-over-term elimination order on F + tags).
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens);
std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens);

// Generators of A intersect B inside the rank-r free module.
std::vector<ModuleElement> module_intersect(const std::vector<ModuleElement>& a,
                                            const std::vector<ModuleElement>& b, int rank,
                                            const Ctx& ctx);

// (N : J) = {v in F : J*v subseteq N}; per ideal generator via syzygy-based
// colon, then intersected. Empty J yields the full module.
std::vector<ModuleElement> module_quotient(const std::vector<ModuleElement>& n,
                                           const std::vector<Polynomial>& j, int rank,
                                           const Ctx& ctx);

// Length of the part of F/N supported on V(J): iterate N -> (N : J) until
// stabilization and return vdim(N) - vdim(N_infinity). Requires finite vdim.
long torsion_part_vdim(const std::vector<ModuleElement>& n, const std::vector<Polynomial>& j,
                       int rank, const Ctx& ctx);

// Number of geometric points of a zero-dimensional ideal over a global-order
// context (Seidenberg: squarefree univariate eliminants added per variable).
long zero_dim_radical_count(const std::vector<Polynomial>& gens, const Ctx& ctx);

// Univariate generator of I intersect K[var] (exists when I is 0-dim).
std::optional<Polynomial> eliminant(const std::vector<Polynomial>& gens, const Ctx& ctx,
                                    const std::string& var);

// p must be univariate in var; returns p / gcd(p, dp/dvar).
Polynomial univariate_squarefree_part(const Polynomial& p, int var);

} // namespace tjurina
