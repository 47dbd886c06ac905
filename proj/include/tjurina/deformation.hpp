#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tjurina/transform.hpp"

namespace tjurina {

// Matrix family M(x, eps) over the germ C{x, eps}; eps -> 0 reproduces the
// validated base presentation.
struct DeformedPresentation {
    PolyMatrix matrix;  // over xe_ctx, canonical orientation
    Ctx xe_ctx;         // one local block: x variables then deformation parameters
    std::vector<std::string> def_params;
    Presentation base;  // M(x, 0)
};

DeformedPresentation make_deformed(const PolyMatrix& m, const std::vector<std::string>& def_params);

struct T1Result {
    long tau = 0;
    // standard-monomial basis of T^1 as matrix-unit classes (row, col, monomial)
    std::vector<std::tuple<int, int, Monomial>> basis;
};

// T^1 of the base singularity from the presentation matrix: the free module
// of matrix positions modulo the partial-derivative matrices dM/dx_j and the
// image of (A, B) -> AM + MB.
T1Result t1_downstairs(const Presentation& p);

// M + sum d_i * m_i with fresh deformation parameters d1..d_tau and m_i the
// T^1 basis matrices.
DeformedPresentation semiuniversal_matrix(const Presentation& p, const T1Result& t1);

// Lambda sends the matrix unit E_ij to s_j * e_i; applied entrywise it turns a
// matrix perturbation into a degree-1 perturbation of the transform equations.
// The target context must hold the s variables and the matrix variables.
ModuleElement lambda_map(const PolyMatrix& perturbation, const Ctx& s_ctx);

// Verifies the three identity families behind the isomorphism T^1 -> N':
// Lambda(dM/dx) = dH/dx, Lambda(M E_ij) = s_j dH/ds_i, Lambda(E_ij M) = H_j e_i.
bool lambda_identity_check(const Presentation& p);

// Chart-restricted equations of the in-family transform, eps kept symbolic.
Chart family_transform(const DeformedPresentation& dp, int chart_index);

struct FiberResult {
    bool smooth = false;
    Ctx ctx;                              // global x context of the fiber
    std::vector<Polynomial> singular_ideal;
    std::optional<long> point_count;      // reduced count when zero-dimensional
};

// Substitutes eps and checks the singular locus of the fiber globally over the
// x chart: SMOOTH iff the singular ideal is the unit ideal.
FiberResult fiber_smoothness(const DeformedPresentation& dp, const std::vector<Rat>& eps);

enum class FlatStatus { FlatByDimension, FlatByRelationLifting, NotFlat, Inconclusive };

const char* flat_status_name(FlatStatus s);

struct FlatnessVerdict {
    FlatStatus status = FlatStatus::Inconclusive;
    std::optional<ModuleElement> witness; // an unliftable relation at eps = 0
    std::string notes;
    Ctx relation_ctx;                     // [s_1..s_t global][x local]
};

// Flatness of the Tjurina modification in family: positive-dimensional bases
// with t <= dim+1 are flat outright; otherwise relations of the special fiber
// are compared against the Koszul relations plus the maximal-minors relation,
// and any stray relation is tested for liftability along eps.
FlatnessVerdict flatness_check(const DeformedPresentation& dp);

// tau downstairs minus the tau budget upstairs; raises NEGATIVE_H1 if that
// difference is negative (it would falsify the tau = h1 + b3 identity).
long h1_tangent(const Presentation& p);
long h1_tangent(long tau_down, long tau_up);

} // namespace tjurina
