#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tjurina/groebner.hpp"
#include "tjurina/matrix.hpp"

namespace tjurina {

// Validated ICMC2 input: canonical (t+1) x t presentation matrix over a local
// x-context together with its Hilbert-Burch ideal.
struct Presentation {
    PolyMatrix matrix;             // canonical, entries in the maximal ideal
    int t = 0;                     // Cohen-Macaulay type
    Ctx xctx;                      // all x variables, one local block
    std::vector<std::string> xvars;
    std::vector<Polynomial> ideal; // signed maximal minors, (delta)*M = 0
    bool isolated = false;
    bool minor_locus_at_origin = false;
};

// Canonicalizes, computes the ideal and checks both validity conditions:
// the singular locus germ has dimension <= 0 (NOT_ISOLATED otherwise) and the
// (t-1)-minors vanish at most at the origin (MINOR_LOCUS_TOO_BIG otherwise).
Presentation validate_icmc2(const PolyMatrix& raw);

// Affine chart s_i != 0 of the exceptional P^(t-1). Chart variables are the
// dehomogenized s_j, j != i; the "new locus" ideal (s_j : j < i) assigns every
// point of P^(t-1) to exactly one chart.
struct Chart {
    int index = 1; // 1-based
    Ctx ctx;       // [chart s-variables, global][x variables, local]
    std::vector<std::string> svars;
    std::vector<Polynomial> equations;        // t+1 chart equations M*s, s_i = 1
    std::vector<Polynomial> new_locus_ideal;  // (s_j : j < i) in ctx
};

Chart transform_chart_equations(const Presentation& p, int chart_index);

// (k-r) x k matrix with the identity in the columns alpha (0-based) and fresh
// global chart variables z<row>_<col> elsewhere; the fresh variables extend
// `base` as a leading global block.
PolyMatrix grassmann_chart_matrix(int k, int r, const std::vector<int>& alpha, const Ctx& base);

// Codimension-one convention of the exceptional P^(t-1): row for each j != i
// carries 1 in column j and -s_j in column i (chart_ctx must hold the s_j).
PolyMatrix chart_matrix_codim_one(int t, int chart_index, const Ctx& chart_ctx);

// The (k-r+1)-minors of the stacked matrix (B over G).
std::vector<Polynomial> generic_transform_equations(const PolyMatrix& g, int r,
                                                    const PolyMatrix& b);
// Convenience: builds B via grassmann_chart_matrix over g's context.
std::vector<Polynomial> generic_transform_equations(const PolyMatrix& g, int r,
                                                    const std::vector<int>& alpha);

// Ideal equality (two-way membership) between the generic minor construction
// and the dehomogenized linear system on one chart.
bool transform_equivalence_check(const Presentation& p, int chart_index);

struct ChartAnalysis {
    Chart chart;
    std::vector<Polynomial> singular_ideal; // (H) + (t+1)-minors of Jac(H)
    int dim = 0;                            // germ dimension along the exceptional set
    bool isolated = false;                  // dim <= 0
    bool support_in_exceptional = false;    // every x_i in the radical
    long point_count = 0;                   // reduced points on the chart's new locus
    long tau_chart_total = 0;               // vdim of the chart T^1 module
    long tau_new = 0;                       // its part supported on the new locus
};

// Singular locus of the transform on one chart: equations plus the maximal
// minors of the Jacobian (the transform is a local complete intersection of
// codimension t+1 in the chart). tau fields are filled by tau_upstairs.
ChartAnalysis singular_locus_transform(const Presentation& p, int chart_index);

struct TransformAnalysis {
    std::vector<ChartAnalysis> charts;
    long total_points = 0;
    long tau_upstairs = 0;
};

// Per chart: T^1 of the complete intersection as coker(Jac columns + H*F),
// counted with the mixed order and restricted to the chart's new locus so
// nothing is counted twice. Requires every chart isolated with support inside
// the exceptional set.
TransformAnalysis tau_upstairs(const Presentation& p);

struct BettiReport {
    int t = 2;
    long b0 = 1, b1 = 0, b2 = 1;
    std::optional<long> b3;    // absent when mu = tau is not assumed
    long tau_up = 0;
    bool ade_quasihomogeneous_assumed = true;
    bool experimental_t3 = false;
    std::string note;
};

// Vanishing topology of the smoothing: (1, 0, 1, sum of Milnor numbers).
// b3 is reported through tau_up under the quasihomogeneous (A-D-E) assumption
// flag; t = 3 inputs get the experimental corrected value tau_up - 1.
BettiReport betti_report(const Presentation& p, bool assume_ade = true);
BettiReport betti_report_from(const Presentation& p, const TransformAnalysis& t, bool assume_ade);

} // namespace tjurina
