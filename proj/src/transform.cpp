#include "tjurina/transform.hpp"

#include <future>

namespace tjurina {

namespace {

Ctx local_x_context(const Ctx& any) {
    std::vector<std::string> names = any->vars();
    return RingContext::make({{names, BlockKind::NegDegrevlex}});
}

std::string chart_var_name(int j) { return "s" + std::to_string(j); }

} // namespace

Presentation validate_icmc2(const PolyMatrix& raw) {
    Presentation p;
    p.xctx = local_x_context(raw.ctx());
    p.matrix = canonicalize_presentation(raw.transport(p.xctx));
    p.t = p.matrix.cols();
    p.xvars = p.xctx->vars();
    for (const auto& v : p.xvars)
        if (v.size() >= 2 && (v[0] == 's' || v[0] == 'd') &&
            v.find_first_not_of("0123456789", 1) == std::string::npos)
            throw Error(Errc::InputError,
                        "variable name '" + v + "' is reserved for chart/deformation coordinates");
    p.ideal = maximal_minors_signed(p.matrix);

    // isolatedness: the singular locus germ of V(I) must be at most a point;
    // X_0 has codimension 2, so the Jacobian drops rank on the 2x2 minors
    std::vector<Polynomial> sing = p.ideal;
    PolyMatrix jac = jacobian(p.ideal, p.xvars, p.xctx);
    if (std::min(jac.rows(), jac.cols()) >= 2)
        for (auto& m : minors(jac, 2)) sing.push_back(std::move(m));
    int dim = krull_dim(std_basis(sing, p.xctx));
    p.isolated = dim <= 0;
    if (!p.isolated)
        throw Error(Errc::NotIsolated,
                    "singular locus of the input has dimension " + std::to_string(dim));

    // the (t-1)-minors must cut out at most the origin
    if (p.t >= 2) {
        std::vector<Polynomial> small = minors(p.matrix, p.t - 1);
        bool unit = contains_one(std_basis(small, p.xctx));
        if (!unit) {
            for (const auto& v : p.xvars) {
                if (!radical_membership(Polynomial::variable(p.xctx, v), small, p.xctx))
                    throw Error(Errc::MinorLocusTooBig,
                                "the (t-1)-minor locus is larger than the origin (variable " + v +
                                    ")");
            }
        }
    }
    p.minor_locus_at_origin = true;
    return p;
}

Chart transform_chart_equations(const Presentation& p, int chart_index) {
    if (chart_index < 1 || chart_index > p.t)
        throw Error(Errc::InputError, "chart index out of range");
    Chart c;
    c.index = chart_index;
    for (int j = 1; j <= p.t; ++j)
        if (j != chart_index) c.svars.push_back(chart_var_name(j));
    std::vector<std::pair<std::vector<std::string>, BlockKind>> spec;
    if (!c.svars.empty()) spec.push_back({c.svars, BlockKind::Degrevlex});
    spec.push_back({p.xvars, BlockKind::NegDegrevlex});
    c.ctx = RingContext::make(spec);

    std::vector<Polynomial> s_values;
    for (int j = 1; j <= p.t; ++j) {
        if (j == chart_index) s_values.push_back(Polynomial::constant(c.ctx, 1));
        else s_values.push_back(Polynomial::variable(c.ctx, chart_var_name(j)));
    }
    for (int row = 0; row < p.t + 1; ++row) {
        Polynomial h = Polynomial::zero(c.ctx);
        for (int j = 0; j < p.t; ++j) h += p.matrix.at(row, j).transport(c.ctx) * s_values[j];
        c.equations.push_back(std::move(h));
    }
    for (int j = 1; j < chart_index; ++j)
        c.new_locus_ideal.push_back(Polynomial::variable(c.ctx, chart_var_name(j)));
    return c;
}

PolyMatrix grassmann_chart_matrix(int k, int r, const std::vector<int>& alpha, const Ctx& base) {
    int rows = k - r;
    if (rows <= 0 || rows > k) throw Error(Errc::InputError, "need 0 < k - r <= k");
    if (static_cast<int>(alpha.size()) != rows)
        throw Error(Errc::InputError, "alpha must have k - r column indices");
    std::vector<bool> in_alpha(k, false);
    for (int a : alpha) {
        if (a < 0 || a >= k || in_alpha[a]) throw Error(Errc::InputError, "bad alpha subset");
        in_alpha[a] = true;
    }
    auto fresh_name = [](int i, int j) {
        return "z" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    };
    std::vector<std::string> fresh;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < k; ++j)
            if (!in_alpha[j]) fresh.push_back(fresh_name(i, j));
    std::vector<std::pair<std::vector<std::string>, BlockKind>> spec;
    if (!fresh.empty()) spec.push_back({fresh, BlockKind::Degrevlex});
    for (const auto& blk : base->blocks()) {
        std::vector<std::string> names;
        for (int v : blk.vars) names.push_back(base->var_name(v));
        spec.push_back({names, blk.kind});
    }
    Ctx ctx = RingContext::make(spec);

    PolyMatrix b(rows, k, ctx);
    for (int i = 0; i < rows; ++i) b.at(i, alpha[i]) = Polynomial::constant(ctx, 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < k; ++j)
            if (!in_alpha[j]) b.at(i, j) = Polynomial::variable(ctx, fresh_name(i, j));
    return b;
}

PolyMatrix chart_matrix_codim_one(int t, int chart_index, const Ctx& chart_ctx) {
    if (chart_index < 1 || chart_index > t)
        throw Error(Errc::InputError, "chart index out of range");
    if (t < 2) throw Error(Errc::InputError, "codimension-one chart matrix needs t >= 2");
    PolyMatrix b(t - 1, t, chart_ctx);
    int row = 0;
    for (int j = 1; j <= t; ++j) {
        if (j == chart_index) continue;
        b.at(row, j - 1) = Polynomial::constant(chart_ctx, 1);
        b.at(row, chart_index - 1) = -Polynomial::variable(chart_ctx, chart_var_name(j));
        ++row;
    }
    return b;
}

std::vector<Polynomial> generic_transform_equations(const PolyMatrix& g, int r,
                                                    const PolyMatrix& b) {
    if (b.cols() != g.cols()) throw Error(Errc::ShapeError, "chart matrix column count mismatch");
    int k = g.cols();
    if (b.rows() != k - r) throw Error(Errc::ShapeError, "chart matrix must have k - r rows");
    PolyMatrix stacked = b.stacked(g.transport(b.ctx()));
    return minors(stacked, k - r + 1);
}

std::vector<Polynomial> generic_transform_equations(const PolyMatrix& g, int r,
                                                    const std::vector<int>& alpha) {
    PolyMatrix b = grassmann_chart_matrix(g.cols(), r, alpha, g.ctx());
    return generic_transform_equations(g, r, b);
}

bool transform_equivalence_check(const Presentation& p, int chart_index) {
    Chart chart = transform_chart_equations(p, chart_index);
    PolyMatrix b = chart_matrix_codim_one(p.t, chart_index, chart.ctx);
    std::vector<Polynomial> generic = generic_transform_equations(p.matrix, 1, b);
    StdBasis bh = std_basis(chart.equations, chart.ctx);
    StdBasis bg = std_basis(generic, chart.ctx);
    for (const auto& f : generic)
        if (!is_member(f, bh)) return false;
    for (const auto& h : chart.equations)
        if (!is_member(h, bg)) return false;
    return true;
}

namespace {

// all-global twin of the chart context, for honest point counting
Ctx global_twin(const Ctx& ctx) {
    std::vector<std::string> names = ctx->vars();
    return RingContext::make({{names, BlockKind::Degrevlex}});
}

long new_locus_point_count(const ChartAnalysis& a, const Presentation& p) {
    Ctx g = global_twin(a.chart.ctx);
    std::vector<Polynomial> ideal;
    for (const auto& f : a.singular_ideal) ideal.push_back(f.transport(g));
    // support is inside the exceptional set, so cutting by the x variables
    // keeps exactly the germ's points and makes the count a global one
    for (const auto& v : p.xvars) ideal.push_back(Polynomial::variable(g, v));
    for (const auto& f : a.chart.new_locus_ideal) ideal.push_back(f.transport(g));
    return zero_dim_radical_count(ideal, g);
}

} // namespace

ChartAnalysis singular_locus_transform(const Presentation& p, int chart_index) {
    ChartAnalysis a;
    a.chart = transform_chart_equations(p, chart_index);
    const Ctx& ctx = a.chart.ctx;

    std::vector<std::string> ambient = a.chart.svars;
    ambient.insert(ambient.end(), p.xvars.begin(), p.xvars.end());

    a.singular_ideal = a.chart.equations;
    PolyMatrix jac = jacobian(a.chart.equations, ambient, ctx);
    int c = p.t + 1; // codimension of the transform in the chart
    if (c <= std::min(jac.rows(), jac.cols()))
        for (auto& m : minors(jac, c)) a.singular_ideal.push_back(std::move(m));

    StdBasis b = std_basis(a.singular_ideal, ctx);
    a.dim = krull_dim(b);
    a.isolated = a.dim <= 0;
    a.support_in_exceptional = true;
    if (a.dim >= 0) {
        for (const auto& v : p.xvars) {
            if (!radical_membership(Polynomial::variable(ctx, v), a.singular_ideal, ctx)) {
                a.support_in_exceptional = false;
                break;
            }
        }
    }
    if (a.isolated && a.support_in_exceptional && a.dim >= 0)
        a.point_count = new_locus_point_count(a, p);
    return a;
}

namespace {

// T^1 of the chart complete intersection: free module of rank t+1 modulo the
// ambient-variable columns of the Jacobian and the equations times the basis
// vectors.
void fill_chart_tau(ChartAnalysis& a, const Presentation& p) {
    const Ctx& ctx = a.chart.ctx;
    int rank = p.t + 1;
    std::vector<std::string> ambient = a.chart.svars;
    ambient.insert(ambient.end(), p.xvars.begin(), p.xvars.end());

    std::vector<ModuleElement> gens;
    for (const auto& v : ambient) {
        ModuleElement col(ctx, rank);
        for (int row = 0; row < rank; ++row) col.comp(row) = a.chart.equations[row].derivative(v);
        if (!col.is_zero()) gens.push_back(std::move(col));
    }
    for (const auto& h : a.chart.equations) {
        for (int m = 0; m < rank; ++m) {
            ModuleElement e(ctx, rank);
            e.comp(m) = h;
            if (!e.is_zero()) gens.push_back(std::move(e));
        }
    }

    VdimResult total = vdim(std_basis(gens, ModuleOrder::top(ctx), rank));
    if (!total.finite)
        throw Error(Errc::InfiniteTau,
                    "chart " + std::to_string(a.chart.index) + " has an infinite tau budget");
    a.tau_chart_total = total.value;
    a.tau_new = torsion_part_vdim(gens, a.chart.new_locus_ideal, rank, ctx);
}

} // namespace

TransformAnalysis tau_upstairs(const Presentation& p) {
    TransformAnalysis t;
    std::vector<std::future<ChartAnalysis>> jobs;
    for (int i = 1; i <= p.t; ++i)
        jobs.push_back(
            std::async(std::launch::async, [&p, i]() { return singular_locus_transform(p, i); }));
    for (auto& j : jobs) t.charts.push_back(j.get());

    for (const auto& a : t.charts) {
        if (!a.isolated)
            throw Error(Errc::NonIsolatedTransform,
                        "chart " + std::to_string(a.chart.index) +
                            " has a singular locus of dimension " + std::to_string(a.dim));
        if (!a.support_in_exceptional)
            throw Error(Errc::SupportEscapesExceptional,
                        "chart " + std::to_string(a.chart.index) +
                            " has singular points outside the exceptional set");
    }

    std::vector<std::future<void>> tau_jobs;
    for (auto& a : t.charts)
        tau_jobs.push_back(std::async(std::launch::async, [&a, &p]() { fill_chart_tau(a, p); }));
    for (auto& j : tau_jobs) j.get();

    for (const auto& a : t.charts) {
        t.total_points += a.point_count;
        t.tau_upstairs += a.tau_new;
    }
    return t;
}

BettiReport betti_report(const Presentation& p, bool assume_ade) {
    if (p.t != 2 && p.t != 3)
        throw Error(Errc::WrongType,
                    "topology reports cover t = 2 (and t = 3 as experimental), got t = " +
                        std::to_string(p.t));
    return betti_report_from(p, tau_upstairs(p), assume_ade);
}

BettiReport betti_report_from(const Presentation& p, const TransformAnalysis& t, bool assume_ade) {
    if (p.t != 2 && p.t != 3)
        throw Error(Errc::WrongType,
                    "topology reports cover t = 2 (and t = 3 as experimental), got t = " +
                        std::to_string(p.t));
    BettiReport r;
    r.t = p.t;
    r.tau_up = t.tau_upstairs;
    if (p.t == 2) {
        r.ade_quasihomogeneous_assumed = assume_ade;
        if (assume_ade) {
            r.b3 = t.tau_upstairs;
            r.note = "b3 = sum of Milnor numbers, computed as the tau budget under the "
                     "quasihomogeneous (A-D-E) assumption";
        } else {
            r.note = "b3 = sum of Milnor numbers, not computed; tau budget upstairs = " +
                     std::to_string(t.tau_upstairs);
        }
    } else {
        r.experimental_t3 = true;
        r.ade_quasihomogeneous_assumed = assume_ade;
        r.b3 = t.tau_upstairs - 1;
        r.note = "EXPERIMENTAL: t = 3 correction subtracts one global relation coming from the "
                 "broken exceptional plane; established for the worked 4x3 example only";
    }
    return r;
}

} // namespace tjurina
