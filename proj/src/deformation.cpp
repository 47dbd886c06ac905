#include "tjurina/deformation.hpp"

namespace tjurina {

namespace {

// [s1..st global][matrix variables local]: the ring C{x}[s] with homogeneous
// s coordinates (no chart picked)
Ctx homogeneous_s_ctx(const std::vector<std::string>& xvars, int t) {
    std::vector<std::string> svars;
    for (int j = 1; j <= t; ++j) svars.push_back("s" + std::to_string(j));
    return RingContext::make(
        {{svars, BlockKind::Degrevlex}, {xvars, BlockKind::NegDegrevlex}});
}

std::vector<Polynomial> rows_times_s(const PolyMatrix& m, const Ctx& ctx) {
    int t = m.cols();
    std::vector<Polynomial> h;
    for (int row = 0; row < m.rows(); ++row) {
        Polynomial acc = Polynomial::zero(ctx);
        for (int j = 0; j < t; ++j)
            acc += m.at(row, j).transport(ctx) *
                   Polynomial::variable(ctx, "s" + std::to_string(j + 1));
        h.push_back(std::move(acc));
    }
    return h;
}

} // namespace

DeformedPresentation make_deformed(const PolyMatrix& m, const std::vector<std::string>& def_params) {
    DeformedPresentation dp;
    dp.def_params = def_params;

    std::vector<std::string> xvars;
    for (const auto& v : m.ctx()->vars()) {
        if (std::find(def_params.begin(), def_params.end(), v) == def_params.end())
            xvars.push_back(v);
    }
    for (const auto& e : def_params)
        if (m.ctx()->index_of(e) < 0)
            throw Error(Errc::UnknownVariable, "deformation parameter " + e + " not in context");

    std::vector<std::string> all = xvars;
    all.insert(all.end(), def_params.begin(), def_params.end());
    dp.xe_ctx = RingContext::make({{all, BlockKind::NegDegrevlex}});
    dp.matrix = canonicalize_presentation(m.transport(dp.xe_ctx));

    // base presentation at eps = 0
    Ctx xonly = RingContext::make({{xvars, BlockKind::NegDegrevlex}});
    std::map<std::string, Rat> zero;
    for (const auto& e : def_params) zero[e] = Rat(0);
    PolyMatrix base = dp.matrix.map_entries(
        [&](const Polynomial& f) { return f.substitute(zero, xonly); });
    dp.base = validate_icmc2(base);
    return dp;
}

T1Result t1_downstairs(const Presentation& p) {
    const Ctx& ctx = p.xctx;
    int t = p.t;
    int rank = (t + 1) * t; // matrix positions, row major

    auto flat = [&](const PolyMatrix& m) {
        ModuleElement v(ctx, rank);
        for (int r = 0; r < t + 1; ++r)
            for (int c = 0; c < t; ++c) v.comp(r * t + c) = m.at(r, c);
        return v;
    };

    std::vector<ModuleElement> gens;
    // J_M: the partial derivative matrices
    for (const auto& x : p.xvars) {
        PolyMatrix d = p.matrix.map_entries([&](const Polynomial& f) { return f.derivative(x); });
        ModuleElement v = flat(d);
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    // Im(g), left part: E_ij * M puts row j of M into row i
    for (int i = 0; i < t + 1; ++i) {
        for (int j = 0; j < t + 1; ++j) {
            ModuleElement v(ctx, rank);
            for (int c = 0; c < t; ++c) v.comp(i * t + c) = p.matrix.at(j, c);
            if (!v.is_zero()) gens.push_back(std::move(v));
        }
    }
    // Im(g), right part: M * E_ij puts column i of M into column j
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            ModuleElement v(ctx, rank);
            for (int r = 0; r < t + 1; ++r) v.comp(r * t + j) = p.matrix.at(r, i);
            if (!v.is_zero()) gens.push_back(std::move(v));
        }
    }

    StdBasis b = std_basis(gens, ModuleOrder::top(ctx), rank);
    VdimResult v = vdim(b);
    if (!v.finite)
        throw Error(Errc::InfiniteTau, "T^1 is infinite dimensional (input not isolated?)");

    // standard monomials, gathered the same way vdim counts them
    T1Result out;
    out.tau = v.value;
    std::vector<std::vector<Monomial>> leads(rank);
    for (const auto& g : b.gens) {
        auto l = leading_term(g, b.order);
        leads[l->comp].push_back(l->m);
    }
    int n = ctx->nvars();
    for (int comp = 0; comp < rank; ++comp) {
        auto standard = [&](const Monomial& m) {
            for (const auto& l : leads[comp])
                if (mono_divides(l, m)) return false;
            return true;
        };
        std::vector<Monomial> stack{Monomial(n)};
        std::vector<Monomial> found;
        if (!standard(stack[0])) continue;
        // depth-first enumeration with dedup
        std::vector<std::vector<int>> seen;
        while (!stack.empty()) {
            Monomial m = stack.back();
            stack.pop_back();
            if (std::find(seen.begin(), seen.end(), m.e) != seen.end()) continue;
            seen.push_back(m.e);
            found.push_back(m);
            for (int var = 0; var < n; ++var) {
                Monomial m2 = m;
                m2.e[var] += 1;
                if (standard(m2)) stack.push_back(m2);
            }
        }
        std::sort(found.begin(), found.end(), [&](const Monomial& a, const Monomial& b2) {
            return ctx->compare(a, b2) > 0;
        });
        for (const auto& m : found) out.basis.emplace_back(comp / t, comp % t, m);
    }
    if (static_cast<long>(out.basis.size()) != out.tau)
        throw Error(Errc::Internal, "standard monomial enumeration disagrees with vdim");
    return out;
}

DeformedPresentation semiuniversal_matrix(const Presentation& p, const T1Result& t1) {
    std::vector<std::string> dvars;
    for (long i = 1; i <= t1.tau; ++i) dvars.push_back("d" + std::to_string(i));
    std::vector<std::string> all = p.xvars;
    all.insert(all.end(), dvars.begin(), dvars.end());
    Ctx ctx = RingContext::make({{all, BlockKind::NegDegrevlex}});

    PolyMatrix m = p.matrix.transport(ctx);
    for (size_t i = 0; i < t1.basis.size(); ++i) {
        const auto& [row, col, mono] = t1.basis[i];
        Monomial lifted(ctx->nvars());
        for (int v = 0; v < p.xctx->nvars(); ++v)
            lifted.e[ctx->require(p.xctx->var_name(v))] = mono.e[v];
        Polynomial bump = Polynomial::from_term(ctx, Rat(1), lifted) *
                          Polynomial::variable(ctx, dvars[i]);
        m.at(row, col) = m.at(row, col) + bump;
    }

    DeformedPresentation dp;
    dp.matrix = m;
    dp.xe_ctx = ctx;
    dp.def_params = dvars;
    dp.base = p;
    return dp;
}

ModuleElement lambda_map(const PolyMatrix& perturbation, const Ctx& s_ctx) {
    int rank = perturbation.rows();
    int t = perturbation.cols();
    ModuleElement out(s_ctx, rank);
    for (int i = 0; i < rank; ++i) {
        Polynomial acc = Polynomial::zero(s_ctx);
        for (int j = 0; j < t; ++j)
            acc += perturbation.at(i, j).transport(s_ctx) *
                   Polynomial::variable(s_ctx, "s" + std::to_string(j + 1));
        out.comp(i) = std::move(acc);
    }
    return out;
}

bool lambda_identity_check(const Presentation& p) {
    int t = p.t;
    Ctx ctx = homogeneous_s_ctx(p.xvars, t);
    std::vector<Polynomial> h = rows_times_s(p.matrix, ctx);

    // Lambda(dM/dx_v) = dH/dx_v
    for (const auto& x : p.xvars) {
        PolyMatrix dm = p.matrix.map_entries([&](const Polynomial& f) { return f.derivative(x); });
        ModuleElement lhs = lambda_map(dm, ctx);
        for (int row = 0; row < t + 1; ++row)
            if (lhs.comp(row) != h[row].derivative(x)) return false;
    }
    // Lambda(M E_ij) = s_j dH/ds_i  (M E_ij copies column i of M into column j)
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            PolyMatrix me(t + 1, t, p.xctx);
            for (int r = 0; r < t + 1; ++r) me.at(r, j) = p.matrix.at(r, i);
            ModuleElement lhs = lambda_map(me, ctx);
            Polynomial sj = Polynomial::variable(ctx, "s" + std::to_string(j + 1));
            for (int row = 0; row < t + 1; ++row) {
                Polynomial rhs = sj * h[row].derivative("s" + std::to_string(i + 1));
                if (lhs.comp(row) != rhs) return false;
            }
        }
    }
    // Lambda(E_ij M) = H_j e_i  (E_ij M puts row j of M into row i)
    for (int i = 0; i < t + 1; ++i) {
        for (int j = 0; j < t + 1; ++j) {
            PolyMatrix em(t + 1, t, p.xctx);
            for (int c = 0; c < t; ++c) em.at(i, c) = p.matrix.at(j, c);
            ModuleElement lhs = lambda_map(em, ctx);
            for (int row = 0; row < t + 1; ++row) {
                if (row == i) {
                    if (lhs.comp(row) != h[j]) return false;
                } else if (!lhs.comp(row).is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

Chart family_transform(const DeformedPresentation& dp, int chart_index) {
    int t = dp.matrix.cols();
    if (chart_index < 1 || chart_index > t)
        throw Error(Errc::InputError, "chart index out of range");
    Chart c;
    c.index = chart_index;
    for (int j = 1; j <= t; ++j)
        if (j != chart_index) c.svars.push_back("s" + std::to_string(j));
    std::vector<std::string> locals = dp.xe_ctx->vars(); // x then eps, one local block
    std::vector<std::pair<std::vector<std::string>, BlockKind>> spec;
    if (!c.svars.empty()) spec.push_back({c.svars, BlockKind::Degrevlex});
    spec.push_back({locals, BlockKind::NegDegrevlex});
    c.ctx = RingContext::make(spec);

    for (int row = 0; row < t + 1; ++row) {
        Polynomial h = Polynomial::zero(c.ctx);
        for (int j = 0; j < t; ++j) {
            Polynomial sj = (j + 1 == chart_index)
                                ? Polynomial::constant(c.ctx, 1)
                                : Polynomial::variable(c.ctx, "s" + std::to_string(j + 1));
            h += dp.matrix.at(row, j).transport(c.ctx) * sj;
        }
        c.equations.push_back(std::move(h));
    }
    for (int j = 1; j < chart_index; ++j)
        c.new_locus_ideal.push_back(Polynomial::variable(c.ctx, "s" + std::to_string(j)));
    return c;
}

FiberResult fiber_smoothness(const DeformedPresentation& dp, const std::vector<Rat>& eps) {
    if (eps.size() != dp.def_params.size())
        throw Error(Errc::InputError, "expected " + std::to_string(dp.def_params.size()) +
                                          " deformation parameter values");
    FiberResult out;
    out.ctx = RingContext::make({{dp.base.xvars, BlockKind::Degrevlex}});
    std::map<std::string, Rat> values;
    for (size_t i = 0; i < eps.size(); ++i) values[dp.def_params[i]] = eps[i];

    PolyMatrix fiber = dp.matrix.map_entries(
        [&](const Polynomial& f) { return f.substitute(values, out.ctx); });
    std::vector<Polynomial> ideal = maximal_minors_signed(fiber);
    out.singular_ideal = ideal;
    PolyMatrix jac = jacobian(ideal, dp.base.xvars, out.ctx);
    if (std::min(jac.rows(), jac.cols()) >= 2)
        for (auto& m : minors(jac, 2)) out.singular_ideal.push_back(std::move(m));

    StdBasis b = std_basis(out.singular_ideal, out.ctx);
    out.smooth = contains_one(b);
    if (!out.smooth && krull_dim(b) <= 0)
        out.point_count = zero_dim_radical_count(out.singular_ideal, out.ctx);
    return out;
}

const char* flat_status_name(FlatStatus s) {
    switch (s) {
        case FlatStatus::FlatByDimension: return "FLAT_BY_DIMENSION";
        case FlatStatus::FlatByRelationLifting: return "FLAT_BY_RELATION_LIFTING";
        case FlatStatus::NotFlat: return "NOT_FLAT";
        case FlatStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

FlatnessVerdict flatness_check(const DeformedPresentation& dp) {
    FlatnessVerdict out;
    const Presentation& base = dp.base;
    int t = base.t;

    // dimension guard from the flatness proposition: positive-dimensional
    // ICMC2 of type t <= n+1 always yields a flat modification in family
    int n_dim = krull_dim(std_basis(base.ideal, base.xctx));
    if (n_dim > 0 && t <= n_dim + 1) {
        out.status = FlatStatus::FlatByDimension;
        out.notes = "dim X_0 = " + std::to_string(n_dim) + " > 0 and t = " + std::to_string(t) +
                    " <= dim + 1";
        return out;
    }

    // relations of the special fiber versus Koszul + the maximal-minors relation
    Ctx hs = homogeneous_s_ctx(base.xvars, t);
    out.relation_ctx = hs;
    std::vector<Polynomial> h = rows_times_s(base.matrix, hs);
    std::vector<ModuleElement> syz0 = syzygies(h);

    std::vector<ModuleElement> reference;
    for (int i = 0; i < t + 1; ++i) {
        for (int j = i + 1; j < t + 1; ++j) {
            ModuleElement k(hs, t + 1);
            k.comp(i) = h[j];
            k.comp(j) = -h[i];
            reference.push_back(std::move(k));
        }
    }
    ModuleElement minors_rel(hs, t + 1);
    for (int i = 0; i < t + 1; ++i) minors_rel.comp(i) = base.ideal[i].transport(hs);
    reference.push_back(minors_rel);

    StdBasis ref_basis = std_basis(reference, ModuleOrder::top(hs), t + 1);
    std::vector<ModuleElement> outside;
    for (const auto& s : syz0)
        if (!is_member(s, ref_basis)) outside.push_back(s);
    if (outside.empty()) {
        out.status = FlatStatus::FlatByRelationLifting;
        out.notes = "all special-fiber relations lie in the Koszul + maximal-minors module";
        return out;
    }

    // direct lift test: relations of the family, specialized to eps = 0
    std::vector<std::string> locals = dp.xe_ctx->vars();
    std::vector<std::string> svars;
    for (int j = 1; j <= t; ++j) svars.push_back("s" + std::to_string(j));
    Ctx fam = RingContext::make(
        {{svars, BlockKind::Degrevlex}, {locals, BlockKind::NegDegrevlex}});
    std::vector<Polynomial> hfam = rows_times_s(dp.matrix, fam);
    std::vector<ModuleElement> syz_fam = syzygies(hfam);

    std::map<std::string, Rat> zero;
    for (const auto& e : dp.def_params) zero[e] = Rat(0);
    std::vector<ModuleElement> lifted;
    for (const auto& s : syz_fam) {
        ModuleElement l(hs, t + 1);
        bool nonzero = false;
        for (int i = 0; i < t + 1; ++i) {
            l.comp(i) = s.comp(i).substitute(zero, hs);
            nonzero = nonzero || !l.comp(i).is_zero();
        }
        if (nonzero) lifted.push_back(std::move(l));
    }
    StdBasis lift_basis = std_basis(lifted, ModuleOrder::top(hs), t + 1);

    for (const auto& s : outside) {
        if (!is_member(s, lift_basis)) {
            out.status = FlatStatus::NotFlat;
            // canonical witness: reduce modulo the liftable reference module
            out.witness = normal_form(s, ref_basis).primitive_part();
            out.notes = "a special-fiber relation does not lift along the deformation";
            return out;
        }
    }
    out.status = FlatStatus::Inconclusive;
    out.notes = "stray special-fiber relations exist but all lift; the Koszul criterion is only "
                "sufficient";
    return out;
}

long h1_tangent(long tau_down, long tau_up) {
    if (tau_down < tau_up)
        throw Error(Errc::NegativeH1,
                    "tau downstairs " + std::to_string(tau_down) + " < tau upstairs " +
                        std::to_string(tau_up) + "; this would falsify tau = h1 + b3");
    return tau_down - tau_up;
}

long h1_tangent(const Presentation& p) {
    long down = t1_downstairs(p).tau;
    long up = tau_upstairs(p).tau_upstairs;
    return h1_tangent(down, up);
}

} // namespace tjurina
