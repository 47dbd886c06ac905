#include "tjurina/groebner.hpp"

#include <atomic>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace tjurina {

namespace {

std::atomic<bool> g_trace{false};

void trace_line(const std::string& s) {
    if (g_trace.load(std::memory_order_relaxed)) std::fprintf(stderr, "[engine] %s\n", s.c_str());
}

int ecart_of(const ModuleElement& v, const MLead& lead) {
    return v.total_degree() - lead.m.total_degree();
}

// one reducer = element + cached lead + ecart
struct Red {
    const ModuleElement* elem;
    MLead lead;
    int ecart;
};

Red make_red(const ModuleElement& e, const ModuleOrder& ord) {
    auto l = leading_term(e, ord);
    return Red{&e, *l, ecart_of(e, *l)};
}

ModuleElement subtract_multiple(const ModuleElement& h, const MLead& lh, const Red& g) {
    // h - (lc_h/lc_g) * (lm_h/lm_g) * g  : cancels the leading term of h
    Rat c = lh.c / g.lead.c;
    Monomial m = mono_div(lh.m, g.lead.m);
    return h - g.elem->mul_term(c, m);
}

// Mora's weak normal form with ecart selection. Intermediate remainders with
// smaller ecart than every divisor join the reducer set T; this is what makes
// the algorithm terminate for local and mixed orders. The result is a weak
// normal form: unit * f == (module combination) + result.
ModuleElement mora_weak_nf(ModuleElement h, const std::vector<Red>& basis, const ModuleOrder& ord,
                           std::deque<ModuleElement>* scratch, std::vector<Red>* extra) {
    size_t steps = 0;
    while (!h.is_zero()) {
        auto lh = leading_term(h, ord);
        const Red* best = nullptr;
        for (const auto& g : basis) {
            if (g.lead.comp != lh->comp || !mono_divides(g.lead.m, lh->m)) continue;
            if (!best || g.ecart < best->ecart) best = &g;
        }
        for (const auto& g : *extra) {
            if (g.lead.comp != lh->comp || !mono_divides(g.lead.m, lh->m)) continue;
            if (!best || g.ecart < best->ecart) best = &g;
        }
        if (!best) break;
        Red chosen = *best; // copy: the push below may reallocate `extra`
        if (chosen.ecart > ecart_of(h, *lh)) {
            scratch->push_back(h);
            extra->push_back(make_red(scratch->back(), ord));
        }
        h = subtract_multiple(h, *lh, chosen);
        if (++steps % 16 == 0) h = h.primitive_part(); // keep coefficients small
        if (steps % 4096 == 0)
            trace_line("mora: " + std::to_string(steps) + " steps, " +
                       std::to_string(h.term_count()) + " terms, T holds " +
                       std::to_string(extra->size()));
    }
    return h;
}

ModuleElement mora_weak_nf(ModuleElement h, const std::vector<Red>& basis, const ModuleOrder& ord) {
    std::deque<ModuleElement> scratch;
    std::vector<Red> extra;
    return mora_weak_nf(std::move(h), basis, ord, &scratch, &extra);
}

// Classical division with full tail reduction; only valid for global orders.
ModuleElement global_full_nf(ModuleElement h, const std::vector<Red>& basis, const ModuleOrder& ord) {
    ModuleElement result(h.ctx(), h.rank());
    while (!h.is_zero()) {
        auto lh = leading_term(h, ord);
        const Red* red = nullptr;
        for (const auto& g : basis) {
            if (g.lead.comp == lh->comp && mono_divides(g.lead.m, lh->m)) {
                red = &g;
                break;
            }
        }
        if (red) {
            h = subtract_multiple(h, *lh, *red);
        } else {
            ModuleElement t(h.ctx(), h.rank());
            t.comp(lh->comp) = Polynomial::from_term(h.ctx(), lh->c, lh->m);
            result = result + t;
            h = h - t;
        }
    }
    return result;
}

// Weak normal form followed by budgeted tail reduction (the budget matters
// only for non-global orders, where a fully reduced remainder need not exist).
ModuleElement reduce_full(ModuleElement h, const std::vector<Red>& basis, const ModuleOrder& ord,
                          bool global) {
    if (global) return global_full_nf(std::move(h), basis, ord);
    std::deque<ModuleElement> scratch;
    std::vector<Red> extra;
    ModuleElement result(h.ctx(), h.rank());
    int budget = 400;
    while (!h.is_zero() && budget-- > 0) {
        h = mora_weak_nf(std::move(h), basis, ord, &scratch, &extra);
        if (h.is_zero()) break;
        auto lh = leading_term(h, ord);
        ModuleElement t(h.ctx(), h.rank());
        t.comp(lh->comp) = Polynomial::from_term(h.ctx(), lh->c, lh->m);
        result = result + t;
        h = h - t;
    }
    return result + h; // h is zero unless the budget ran out
}

struct Pair {
    int sugar;
    Monomial lcm;
    int comp;
    int i, j;
};

struct PairCmp {
    Ctx ctx;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ctx->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace

void set_engine_trace(bool on) { g_trace.store(on); }
bool engine_trace() { return g_trace.load(); }

StdBasis std_basis(const std::vector<ModuleElement>& input, const ModuleOrder& ord, int rank) {
    const Ctx& ctx = ord.ctx;
    bool global = ctx->is_global();

    StdBasis out;
    out.order = ord;
    out.rank = rank;

    std::vector<ModuleElement> gens;
    for (const auto& g : input) {
        if (g.is_zero()) continue;
        if (g.rank() != rank) throw Error(Errc::ShapeError, "generator rank mismatch");
        if (g.ctx() != ctx) throw Error(Errc::ContextMismatch, "generator context mismatch");
        gens.push_back(g.primitive_part());
    }

    std::vector<Red> reds;
    std::vector<int> sugar;
    reds.reserve(gens.size() * 2);
    // gens may reallocate; store leads separately and re-point after push
    auto repoint = [&]() {
        reds.clear();
        for (const auto& g : gens) reds.push_back(make_red(g, ord));
    };
    repoint();
    for (const auto& g : gens) sugar.push_back(g.total_degree());

    std::set<Pair, PairCmp> queue{PairCmp{ctx}};
    std::set<std::pair<int, int>> done;

    auto push_pair = [&](int i, int j) {
        if (reds[i].lead.comp != reds[j].lead.comp) return;
        Monomial l = mono_lcm(reds[i].lead.m, reds[j].lead.m);
        int s = std::max(sugar[i] + (l.total_degree() - reds[i].lead.m.total_degree()),
                         sugar[j] + (l.total_degree() - reds[j].lead.m.total_degree()));
        queue.insert(Pair{s, std::move(l), reds[i].lead.comp, i, j});
    };

    for (size_t j = 1; j < gens.size(); ++j)
        for (size_t i = 0; i < j; ++i) push_pair(static_cast<int>(i), static_cast<int>(j));

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        done.insert({p.i, p.j});

        // product criterion: only safe for ideals over global orders
        if (global && rank == 1 && mono_coprime(reds[p.i].lead.m, reds[p.j].lead.m)) {
            trace_line("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                       ") skipped: product criterion");
            continue;
        }
        // chain criterion
        bool chained = false;
        for (size_t k = 0; k < gens.size() && !chained; ++k) {
            int ki = static_cast<int>(k);
            if (ki == p.i || ki == p.j) continue;
            if (reds[k].lead.comp != p.comp || !mono_divides(reds[k].lead.m, p.lcm)) continue;
            auto key1 = std::minmax(p.i, ki);
            auto key2 = std::minmax(p.j, ki);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) {
            trace_line("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                       ") skipped: chain criterion");
            continue;
        }

        const Red& a = reds[p.i];
        const Red& b = reds[p.j];
        ModuleElement s = a.elem->mul_term(Rat(1) / a.lead.c, mono_div(p.lcm, a.lead.m)) -
                          b.elem->mul_term(Rat(1) / b.lead.c, mono_div(p.lcm, b.lead.m));
        ModuleElement r = mora_weak_nf(std::move(s), reds, ord);
        if (r.is_zero()) {
            trace_line("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") -> 0");
            continue;
        }
        r = r.primitive_part();
        trace_line("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") -> new element " +
                   std::to_string(gens.size()));
        gens.push_back(std::move(r));
        sugar.push_back(p.sugar);
        repoint();
        int n = static_cast<int>(gens.size()) - 1;
        for (int i = 0; i < n; ++i) push_pair(i, n);
    }

    // minimalize: drop elements whose lead is divisible by another kept lead
    std::vector<bool> drop(gens.size(), false);
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = 0; j < gens.size(); ++j) {
            if (i == j || drop[j]) continue;
            if (reds[j].lead.comp != reds[i].lead.comp) continue;
            if (!mono_divides(reds[j].lead.m, reds[i].lead.m)) continue;
            if (reds[j].lead.m == reds[i].lead.m && j > i) continue; // keep the earlier one
            drop[i] = true;
            break;
        }
    }
    std::vector<ModuleElement> kept;
    for (size_t i = 0; i < gens.size(); ++i)
        if (!drop[i]) kept.push_back(gens[i]);

    // deterministic final order: by lead, largest first
    std::stable_sort(kept.begin(), kept.end(), [&](const ModuleElement& x, const ModuleElement& y) {
        auto lx = leading_term(x, ord), ly = leading_term(y, ord);
        return ord.compare(lx->m, lx->comp, ly->m, ly->comp) > 0;
    });

    // Tail reduction. For global orders the division algorithm gives honest
    // representations, so tails are fully reduced. For local/mixed orders a
    // reduced tail need not exist; we only clean tails that vanish modulo the
    // basis (self included), which keeps every element inside the module.
    for (size_t i = 0; i < kept.size(); ++i) {
        auto lh = leading_term(kept[i], ord);
        ModuleElement lead_part(ctx, rank);
        lead_part.comp(lh->comp) = Polynomial::from_term(ctx, lh->c, lh->m);
        ModuleElement tail = kept[i] - lead_part;
        if (tail.is_zero()) continue;
        if (global) {
            std::vector<Red> others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(make_red(kept[j], ord));
            tail = global_full_nf(std::move(tail), others, ord);
            kept[i] = (lead_part + tail).primitive_part();
        } else {
            std::vector<Red> all;
            for (const auto& g : kept) all.push_back(make_red(g, ord));
            if (mora_weak_nf(tail, all, ord).is_zero())
                kept[i] = lead_part.primitive_part();
        }
    }

    out.gens = std::move(kept);
    out.complete = true;
    return out;
}

StdBasis std_basis(const std::vector<Polynomial>& gens, const Ctx& ctx) {
    std::vector<ModuleElement> v;
    for (const auto& g : gens) {
        if (g.ctx() != ctx) throw Error(Errc::ContextMismatch, "generator context mismatch");
        v.push_back(ModuleElement::from_poly(g));
    }
    return std_basis(v, ModuleOrder::top(ctx), 1);
}

ModuleElement normal_form(const ModuleElement& f, const StdBasis& b) {
    if (!b.complete) throw Error(Errc::Internal, "normal form against incomplete basis");
    std::vector<Red> reds;
    for (const auto& g : b.gens) reds.push_back(make_red(g, b.order));
    return reduce_full(f, reds, b.order, b.order.ctx->is_global());
}

Polynomial normal_form(const Polynomial& f, const StdBasis& b) {
    if (b.rank != 1) throw Error(Errc::ShapeError, "polynomial normal form against module basis");
    return normal_form(ModuleElement::from_poly(f), b).comp(0);
}

bool is_member(const ModuleElement& f, const StdBasis& b) {
    if (!b.complete) throw Error(Errc::Internal, "membership against incomplete basis");
    std::vector<Red> reds;
    for (const auto& g : b.gens) reds.push_back(make_red(g, b.order));
    return mora_weak_nf(f, reds, b.order).is_zero();
}

bool is_member(const Polynomial& f, const StdBasis& b) {
    return is_member(ModuleElement::from_poly(f), b);
}

bool verify_spairs(const StdBasis& b) {
    std::vector<Red> reds;
    for (const auto& g : b.gens) reds.push_back(make_red(g, b.order));
    for (size_t i = 0; i < b.gens.size(); ++i) {
        for (size_t j = i + 1; j < b.gens.size(); ++j) {
            if (reds[i].lead.comp != reds[j].lead.comp) continue;
            Monomial l = mono_lcm(reds[i].lead.m, reds[j].lead.m);
            ModuleElement s =
                reds[i].elem->mul_term(Rat(1) / reds[i].lead.c, mono_div(l, reds[i].lead.m)) -
                reds[j].elem->mul_term(Rat(1) / reds[j].lead.c, mono_div(l, reds[j].lead.m));
            if (!mora_weak_nf(std::move(s), reds, b.order).is_zero()) return false;
        }
    }
    return true;
}

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ULL;
        for (int x : v) h = (h ^ static_cast<size_t>(x + 0x100)) * 1099511628211ULL;
        return h;
    }
};

} // namespace

VdimResult vdim(const StdBasis& b) {
    if (!b.complete) throw Error(Errc::Internal, "vdim of incomplete basis");
    int n = b.order.ctx->nvars();
    std::vector<std::vector<Monomial>> leads(b.rank);
    for (const auto& g : b.gens) {
        auto l = leading_term(g, b.order);
        leads[l->comp].push_back(l->m);
    }
    // finite iff every component has a pure power of every variable among its leads
    for (int c = 0; c < b.rank; ++c) {
        for (int v = 0; v < n; ++v) {
            bool found = false;
            for (const auto& m : leads[c]) {
                bool pure = true;
                for (int w = 0; w < n; ++w)
                    if (w != v && m.e[w] != 0) { pure = false; break; }
                if (pure) { found = true; break; }
            }
            if (!found) return {false, 0};
        }
    }
    long count = 0;
    for (int c = 0; c < b.rank; ++c) {
        auto standard = [&](const Monomial& m) {
            for (const auto& l : leads[c])
                if (mono_divides(l, m)) return false;
            return true;
        };
        Monomial one(n);
        if (!standard(one)) continue;
        std::unordered_set<std::vector<int>, VecHash> seen;
        std::deque<Monomial> work;
        seen.insert(one.e);
        work.push_back(one);
        while (!work.empty()) {
            Monomial m = work.front();
            work.pop_front();
            ++count;
            for (int v = 0; v < n; ++v) {
                Monomial m2 = m;
                m2.e[v] += 1;
                if (!standard(m2)) continue;
                if (seen.insert(m2.e).second) work.push_back(m2);
            }
        }
    }
    return {true, count};
}

int krull_dim(const StdBasis& b) {
    if (b.rank != 1) throw Error(Errc::ShapeError, "krull_dim expects an ideal basis");
    if (!b.complete) throw Error(Errc::Internal, "krull_dim of incomplete basis");
    int n = b.order.ctx->nvars();
    if (n > 22) throw Error(Errc::Internal, "too many variables for dimension search");
    std::vector<uint32_t> supp;
    for (const auto& g : b.gens) {
        auto l = leading_term(g, b.order);
        if (l->m.is_one()) return -1; // unit ideal: empty locus
        uint32_t s = 0;
        for (int v = 0; v < n; ++v)
            if (l->m.e[v] > 0) s |= 1u << v;
        supp.push_back(s);
    }
    int best = 0;
    for (uint32_t set = 0; set < (1u << n); ++set) {
        int size = __builtin_popcount(set);
        if (size <= best) continue;
        bool independent = true;
        for (uint32_t s : supp)
            if ((s & ~set) == 0) { independent = false; break; }
        if (independent) best = size;
    }
    return best;
}

bool contains_one(const StdBasis& b) {
    for (const auto& g : b.gens) {
        auto l = leading_term(g, b.order);
        if (l->m.is_one()) return true;
    }
    return false;
}

bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const Ctx& ctx) {
    if (f.is_zero()) return true;
    Ctx ext = ctx->extended_front("@rad", BlockKind::Degrevlex);
    std::vector<Polynomial> g2;
    for (const auto& g : gens) g2.push_back(g.transport(ext));
    Polynomial z = Polynomial::variable(ext, "@rad");
    g2.push_back(Polynomial::constant(ext, 1) - z * f.transport(ext));
    return contains_one(std_basis(g2, ext));
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens) {
    if (gens.empty()) return {};
    int r = gens[0].rank();
    int m = static_cast<int>(gens.size());
    const Ctx& ctx = gens[0].ctx();
    std::vector<ModuleElement> tagged;
    for (int i = 0; i < m; ++i) {
        if (gens[i].rank() != r) throw Error(Errc::ShapeError, "syzygies: rank mismatch");
        ModuleElement t(ctx, r + m);
        for (int c = 0; c < r; ++c) t.comp(c) = gens[i].comp(c);
        t.comp(r + i) = Polynomial::constant(ctx, 1);
        tagged.push_back(std::move(t));
    }
    StdBasis big = std_basis(tagged, ModuleOrder::pot_elim(ctx, r), r + m);
    std::vector<ModuleElement> out;
    for (const auto& g : big.gens) {
        bool front_zero = true;
        for (int c = 0; c < r; ++c)
            if (!g.comp(c).is_zero()) { front_zero = false; break; }
        if (!front_zero) continue;
        ModuleElement s(ctx, m);
        for (int i = 0; i < m; ++i) s.comp(i) = g.comp(r + i);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens) {
    std::vector<ModuleElement> v;
    for (const auto& g : gens) v.push_back(ModuleElement::from_poly(g));
    return syzygies(v);
}

std::vector<ModuleElement> module_intersect(const std::vector<ModuleElement>& a,
                                            const std::vector<ModuleElement>& b, int rank,
                                            const Ctx& ctx) {
    if (a.empty() || b.empty()) return {};
    std::vector<ModuleElement> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::vector<ModuleElement> out;
    for (const auto& s : syzygies(all)) {
        ModuleElement v(ctx, rank);
        for (size_t i = 0; i < a.size(); ++i) {
            if (s.comp(static_cast<int>(i)).is_zero()) continue;
            v = v + a[i].mul_poly(s.comp(static_cast<int>(i)));
        }
        if (!v.is_zero()) out.push_back(v.primitive_part());
    }
    return out;
}

namespace {

std::vector<ModuleElement> free_module_gens(const Ctx& ctx, int rank) {
    std::vector<ModuleElement> out;
    for (int i = 0; i < rank; ++i) {
        ModuleElement e(ctx, rank);
        e.comp(i) = Polynomial::constant(ctx, 1);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ModuleElement> quotient_by_poly(const std::vector<ModuleElement>& n,
                                            const Polynomial& j, int rank, const Ctx& ctx) {
    if (j.is_zero()) return free_module_gens(ctx, rank);
    std::vector<ModuleElement> list;
    for (int l = 0; l < rank; ++l) {
        ModuleElement e(ctx, rank);
        e.comp(l) = j;
        list.push_back(std::move(e));
    }
    list.insert(list.end(), n.begin(), n.end());
    std::vector<ModuleElement> out;
    for (const auto& s : syzygies(list)) {
        ModuleElement v(ctx, rank);
        bool zero = true;
        for (int l = 0; l < rank; ++l) {
            v.comp(l) = s.comp(l);
            if (!v.comp(l).is_zero()) zero = false;
        }
        if (!zero) out.push_back(v.primitive_part());
    }
    return out;
}

} // namespace

std::vector<ModuleElement> module_quotient(const std::vector<ModuleElement>& n,
                                           const std::vector<Polynomial>& j, int rank,
                                           const Ctx& ctx) {
    if (j.empty()) return free_module_gens(ctx, rank);
    std::vector<ModuleElement> acc = quotient_by_poly(n, j[0], rank, ctx);
    for (size_t k = 1; k < j.size(); ++k)
        acc = module_intersect(acc, quotient_by_poly(n, j[k], rank, ctx), rank, ctx);
    return acc;
}

long torsion_part_vdim(const std::vector<ModuleElement>& n, const std::vector<Polynomial>& j,
                       int rank, const Ctx& ctx) {
    ModuleOrder ord = ModuleOrder::top(ctx);
    VdimResult v0 = vdim(std_basis(n, ord, rank));
    if (!v0.finite) throw Error(Errc::InfiniteTau, "torsion part needs a finite-length quotient");
    std::vector<ModuleElement> cur = n;
    long prev = v0.value;
    for (long guard = 0; guard <= v0.value + 1; ++guard) {
        cur = module_quotient(cur, j, rank, ctx);
        VdimResult v = vdim(std_basis(cur, ord, rank));
        long now = v.finite ? v.value : -1; // quotient can only grow the module
        if (!v.finite)
            throw Error(Errc::Internal, "saturation left the finite-length regime");
        if (now == prev) break;
        prev = now;
    }
    return v0.value - prev;
}

// ---------------------------------------------------------------------------
// univariate helpers and point counting

namespace {

std::vector<Rat> to_dense(const Polynomial& p, int var) {
    std::vector<Rat> c;
    for (const auto& t : p.terms()) {
        for (size_t v = 0; v < t.m.e.size(); ++v)
            if (static_cast<int>(v) != var && t.m.e[v] != 0)
                throw Error(Errc::Internal, "polynomial is not univariate");
        int d = t.m.e[var];
        if (static_cast<int>(c.size()) <= d) c.resize(d + 1, Rat(0));
        c[d] = t.c;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

Polynomial from_dense(const std::vector<Rat>& c, const Ctx& ctx, int var) {
    std::vector<Term> terms;
    for (size_t d = 0; d < c.size(); ++d) {
        if (c[d] == 0) continue;
        Monomial m(ctx->nvars());
        m.e[var] = static_cast<int>(d);
        terms.push_back({c[d], std::move(m)});
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

void make_monic(std::vector<Rat>& c) {
    if (c.empty()) return;
    Rat lead = c.back();
    for (auto& x : c) x /= lead;
}

std::vector<Rat> dense_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    // remainder of a by monic b
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

std::vector<Rat> dense_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (!b.empty() && b.back() == 0) b.pop_back();
    while (!b.empty()) {
        make_monic(b);
        auto r = dense_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

std::vector<Rat> dense_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (!a.empty()) throw Error(Errc::Internal, "exact division left a remainder");
    return q;
}

} // namespace

Polynomial univariate_squarefree_part(const Polynomial& p, int var) {
    auto c = to_dense(p, var);
    if (c.size() <= 2) return p; // constants and linears are squarefree
    std::vector<Rat> dc(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) dc[i - 1] = c[i] * static_cast<long>(i);
    auto g = dense_gcd(c, dc);
    if (g.size() <= 1) return p;
    auto q = dense_div_exact(std::move(c), g);
    return from_dense(q, p.ctx(), var);
}

std::optional<Polynomial> eliminant(const std::vector<Polynomial>& gens, const Ctx& ctx,
                                    const std::string& var) {
    int target = ctx->require(var);
    std::vector<std::string> others;
    for (int v = 0; v < ctx->nvars(); ++v)
        if (v != target) others.push_back(ctx->var_name(v));
    Ctx elim = RingContext::make({{others, BlockKind::Degrevlex}, {{var}, BlockKind::Degrevlex}});
    std::vector<Polynomial> g2;
    for (const auto& g : gens) g2.push_back(g.transport(elim));
    StdBasis b = std_basis(g2, elim);
    int vi = elim->require(var);
    std::optional<Polynomial> best;
    for (const auto& g : b.gens) {
        const Polynomial& p = g.comp(0);
        bool pure = true;
        for (const auto& t : p.terms())
            for (size_t v = 0; v < t.m.e.size(); ++v)
                if (static_cast<int>(v) != vi && t.m.e[v] != 0) { pure = false; break; }
        if (!pure) continue;
        if (!best || p.total_degree() < best->total_degree()) best = p;
    }
    if (!best) return std::nullopt;
    return best->transport(ctx);
}

long zero_dim_radical_count(const std::vector<Polynomial>& gens, const Ctx& ctx) {
    if (!ctx->is_global())
        throw Error(Errc::Internal, "point counting requires a global order context");
    StdBasis b = std_basis(gens, ctx);
    if (contains_one(b)) return 0;
    if (krull_dim(b) > 0)
        throw Error(Errc::PositiveDimensional, "point counting requires a zero-dimensional ideal");
    std::vector<Polynomial> cur = gens;
    for (int v = 0; v < ctx->nvars(); ++v) {
        auto el = eliminant(cur, ctx, ctx->var_name(v));
        if (!el)
            throw Error(Errc::Internal, "missing eliminant for a zero-dimensional ideal");
        Polynomial sq = univariate_squarefree_part(*el, v);
        if (sq.total_degree() < el->total_degree()) cur.push_back(sq);
    }
    VdimResult v = vdim(std_basis(cur, ctx));
    if (!v.finite) throw Error(Errc::Internal, "radical of a zero-dimensional ideal must be finite");
    return v.value;
}

} // namespace tjurina
