#pragma once

#include <random>
#include <vector>

#include <tjurina/matrix.hpp>
#include <tjurina/poly.hpp>

namespace testutil {

using namespace tjurina;

inline Ctx global_ctx(std::vector<std::string> vars) {
    return RingContext::make({{std::move(vars), BlockKind::Degrevlex}});
}

inline Ctx local_ctx(std::vector<std::string> vars) {
    return RingContext::make({{std::move(vars), BlockKind::NegDegrevlex}});
}

// global chart variables first, local x variables after: models C{x}[s]
inline Ctx mixed_ctx(std::vector<std::string> global_vars, std::vector<std::string> local_vars) {
    return RingContext::make({{std::move(global_vars), BlockKind::Degrevlex},
                              {std::move(local_vars), BlockKind::NegDegrevlex}});
}

inline Polynomial pp(const std::string& s, const Ctx& ctx) { return parse_polynomial(s, ctx); }

inline std::vector<Polynomial> ppv(const std::vector<std::string>& ss, const Ctx& ctx) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(pp(s, ctx));
    return out;
}

inline PolyMatrix pm(int rows, int cols, const std::vector<std::string>& entries, const Ctx& ctx) {
    return PolyMatrix(rows, cols, ppv(entries, ctx));
}

struct Rnd {
    std::mt19937 rng;
    explicit Rnd(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Monomial monomial(const Ctx& ctx, int maxdeg) {
        Monomial m(ctx->nvars());
        int deg = uniform(0, maxdeg);
        for (int k = 0; k < deg; ++k) m.e[uniform(0, ctx->nvars() - 1)] += 1;
        return m;
    }

    Rat coeff(int bound = 5) {
        int num = uniform(-bound, bound);
        if (num == 0) num = 1;
        int den = uniform(1, 3);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }

    Polynomial poly(const Ctx& ctx, int terms, int maxdeg) {
        std::vector<Term> ts;
        for (int i = 0; i < terms; ++i) ts.push_back({coeff(), monomial(ctx, maxdeg)});
        return Polynomial::from_terms(ctx, std::move(ts));
    }
};

} // namespace testutil
