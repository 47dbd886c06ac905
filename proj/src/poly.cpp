#include "tjurina/poly.hpp"

#include <cctype>
#include <sstream>

namespace tjurina {

void require_same_ctx(const Polynomial& f, const Polynomial& g) {
    if (f.ctx() != g.ctx())
        throw Error(Errc::ContextMismatch, "operands live in different ring contexts");
}

Polynomial Polynomial::constant(Ctx ctx, const Rat& c) {
    Polynomial p(ctx);
    if (c != 0) p.terms_.push_back({c, Monomial(ctx->nvars())});
    return p;
}

Polynomial Polynomial::variable(const Ctx& ctx, const std::string& name, int exp) {
    int i = ctx->require(name);
    Polynomial p(ctx);
    if (exp < 0) throw Error(Errc::InputError, "negative exponent");
    p.terms_.push_back({Rat(1), ctx->var_mono(i, exp)});
    return p;
}

Polynomial Polynomial::from_term(Ctx ctx, const Rat& c, Monomial m) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.push_back({c, std::move(m)});
    return p;
}

Polynomial Polynomial::from_terms(Ctx ctx, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ctx->compare(a.m, b.m) > 0;
    });
    Polynomial p(std::move(ctx));
    for (auto& t : terms) {
        if (t.c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1;
}

const Term& Polynomial::lt() const {
    if (terms_.empty()) throw Error(Errc::Internal, "leading term of zero polynomial");
    return terms_[0];
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
    return d;
}

int Polynomial::degree_in(const std::vector<int>& vars) const {
    int d = -1;
    for (const auto& t : terms_) {
        int s = 0;
        for (int v : vars) s += t.m.e[v];
        d = std::max(d, s);
    }
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial add_impl(const Polynomial& f, const Polynomial& g, bool negate_g) {
    require_same_ctx(f, g);
    Polynomial r(f.ctx_);
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    const auto& ctx = *f.ctx_;
    while (i < f.terms_.size() && j < g.terms_.size()) {
        int cmp = ctx.compare(f.terms_[i].m, g.terms_[j].m);
        if (cmp > 0) {
            r.terms_.push_back(f.terms_[i++]);
        } else if (cmp < 0) {
            Term t = g.terms_[j++];
            if (negate_g) t.c = -t.c;
            r.terms_.push_back(std::move(t));
        } else {
            Rat c = negate_g ? Rat(f.terms_[i].c - g.terms_[j].c)
                             : Rat(f.terms_[i].c + g.terms_[j].c);
            if (c != 0) r.terms_.push_back({std::move(c), f.terms_[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) {
        Term t = g.terms_[j];
        if (negate_g) t.c = -t.c;
        r.terms_.push_back(std::move(t));
    }
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const { return add_impl(*this, g, false); }
Polynomial Polynomial::operator-(const Polynomial& g) const { return add_impl(*this, g, true); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ctx(*this, g);
    if (is_zero() || g.is_zero()) return Polynomial(ctx_);
    std::vector<Term> out;
    out.reserve(terms_.size() * g.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : g.terms_) out.push_back({a.c * b.c, mono_mul(a.m, b.m)});
    return from_terms(ctx_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (ctx_ != g.ctx_) return false;
    if (terms_.size() != g.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != g.terms_[i].m || terms_[i].c != g.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (c == 0) return Polynomial(ctx_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::mul_term(const Rat& c, const Monomial& m) const {
    if (c == 0) return Polynomial(ctx_);
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.c * c, mono_mul(t.m, m)});
    // multiplying by a fixed monomial preserves the term order
    return r;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw Error(Errc::InputError, "negative exponent");
    Polynomial r = constant(ctx_, 1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int e = t.m.e[var];
        if (e == 0) continue;
        Term d{t.c * e, t.m};
        d.m.e[var] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(ctx_, std::move(out));
}

Polynomial Polynomial::derivative(const std::string& var) const {
    return derivative(ctx_->require(var));
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings,
                                  const Ctx& target) const {
    // power cache per variable keeps repeated exponents cheap
    std::vector<std::vector<Polynomial>> powers(ctx_->nvars());
    std::vector<Polynomial> base(ctx_->nvars(), Polynomial(target));
    for (int v = 0; v < ctx_->nvars(); ++v) {
        auto it = bindings.find(ctx_->var_name(v));
        if (it != bindings.end()) {
            if (it->second.ctx() != target)
                throw Error(Errc::ContextMismatch, "binding for " + ctx_->var_name(v) +
                                                       " lives in the wrong context");
            base[v] = it->second;
        } else {
            if (target->index_of(ctx_->var_name(v)) < 0) {
                base[v] = Polynomial(); // flagged lazily below, only if used
            } else {
                base[v] = Polynomial::variable(target, ctx_->var_name(v));
            }
        }
        powers[v] = {Polynomial::constant(target, 1)};
    }
    Polynomial acc(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.c);
        for (int v = 0; v < ctx_->nvars(); ++v) {
            int e = t.m.e[v];
            if (e == 0) continue;
            if (!base[v].ctx())
                throw Error(Errc::UnknownVariable,
                            "target context lacks variable " + ctx_->var_name(v));
            while (static_cast<int>(powers[v].size()) <= e)
                powers[v].push_back(powers[v].back() * base[v]);
            prod = prod * powers[v][e];
        }
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::map<std::string, Rat>& values, const Ctx& target) const {
    std::map<std::string, Polynomial> b;
    for (const auto& [k, v] : values) b.emplace(k, Polynomial::constant(target, v));
    return substitute(b, target);
}

Polynomial Polynomial::jet(int d, const std::vector<int>& vars) const {
    if (d < 0) throw Error(Errc::InputError, "negative jet degree");
    Polynomial r(ctx_);
    for (const auto& t : terms_) {
        int s = 0;
        if (vars.empty()) {
            s = t.m.total_degree();
        } else {
            for (int v : vars) s += t.m.e[v];
        }
        if (s <= d) r.terms_.push_back(t);
    }
    return r;
}

Polynomial Polynomial::transport(const Ctx& target) const {
    if (ctx_ == target) return *this;
    std::vector<int> map(ctx_->nvars(), -1);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt{t.c, Monomial(target->nvars())};
        for (int v = 0; v < ctx_->nvars(); ++v) {
            if (t.m.e[v] == 0) continue;
            if (map[v] < 0) map[v] = target->require(ctx_->var_name(v));
            nt.m.e[map[v]] = t.m.e[v];
        }
        out.push_back(std::move(nt));
    }
    return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat a = t.c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (t.m.is_one() || a != 1) {
            os << rat_to_string(a);
            printed_coeff = true;
        }
        bool need_star = printed_coeff;
        for (int v = 0; v < ctx_->nvars(); ++v) {
            int e = t.m.e[v];
            if (e == 0) continue;
            if (need_star) os << "*";
            os << ctx_->var_name(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
  public:
    Parser(const std::string& text, const Ctx& ctx) : s_(text), ctx_(ctx) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& s_;
    Ctx ctx_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error(Errc::ParseError,
                    what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        // leading sign on the first term is accepted as a convenience so that
        // printed polynomials always re-parse
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        Polynomial acc = term();
        if (sign < 0) acc = -acc;
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        // implicit multiplication ("2x", "x y") is deliberately rejected:
        // the next character must be an operator, ')' or end of input
        char c = peek();
        if (c != '\0' && c != '+' && c != '-' && c != '*' && c != ')')
            fail("expected operator (implicit multiplication is not allowed)");
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            int n = natural();
            return b.pow(n);
        }
        return b;
    }

    int natural() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected natural number");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 100000) fail("exponent too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail("expected rational, variable or '('");
    }

    Polynomial rational() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Int num(s_.substr(start, pos_ - start));
        Int den(1);
        size_t save = pos_;
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                pos_ = save; // '/' was not ours (no division in the grammar anyway)
                fail("expected natural number after '/'");
            }
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            den = Int(s_.substr(dstart, pos_ - dstart));
            if (den == 0) fail("zero denominator");
        }
        Rat q(num, den);
        q.canonicalize();
        return Polynomial::constant(ctx_, q);
    }

    Polynomial variable() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        int i = ctx_->index_of(name);
        if (i < 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return Polynomial::variable(ctx_, name);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const Ctx& ctx) {
    return Parser(text, ctx).run();
}

} // namespace tjurina
