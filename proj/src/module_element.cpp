#include "tjurina/module_element.hpp"

#include <sstream>

namespace tjurina {

ModuleElement::ModuleElement(std::vector<Polynomial> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw Error(Errc::ShapeError, "module element needs positive rank");
    ctx_ = comps_[0].ctx();
    for (const auto& p : comps_)
        if (p.ctx() != ctx_) throw Error(Errc::ContextMismatch, "module element components in mixed contexts");
}

ModuleElement ModuleElement::from_poly(const Polynomial& p) {
    return ModuleElement({p});
}

bool ModuleElement::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

int ModuleElement::total_degree() const {
    int d = -1;
    for (const auto& p : comps_) d = std::max(d, p.total_degree());
    return d;
}

size_t ModuleElement::term_count() const {
    size_t n = 0;
    for (const auto& p : comps_) n += p.terms().size();
    return n;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    if (rank() != o.rank()) throw Error(Errc::ShapeError, "module rank mismatch");
    ModuleElement r(ctx_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    if (rank() != o.rank()) throw Error(Errc::ShapeError, "module rank mismatch");
    ModuleElement r(ctx_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
    return r;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r(ctx_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = -comps_[i];
    return r;
}

ModuleElement ModuleElement::scaled(const Rat& c) const {
    ModuleElement r(ctx_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i].scaled(c);
    return r;
}

ModuleElement ModuleElement::mul_term(const Rat& c, const Monomial& m) const {
    ModuleElement r(ctx_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i].mul_term(c, m);
    return r;
}

ModuleElement ModuleElement::mul_poly(const Polynomial& p) const {
    ModuleElement r(ctx_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] * p;
    return r;
}

ModuleElement ModuleElement::primitive_part() const {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& p : comps_) {
        for (const auto& t : p.terms()) {
            num_gcd = gcd(num_gcd, Int(t.c.get_num()));
            den_lcm = lcm(den_lcm, Int(t.c.get_den()));
        }
    }
    if (num_gcd == 0) return *this;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (const auto& p : comps_) {
        if (p.is_zero()) continue;
        if (p.terms()[0].c < 0) scale = -scale;
        break;
    }
    return scaled(scale);
}

std::string ModuleElement::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        if (any) os << " + ";
        os << "(" << comps_[i].to_string() << ")*e" << (i + 1);
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

std::optional<MLead> leading_term(const ModuleElement& v, const ModuleOrder& ord) {
    std::optional<MLead> best;
    for (int i = 0; i < v.rank(); ++i) {
        if (v.comp(i).is_zero()) continue;
        const Term& t = v.comp(i).lt();
        if (!best || ord.compare(t.m, i, best->m, best->comp) > 0)
            best = MLead{t.c, t.m, i};
    }
    return best;
}

} // namespace tjurina
