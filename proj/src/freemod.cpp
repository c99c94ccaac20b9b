#include "mixmult/freemod.hpp"

#include "mixmult/error.hpp"

namespace mixmult {

ModuleElement::ModuleElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
    coords_.assign(rank, Polynomial(ring_));
}

ModuleElement ModuleElement::from_coords(std::vector<Polynomial> coords) {
    require(!coords.empty(), "BadModuleElement", "rank zero element");
    ModuleElement v;
    v.ring_ = coords.front().ring();
    for (const auto& p : coords)
        require(same_ring(p.ring(), v.ring_), "MixedRing", "coordinates from different rings");
    v.coords_ = std::move(coords);
    return v;
}

bool ModuleElement::is_zero() const {
    for (const auto& p : coords_)
        if (!p.is_zero()) return false;
    return true;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r(*this);
    for (auto& p : r.coords_) p = -p;
    return r;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    require(rank() == o.rank(), "RankMismatch", "module element addition");
    for (std::size_t e = 0; e < coords_.size(); ++e) coords_[e] += o.coords_[e];
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) { return *this += (-o); }

ModuleElement ModuleElement::scaled(const Scalar& c) const {
    ModuleElement r(*this);
    for (auto& p : r.coords_) p = p.scaled(c);
    return r;
}

ModuleElement ModuleElement::times_term(const Monomial& m, const Scalar& c) const {
    ModuleElement r(*this);
    for (auto& p : r.coords_) p = p.times_term(m, c);
    return r;
}

ModuleElement ModuleElement::times(const Polynomial& p) const {
    ModuleElement r(ring_, rank());
    for (std::size_t e = 0; e < coords_.size(); ++e) r.coords_[e] = coords_[e] * p;
    return r;
}

std::optional<MultiDegree> ModuleElement::homogeneous_degree(const FreeModuleSpec& spec) const {
    std::optional<MultiDegree> deg;
    for (std::size_t e = 0; e < coords_.size(); ++e) {
        if (coords_[e].is_zero()) continue;
        auto d = coords_[e].homogeneous_degree();
        if (!d) return std::nullopt;
        MultiDegree total = *d + spec.shifts[e];
        if (deg && *deg != total) return std::nullopt;
        deg = total;
    }
    return deg;
}

std::string ModuleElement::str() const {
    std::string s = "(";
    for (std::size_t e = 0; e < coords_.size(); ++e) {
        if (e) s += ", ";
        s += coords_[e].str();
    }
    return s + ")";
}

ModuleTerm leading_term(const ModuleElement& v, const ModuleOrder& order) {
    // Within one coordinate the order restricts to plain grevlex, so each
    // coordinate's first term is its best candidate.
    bool found = false;
    ModuleTerm cur;
    for (std::size_t e = 0; e < v.rank(); ++e) {
        if (v.coord(e).is_zero()) continue;
        const Term& t = v.coord(e).leading();
        ModuleTerm mt{e, t.mono, t.coeff};
        if (!found || order.cmp(mt, cur) > 0) {
            cur = std::move(mt);
            found = true;
        }
    }
    require(found, "ZeroElement", "leading term of zero element");
    return cur;
}

ModuleElement make_term_element(const RingPtr& ring, std::size_t rank, const ModuleTerm& t) {
    ModuleElement v(ring, rank);
    std::vector<Polynomial> coords = v.coords();
    coords[t.pos] = Polynomial::from_terms(ring, {Term{t.mono, t.coeff}});
    return ModuleElement::from_coords(std::move(coords));
}

} // namespace mixmult
