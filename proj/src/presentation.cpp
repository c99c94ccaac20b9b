#include "mixmult/presentation.hpp"

#include <algorithm>

#include "mixmult/error.hpp"

namespace mixmult {

Presentation::Presentation(RingPtr ring, FreeModuleSpec ambient,
                           std::vector<ModuleElement> relations)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), rel_gens_(std::move(relations)) {
    for (const auto& s : ambient_.shifts)
        require(s.nonneg() && s.dims() == ring_->dims(), "BadShift",
                "ambient shifts must be non-negative multidegrees");
    for (const auto& g : rel_gens_) {
        require(g.rank() == ambient_.rank(), "RankMismatch", "relation rank vs ambient");
        require(g.is_zero() || g.homogeneous_degree(ambient_).has_value(), "NotHomogeneous",
                "relation generators must be homogeneous");
    }
}

Presentation Presentation::free_module(RingPtr ring, std::size_t rank) {
    FreeModuleSpec spec = FreeModuleSpec::plain(rank, ring->dims());
    return Presentation(std::move(ring), std::move(spec), {});
}

Presentation Presentation::cyclic_quotient(const RingPtr& ring,
                                           const std::vector<Polynomial>& ideal_gens) {
    FreeModuleSpec spec = FreeModuleSpec::plain(1, ring->dims());
    std::vector<ModuleElement> rels;
    for (const auto& g : ideal_gens) {
        require(g.is_homogeneous(), "NotHomogeneous", "ideal generators must be homogeneous");
        if (!g.is_zero()) rels.push_back(ModuleElement::from_coords({g}));
    }
    return Presentation(ring, std::move(spec), std::move(rels));
}

Presentation Presentation::zero_module(const RingPtr& ring) {
    return cyclic_quotient(ring,
                           {Polynomial::constant(ring, Scalar::one(ring->characteristic()))});
}

const GroebnerBasis& Presentation::relations() const {
    std::call_once(lazy_->flag, [this] { lazy_->gb = buchberger(rel_gens_, ambient_); });
    return lazy_->gb;
}

bool Presentation::is_zero_module() const {
    const GroebnerBasis& gb = relations();
    std::vector<bool> unit(ambient_.rank(), false);
    for (const auto& lt : gb.leads)
        if (lt.mono.is_one()) unit[lt.pos] = true;
    for (bool u : unit)
        if (!u) return false;
    return true;
}

std::vector<std::pair<std::size_t, Monomial>> Presentation::piece_basis(
    const MultiDegree& n) const {
    const GroebnerBasis& gb = relations();
    std::vector<std::pair<std::size_t, Monomial>> out;
    for (std::size_t e = 0; e < ambient_.rank(); ++e) {
        MultiDegree u = n - ambient_.shifts[e];
        if (!u.nonneg()) continue;
        for (const auto& m : ring_->monomials_of_degree(u)) {
            bool standard = true;
            for (const auto& lt : gb.leads) {
                if (lt.pos == e && lt.mono.divides(m)) {
                    standard = false;
                    break;
                }
            }
            if (standard) out.emplace_back(e, m);
        }
    }
    return out;
}

long Presentation::graded_piece_dim(const MultiDegree& n) const {
    return static_cast<long>(piece_basis(n).size());
}

Presentation Presentation::quotient_by_elements(std::span<const Polynomial> xs) const {
    if (xs.empty()) return *this;
    std::vector<ModuleElement> rels = rel_gens_;
    for (const auto& a : xs) {
        require(a.is_homogeneous(), "NotHomogeneous", "quotient elements must be homogeneous");
        for (std::size_t e = 0; e < ambient_.rank(); ++e) {
            ModuleElement v(ring_, ambient_.rank());
            std::vector<Polynomial> coords = v.coords();
            coords[e] = a;
            ModuleElement w = ModuleElement::from_coords(std::move(coords));
            if (!w.is_zero()) rels.push_back(std::move(w));
        }
    }
    return Presentation(ring_, ambient_, std::move(rels));
}

Presentation Presentation::quotient_by_element(const Polynomial& a) const {
    return quotient_by_elements(std::span<const Polynomial>(&a, 1));
}

std::vector<ModuleElement> Presentation::colon_submodule_gens(const Polynomial& a) const {
    return colon_by_element(relations().gens, ambient_, a);
}

Presentation Presentation::colon_module(const Polynomial& a) const {
    return submodule_as_module(*this, colon_submodule_gens(a));
}

std::string Presentation::fingerprint() const {
    std::string s;
    for (const auto& sh : ambient_.shifts) s += sh.str();
    s += "|";
    for (const auto& g : relations().gens) s += g.str() + ";";
    return s;
}

Presentation submodule_as_module(const Presentation& M, const std::vector<ModuleElement>& w_gens) {
    const RingPtr& ring = M.ring();
    // Keep generators with nonzero image, in reduced form for determinism.
    GroebnerBasis wgb = buchberger(w_gens, M.ambient());
    std::vector<ModuleElement> gens;
    for (const auto& w : wgb.gens) {
        if (!contains(M.relations(), w)) gens.push_back(w);
    }
    if (gens.empty()) return Presentation::zero_module(ring);
    // Kernel of G -> M: c-parts of syzygies of (gens | relations).
    std::vector<ModuleElement> list = gens;
    for (const auto& r : M.relations().gens) list.push_back(r);
    FreeModuleSpec new_ambient;
    for (const auto& w : gens) new_ambient.shifts.push_back(*w.homogeneous_degree(M.ambient()));
    std::vector<ModuleElement> kernel;
    for (const auto& s : syzygies(list, M.ambient())) {
        std::vector<Polynomial> coords(s.coords().begin(), s.coords().begin() + gens.size());
        ModuleElement c = ModuleElement::from_coords(std::move(coords));
        if (!c.is_zero()) kernel.push_back(std::move(c));
    }
    return Presentation(ring, std::move(new_ambient), std::move(kernel));
}

Presentation quotient_by_submodule(const Presentation& M, const std::vector<ModuleElement>& w_gens) {
    std::vector<ModuleElement> rels = M.relation_gens();
    for (const auto& w : w_gens)
        if (!w.is_zero()) rels.push_back(w);
    return Presentation(M.ring(), M.ambient(), std::move(rels));
}

ShortExactSequence build_ses(const Presentation& M, const std::vector<ModuleElement>& u_gens) {
    return ShortExactSequence{submodule_as_module(M, u_gens), M, quotient_by_submodule(M, u_gens)};
}

} // namespace mixmult
