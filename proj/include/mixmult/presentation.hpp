#ifndef MIXMULT_PRESENTATION_HPP
#define MIXMULT_PRESENTATION_HPP

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "mixmult/groebner.hpp"

namespace mixmult {

// Finitely presented N^d-graded module M = F/R, carried as the ambient
// shifted free module together with generators of the relation submodule.
// The reduced Groebner basis of the relations is computed once on first use
// and shared; presentations are immutable values.
class Presentation {
public:
    Presentation() = default;
    Presentation(RingPtr ring, FreeModuleSpec ambient, std::vector<ModuleElement> relations);

    static Presentation free_module(RingPtr ring, std::size_t rank = 1);
    static Presentation cyclic_quotient(const RingPtr& ring,
                                        const std::vector<Polynomial>& ideal_gens);
    static Presentation zero_module(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const FreeModuleSpec& ambient() const { return ambient_; }
    const std::vector<ModuleElement>& relation_gens() const { return rel_gens_; }
    const GroebnerBasis& relations() const;  // reduced basis, lazily computed

    bool is_zero_module() const;

    // l_k(M_n): standard monomials of the degree-n slice.
    long graded_piece_dim(const MultiDegree& n) const;
    // Basis of the degree-n slice as (position, monomial) pairs, sorted.
    std::vector<std::pair<std::size_t, Monomial>> piece_basis(const MultiDegree& n) const;

    // M / (x_1,...,x_t)M for homogeneous block elements; empty x returns M.
    Presentation quotient_by_elements(std::span<const Polynomial> xs) const;
    Presentation quotient_by_element(const Polynomial& a) const;

    // Generators in F of the colon submodule (R : a) = preimage of (0_M : a).
    std::vector<ModuleElement> colon_submodule_gens(const Polynomial& a) const;
    // (0_M : a) as a module in its own right (ambient shifts = generator degrees).
    Presentation colon_module(const Polynomial& a) const;

    // Canonical fingerprint of the presented module (ambient + reduced basis),
    // usable as a memoization key.
    std::string fingerprint() const;

    // Identity shared by all copies of this presentation; keys derived caches.
    const void* cache_key() const { return lazy_.get(); }

private:
    RingPtr ring_;
    FreeModuleSpec ambient_;
    std::vector<ModuleElement> rel_gens_;

    struct LazyGB {
        std::once_flag flag;
        GroebnerBasis gb;
    };
    std::shared_ptr<LazyGB> lazy_ = std::make_shared<LazyGB>();
};

// The submodule of M generated by w_gens (elements of M's ambient F),
// presented as a module: ambient G on the nonzero images, relations the
// degreewise kernel of G -> M.
Presentation submodule_as_module(const Presentation& M, const std::vector<ModuleElement>& w_gens);

// Quotient of M by the submodule generated by w_gens.
Presentation quotient_by_submodule(const Presentation& M, const std::vector<ModuleElement>& w_gens);

struct ShortExactSequence {
    Presentation sub;       // U as a module
    Presentation mid;       // M
    Presentation quotient;  // M/U
};

// 0 -> U -> M -> M/U -> 0 for the submodule generated by u_gens.
ShortExactSequence build_ses(const Presentation& M, const std::vector<ModuleElement>& u_gens);

} // namespace mixmult

#endif
