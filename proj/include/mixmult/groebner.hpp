#ifndef MIXMULT_GROEBNER_HPP
#define MIXMULT_GROEBNER_HPP

#include <vector>

#include "mixmult/freemod.hpp"

namespace mixmult {

// Integer-or-minus-infinity, the value of Krull and Supp_{++} dimensions.
class Dimension {
public:
    Dimension() : v_(0), minus_inf_(true) {}
    explicit Dimension(int v) : v_(v), minus_inf_(false) {}
    static Dimension minus_infinity() { return Dimension(); }

    bool is_minus_infinity() const { return minus_inf_; }
    int value() const { return v_; }  // only when finite

    // minus infinity compares below every integer
    bool leq(int k) const { return minus_inf_ || v_ <= k; }
    bool eq(int k) const { return !minus_inf_ && v_ == k; }

    friend bool operator==(const Dimension& a, const Dimension& b) {
        if (a.minus_inf_ || b.minus_inf_) return a.minus_inf_ == b.minus_inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Dimension& a, const Dimension& b) { return !(a == b); }

    std::string str() const { return minus_inf_ ? "-inf" : std::to_string(v_); }

private:
    int v_;
    bool minus_inf_;
};

// Reduced Groebner basis of a homogeneous submodule of a shifted free module
// (rank one with zero shift covers the ideal case). Generators are monic,
// fully interreduced, and sorted descending by leading term, which makes the
// basis a canonical form of the submodule.
struct GroebnerBasis {
    FreeModuleSpec spec;
    std::vector<ModuleElement> gens;
    std::vector<ModuleTerm> leads;  // leads[i] = leading term of gens[i]
    bool reduced = true;

    std::size_t size() const { return gens.size(); }
    bool is_zero_submodule() const { return gens.empty(); }
    ModuleOrder order() const { return ModuleOrder{&spec, 0}; }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.spec == b.spec && a.gens == b.gens;
    }
};

// Buchberger with normal pair selection (lowest shifted degree first,
// deterministic tie-break); returns the reduced basis.
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const FreeModuleSpec& spec);

// Unique remainder: no term of the result is divisible by a leading term.
ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);

// True iff v lies in the submodule.
bool contains(const GroebnerBasis& gb, const ModuleElement& v);

// Generators of the syzygy module {c : sum c_i gens_i = 0}, as elements of the
// free module G with shifts = degrees of the generators. Computed by the
// Buchberger trace on the graph module in F (+) G with F eliminated first.
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens,
                                    const FreeModuleSpec& spec,
                                    FreeModuleSpec* syz_spec_out = nullptr);

// Generators (including rel_gens) of the submodule (R : a) = {v : a v in R}.
std::vector<ModuleElement> colon_by_element(const std::vector<ModuleElement>& rel_gens,
                                            const FreeModuleSpec& spec, const Polynomial& a);

// Generators of U (intersect) V inside the common ambient free module.
std::vector<ModuleElement> intersect(const std::vector<ModuleElement>& u_gens,
                                     const std::vector<ModuleElement>& v_gens,
                                     const FreeModuleSpec& spec);

// Stabilized saturation (R : b^infinity) for the ideal b generated by bs;
// returns the reduced basis of the result.
GroebnerBasis saturate(const std::vector<ModuleElement>& rel_gens, const FreeModuleSpec& spec,
                       const std::vector<Polynomial>& bs);

// Krull dimension of F/R from the leading-term module: the maximum over
// positions of the largest independent variable set modulo the staircase.
// Minus infinity for the zero module.
Dimension krull_dim_quotient(const RingPtr& ring, const GroebnerBasis& relations);

} // namespace mixmult

#endif
