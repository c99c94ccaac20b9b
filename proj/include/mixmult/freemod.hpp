#ifndef MIXMULT_FREEMOD_HPP
#define MIXMULT_FREEMOD_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixmult/polynomial.hpp"

namespace mixmult {

// Shifted free module F = (+)_e S(-shift_e); basis element e sits in degree
// shift_e, so the degree-n slice of coordinate e is S_{n - shift_e}.
struct FreeModuleSpec {
    std::vector<MultiDegree> shifts;

    std::size_t rank() const { return shifts.size(); }
    static FreeModuleSpec plain(std::size_t rank, std::size_t dims) {
        return FreeModuleSpec{std::vector<MultiDegree>(rank, MultiDegree::zero(dims))};
    }
    friend bool operator==(const FreeModuleSpec& a, const FreeModuleSpec& b) {
        return a.shifts == b.shifts;
    }
};

struct ModuleTerm {
    std::size_t pos = 0;
    Monomial mono;
    Scalar coeff;
};

// Element of a shifted free module: one polynomial per coordinate.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(RingPtr ring, std::size_t rank);
    static ModuleElement from_coords(std::vector<Polynomial> coords);

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return coords_.size(); }
    const Polynomial& coord(std::size_t e) const { return coords_[e]; }
    const std::vector<Polynomial>& coords() const { return coords_; }

    bool is_zero() const;

    ModuleElement operator-() const;
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

    ModuleElement scaled(const Scalar& c) const;
    ModuleElement times_term(const Monomial& m, const Scalar& c) const;
    ModuleElement times(const Polynomial& p) const;

    friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ModuleElement& a, const ModuleElement& b) { return !(a == b); }

    // Degree when homogeneous as an element of F (coordinate e homogeneous of
    // degree n - shift_e), nullopt otherwise.
    std::optional<MultiDegree> homogeneous_degree(const FreeModuleSpec& spec) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> coords_;
};

// Degree-compatible term-over-position order on module terms: compare shifted
// total degree, then grevlex on the monomials, then position (lower wins).
// split > 0 selects the elimination variant used for syzygy computations:
// every term in a position < split beats every term in a position >= split.
struct ModuleOrder {
    const FreeModuleSpec* spec;
    std::size_t split = 0;

    int cmp(const ModuleTerm& a, const ModuleTerm& b) const {
        if (split > 0) {
            bool af = a.pos < split, bf = b.pos < split;
            if (af != bf) return af ? 1 : -1;
        }
        long da = a.mono.total_degree() + spec->shifts[a.pos].total();
        long db = b.mono.total_degree() + spec->shifts[b.pos].total();
        if (da != db) return da < db ? -1 : 1;
        int c = grevlex_cmp(a.mono, b.mono);
        if (c != 0) return c;
        if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
        return 0;
    }
};

// Leading term with respect to the order; element must be nonzero.
ModuleTerm leading_term(const ModuleElement& v, const ModuleOrder& order);

// v with a single term removed (used by normal-form bookkeeping).
ModuleElement make_term_element(const RingPtr& ring, std::size_t rank, const ModuleTerm& t);

} // namespace mixmult

#endif
