#ifndef MIXMULT_POLYNOMIAL_HPP
#define MIXMULT_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixmult/ring.hpp"
#include "mixmult/scalar.hpp"

namespace mixmult {

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Multigraded polynomial over the ring context's coefficient field.
// Terms are kept sorted descending in grevlex with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Scalar c);
    static Polynomial variable(const RingPtr& ring, std::size_t v);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);  // normalizes

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading() const { return terms_.front(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial monic() const;  // divide by leading coefficient

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Multidegree when homogeneous and nonzero, nullopt otherwise.
    std::optional<MultiDegree> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    // Sum of the terms of multidegree n.
    Polynomial homogeneous_component(const MultiDegree& n) const;

    std::string str() const;

private:
    void normalize();  // sort, merge, drop zeros
    void check_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

// All monomials of multidegree n in the ring, deterministic (grevlex-descending)
// order; count matches prod_i C(n_i + m_i - 1, m_i - 1).
std::vector<Monomial> enumerate_monomials(const RingPtr& ring, const MultiDegree& n);

} // namespace mixmult

#endif
