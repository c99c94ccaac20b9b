#ifndef MIXMULT_HILBERT_HPP
#define MIXMULT_HILBERT_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mixmult/presentation.hpp"

namespace mixmult {

// Polynomial with rational coefficients in the degree variables n_1..n_d.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::size_t dims) : dims_(dims) {}

    static MultiPoly constant(std::size_t dims, const mpq_class& c);

    std::size_t dims() const { return dims_; }
    const std::map<std::vector<int>, mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add_term(const std::vector<int>& expo, const mpq_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const mpq_class& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.dims_ == b.dims_ && a.c_ == b.c_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    Dimension total_degree() const;  // minus infinity for the zero polynomial
    mpq_class eval(const std::vector<long>& n) const;

    // Substitute n_i -> n_i - 1.
    MultiPoly shift_down(std::size_t i) const;
    // Backward difference in variable i: P(n) - P(n - e_i).
    MultiPoly difference(std::size_t i) const { return *this - shift_down(i); }
    // Composite k-difference.
    MultiPoly difference(const MultiDegree& k) const;

    // Value when the polynomial is constant (zero polynomial gives 0).
    mpq_class constant_value() const;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    std::size_t dims_ = 0;
    std::map<std::vector<int>, mpq_class> c_;
};

// Exact multigraded Hilbert series: numerator over prod_i (1 - t_i)^{m_i}.
struct HilbertSeries {
    std::vector<int> blocks;
    std::map<MultiDegree, mpz_class> numerator;

    bool is_zero() const { return numerator.empty(); }
    // Exact coefficient of t^n in the expansion (valid at every n).
    mpz_class expand_at(const MultiDegree& n) const;
    std::string str() const;
};

struct HilbertPolynomial {
    MultiPoly poly;         // P_M in n_1..n_d
    MultiDegree threshold;  // P_M(n) = l[M_n] for all n >= threshold
    Dimension dim;          // deg P_M = dim Supp_{++} M
};

struct MixedMultiplicityValue {
    MultiDegree k;
    mpz_class value;
    bool extended = false;  // |k| exceeded the dimension, value forced to 0
};

HilbertSeries hilbert_series(const Presentation& M);
HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs);

// Both cached per presentation via the engine below.
const HilbertPolynomial& hilbert_data(const Presentation& M);
Dimension dim_supp_pp(const Presentation& M);

// E(M; k): the k-difference of P_M when |k| equals the dimension, zero above
// it; |k| below the dimension is rejected with "TypeTooSmall".
MixedMultiplicityValue mixed_multiplicity(const Presentation& M, const MultiDegree& k);

// Difference formula on the Hilbert polynomial level:
// the e_i-difference of P_M against P_{M/aM} minus the shifted P_{(0_M:a)}.
struct DifferenceFormulaReport {
    MultiPoly lhs;            // e_i-difference of P_M
    MultiPoly quotient_part;  // P_{M/aM}
    MultiPoly colon_part;     // P_{(0_M:a)}(n - e_i)
    bool holds = false;
};

DifferenceFormulaReport difference_formula_check(const Presentation& M, const Polynomial& a);

// K-polynomial of S/(monomial ideal), exposed for tests.
std::map<MultiDegree, mpz_class> monomial_kpolynomial(const RingPtr& ring,
                                                      std::vector<Monomial> gens);

} // namespace mixmult

#endif
