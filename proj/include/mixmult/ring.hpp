#ifndef MIXMULT_RING_HPP
#define MIXMULT_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mixmult/multidegree.hpp"

namespace mixmult {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// Monomial in the variables of a ring context: one exponent per variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t v) {
        std::vector<int> e(nvars, 0);
        e[v] = 1;
        return Monomial(std::move(e));
    }

    std::size_t nvars() const { return e_.size(); }
    int exponent(std::size_t v) const { return e_[v]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const {
        for (int x : e_)
            if (x) return false;
        return true;
    }
    long total_degree() const {
        long t = 0;
        for (int x : e_) t += x;
        return t;
    }

    Monomial times(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    // o / *this, assuming divisibility.
    Monomial quotient_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
        return r;
    }
    Monomial gcd(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (o.e_[i] < r.e_[i]) r.e_[i] = o.e_[i];
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    std::vector<int> e_;
};

// Graded reverse lexicographic comparison, variables ordered block-then-index.
// Returns <0, 0, >0 as a is smaller, equal, greater than b.
int grevlex_cmp(const Monomial& a, const Monomial& b);

// The shared multigraded ring context S = k[x_{i,j}], deg x_{i,j} = e_i,
// with block sizes (m_1,...,m_d) and coefficient field of the given
// characteristic (0 or an odd prime).
class GradedRing : public std::enable_shared_from_this<GradedRing> {
public:
    static RingPtr make(uint32_t characteristic, std::vector<int> block_sizes,
                        std::vector<std::string> names = {});

    uint32_t characteristic() const { return characteristic_; }
    const std::vector<int>& blocks() const { return blocks_; }
    std::size_t dims() const { return blocks_.size(); }
    std::size_t nvars() const { return nvars_; }
    int block_of(std::size_t v) const { return var_block_[v]; }
    int block_start(std::size_t i) const { return block_start_[i]; }
    const std::string& var_name(std::size_t v) const { return names_[v]; }
    int var_index(const std::string& name) const;  // -1 when unknown

    MultiDegree multidegree(const Monomial& m) const {
        MultiDegree d = MultiDegree::zero(dims());
        for (std::size_t v = 0; v < nvars_; ++v) d[var_block_[v]] += m.exponent(v);
        return d;
    }

    // All monomials of multidegree n, sorted descending in the term order.
    std::vector<Monomial> monomials_of_degree(const MultiDegree& n) const;
    // Number of monomials of multidegree n: prod_i C(n_i + m_i - 1, m_i - 1).
    long count_monomials(const MultiDegree& n) const;

private:
    uint32_t characteristic_ = 0;
    std::vector<int> blocks_;
    std::size_t nvars_ = 0;
    std::vector<int> var_block_;
    std::vector<int> block_start_;
    std::vector<std::string> names_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a.get() == b.get(); }

} // namespace mixmult

#endif
