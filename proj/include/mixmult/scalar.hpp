#ifndef MIXMULT_SCALAR_HPP
#define MIXMULT_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mixmult {

// Element of the coefficient field: an exact rational when the ring
// characteristic is 0, a residue in [0, p) when it is a prime p.
// The characteristic travels with the value; mixing characteristics is a bug.
class Scalar {
public:
    Scalar() : p_(0), res_(0) {}

    static Scalar zero(uint32_t characteristic) { return from_long(0, characteristic); }
    static Scalar one(uint32_t characteristic) { return from_long(1, characteristic); }

    static Scalar from_long(long v, uint32_t characteristic) {
        Scalar s;
        s.p_ = characteristic;
        if (characteristic == 0) {
            s.rat_ = mpq_class(v);
        } else {
            long r = v % static_cast<long>(characteristic);
            if (r < 0) r += characteristic;
            s.res_ = static_cast<uint64_t>(r);
        }
        return s;
    }

    static Scalar from_rational(mpq_class v) {
        Scalar s;
        s.p_ = 0;
        v.canonicalize();
        s.rat_ = std::move(v);
        return s;
    }

    static Scalar from_integer(const mpz_class& v, uint32_t characteristic) {
        if (characteristic == 0) return from_rational(mpq_class(v));
        Scalar s;
        s.p_ = characteristic;
        mpz_class r = v % characteristic;
        if (r < 0) r += characteristic;
        s.res_ = r.get_ui();
        return s;
    }

    uint32_t characteristic() const { return p_; }
    bool is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }
    bool is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

    const mpq_class& rational() const { return rat_; }
    uint64_t residue() const { return res_; }

    Scalar operator-() const {
        Scalar s(*this);
        if (p_ == 0) {
            s.rat_ = -s.rat_;
        } else if (s.res_ != 0) {
            s.res_ = p_ - s.res_;
        }
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        check_same(o);
        if (p_ == 0) {
            rat_ += o.rat_;
        } else {
            res_ += o.res_;
            if (res_ >= p_) res_ -= p_;
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o) { return *this += (-o); }

    Scalar& operator*=(const Scalar& o) {
        check_same(o);
        if (p_ == 0) {
            rat_ *= o.rat_;
        } else {
            res_ = mulmod(res_, o.res_, p_);
        }
        return *this;
    }

    Scalar inverse() const;

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.p_ != b.p_) return false;
        return a.p_ == 0 ? a.rat_ == b.rat_ : a.res_ == b.res_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // True when the value is an integer (always true in characteristic p).
    bool is_integer() const { return p_ != 0 || rat_.get_den() == 1; }

    std::string str() const;

private:
    void check_same(const Scalar& o) const;
    static uint64_t mulmod(uint64_t a, uint64_t b, uint32_t p) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
    }

    mpq_class rat_;   // characteristic 0 payload
    uint32_t p_;      // field characteristic, 0 for the rationals
    uint64_t res_;    // characteristic p payload, in [0, p)
};

} // namespace mixmult

#endif
