#include "mixmult/scalar.hpp"

#include "mixmult/error.hpp"

namespace mixmult {

void Scalar::check_same(const Scalar& o) const {
    require(p_ == o.p_, "MixedCharacteristic",
            "scalar arithmetic across different coefficient fields");
}

Scalar Scalar::inverse() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero scalar");
    Scalar s(*this);
    if (p_ == 0) {
        s.rat_ = 1 / rat_;
        return s;
    }
    // Extended Euclid on (res, p); p prime so the inverse exists.
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p_), new_r = static_cast<int64_t>(res_);
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    s.res_ = static_cast<uint64_t>(t);
    return s;
}

std::string Scalar::str() const {
    if (p_ == 0) return rat_.get_str();
    return std::to_string(res_);
}

} // namespace mixmult
