#include "mixmult/polynomial.hpp"

#include <algorithm>

#include "mixmult/error.hpp"

namespace mixmult {

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(ring->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t v) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), v), Scalar::one(ring->characteristic())});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else if (!t.coeff.is_zero()) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

void Polynomial::check_ring(const Polynomial& o) const {
    require(same_ring(ring_, o.ring_), "MixedRing",
            "polynomial arithmetic across different ring contexts");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_ring(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += (-o); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            raw.push_back({s.mono.times(t.mono), s.coeff * t.coeff});
    return Polynomial::from_terms(a.ring_, std::move(raw));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff * c});
    return r;  // multiplying by a fixed monomial preserves the term order
}

Polynomial Polynomial::monic() const {
    require(!is_zero(), "ZeroPolynomial", "monic of zero polynomial");
    return scaled(leading().coeff.inverse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::optional<MultiDegree> Polynomial::homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    MultiDegree d = ring_->multidegree(terms_.front().mono);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ring_->multidegree(terms_[i].mono) != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::homogeneous_component(const MultiDegree& n) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
        if (ring_->multidegree(t.mono) == n) r.terms_.push_back(t);
    return r;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        std::string vars;
        for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
            int e = t.mono.exponent(v);
            if (!e) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->var_name(v);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        std::string c = t.coeff.str();
        std::string term;
        if (vars.empty())
            term = c;
        else if (c == "1")
            term = vars;
        else if (c == "-1")
            term = "-" + vars;
        else
            term = c + "*" + vars;
        if (i && term[0] != '-') s += "+";
        s += term;
    }
    return s;
}

std::vector<Monomial> enumerate_monomials(const RingPtr& ring, const MultiDegree& n) {
    return ring->monomials_of_degree(n);
}

} // namespace mixmult
