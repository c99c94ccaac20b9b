#include "mixmult/hilbert.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "mixmult/error.hpp"

namespace mixmult {

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::size_t dims, const mpq_class& c) {
    MultiPoly p(dims);
    p.add_term(std::vector<int>(dims, 0), c);
    return p;
}

void MultiPoly::add_term(const std::vector<int>& expo, const mpq_class& c) {
    if (c == 0) return;
    auto it = c_.find(expo);
    if (it == c_.end()) {
        c_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.dims_);
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
    MultiPoly r(dims_);
    if (c == 0) return r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, v * c);
    return r;
}

Dimension MultiPoly::total_degree() const {
    if (c_.empty()) return Dimension::minus_infinity();
    long best = 0;
    for (const auto& [e, v] : c_) {
        long t = 0;
        for (int x : e) t += x;
        best = std::max(best, t);
    }
    return Dimension(static_cast<int>(best));
}

mpq_class MultiPoly::eval(const std::vector<long>& n) const {
    mpq_class total = 0;
    for (const auto& [e, v] : c_) {
        mpq_class term = v;
        for (std::size_t i = 0; i < e.size(); ++i) {
            mpz_class power, base(n[i]);
            mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[i]));
            term *= power;
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::shift_down(std::size_t i) const {
    MultiPoly r(dims_);
    for (const auto& [e, v] : c_) {
        // (n_i - 1)^k expands by the binomial theorem.
        int k = e[i];
        mpz_class binom = 1;
        for (int j = k; j >= 0; --j) {
            // coefficient of n_i^j: C(k, j) * (-1)^(k-j)
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k),
                         static_cast<unsigned long>(j));
            if ((k - j) % 2) c = -c;
            std::vector<int> e2(e);
            e2[i] = j;
            r.add_term(e2, v * mpq_class(c));
        }
    }
    return r;
}

MultiPoly MultiPoly::difference(const MultiDegree& k) const {
    MultiPoly p = *this;
    for (std::size_t i = 0; i < k.dims(); ++i)
        for (int j = 0; j < k[i]; ++j) p = p.difference(i);
    return p;
}

mpq_class MultiPoly::constant_value() const {
    if (c_.empty()) return 0;
    require(total_degree().eq(0), "NotConstant", "constant_value of non-constant polynomial");
    return c_.begin()->second;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
    if (c_.empty()) return "0";
    // Descending by total degree, then by exponent tuple, for readability.
    std::vector<std::pair<std::vector<int>, mpq_class>> terms(c_.begin(), c_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        long ta = 0, tb = 0;
        for (int x : a.first) ta += x;
        for (int x : b.first) tb += x;
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    std::string s;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string vars;
        for (std::size_t i = 0; i < terms[t].first.size(); ++i) {
            int e = terms[t].first[i];
            if (!e) continue;
            if (!vars.empty()) vars += "*";
            vars += var_names[i];
            if (e > 1) vars += "^" + std::to_string(e);
        }
        std::string c = terms[t].second.get_str();
        std::string term;
        if (vars.empty())
            term = c;
        else if (c == "1")
            term = vars;
        else if (c == "-1")
            term = "-" + vars;
        else
            term = c + "*" + vars;
        if (t && term[0] != '-') s += "+";
        s += term;
    }
    return s;
}

// ---------------------------------------------------------- series numerator

namespace {

using KPoly = std::map<MultiDegree, mpz_class>;

void kpoly_add(KPoly& dst, const KPoly& src, const MultiDegree& shift, int sign) {
    for (const auto& [d, c] : src) {
        MultiDegree key = d + shift;
        auto it = dst.find(key);
        mpz_class add = sign > 0 ? c : mpz_class(-c);
        if (it == dst.end()) {
            dst.emplace(key, add);
        } else {
            it->second += add;
            if (it->second == 0) dst.erase(it);
        }
    }
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return grevlex_cmp(a, b) < 0;
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& g : out)
            if (g.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

KPoly kpoly_rec(const RingPtr& ring, std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    KPoly one{{MultiDegree::zero(ring->dims()), mpz_class(1)}};
    if (gens.empty()) return one;
    if (gens.front().is_one()) return {};
    // Pairwise coprime minimal generators: product of (1 - t^deg g).
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        KPoly acc = one;
        for (const auto& g : gens) {
            KPoly factor = one;
            kpoly_add(factor, one, ring->multidegree(g), -1);
            KPoly next;
            for (const auto& [da, ca] : acc)
                for (const auto& [db, cb] : factor) {
                    MultiDegree key = da + db;
                    next[key] += ca * cb;
                }
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            acc = std::move(next);
        }
        return acc;
    }
    // Pivot on the most frequent variable: K(I) = K(I + (x)) + t^deg(x) K(I : x).
    std::size_t nv = ring->nvars();
    std::vector<int> freq(nv, 0);
    for (const auto& g : gens)
        for (std::size_t v = 0; v < nv; ++v)
            if (g.exponent(v) > 0) ++freq[v];
    std::size_t pivot = 0;
    for (std::size_t v = 1; v < nv; ++v)
        if (freq[v] > freq[pivot]) pivot = v;
    Monomial x = Monomial::variable(nv, pivot);
    std::vector<Monomial> plus = gens;
    plus.push_back(x);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(x.gcd(g).quotient_into(g));
    KPoly result = kpoly_rec(ring, std::move(plus));
    kpoly_add(result, kpoly_rec(ring, std::move(colon)), ring->multidegree(x), 1);
    return result;
}

// Number of monomials of degree u in m variables, zero for negative u.
mpz_class slice_count(int u, int m) {
    if (u < 0) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(u + m - 1),
                 static_cast<unsigned long>(m - 1));
    return c;
}

} // namespace

std::map<MultiDegree, mpz_class> monomial_kpolynomial(const RingPtr& ring,
                                                      std::vector<Monomial> gens) {
    return kpoly_rec(ring, std::move(gens));
}

HilbertSeries hilbert_series(const Presentation& M) {
    const GroebnerBasis& gb = M.relations();
    const RingPtr& ring = M.ring();
    HilbertSeries hs;
    hs.blocks = ring->blocks();
    for (std::size_t e = 0; e < M.ambient().rank(); ++e) {
        std::vector<Monomial> stairs;
        for (const auto& lt : gb.leads)
            if (lt.pos == e) stairs.push_back(lt.mono);
        KPoly k = kpoly_rec(ring, std::move(stairs));
        kpoly_add(hs.numerator, k, M.ambient().shifts[e], 1);
    }
    return hs;
}

mpz_class HilbertSeries::expand_at(const MultiDegree& n) const {
    mpz_class total = 0;
    for (const auto& [a, c] : numerator) {
        mpz_class prod = c;
        for (std::size_t i = 0; i < blocks.size() && prod != 0; ++i)
            prod *= slice_count(n[i] - a[i], blocks[i]);
        total += prod;
    }
    return total;
}

std::string HilbertSeries::str() const {
    if (numerator.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [a, c] : numerator) {
        std::string cs = c.get_str();
        if (!first && cs[0] != '-') s += "+";
        first = false;
        if (a.total() == 0) {
            s += cs;
            continue;
        }
        if (cs == "1")
            cs = "";
        else if (cs == "-1")
            cs = "-";
        s += cs;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (!a[i]) continue;
            s += "t" + std::to_string(i + 1);
            if (a[i] > 1) s += "^" + std::to_string(a[i]);
        }
    }
    return s;
}

// ------------------------------------------------------- Hilbert polynomial

namespace {

// C(x + m - 1 + shift_adjust, m - 1) as a polynomial in the variable x = n_i - a_i:
// B_m(n_i) = prod_{j=1}^{m-1} (n_i - a_i + j) / (m-1)!
MultiPoly binomial_factor(std::size_t dims, std::size_t var, int a, int m) {
    MultiPoly acc = MultiPoly::constant(dims, 1);
    mpz_class fact = 1;
    for (int j = 1; j <= m - 1; ++j) {
        MultiPoly lin(dims);
        std::vector<int> e(dims, 0);
        e[var] = 1;
        lin.add_term(e, 1);
        lin.add_term(std::vector<int>(dims, 0), mpq_class(j - a));
        acc = acc * lin;
        fact *= j;
    }
    return acc.scaled(mpq_class(1) / mpq_class(fact));
}

} // namespace

HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs) {
    std::size_t d = hs.blocks.size();
    HilbertPolynomial out;
    out.poly = MultiPoly(d);
    out.threshold = MultiDegree::zero(d);
    for (const auto& [a, c] : hs.numerator) {
        MultiPoly term = MultiPoly::constant(d, mpq_class(c));
        for (std::size_t i = 0; i < d; ++i)
            term = term * binomial_factor(d, i, a[i], hs.blocks[i]);
        out.poly += term;
        out.threshold.join(a);
    }
    out.dim = out.poly.total_degree();
    return out;
}

// ------------------------------------------------------------- cached data

namespace {

// Content-addressed cache: the fingerprint is a canonical form of the module,
// so hits across distinct presentation objects are sound.
std::mutex cache_mutex;
std::unordered_map<std::string, std::shared_ptr<const HilbertPolynomial>> poly_cache;

} // namespace

const HilbertPolynomial& hilbert_data(const Presentation& M) {
    std::string key = M.fingerprint();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = poly_cache.find(key);
        if (it != poly_cache.end()) return *it->second;
    }
    auto data = std::make_shared<HilbertPolynomial>(hilbert_polynomial(hilbert_series(M)));
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = poly_cache.emplace(std::move(key), std::move(data));
    return *it->second;
}

Dimension dim_supp_pp(const Presentation& M) { return hilbert_data(M).dim; }

// ------------------------------------------------------ mixed multiplicity

MixedMultiplicityValue mixed_multiplicity(const Presentation& M, const MultiDegree& k) {
    const HilbertPolynomial& hp = hilbert_data(M);
    MixedMultiplicityValue out;
    out.k = k;
    long total = k.total();
    if (hp.dim.is_minus_infinity()) {
        out.value = 0;
        out.extended = true;
        return out;
    }
    require(total >= hp.dim.value(), "TypeTooSmall",
            "|k| = " + std::to_string(total) + " below dim Supp_{++} = " + hp.dim.str());
    if (total > hp.dim.value()) {
        out.value = 0;
        out.extended = true;
        return out;
    }
    // |k| = deg P, so the k-difference is a constant; constant_value checks it.
    MultiPoly diff = hp.poly.difference(k);
    mpq_class c = diff.constant_value();
    require(c.get_den() == 1, "NonIntegralMultiplicity",
            "k-difference produced a non-integer: " + c.get_str());
    require(c >= 0, "Internal", "negative mixed multiplicity " + c.get_str());
    out.value = c.get_num();
    out.extended = false;
    return out;
}

DifferenceFormulaReport difference_formula_check(const Presentation& M, const Polynomial& a) {
    auto deg = a.homogeneous_degree();
    require(deg.has_value(), "NotHomogeneous", "difference formula needs a homogeneous element");
    require(deg->total() == 1, "BadDegree", "element must lie in some S_{e_i}");
    std::size_t block = 0;
    for (std::size_t i = 0; i < deg->dims(); ++i)
        if ((*deg)[i] == 1) block = i;

    DifferenceFormulaReport rep;
    const HilbertPolynomial& hp = hilbert_data(M);
    rep.lhs = hp.poly.difference(block);
    rep.quotient_part = hilbert_data(M.quotient_by_element(a)).poly;
    rep.colon_part = hilbert_data(M.colon_module(a)).poly.shift_down(block);
    rep.holds = (rep.lhs == rep.quotient_part - rep.colon_part);
    return rep;
}

} // namespace mixmult
