#include "mixmult/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

bool term_divides(const ModuleTerm& a, const ModuleTerm& b) {
    return a.pos == b.pos && a.mono.divides(b.mono);
}

// One reduction pass: subtract multiples of basis elements until no term of v
// is divisible by any lead. Terms already known irreducible move to `done`.
ModuleElement reduce_full(ModuleElement v, const std::vector<ModuleElement>& basis,
                          const std::vector<ModuleTerm>& leads, const ModuleOrder& order) {
    const RingPtr& ring = v.ring();
    std::size_t rank = v.rank();
    std::vector<std::vector<Term>> done(rank);
    while (!v.is_zero()) {
        ModuleTerm lt = leading_term(v, order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!term_divides(leads[i], lt)) continue;
            Monomial q = leads[i].mono.quotient_into(lt.mono);
            Scalar c = lt.coeff / leads[i].coeff;
            v -= basis[i].times_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            done[lt.pos].push_back({lt.mono, lt.coeff});
            v -= make_term_element(ring, rank, lt);
        }
    }
    std::vector<Polynomial> coords;
    coords.reserve(rank);
    for (std::size_t e = 0; e < rank; ++e)
        coords.push_back(Polynomial::from_terms(ring, std::move(done[e])));
    return ModuleElement::from_coords(std::move(coords));
}

struct Pair {
    std::size_t i, j;
    long degree;  // shifted total degree of the S-pair
};

long spair_degree(const ModuleTerm& a, const ModuleTerm& b, const FreeModuleSpec& spec) {
    Monomial l = a.mono.lcm(b.mono);
    return l.total_degree() + spec.shifts[a.pos].total();
}

// Core Buchberger loop over a working basis; leaves the basis unreduced.
void buchberger_loop(std::vector<ModuleElement>& basis, std::vector<ModuleTerm>& leads,
                     const FreeModuleSpec& spec, const ModuleOrder& order) {
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    auto enqueue = [&](std::size_t i, std::size_t j) {
        if (leads[i].pos != leads[j].pos) return;
        // The coprime criterion is only valid in the ideal (rank one) case.
        if (spec.rank() == 1 && order.split == 0 && leads[i].mono.coprime(leads[j].mono)) return;
        queue.insert({i, j, spair_degree(leads[i], leads[j], spec)});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) enqueue(i, j);
    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        const ModuleTerm &a = leads[p.i], &b = leads[p.j];
        Monomial l = a.mono.lcm(b.mono);
        ModuleElement s = basis[p.i].times_term(a.mono.quotient_into(l), b.coeff) -
                          basis[p.j].times_term(b.mono.quotient_into(l), a.coeff);
        if (s.is_zero()) continue;
        ModuleElement r = reduce_full(std::move(s), basis, leads, order);
        if (r.is_zero()) continue;
        ModuleTerm lt = leading_term(r, order);
        basis.push_back(r.scaled(lt.coeff.inverse()));
        lt.coeff = Scalar::one(lt.coeff.characteristic());
        leads.push_back(lt);
        std::size_t n = basis.size() - 1;
        for (std::size_t i = 0; i < n; ++i) enqueue(i, n);
    }
}

// Interreduce: minimal leads, monic generators, fully reduced tails,
// deterministic descending order.
void interreduce(std::vector<ModuleElement>& basis, std::vector<ModuleTerm>& leads,
                 const ModuleOrder& order) {
    // Drop generators whose lead is divisible by another's lead.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (term_divides(leads[j], leads[i]) &&
                !(term_divides(leads[i], leads[j]) && j > i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<ModuleElement> kept;
    std::vector<ModuleTerm> kept_leads;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) {
            kept.push_back(basis[i]);
            kept_leads.push_back(leads[i]);
        }
    // Tail-reduce each against the others.
    std::vector<ModuleElement> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModuleElement> others;
        std::vector<ModuleTerm> other_leads;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) {
                others.push_back(kept[j]);
                other_leads.push_back(kept_leads[j]);
            }
        ModuleElement r = reduce_full(kept[i], others, other_leads, order);
        require(!r.is_zero(), "Internal", "minimal generator reduced to zero");
        out.push_back(r.scaled(leading_term(r, order).coeff.inverse()));
    }
    std::sort(out.begin(), out.end(), [&](const ModuleElement& x, const ModuleElement& y) {
        return order.cmp(leading_term(x, order), leading_term(y, order)) > 0;
    });
    basis = std::move(out);
    leads.clear();
    for (const auto& g : basis) leads.push_back(leading_term(g, order));
}

GroebnerBasis finish(std::vector<ModuleElement> basis, std::vector<ModuleTerm> leads,
                     const FreeModuleSpec& spec) {
    ModuleOrder order{&spec, 0};
    interreduce(basis, leads, order);
    GroebnerBasis gb;
    gb.spec = spec;
    gb.gens = std::move(basis);
    gb.leads = std::move(leads);
    gb.reduced = true;
    return gb;
}

void seed_basis(const std::vector<ModuleElement>& gens, const FreeModuleSpec& spec,
                const ModuleOrder& order, std::vector<ModuleElement>& basis,
                std::vector<ModuleTerm>& leads) {
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        require(g.rank() == spec.rank(), "RankMismatch", "generator rank vs ambient");
        require(g.homogeneous_degree(spec).has_value(), "NotHomogeneous",
                "Groebner input must be homogeneous");
        ModuleTerm lt = leading_term(g, order);
        basis.push_back(g.scaled(lt.coeff.inverse()));
        lt.coeff = Scalar::one(lt.coeff.characteristic());
        leads.push_back(lt);
    }
}

} // namespace

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const FreeModuleSpec& spec) {
    ModuleOrder order{&spec, 0};
    std::vector<ModuleElement> basis;
    std::vector<ModuleTerm> leads;
    seed_basis(gens, spec, order, basis, leads);
    buchberger_loop(basis, leads, spec, order);
    return finish(std::move(basis), std::move(leads), spec);
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) {
    ModuleOrder order = gb.order();
    return reduce_full(v, gb.gens, gb.leads, order);
}

bool contains(const GroebnerBasis& gb, const ModuleElement& v) {
    return normal_form(v, gb).is_zero();
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens,
                                    const FreeModuleSpec& spec, FreeModuleSpec* syz_spec_out) {
    require(!gens.empty(), "BadInput", "syzygies of an empty generator list");
    const RingPtr& ring = gens.front().ring();
    std::size_t r = spec.rank(), k = gens.size();
    // Graph module in F (+) G: h_i = g_i (+) eps_i, with F eliminated first.
    FreeModuleSpec big;
    big.shifts = spec.shifts;
    FreeModuleSpec syz_spec;
    for (const auto& g : gens) {
        auto d = g.homogeneous_degree(spec);
        require(d.has_value() || g.is_zero(), "NotHomogeneous", "syzygy input must be homogeneous");
        MultiDegree deg = d ? *d : MultiDegree::zero(ring->dims());
        big.shifts.push_back(deg);
        syz_spec.shifts.push_back(deg);
    }
    if (syz_spec_out) *syz_spec_out = syz_spec;
    ModuleOrder order{&big, r};
    std::vector<ModuleElement> basis;
    std::vector<ModuleTerm> leads;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Polynomial> coords = gens[i].coords();
        for (std::size_t j = 0; j < k; ++j)
            coords.push_back(j == i ? Polynomial::constant(ring, Scalar::one(ring->characteristic()))
                                    : Polynomial::zero(ring));
        ModuleElement h = ModuleElement::from_coords(std::move(coords));
        ModuleTerm lt = leading_term(h, order);
        basis.push_back(h.scaled(lt.coeff.inverse()));
        lt.coeff = Scalar::one(lt.coeff.characteristic());
        leads.push_back(lt);
    }
    buchberger_loop(basis, leads, big, order);
    std::vector<ModuleElement> out;
    for (const auto& h : basis) {
        bool f_zero = true;
        for (std::size_t e = 0; e < r && f_zero; ++e)
            if (!h.coord(e).is_zero()) f_zero = false;
        if (!f_zero) continue;
        std::vector<Polynomial> tail(h.coords().begin() + r, h.coords().end());
        out.push_back(ModuleElement::from_coords(std::move(tail)));
    }
    return out;
}

std::vector<ModuleElement> colon_by_element(const std::vector<ModuleElement>& rel_gens,
                                            const FreeModuleSpec& spec, const Polynomial& a) {
    const RingPtr& ring = a.ring();
    std::size_t r = spec.rank();
    std::vector<ModuleElement> out;
    if (a.is_zero()) {
        // (R : 0) is everything.
        for (std::size_t e = 0; e < r; ++e) {
            ModuleElement basis_e(ring, r);
            std::vector<Polynomial> coords = basis_e.coords();
            coords[e] = Polynomial::constant(ring, Scalar::one(ring->characteristic()));
            out.push_back(ModuleElement::from_coords(std::move(coords)));
        }
        return out;
    }
    std::vector<ModuleElement> list;
    for (std::size_t e = 0; e < r; ++e) {
        ModuleElement v(ring, r);
        std::vector<Polynomial> coords = v.coords();
        coords[e] = a;
        list.push_back(ModuleElement::from_coords(std::move(coords)));
    }
    for (const auto& g : rel_gens)
        if (!g.is_zero()) list.push_back(g);
    std::vector<ModuleElement> syz = syzygies(list, spec);
    for (const auto& s : syz) {
        std::vector<Polynomial> coords(s.coords().begin(), s.coords().begin() + r);
        ModuleElement v = ModuleElement::from_coords(std::move(coords));
        if (!v.is_zero()) out.push_back(v);
    }
    for (const auto& g : rel_gens)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

std::vector<ModuleElement> intersect(const std::vector<ModuleElement>& u_gens,
                                     const std::vector<ModuleElement>& v_gens,
                                     const FreeModuleSpec& spec) {
    std::vector<ModuleElement> us, vs;
    for (const auto& g : u_gens)
        if (!g.is_zero()) us.push_back(g);
    for (const auto& g : v_gens)
        if (!g.is_zero()) vs.push_back(g);
    if (us.empty() || vs.empty()) return {};
    std::vector<ModuleElement> list = us;
    list.insert(list.end(), vs.begin(), vs.end());
    std::vector<ModuleElement> out;
    for (const auto& s : syzygies(list, spec)) {
        ModuleElement w(us.front().ring(), spec.rank());
        for (std::size_t i = 0; i < us.size(); ++i) w += us[i].times(s.coord(i));
        if (!w.is_zero()) out.push_back(w);
    }
    return out;
}

GroebnerBasis saturate(const std::vector<ModuleElement>& rel_gens, const FreeModuleSpec& spec,
                       const std::vector<Polynomial>& bs) {
    require(!bs.empty(), "BadInput", "saturation by an empty ideal");
    GroebnerBasis cur = buchberger(rel_gens, spec);
    for (;;) {
        // (cur : b) = intersection over the generators b of bs.
        GroebnerBasis next = buchberger(colon_by_element(cur.gens, spec, bs.front()), spec);
        for (std::size_t t = 1; t < bs.size(); ++t) {
            GroebnerBasis gbt = buchberger(colon_by_element(cur.gens, spec, bs[t]), spec);
            next = buchberger(intersect(next.gens, gbt.gens, spec), spec);
        }
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

Dimension krull_dim_quotient(const RingPtr& ring, const GroebnerBasis& relations) {
    std::size_t r = relations.spec.rank();
    std::size_t nv = ring->nvars();
    // Staircase per position.
    std::vector<std::vector<Monomial>> stairs(r);
    for (const auto& lt : relations.leads) stairs[lt.pos].push_back(lt.mono);
    int best = -1;
    bool any_nonzero = false;
    for (std::size_t e = 0; e < r; ++e) {
        bool unit = false;
        for (const auto& m : stairs[e])
            if (m.is_one()) unit = true;
        if (unit) continue;  // this coordinate contributes the zero module
        any_nonzero = true;
        // Largest variable set V such that no staircase generator has
        // support inside V.
        for (uint32_t mask = 0; mask < (1u << nv); ++mask) {
            int size = __builtin_popcount(mask);
            if (size <= best) continue;
            bool independent = true;
            for (const auto& m : stairs[e]) {
                bool inside = true;
                for (std::size_t v = 0; v < nv && inside; ++v)
                    if (m.exponent(v) > 0 && !(mask & (1u << v))) inside = false;
                if (inside) {
                    independent = false;
                    break;
                }
            }
            if (independent) best = size;
        }
    }
    if (!any_nonzero) return Dimension::minus_infinity();
    return Dimension(best);
}

} // namespace mixmult
