#include "mixmult/ring.hpp"

#include <algorithm>

#include "mixmult/error.hpp"

namespace mixmult {

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the last variable where they differ decides;
    // the one with the larger exponent there is the smaller monomial.
    for (std::size_t v = a.nvars(); v-- > 0;) {
        int diff = a.exponent(v) - b.exponent(v);
        if (diff != 0) return diff > 0 ? -1 : 1;
    }
    return 0;
}

RingPtr GradedRing::make(uint32_t characteristic, std::vector<int> block_sizes,
                         std::vector<std::string> names) {
    require(!block_sizes.empty(), "BadRing", "at least one grading block required");
    for (int m : block_sizes) require(m >= 1, "BadRing", "block sizes must be positive");
    auto r = std::make_shared<GradedRing>();
    r->characteristic_ = characteristic;
    r->blocks_ = std::move(block_sizes);
    r->block_start_.resize(r->blocks_.size());
    for (std::size_t i = 0; i < r->blocks_.size(); ++i) {
        r->block_start_[i] = static_cast<int>(r->nvars_);
        r->nvars_ += r->blocks_[i];
        for (int j = 0; j < r->blocks_[i]; ++j) r->var_block_.push_back(static_cast<int>(i));
    }
    if (names.empty()) {
        for (std::size_t i = 0; i < r->blocks_.size(); ++i)
            for (int j = 0; j < r->blocks_[i]; ++j)
                names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
    require(names.size() == r->nvars_, "BadRing", "one name per variable required");
    r->names_ = std::move(names);
    return r;
}

int GradedRing::var_index(const std::string& name) const {
    for (std::size_t v = 0; v < nvars_; ++v)
        if (names_[v] == name) return static_cast<int>(v);
    return -1;
}

namespace {

// All ways to write total as an ordered sum of nparts non-negative integers.
void compositions_rec(int total, int nparts, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (nparts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = total; e >= 0; --e) {
        cur.push_back(e);
        compositions_rec(total - e, nparts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int total, int nparts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions_rec(total, nparts, cur, out);
    return out;
}

} // namespace

std::vector<Monomial> GradedRing::monomials_of_degree(const MultiDegree& n) const {
    std::vector<Monomial> out;
    if (!n.nonneg()) return out;
    std::vector<std::vector<std::vector<int>>> per_block;
    per_block.reserve(dims());
    for (std::size_t i = 0; i < dims(); ++i)
        per_block.push_back(compositions(n[i], blocks_[i]));
    std::vector<std::size_t> idx(dims(), 0);
    bool more = true;
    while (more) {
        std::vector<int> expo;
        expo.reserve(nvars_);
        for (std::size_t i = 0; i < dims(); ++i) {
            const auto& c = per_block[i][idx[i]];
            expo.insert(expo.end(), c.begin(), c.end());
        }
        out.emplace_back(std::move(expo));
        more = false;
        for (std::size_t i = dims(); i-- > 0;) {
            if (++idx[i] < per_block[i].size()) {
                more = true;
                break;
            }
            idx[i] = 0;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
    return out;
}

long GradedRing::count_monomials(const MultiDegree& n) const {
    if (!n.nonneg()) return 0;
    long total = 1;
    for (std::size_t i = 0; i < dims(); ++i) {
        // C(n_i + m_i - 1, m_i - 1)
        long c = 1;
        for (int j = 1; j <= blocks_[i] - 1; ++j) c = c * (n[i] + j) / j;
        total *= c;
    }
    return total;
}

} // namespace mixmult
