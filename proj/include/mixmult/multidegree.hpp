#ifndef MIXMULT_MULTIDEGREE_HPP
#define MIXMULT_MULTIDEGREE_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace mixmult {

// Element of the grading group N^d (components may go negative transiently
// when subtracting; nonneg() tells whether the result is a genuine degree).
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> c) : c_(std::move(c)) {}
    MultiDegree(std::initializer_list<int> c) : c_(c) {}

    static MultiDegree zero(std::size_t d) { return MultiDegree(std::vector<int>(d, 0)); }
    static MultiDegree ones(std::size_t d) { return MultiDegree(std::vector<int>(d, 1)); }
    static MultiDegree unit(std::size_t d, std::size_t i) {
        std::vector<int> c(d, 0);
        c[i] = 1;
        return MultiDegree(std::move(c));
    }

    std::size_t dims() const { return c_.size(); }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    const std::vector<int>& components() const { return c_; }

    long total() const {
        long t = 0;
        for (int v : c_) t += v;
        return t;
    }

    bool nonneg() const {
        for (int v : c_)
            if (v < 0) return false;
        return true;
    }

    bool all_at_least(int k) const {
        for (int v : c_)
            if (v < k) return false;
        return true;
    }

    MultiDegree& operator+=(const MultiDegree& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    MultiDegree& operator-=(const MultiDegree& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
    friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }

    friend bool operator==(const MultiDegree& a, const MultiDegree& b) { return a.c_ == b.c_; }
    friend bool operator!=(const MultiDegree& a, const MultiDegree& b) { return !(a == b); }
    // Lexicographic; used only for deterministic container ordering.
    friend bool operator<(const MultiDegree& a, const MultiDegree& b) { return a.c_ < b.c_; }

    // Componentwise partial order.
    bool leq(const MultiDegree& o) const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] > o.c_[i]) return false;
        return true;
    }

    // Componentwise max, in place.
    void join(const MultiDegree& o) {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (o.c_[i] > c_[i]) c_[i] = o.c_[i];
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> c_;
};

struct MultiDegreeHash {
    std::size_t operator()(const MultiDegree& d) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : d.components()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace mixmult

#endif
