#pragma once

#include <gmpxx.h>

#include <cassert>
#include <vector>

namespace wed {

// Exact signed integer arithmetic; never overflows, never rounds.
using ExactWeight = mpz_class;

// Per-vertex weights.  A vertex is either infinite (a real sentinel, not a
// big number) or carries an exact finite value.  Any code that would add an
// infinite weight into a sum is wrong by contract, hence the asserts.
class WeightMap {
public:
    WeightMap() = default;
    explicit WeightMap(int n) : value_(n, 0), inf_(n, 0) {}

    static WeightMap ones(int n) {
        WeightMap w(n);
        for (int v = 0; v < n; ++v) w.value_[v] = 1;
        return w;
    }

    int size() const { return static_cast<int>(value_.size()); }
    bool is_inf(int v) const { return inf_[v] != 0; }

    const ExactWeight& at(int v) const {
        assert(!is_inf(v) && "finite weight required");
        return value_[v];
    }

    void set(int v, ExactWeight w) {
        value_[v] = std::move(w);
        inf_[v] = 0;
    }

    void set_inf(int v) { inf_[v] = 1; }

    // Sum over all finite-weight vertices.
    ExactWeight sum_finite() const {
        ExactWeight s = 0;
        for (int v = 0; v < size(); ++v)
            if (!is_inf(v)) s += value_[v];
        return s;
    }

    int finite_count() const {
        int c = 0;
        for (int v = 0; v < size(); ++v)
            if (!is_inf(v)) ++c;
        return c;
    }

private:
    std::vector<ExactWeight> value_;
    std::vector<char> inf_;
};

} // namespace wed
