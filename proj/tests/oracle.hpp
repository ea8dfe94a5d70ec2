// Brute-force oracles used by the test suites. Everything here works by
// enumerating elements of finite groups, independently of the lattice-based
// implementation paths it cross-checks.
#pragma once

#include "crtkit/abelian.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using crtkit::GroupHom;
using crtkit::Int;
using crtkit::IntMatrix;
using crtkit::PresentedGroup;
using crtkit::Subgroup;

using ElementSet = std::set<std::vector<Int>>;

inline ElementSet all_elements(const PresentedGroup& g) {
    ElementSet out;
    for (auto& e : crtkit::enumerate_elements(g))
        out.insert(e);
    return out;
}

inline ElementSet brute_kernel(const GroupHom& f) {
    ElementSet out;
    for (auto& x : crtkit::enumerate_elements(f.domain())) {
        auto y = f.apply(x);
        bool zero = true;
        for (const Int& v : y)
            if (v != 0) {
                zero = false;
                break;
            }
        if (zero)
            out.insert(x);
    }
    return out;
}

inline ElementSet brute_image(const GroupHom& f) {
    ElementSet out;
    for (auto& x : crtkit::enumerate_elements(f.domain()))
        out.insert(f.apply(x));
    return out;
}

// Closure of the subgroup generators under addition (ambient must be finite).
inline ElementSet subgroup_elements(const Subgroup& s) {
    ElementSet out;
    out.insert(s.ambient.reduce(std::vector<Int>(s.ambient.rank())));
    for (;;) {
        ElementSet next = out;
        for (const auto& x : out)
            for (std::size_t j = 0; j < s.generators.cols(); ++j) {
                std::vector<Int> y = x;
                for (std::size_t i = 0; i < y.size(); ++i)
                    y[i] += s.generators.at(i, j);
                next.insert(s.ambient.reduce(std::move(y)));
            }
        if (next.size() == out.size())
            return out;
        out.swap(next);
    }
}

// Multiset of element orders; a complete isomorphism invariant for finite
// abelian groups, used to validate presentations extracted from subgroups.
inline std::map<Int, std::size_t> order_statistics(const ElementSet& elements,
                                                   const PresentedGroup& ambient) {
    std::map<Int, std::size_t> stats;
    for (const auto& x : elements) {
        Int ord = 1;
        std::vector<Int> acc = x;
        auto is_zero = [](const std::vector<Int>& v) {
            for (const Int& e : v)
                if (e != 0)
                    return false;
            return true;
        };
        while (!is_zero(acc)) {
            for (std::size_t i = 0; i < acc.size(); ++i)
                acc[i] += x[i];
            acc = ambient.reduce(std::move(acc));
            ++ord;
        }
        ++stats[ord];
    }
    return stats;
}

inline std::map<Int, std::size_t> order_statistics(const PresentedGroup& g) {
    return order_statistics(all_elements(g), g);
}

// Random finite canonical group with |G| <= max_order.
inline PresentedGroup random_finite_group(std::mt19937_64& rng, long long max_order) {
    std::uniform_int_distribution<int> rank_dist(0, 3);
    std::uniform_int_distribution<int> factor_dist(2, 9);
    int rank = rank_dist(rng);
    std::vector<Int> orders;
    Int total = 1;
    for (int i = 0; i < rank; ++i) {
        int d = factor_dist(rng);
        if (total * d > max_order)
            break;
        total *= d;
        orders.push_back(d);
    }
    return PresentedGroup(orders);
}

// Uniform random well-defined hom matrix: entry (i, j) must be a multiple of
// e_i / gcd(e_i, d_j).
inline GroupHom random_hom(std::mt19937_64& rng, const PresentedGroup& dom,
                           const PresentedGroup& cod) {
    IntMatrix m(cod.rank(), dom.rank());
    for (std::size_t j = 0; j < dom.rank(); ++j)
        for (std::size_t i = 0; i < cod.rank(); ++i) {
            Int e = cod.orders()[i];
            Int d = dom.orders()[j];
            if (e == 0) {
                // free codomain coordinate: torsion generators must map to 0
                if (d != 0)
                    continue;
                std::uniform_int_distribution<long long> pick(-4, 4);
                m.at(i, j) = pick(rng);
                continue;
            }
            Int step = e / boost::multiprecision::gcd(e, d);
            Int count = e / step; // possible values: 0, step, ..., e - step
            std::uniform_int_distribution<long long> pick(0, (long long)count - 1);
            m.at(i, j) = step * pick(rng);
        }
    return GroupHom(dom, cod, m);
}

} // namespace oracle
