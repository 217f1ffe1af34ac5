#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace ringlat {

enum class PolyTag {
    simplex,                // {x >= 0 : x1 + x2 <= 1}
    crosspolytope,          // {|x1| + |x2| <= 1}
    square,                 // [0,1]^2
    weighted_simplex,       // {x >= 0 : l1 x1 + l2 x2 <= 1}
    weighted_crosspolytope, // {l1|x1| + l2|x2| <= 1}
};

// One of the convex bodies whose covering radius the 2-d engine computes.
struct Polytope2 {
    PolyTag tag = PolyTag::simplex;
    std::array<double, 2> weights{1.0, 1.0};

    static Polytope2 simplex() { return {PolyTag::simplex, {1, 1}}; }
    static Polytope2 crosspolytope() { return {PolyTag::crosspolytope, {1, 1}}; }
    static Polytope2 square() { return {PolyTag::square, {1, 1}}; }
    static Polytope2 weighted_simplex(double l1, double l2) {
        if (!(l1 > 0) || !(l2 > 0)) throw std::invalid_argument("Polytope2: weights must be positive");
        return {PolyTag::weighted_simplex, {l1, l2}};
    }
    static Polytope2 weighted_crosspolytope(double l1, double l2) {
        if (!(l1 > 0) || !(l2 > 0)) throw std::invalid_argument("Polytope2: weights must be positive");
        return {PolyTag::weighted_crosspolytope, {l1, l2}};
    }

    double volume() const {
        switch (tag) {
            case PolyTag::simplex: return 0.5;
            case PolyTag::crosspolytope: return 2.0;
            case PolyTag::square: return 1.0;
            case PolyTag::weighted_simplex: return 0.5 / (weights[0] * weights[1]);
            case PolyTag::weighted_crosspolytope: return 2.0 / (weights[0] * weights[1]);
        }
        return 0.0;
    }

    // CCW vertex list of r * P.  S is long double or an exact rational type;
    // weights convert exactly (every double is a dyadic rational).
    template <class S>
    std::vector<std::array<S, 2>> vertices(const S& r) const {
        const S zero(0);
        switch (tag) {
            case PolyTag::simplex:
                return {{zero, zero}, {r, zero}, {zero, r}};
            case PolyTag::crosspolytope:
                return {{r, zero}, {zero, r}, {-r, zero}, {zero, -r}};
            case PolyTag::square:
                return {{zero, zero}, {r, zero}, {r, r}, {zero, r}};
            case PolyTag::weighted_simplex: {
                S v1 = r / S(weights[0]), v2 = r / S(weights[1]);
                return {{zero, zero}, {v1, zero}, {zero, v2}};
            }
            case PolyTag::weighted_crosspolytope: {
                S v1 = r / S(weights[0]), v2 = r / S(weights[1]);
                return {{v1, zero}, {zero, v2}, {-v1, zero}, {zero, -v2}};
            }
        }
        return {};
    }
};

} // namespace ringlat
