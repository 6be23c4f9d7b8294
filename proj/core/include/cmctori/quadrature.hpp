#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "cmctori/errors.hpp"

namespace cmct {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,  //
    0.949107912342758524526189684047851,  //
    0.864864423359769072789712788640926,  //
    0.741531185599394439863864773280788,  //
    0.586087235467691130294144838258730,  //
    0.405845151377397166906606412076961,  //
    0.207784955007898467600689403773245,  //
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,  //
    0.063092092629978553290700663189204,  //
    0.104790010322250183839876322541518,  //
    0.140653259715525918745189590510238,  //
    0.169004726639267902826583426598550,  //
    0.190350578064785409913256402421014,  //
    0.204432940075298892414161999234649,  //
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,  //
    0.279705391489276667901467771423780,  //
    0.381830050505118944950369775488975,  //
    0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double gauss = kGaussWeights[3] * fc;
    double kronrod = kKronrodWeights[7] * fc;
    for (int i = 0; i < 7; ++i) {
        const double off = half * kGK15Nodes[i];
        const double fsum = f(mid - off) + f(mid + off);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
    }
    value = kronrod * half;
    // QUADPACK-style sharpened estimate, never larger than the raw difference.
    const double diff = std::fabs(kronrod - gauss) * std::fabs(half);
    error = std::min(diff, std::pow(200.0 * diff, 1.5));
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
///
/// Intervals are bisected until the local error estimate meets the tolerance
/// prorated by interval length. Throws QuadratureFailure when the interval
/// budget or depth cap is exhausted before the tolerance is met.
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, double abs_tol,
                              int max_depth = 60, std::size_t max_intervals = 200000) {
    struct Interval {
        double a, b;
        int depth;
    };

    QuadResult out;
    if (a == b) return out;

    const double total_len = std::fabs(b - a);
    std::vector<Interval> stack;
    stack.push_back({a, b, 0});

    std::size_t processed = 0;
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        if (++processed > max_intervals)
            throw QuadratureFailure("adaptive quadrature: interval budget exhausted");

        double v = 0.0, e = 0.0;
        detail::gk15(f, iv.a, iv.b, v, e);
        out.evaluations += 15;

        const double local_tol = abs_tol * (std::fabs(iv.b - iv.a) / total_len);
        if (e <= local_tol || iv.depth >= max_depth) {
            if (e > local_tol && iv.depth >= max_depth && e > abs_tol)
                throw QuadratureFailure("adaptive quadrature: depth cap hit before tolerance");
            out.value += v;
            out.error += e;
            continue;
        }
        const double mid = 0.5 * (iv.a + iv.b);
        stack.push_back({iv.a, mid, iv.depth + 1});
        stack.push_back({mid, iv.b, iv.depth + 1});
    }
    return out;
}

}  // namespace cmct
