// SPDX-License-Identifier: Apache-2.0
#include "mraseed/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mraseed::quad {
namespace {

// Sorted panel edges covering [lo, hi], split at breaks and capped in width.
std::vector<double> panel_edges(double lo, double hi, std::vector<double> breaks,
                                double max_width) {
    if (!(hi > lo)) return {};
    if (!(max_width > 0.0)) throw std::invalid_argument("quad: max_width must be positive");
    std::vector<double> cuts{lo, hi};
    for (double b : breaks)
        if (b > lo && b < hi) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<double> edges{cuts.front()};
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const double a = cuts[i - 1], b = cuts[i];
        const auto pieces = static_cast<long>(std::ceil((b - a) / max_width));
        const long n = std::max(1L, pieces);
        for (long k = 1; k < n; ++k) edges.push_back(a + (b - a) * static_cast<double>(k) / n);
        edges.push_back(b);
    }
    return edges;
}

template <int N>
void append_gauss(NodeSet& out, double a, double b) {
    using rule = boost::math::quadrature::gauss<double, N>;
    const auto& xs = rule::abscissa();
    const auto& ws = rule::weights();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    // Boost stores the non-negative half of a symmetric rule; x = 0 appears once for odd N.
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0.0) {
            out.x.push_back(mid);
            out.w.push_back(half * ws[i]);
            continue;
        }
        out.x.push_back(mid - half * xs[i]);
        out.w.push_back(half * ws[i]);
        out.x.push_back(mid + half * xs[i]);
        out.w.push_back(half * ws[i]);
    }
}

}  // namespace

NodeSet composite_gauss(double lo, double hi, std::vector<double> breaks, double max_width) {
    return composite_gauss(lo, hi, std::move(breaks), max_width, 20);
}

NodeSet composite_gauss(double lo, double hi, std::vector<double> breaks, double max_width,
                        int order) {
    NodeSet out;
    const auto edges = panel_edges(lo, hi, std::move(breaks), max_width);
    if (edges.size() < 2) return out;
    out.x.reserve((edges.size() - 1) * static_cast<std::size_t>(order));
    out.w.reserve(out.x.capacity());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        switch (order) {
            case 10: append_gauss<10>(out, edges[i - 1], edges[i]); break;
            case 20: append_gauss<20>(out, edges[i - 1], edges[i]); break;
            default: throw std::invalid_argument("quad: unsupported Gauss order");
        }
    }
    return out;
}

Estimate adaptive(const std::function<cplx(double)>& f, double lo, double hi,
                  std::vector<double> breaks, double max_width, double rel_tol) {
    using gk = boost::math::quadrature::gauss_kronrod<double, 21>;
    Estimate total{cplx{}, 0.0};
    const auto edges = panel_edges(lo, hi, std::move(breaks), max_width);
    for (std::size_t i = 1; i < edges.size(); ++i) {
        double err_re = 0.0, err_im = 0.0;
        const double re = gk::integrate([&](double t) { return f(t).real(); }, edges[i - 1],
                                        edges[i], 12, rel_tol, &err_re);
        const double im = gk::integrate([&](double t) { return f(t).imag(); }, edges[i - 1],
                                        edges[i], 12, rel_tol, &err_im);
        total.value += cplx{re, im};
        total.error += err_re + err_im;
    }
    return total;
}

}  // namespace mraseed::quad
