// Copyright 2026 The gmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMAGIC_STATS_HPP_
#define GMAGIC_STATS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gmagic {

struct LinearFit {
    double intercept;
    double slope;
    double r_squared;
    double residual_sum;  // sum of squared residuals
};

/// Least-squares line y = a + b x.
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - intercept - slope * x[i];
        rss += r * r;
    }
    const double r2 = syy > 0.0 ? 1.0 - rss / syy : 1.0;
    return LinearFit{intercept, slope, r2, rss};
}

/// Fit y = a + b log(x).
inline LinearFit log_fit(std::span<const double> x, std::span<const double> y) {
    std::vector<double> lx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) lx[i] = std::log(x[i]);
    return linear_fit(lx, y);
}

/// Kolmogorov-Smirnov distance between samples and a reference CDF.
inline double ks_distance(std::vector<double> samples, const std::function<double(double)> &cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::abs(f - lo), std::abs(f - hi)));
    }
    return d;
}

}  // namespace gmagic

#endif  // GMAGIC_STATS_HPP_
