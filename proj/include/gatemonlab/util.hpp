// Copyright 2026 The gatemonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATEMONLAB_UTIL_HPP
#define GATEMONLAB_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "gatemonlab/constants.hpp"

namespace gatemonlab {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

inline LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    LinearFit f;
    if (denom != 0.0) {
        f.slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
        f.intercept = (sy - f.slope * sx) / static_cast<double>(n);
    } else {
        f.intercept = n ? sy / static_cast<double>(n) : 0.0;
    }
    return f;
}

inline double mean(std::span<const double> v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

inline double stddev(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// Removes 2*pi jumps in a phase sequence, in place.
inline void unwrap_phase(std::vector<double>& phase) {
    for (std::size_t i = 1; i < phase.size(); ++i) {
        double d = phase[i] - phase[i - 1];
        while (d > kPi) {
            phase[i] -= kTwoPi;
            d = phase[i] - phase[i - 1];
        }
        while (d < -kPi) {
            phase[i] += kTwoPi;
            d = phase[i] - phase[i - 1];
        }
    }
}

// Golden-section search for the minimum of a unimodal 1-d function on [a, b].
inline double golden_minimize(const std::function<double(double)>& f, double a, double b,
                              double tol = 1e-12, int max_iter = 200) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > tol * (1.0 + std::abs(a) + std::abs(b)); ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// FNV-1a 64-bit hash; used for config hashes and file checksums in run
// manifests where only equality of re-runs matters.
inline std::uint64_t fnv1a64(std::span<const char> bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(std::span<const char>(s.data(), s.size()));
}

// Evaluates fn(i) for i in [0, n) on a small worker pool. Each point is
// independent; results land at their own index so assembly order is fixed
// regardless of scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    const unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                                static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    if (workers <= 1 || n < 4) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
        }));
    }
    for (auto& f : futures) f.get();
    return out;
}

}  // namespace gatemonlab

#endif  // GATEMONLAB_UTIL_HPP
