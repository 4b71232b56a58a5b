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

#ifndef GATEMONLAB_TRACE_HPP
#define GATEMONLAB_TRACE_HPP

#include <complex>
#include <string>
#include <vector>

namespace gatemonlab {

// Sampled real measurement record: one independent axis, one value column.
struct Trace {
    std::string x_name = "x";
    std::string y_name = "y";
    std::vector<double> x;
    std::vector<double> y;
};

// Multi-column sweep record (e.g. both dressed branches vs bare qubit
// frequency, or a (f_Q, T1) table vs gate voltage).
struct Sweep2D {
    std::string x_name = "x";
    std::vector<std::string> col_names;
    std::vector<double> x;
    std::vector<std::vector<double>> cols;  // cols[c][i], same length as x
};

// Complex S21 record with optional per-point variance.
struct ComplexTrace {
    std::vector<double> f_GHz;
    std::vector<std::complex<double>> s21;
    std::vector<double> variance;  // empty if not provided
};

std::string to_csv(const Trace& t);
std::string to_csv(const Sweep2D& s);
std::string to_csv(const ComplexTrace& t);  // columns f_GHz, re, im

Trace trace_from_csv(const std::string& text);
Sweep2D sweep2d_from_csv(const std::string& text);
ComplexTrace complex_trace_from_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Evenly spaced axis with `points` samples covering [start, stop].
std::vector<double> linspace(double start, double stop, int points);

std::string format_double(double v);

}  // namespace gatemonlab

#endif  // GATEMONLAB_TRACE_HPP
