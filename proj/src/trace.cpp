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

#include "gatemonlab/trace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gatemonlab {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
};

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV input");
    table.header = split_line(line);
    table.columns.resize(table.header.size());
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_line(line);
        if (fields.size() != table.header.size()) {
            throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(table.header.size()) + " fields, got " +
                                     std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            std::size_t pos = 0;
            double v = 0;
            try {
                v = std::stod(fields[c], &pos);
            } catch (const std::exception&) {
                throw std::runtime_error("CSV line " + std::to_string(line_no) +
                                         ": non-numeric field '" + fields[c] + "'");
            }
            table.columns[c].push_back(v);
        }
    }
    return table;
}

}  // namespace

std::string to_csv(const Trace& t) {
    std::string out = t.x_name + "," + t.y_name + "\n";
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        out += format_double(t.x[i]) + "," + format_double(t.y[i]) + "\n";
    }
    return out;
}

std::string to_csv(const Sweep2D& s) {
    std::string out = s.x_name;
    for (const auto& name : s.col_names) out += "," + name;
    out += "\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        out += format_double(s.x[i]);
        for (const auto& col : s.cols) out += "," + format_double(col[i]);
        out += "\n";
    }
    return out;
}

std::string to_csv(const ComplexTrace& t) {
    std::string out = "f_GHz,re,im\n";
    for (std::size_t i = 0; i < t.f_GHz.size(); ++i) {
        out += format_double(t.f_GHz[i]) + "," + format_double(t.s21[i].real()) + "," +
               format_double(t.s21[i].imag()) + "\n";
    }
    return out;
}

Trace trace_from_csv(const std::string& text) {
    const auto table = parse_csv(text);
    if (table.header.size() != 2) throw std::runtime_error("trace CSV must have 2 columns");
    Trace t;
    t.x_name = table.header[0];
    t.y_name = table.header[1];
    t.x = table.columns[0];
    t.y = table.columns[1];
    return t;
}

Sweep2D sweep2d_from_csv(const std::string& text) {
    const auto table = parse_csv(text);
    if (table.header.size() < 2) throw std::runtime_error("sweep CSV must have >= 2 columns");
    Sweep2D s;
    s.x_name = table.header[0];
    s.col_names.assign(table.header.begin() + 1, table.header.end());
    s.x = table.columns[0];
    s.cols.assign(table.columns.begin() + 1, table.columns.end());
    return s;
}

ComplexTrace complex_trace_from_csv(const std::string& text) {
    const auto table = parse_csv(text);
    if (table.header.size() < 3) throw std::runtime_error("complex trace CSV needs f,re,im columns");
    ComplexTrace t;
    t.f_GHz = table.columns[0];
    t.s21.reserve(t.f_GHz.size());
    for (std::size_t i = 0; i < t.f_GHz.size(); ++i) {
        t.s21.emplace_back(table.columns[1][i], table.columns[2][i]);
    }
    if (table.header.size() >= 4) t.variance = table.columns[3];
    return t;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> linspace(double start, double stop, int points) {
    if (points < 2) throw std::invalid_argument("linspace needs >= 2 points");
    std::vector<double> v(points);
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) v[i] = start + step * i;
    v.back() = stop;
    return v;
}

}  // namespace gatemonlab
