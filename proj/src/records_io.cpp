// Copyright 2026 The homfid Authors
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

#include "records_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "error.hpp"

#ifdef HOMFID_HAVE_ZLIB
#include <zlib.h>
#endif

namespace homfid::io {

namespace {

bool has_gz_suffix(const std::string &path) {
    return path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

std::string slurp(const std::string &path) {
    if (has_gz_suffix(path)) {
#ifdef HOMFID_HAVE_ZLIB
        gzFile f = gzopen(path.c_str(), "rb");
        if (!f) raise(errc::io, "cannot open " + path);
        std::string out;
        char buf[1 << 16];
        int n;
        while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, (size_t)n);
        const bool bad = n < 0;
        gzclose(f);
        if (bad) raise(errc::io, "gzip read error on " + path);
        return out;
#else
        raise(errc::io, "gzip support not built in; cannot read " + path);
#endif
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) raise(errc::io, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spill(const std::string &path, const std::string &content) {
    if (has_gz_suffix(path)) {
#ifdef HOMFID_HAVE_ZLIB
        gzFile f = gzopen(path.c_str(), "wb");
        if (!f) raise(errc::io, "cannot open " + path + " for writing");
        const int n = gzwrite(f, content.data(), (unsigned)content.size());
        gzclose(f);
        if (n != (int)content.size()) raise(errc::io, "gzip write error on " + path);
        return;
#else
        raise(errc::io, "gzip support not built in; cannot write " + path);
#endif
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(errc::io, "cannot open " + path + " for writing");
    f << content;
    if (!f) raise(errc::io, "write error on " + path);
}

// Parses one full double, rejecting trailing garbage and non-finite values.
double parse_double(const std::string &s, const std::string &path, long line) {
    const char *c = s.c_str();
    char *end = nullptr;
    const double v = std::strtod(c, &end);
    if (end == c || *end != '\0' || !std::isfinite(v)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s:%ld: not a finite number: '%s'", path.c_str(), line,
                      s.c_str());
        raise(errc::parse, buf);
    }
    return v;
}

struct CsvRow {
    std::string a, b;
    long line;
};

std::vector<CsvRow> parse_two_column_csv(const std::string &path, const char *expected_header) {
    const std::string content = slurp(path);
    std::vector<CsvRow> rows;
    std::istringstream in(content);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (lineno == 1) {
            if (line != expected_header) {
                raise(errc::parse, path + ": expected header '" + expected_header + "', got '" +
                                       line + "'");
            }
            continue;
        }
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s:%ld: expected two comma-separated fields",
                          path.c_str(), lineno);
            raise(errc::parse, buf);
        }
        rows.push_back({line.substr(0, comma), line.substr(comma + 1), lineno});
    }
    return rows;
}

}  // namespace

std::vector<sim::QuadratureRecord> read_records_csv(const std::string &path) {
    const auto rows = parse_two_column_csv(path, "theta,xprime");
    std::vector<sim::QuadratureRecord> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        const double theta = parse_double(row.a, path, row.line);
        const double xprime = parse_double(row.b, path, row.line);
        if (theta < 0.0 || theta >= 2.0 * M_PI) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s:%ld: theta=%g outside [0, 2 pi)", path.c_str(),
                          row.line, theta);
            raise(errc::parse, buf);
        }
        const auto [t, x] = sim::fold_phase(theta, xprime);
        out.push_back({t, x});
    }
    return out;
}

void write_records_csv(const std::vector<sim::QuadratureRecord> &records,
                       const std::string &path) {
    std::string content = "theta,xprime\n";
    char buf[80];
    for (const auto &r : records) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r.theta, r.xprime);
        content += buf;
    }
    spill(path, content);
}

sim::PhaseSchedule read_schedule_csv(const std::string &path) {
    const auto rows = parse_two_column_csv(path, "theta,count");
    std::vector<sim::PhaseBin> bins;
    for (const auto &row : rows) {
        const double theta = parse_double(row.a, path, row.line);
        const double count_d = parse_double(row.b, path, row.line);
        const long long count = (long long)count_d;
        if (count_d != (double)count || count < 0) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s:%ld: count must be a nonnegative integer",
                          path.c_str(), row.line);
            raise(errc::parse, buf);
        }
        bins.push_back({theta, count});
    }
    if (bins.empty()) raise(errc::parse, path + ": no schedule bins");

    bool centered = true;
    const double width = M_PI / (double)bins.size();
    for (size_t b = 0; b < bins.size(); ++b) {
        if (std::fabs(bins[b].theta - (b + 0.5) * width) > 1e-9) centered = false;
    }
    if (!centered) return sim::PhaseSchedule::grid(std::move(bins));
    bool equal_counts = true;
    for (const auto &b : bins) {
        if (std::llabs(b.count - bins.front().count) > 1) equal_counts = false;
    }
    return sim::PhaseSchedule::from_bins(std::move(bins),
                                         equal_counts ? sim::PhaseSchedule::Kind::Uniform
                                                      : sim::PhaseSchedule::Kind::Density);
}

void write_schedule_csv(const sim::PhaseSchedule &schedule, const std::string &path) {
    std::string content = "theta,count\n";
    char buf[80];
    for (const auto &b : schedule.bins()) {
        std::snprintf(buf, sizeof buf, "%.17g,%lld\n", b.theta, b.count);
        content += buf;
    }
    spill(path, content);
}

}  // namespace homfid::io
