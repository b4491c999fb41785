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

// File formats.
//
// Record files: CSV with header `theta,xprime`, one record per line, radians
// and dimensionless quadrature values, decimal point, no locale. On read the
// phases must lie in [0, 2 pi) and are folded onto [0, pi) via
// x_{theta+pi} = -x_theta. Paths ending in .gz are compressed transparently.
//
// Schedule files: CSV with header `theta,count`. Equally spaced bin centers
// with unequal counts are read back as a density schedule, equal counts as a
// uniform one; any other strictly increasing layout is a plain grid.

#ifndef HOMFID_RECORDS_IO_HPP
#define HOMFID_RECORDS_IO_HPP

#include <string>
#include <vector>

#include "simulator.hpp"

namespace homfid::io {

std::vector<sim::QuadratureRecord> read_records_csv(const std::string &path);
void write_records_csv(const std::vector<sim::QuadratureRecord> &records,
                       const std::string &path);

sim::PhaseSchedule read_schedule_csv(const std::string &path);
void write_schedule_csv(const sim::PhaseSchedule &schedule, const std::string &path);

}  // namespace homfid::io

#endif
