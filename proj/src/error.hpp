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

#ifndef HOMFID_ERROR_HPP
#define HOMFID_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homfid {

enum class errc {
    invalid_argument = 1,
    threshold,          // detection-efficiency lower bound violated
    unsupported_order,  // kernel order outside the closed-form set
    truncation,         // Fock cutoff insufficient for the requested state
    empty_data,
    parse,
    io,
    envelope,           // rejection-sampling envelope failure
    underpopulated_bin,
    misuse,             // operation applied to an incompatible kernel/estimate
    data_quality,
    degenerate,
    dimension_mismatch,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace homfid

#endif
