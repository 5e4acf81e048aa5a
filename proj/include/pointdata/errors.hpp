// SPDX-License-Identifier: Apache-2.0
//
// pointdata: a toolkit for pooled site-specific radio channel statistics
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pointdata {

// Error categories carried by every toolkit exception. Parse errors identify
// their location (line/column) in the message text.
enum class Errc {
    // point-data table parsing
    UnknownColumn,
    MissingRequiredColumn,
    NonNumericValue,
    DuplicateKey,
    EmptyTable,
    // key-value documents (metadata sidecars, baselines, site maps)
    MissingField,
    InvalidValue,
    // statistics
    NonPositiveFrequency,
    TooFewPoints,
    DistanceBelowReference,
    AllTapsBelowThreshold,
    DegenerateSpectrum,
    EmptyLobeSet,
    NonPositiveSpread,
    EmptyInput,
    UnknownParameter,
    // pooling
    DuplicateKeyAcrossSources,
    AllSourcesRejected,
    // site maps
    UnknownPoint,
    // precondition violations not covered by a dedicated code
    InvalidArgument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace pointdata
