// Copyright 2026 The zxparam Authors
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

#ifndef ZXPARAM_REPORT_HPP
#define ZXPARAM_REPORT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "zxparam/reduction.hpp"
#include "zxparam/verifier.hpp"

namespace zxparam {

class ReportError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// {params_in, params_out, rows: [{name, terms: [[param, sign], ...], const_pi_over_2}], eliminated}
void to_json(nlohmann::json& j, const ReductionMap& m);
/// Throws ReportError on a malformed document.
void from_json(const nlohmann::json& j, ReductionMap& m);

void to_json(nlohmann::json& j, const ProportionalityReport& r);
void to_json(nlohmann::json& j, const CertificateReport& r);

std::string dump_reduction(const ReductionMap& m);
ReductionMap parse_reduction(std::string_view text);

}  // namespace zxparam

#endif  // ZXPARAM_REPORT_HPP
