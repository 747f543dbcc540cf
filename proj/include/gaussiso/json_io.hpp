// Copyright 2026 The gaussiso Authors
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

#ifndef GAUSSISO_JSON_IO_HPP_
#define GAUSSISO_JSON_IO_HPP_

// Set descriptors:
//   {"type":"intervals","items":[[lo,hi],...]}   endpoints may be "-inf"/"inf"
//   {"type":"halfspace","omega":[...],"s":x}
//   {"type":"slab","dim":n,"profile":[[lo,hi],...]}
//   {"type":"ball","dim":n,"radius":r}

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gaussiso/functionals.hpp"
#include "gaussiso/optimizer.hpp"
#include "gaussiso/sets.hpp"

namespace gaussiso {

// Throws Error(kParse) on malformed input and kInvalidArgument on values the
// set constructors reject.
GaussianSet ParseSet(const nlohmann::json& j);
GaussianSet ParseSetText(std::string_view text);

nlohmann::json SetToJson(const GaussianSet& set);

// Non-finite reals become null.
nlohmann::json RealToJson(double x);

nlohmann::json BundleToJson(const QuantityBundle& bundle);
nlohmann::json MinimizeToJson(const MinimizeResult& result,
                              const FunctionalParams& params);
nlohmann::json SweepToJson(const std::vector<MassSweepRow>& rows);

// printf("%.17g"), with "inf", "-inf" and "nan" spelled out.
std::string FormatReal(double x);

}  // namespace gaussiso

#endif  // GAUSSISO_JSON_IO_HPP_
