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

#include "gaussiso/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "gaussiso/error.hpp"

namespace gaussiso {
namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void ParseFail(const std::string& what) {
  Fail(ErrorCode::kParse, "set descriptor: " + what);
}

const json& Field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) ParseFail(std::string("missing \"") + key + "\"");
  return *it;
}

double Endpoint(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "-inf") return -kInf;
    if (s == "inf" || s == "+inf") return kInf;
  }
  ParseFail("endpoint must be a number, \"-inf\" or \"inf\"");
}

double Real(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_number()) ParseFail(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

int Dim(const json& j) {
  const json& v = Field(j, "dim");
  if (!v.is_number_integer()) ParseFail("\"dim\" must be an integer");
  return v.get<int>();
}

IntervalUnion1D Intervals(const json& items) {
  if (!items.is_array()) ParseFail("interval list must be an array");
  std::vector<Interval> raw;
  for (const json& item : items) {
    if (!item.is_array() || item.size() != 2) {
      ParseFail("each interval must be a [lo, hi] pair");
    }
    raw.push_back({Endpoint(item[0]), Endpoint(item[1])});
  }
  return IntervalUnion1D::Normalize(std::move(raw));
}

json EndpointToJson(double x) {
  if (x == -kInf) return "-inf";
  if (x == kInf) return "inf";
  return x;
}

json IntervalsToJson(const IntervalUnion1D& set) {
  json items = json::array();
  for (const Interval& iv : set.intervals()) {
    items.push_back({EndpointToJson(iv.lo), EndpointToJson(iv.hi)});
  }
  return items;
}

json RealsToJson(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(RealToJson(x));
  return out;
}

}  // namespace

GaussianSet ParseSet(const json& j) {
  if (!j.is_object()) ParseFail("expected an object");
  const json& type = Field(j, "type");
  if (!type.is_string()) ParseFail("\"type\" must be a string");
  const auto& t = type.get_ref<const std::string&>();
  if (t == "intervals") return Intervals(Field(j, "items"));
  if (t == "halfspace") {
    const json& omega = Field(j, "omega");
    if (!omega.is_array() || omega.empty()) {
      ParseFail("\"omega\" must be a non-empty array");
    }
    std::vector<double> w;
    for (const json& c : omega) {
      if (!c.is_number()) ParseFail("\"omega\" entries must be numbers");
      w.push_back(c.get<double>());
    }
    return HalfSpace::Make(std::move(w), Real(j, "s"));
  }
  if (t == "slab") return SlabSet::Make(Dim(j), Intervals(Field(j, "profile")));
  if (t == "ball") return CenteredBall::Make(Dim(j), Real(j, "radius"));
  ParseFail("unknown type \"" + t + "\"");
}

GaussianSet ParseSetText(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) ParseFail("invalid JSON");
  return ParseSet(j);
}

json SetToJson(const GaussianSet& set) {
  return std::visit(
      [](const auto& rep) -> json {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, IntervalUnion1D>) {
          return {{"type", "intervals"}, {"items", IntervalsToJson(rep)}};
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          return {{"type", "halfspace"}, {"omega", rep.omega}, {"s", rep.s}};
        } else if constexpr (std::is_same_v<T, SlabSet>) {
          return {{"type", "slab"},
                  {"dim", rep.dim},
                  {"profile", IntervalsToJson(rep.profile)}};
        } else {
          return {{"type", "ball"}, {"dim", rep.dim}, {"radius", rep.radius}};
        }
      },
      set.rep());
}

json RealToJson(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

json BundleToJson(const QuantityBundle& b) {
  json out = {{"s", RealToJson(b.s)},
              {"gamma", RealToJson(b.gamma)},
              {"perimeter", RealToJson(b.perimeter)},
              {"barycenter", RealsToJson(b.barycenter)},
              {"b_s", RealToJson(b.b_s)},
              {"deficit", RealToJson(b.deficit)},
              {"beta", RealToJson(b.beta)},
              {"alpha_hat", RealToJson(b.alpha_hat)},
              {"excess", RealToJson(b.excess)},
              {"notes", b.notes}};
  if (b.target_s) out["target_s"] = RealToJson(*b.target_s);
  if (b.mass_mismatch) out["mass_mismatch"] = RealToJson(*b.mass_mismatch);
  return out;
}

json MinimizeToJson(const MinimizeResult& r, const FunctionalParams& params) {
  json starts = json::array();
  for (const StartDiagnostics& d : r.starts) {
    starts.push_back({{"template", d.layout.Name()},
                      {"origin", d.origin},
                      {"start_value", RealToJson(d.start_value)},
                      {"final_value", RealToJson(d.final_value)},
                      {"iterations", d.iterations},
                      {"restarts", d.restarts},
                      {"converged", d.converged},
                      {"final_set", IntervalsToJson(d.final_set)}});
  }
  const GaussianSet best(r.best);
  return {{"params",
           {{"s", RealToJson(params.s)},
            {"eps", RealToJson(params.eps)},
            {"lambda", RealToJson(params.lambda_pen)}}},
          {"best", SetToJson(best)},
          {"best_value", RealToJson(r.best_value)},
          {"best_gamma", RealToJson(Measure(best))},
          {"best_start", r.best_start},
          {"half_line_value", RealToJson(r.half_line_value)},
          {"best_is_half_line", r.best_is_half_line},
          {"half_line_beaten", r.half_line_beaten},
          {"failed_starts", r.failed_starts},
          {"starts", starts}};
}

json SweepToJson(const std::vector<MassSweepRow>& rows) {
  json out = json::array();
  for (const MassSweepRow& r : rows) {
    out.push_back({{"s", RealToJson(r.s)},
                   {"a_s", RealToJson(r.a_s)},
                   {"gap", RealToJson(r.gap)},
                   {"deficit", RealToJson(r.deficit)},
                   {"log_deficit", RealToJson(r.log_deficit)},
                   {"beta", RealToJson(r.beta)},
                   {"ratio", RealToJson(r.ratio)}});
  }
  return out;
}

std::string FormatReal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace gaussiso
