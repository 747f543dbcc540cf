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
#include <limits>

#include <gtest/gtest.h>

#include "gaussiso/error.hpp"

namespace gaussiso {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ErrorCode CodeOf(std::string_view text) {
  try {
    ParseSetText(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kIo;
}

TEST(ParseSet, Intervals) {
  const GaussianSet s =
      ParseSetText(R"({"type":"intervals","items":[["-inf",-1],[0.5,"inf"]]})");
  const auto* u = s.get_if<IntervalUnion1D>();
  ASSERT_NE(u, nullptr);
  ASSERT_EQ(u->size(), 2u);
  EXPECT_EQ(u->intervals()[0], (Interval{-kInf, -1.0}));
  EXPECT_EQ(u->intervals()[1], (Interval{0.5, kInf}));
}

TEST(ParseSet, OtherKinds) {
  const GaussianSet h = ParseSetText(R"({"type":"halfspace","omega":[0,1],"s":-1})");
  EXPECT_EQ(h.kind(), "halfspace");
  EXPECT_EQ(h.dim(), 2);
  const GaussianSet slab =
      ParseSetText(R"({"type":"slab","dim":3,"profile":[[-1,1]]})");
  EXPECT_EQ(slab.kind(), "slab");
  const GaussianSet ball = ParseSetText(R"({"type":"ball","dim":4,"radius":2})");
  EXPECT_EQ(ball.get_if<CenteredBall>()->radius, 2.0);
}

TEST(ParseSet, Errors) {
  EXPECT_EQ(CodeOf("{"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf("[]"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf(R"({"type":"cube"})"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf(R"({"type":"intervals"})"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf(R"({"type":"intervals","items":[[1]]})"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf(R"({"type":"intervals","items":[["x",1]]})"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf(R"({"type":"intervals","items":[[2,1]]})"),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf(R"({"type":"halfspace","omega":[2],"s":0})"),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf(R"({"type":"ball","dim":1.5,"radius":1})"), ErrorCode::kParse);
}

TEST(SetToJson, RoundTrip) {
  const char* inputs[] = {
      R"({"type":"intervals","items":[["-inf",-1.25],[0.5,0.75],[2,"inf"]]})",
      R"({"type":"halfspace","omega":[0.6,0.8],"s":0.1})",
      R"({"type":"slab","dim":5,"profile":[["-inf",0.3]]})",
      R"({"type":"ball","dim":7,"radius":2.5})",
  };
  for (const char* text : inputs) {
    const GaussianSet a = ParseSetText(text);
    const GaussianSet b = ParseSet(SetToJson(a));
    EXPECT_EQ(SetToJson(a), SetToJson(b)) << text;
    EXPECT_EQ(Measure(a), Measure(b)) << text;
  }
}

TEST(BundleToJson, NonFiniteBecomesNull) {
  QuantityBundle q;
  q.deficit = std::nan("");
  q.excess = kInf;
  const nlohmann::json j = BundleToJson(q);
  EXPECT_TRUE(j["deficit"].is_null());
  EXPECT_TRUE(j["excess"].is_null());
  EXPECT_FALSE(j.contains("target_s"));
}

TEST(FormatReal, SeventeenDigits) {
  EXPECT_EQ(FormatReal(0.1), "0.10000000000000001");
  EXPECT_EQ(FormatReal(-kInf), "-inf");
  EXPECT_EQ(FormatReal(std::nan("")), "nan");
  EXPECT_EQ(std::stod(FormatReal(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace gaussiso
