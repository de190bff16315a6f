// Copyright 2026 The dlash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlash/cli/app.hpp"
#include "dlash/cli/expr.hpp"
#include "dlash/verify/random.hpp"

namespace {

using namespace dlash::cli;
using dlash::dl::DLSum;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"dlash"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Parser, ParsesSumsOfWords) {
  ExprAst ast = parse_expression("Q^6 Q^2 x[2] + Q^4x[2]");
  ASSERT_EQ(ast.terms.size(), 2u);
  EXPECT_EQ(ast.terms[0].word, (dlash::dl::Word{6, 2}));
  EXPECT_EQ(ast.terms[0].cls.name, "x");
  EXPECT_EQ(ast.terms[0].cls.degree, 2);
  EXPECT_EQ(ast.terms[1].word, (dlash::dl::Word{4}));
  EXPECT_EQ(to_sum(ast), DLSum({"x", 2}, {{6, 2}, {4}}));
  EXPECT_EQ(to_sum(parse_expression("Q ^ -1 y_2[-3]")), DLSum({"y_2", -3}, {{-1}}));
  EXPECT_TRUE(to_sum(parse_expression("0")).is_zero());
  EXPECT_TRUE(to_sum(parse_expression("Q^3 x[1] + Q^3 x[1]")).is_zero());
}

TEST(Parser, ReportsOffsetAndExpectedTokens) {
  try {
    parse_expression("Q^x");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 2u);
    EXPECT_EQ(e.expected(), (std::set<std::string>{"integer"}));
  }
  try {
    parse_expression("Q^2 x[1] -");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 9u);
    EXPECT_EQ(e.expected(), (std::set<std::string>{"'+'", "end of input"}));
  }
  try {
    parse_expression("Q^2 x 1]");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_EQ(e.expected(), (std::set<std::string>{"'['"}));
  }
  EXPECT_THROW(parse_expression(""), SyntaxError);
  EXPECT_THROW(parse_expression("Q^99999999999 x[1]"), SyntaxError);
}

TEST(Parser, MixedClassesAreRejected) {
  EXPECT_THROW(to_sum(parse_expression("x[1] + y[1]")), dlash::Error);
  EXPECT_THROW(to_sum(parse_expression("x[1] + x[2]")), dlash::Error);
}

TEST(Parser, RenderingRoundTrips) {
  dlash::verify::Rng rng(0x5eed'c101);
  for (int k = 0; k < 1000; ++k) {
    DLSum s = dlash::verify::random_dl_sum(rng);
    EXPECT_EQ(to_sum(parse_expression(s.to_string())), s) << s.to_string();
  }
}

TEST(Cli, Adem) {
  CliRun r = run({"adem", "6", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "Q^6 Q^2 = Q^5 Q^3\n");
  EXPECT_EQ(run({"adem", "4", "2"}).code, kExitFailure);
}

TEST(Cli, Reduce) {
  CliRun r = run({"reduce", "Q^6 Q^2 x[2] + Q^4 x[2]"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "Q^4 x[2] + Q^6 Q^2 x[2] = Q^4 x[2] + Q^5 Q^3 x[2]\n");
}

TEST(Cli, SyntaxErrorPointsAtTheOffset) {
  CliRun r = run({"reduce", "Q^x"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("offset 2"), std::string::npos);
  EXPECT_NE(r.err.find("\n  Q^x\n    ^\n"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"adem", "6"}).code, kExitUsage);
  EXPECT_EQ(run({"--degree-bound", "0", "conjugate", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"conjugate", "abc"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, WindowErrorsExitOne) {
  CliRun r = run({"--degree-bound", "8", "conjugate", "5"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, Conjugate) {
  CliRun r = run({"--quiet", "conjugate", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "zbar_1 = z1\nzbar_2 = z1^3 + z2\nzbar_3 = z1 z2^2 + z1^4 z2 + z1^7 + z3\n");
}

TEST(Cli, ZetaActionMatchesGolden) {
  CliRun r = run({"zeta-action", "1", "--degree-bound", "8"});
  EXPECT_EQ(r.code, kExitOk);
  std::ifstream in(std::string(DLASH_GOLDEN_DIR) + "/cli_zeta_action_1_d8.txt");
  ASSERT_TRUE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(r.out, golden.str());
}

TEST(Cli, IsDeterministic) {
  for (auto args : {std::vector<const char*>{"--json", "symmetry", "1", "10"},
                    std::vector<const char*>{"steinberger", "3"},
                    std::vector<const char*>{"--degree-bound", "10", "nishida"}}) {
    std::vector<const char*> argv{"dlash"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream a, b, err;
    EXPECT_EQ(run_cli(static_cast<int>(argv.size()), argv.data(), a, err), kExitOk) << err.str();
    EXPECT_EQ(run_cli(static_cast<int>(argv.size()), argv.data(), b, err), kExitOk);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST(Cli, JsonEnvelope) {
  CliRun r = run({"--json", "adem", "6", "2"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "adem");
  EXPECT_EQ(j["degree_bound"], 32);
  EXPECT_EQ(j["rhs"], nlohmann::json::parse("[[5, 3]]"));

  CliRun s = run({"--json", "--degree-bound", "12", "steinberger", "3"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  auto k = nlohmann::json::parse(s.out);
  EXPECT_EQ(k["schema"], 1);
  EXPECT_EQ(k["degree_bound"], 12);
  EXPECT_TRUE(k["passed"].get<bool>());
  EXPECT_EQ(k["reports"].size(), 2u);
}

}  // namespace
