#include <gtest/gtest.h>

#include <sstream>

#include "unitfrac/cli.hpp"
#include "unitfrac/json_io.hpp"

using namespace unitfrac;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExpandJson) {
  Invocation r = run({"expand", "1", "7", "--m", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["terms"], json::parse(R"(["8","57","3193","10192057","103878015699193"])"));
  EXPECT_EQ(j["ell"], "0");
  EXPECT_EQ(j["delta"], 0);
  Expansion e = j.get<Expansion>();
  EXPECT_EQ(e, expand(Rational::make(BigInt(1), BigInt(7)), 5));
}

TEST(Cli, ExpandReducesInput) {
  Invocation r = run({"expand", "18", "56", "--m", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["p"], "9");
  EXPECT_EQ(j["q"], "28");
  EXPECT_EQ(j["ell"], "8");
  EXPECT_EQ(j["delta"], 1);
  EXPECT_EQ(j["recurrence_start"], 2);
}

TEST(Cli, SylvesterCsv) {
  Invocation r = run({"--format", "csv", "expand", "1", "1", "--m", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("8,113423713055421844361000443\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"expand", "3", "2", "--m", "2"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"expand", "1", "0", "--m", "2"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"expand", "x", "2", "--m", "2"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"expand", "1", "1", "--m", "30", "--digit-guard", "50"}).code, cli::kExitGuard);
  EXPECT_EQ(run({"expand", "1", "1", "--m", "14"}).code, cli::kExitOk);
  EXPECT_EQ(run({"--digit-guard", "100", "expand", "1", "1", "--m", "10"}).code, cli::kExitGuard);
  EXPECT_EQ(run({"--no-guard", "--digit-guard", "100", "expand", "1", "1", "--m", "10"}).code, cli::kExitOk);
  EXPECT_EQ(run({"best", "9", "28", "--m", "3", "--budget", "10"}).code, cli::kExitInconclusive);
  EXPECT_EQ(run({"construct", "3"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"verify", "nope"}).code, cli::kExitDomain);
  EXPECT_EQ(run({}).code, cli::kExitDomain);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, BestReportsTie) {
  Invocation r = run({"best", "10", "17", "--m", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  UnderapproxResult res = json::parse(r.out).get<UnderapproxResult>();
  EXPECT_TRUE(res.greedy_is_best);
  EXPECT_FALSE(res.unique);
  EXPECT_EQ(res.optimal_tuples.size(), 2u);

  Invocation three = run({"best", "5", "13", "--m", "3", "--budget", "1000000"});
  ASSERT_EQ(three.code, 0) << three.err;
  EXPECT_TRUE(json::parse(three.out)["unique"].get<bool>());
}

TEST(Cli, ConstructSix) {
  Invocation r = run({"construct", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  Counterexample c = json::parse(r.out).get<Counterexample>();
  EXPECT_EQ(c.p, 7);
  EXPECT_EQ(c.q, 330);
  EXPECT_EQ(c.v, 8);
}

TEST(Cli, StepAndUpsilon) {
  Invocation s = run({"step", "1", "7", "--m", "1", "--N", "2"});
  ASSERT_EQ(s.code, 0) << s.err;
  StepReport report = json::parse(s.out).get<StepReport>();
  EXPECT_FALSE(report.cond_i);
  EXPECT_EQ(report.a_next, 57);

  Invocation u = run({"--format", "plain", "upsilon", "7", "54"});
  ASSERT_EQ(u.code, 0) << u.err;
  EXPECT_NE(u.out.find("ell: 2"), std::string::npos);
  EXPECT_NE(u.out.find("delta: 1"), std::string::npos);
}

TEST(Cli, VerifyLp11WithExpectedExceptions) {
  Invocation r = run({"verify", "lp11", "--q-max", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  VerificationReport report = j["reports"][0].get<VerificationReport>();
  EXPECT_EQ(report.failures.size(), 3u);
  EXPECT_EQ(report.expected_exceptions.size(), 2u);
}

TEST(Cli, VerifyOutputIndependentOfJobs) {
  for (std::string suite : {"lp1", "threshold", "construct"}) {
    Invocation a = run({"verify", suite, "--q-max", "80", "--k-max", "60", "--jobs", "1"});
    Invocation b = run({"verify", suite, "--q-max", "80", "--k-max", "60", "--jobs", "4"});
    EXPECT_EQ(a.code, 0) << suite;
    EXPECT_EQ(a.out, b.out) << suite;
  }
}

TEST(Cli, VerifyAllSuitesPass) {
  for (std::string suite : {"lp50", "lp12", "claims", "roots", "tables", "bridge"}) {
    Invocation r = run({"--format", "plain", "verify", suite, "--q-max", "100", "--j-max", "100", "--s-max", "200"});
    EXPECT_EQ(r.code, 0) << suite << ": " << r.err << r.out;
  }
}

TEST(Cli, ThresholdCsv) {
  Invocation r = run({"--format", "csv", "verify", "threshold", "--q-max", "17"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("10,17,3,true,false,2;12 3;4,"), std::string::npos);
}

TEST(Cli, PhiSamples) {
  Invocation r = run({"phi-samples", "--grid", "9", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], "i,x_num,x_den,phi_num,phi_den,x,phi");
  // x = 1/10 + i/10; Φ(1/n) = 1, Φ(2/5) = 1/(3 − 5/2) = 2
  EXPECT_EQ(rows[1], "0,1,10,1,1,0.100000000000,1.000000000000");
  EXPECT_EQ(rows[4], "3,2,5,2,1,0.400000000000,2.000000000000");
  EXPECT_EQ(rows[10], "9,1,1,1,1,1.000000000000,1.000000000000");

  Invocation j = run({"phi-samples", "--grid", "9"});
  EXPECT_EQ(json::parse(j.out).size(), 10u);
}
