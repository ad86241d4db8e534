#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using orbitcat::cli::run;

namespace
{

struct Result
{
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json(std::vector<std::string> args)
{
  args.push_back("--json");
  auto r = call(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

} // namespace

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"ar-quiver", "--dynkin", "X9"}).code, 2);
  EXPECT_EQ(call({"hom", "--dynkin", "A3", "--from", "Q_a", "--to", "P_b"})
                .code,
            2);
  EXPECT_EQ(call({"orbit", "nope", "--dynkin", "A3"}).code, 2);
  EXPECT_EQ(call({"ar-quiver", "--dynkin", "A3", "--m", "0"}).code, 2);
  EXPECT_EQ(call({"ar-quiver", "--dynkin", "A3", "--format", "yaml"}).code,
            2);
}

TEST(Cli, Help)
{
  auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, ArQuiver)
{
  auto j = json({"ar-quiver", "--dynkin", "A3"});
  EXPECT_EQ(j["vertices"].size(), 3u);
  EXPECT_EQ(j["modules"].size(), 6u);
  auto dot = call({"ar-quiver", "--dynkin", "A3", "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
}

TEST(Cli, Hom)
{
  auto j = json({"hom", "--dynkin", "A3", "--from", "P_a", "--to", "P_a"});
  EXPECT_EQ(j["dim"], 1);
}

TEST(Cli, OrbitHom)
{
  auto j = json({"orbit", "hom", "--dynkin", "A3", "--m", "2", "--from",
                 "S_a", "--to", "P_b[1]"});
  EXPECT_TRUE(j.contains("components"));
  EXPECT_TRUE(j.contains("total"));
}

TEST(Cli, TiltingEnumerate)
{
  auto j = json({"tilting", "enumerate", "--dynkin", "A3", "--m", "2"});
  EXPECT_EQ(j["count"], 14);
}

TEST(Cli, TiltingCheck)
{
  EXPECT_EQ(call({"tilting", "check", "--dynkin", "A3", "--summands",
                  "P_a,P_c,S_a"})
                .code,
            0);
  EXPECT_EQ(
      call({"tilting", "check", "--dynkin", "A3", "--summands", "P_a,P_c"})
          .code,
      1);
}

TEST(Cli, ResourceCap)
{
  auto r = call({"tilting", "enumerate", "--dynkin", "D4", "--search-budget",
                 "10"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, VerifyReportSchema)
{
  auto r = call({"verify", "cy", "--dynkin", "A3", "--m", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("checks"));
  for (auto const &c : j["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_EQ(c["status"], "pass");
    EXPECT_FALSE(c.contains("wall_ms"));
  }
}

TEST(Cli, Deterministic)
{
  std::vector<std::string> args = {"verify", "all", "--dynkin", "A3",
                                   "--m", "2", "--tilting", "P_a,P_c,S_a",
                                   "--json"};
  auto a = call(args);
  auto b = call(args);
  auto args4 = args;
  args4.insert(args4.end(), {"--threads", "4"});
  auto c = call(args4);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, Mutate)
{
  auto j = json({"mutate", "--dynkin", "A3", "--tilting", "P_a,P_c,S_a",
                 "--at", "S_a"});
  EXPECT_NE(j.dump().find("P_b"), std::string::npos);
}

TEST(Cli, ExportGabriel)
{
  auto r = call({"export", "gabriel", "--dynkin", "A3", "--m", "3",
                 "--tilting", "P_a,P_c,S_a"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, OutFile)
{
  std::string path = ::testing::TempDir() + "orbitcat_out.txt";
  auto r = call({"ar-quiver", "--dynkin", "A2", "--out", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto direct = call({"ar-quiver", "--dynkin", "A2"});
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), direct.out);
  EXPECT_EQ(
      call({"ar-quiver", "--dynkin", "A2", "--out", "/nonexistent/x"}).code,
      1);
}
