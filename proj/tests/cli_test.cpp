#include <gtest/gtest.h>

#include <random>

#include "cli_cases.hpp"
#include "test_support.hpp"

using namespace ltrop;

namespace {

const std::string kFixtures = LTROP_FIXTURES;
const std::string kCli = LTROP_CLI;

}  // namespace

TEST(Cli, GoldenFilesAndExitCodes) {
  auto cases = cli_cases::load(kFixtures);
  ASSERT_GE(cases.size(), 20u);
  for (const auto& c : cases) {
    auto o = cli_cases::run(kCli, c.args);
    EXPECT_EQ(o.exit_code, c.exit_code) << c.name << "\n" << o.out;
    EXPECT_EQ(o.out, cli_cases::slurp(cli_cases::golden_path(kFixtures, c))) << c.name;
  }
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const auto& c : cli_cases::load(kFixtures)) {
    auto a = cli_cases::run(kCli, c.args), b = cli_cases::run(kCli, c.args);
    EXPECT_EQ(a.out, b.out) << c.name;
    EXPECT_EQ(a.exit_code, b.exit_code) << c.name;
  }
}

TEST(Cli, ReadmeExamples) {
  auto m = cli_cases::run(kCli, "trop-member --vars x,y --ideal 'y^2-x^3' --w 2,3 --json");
  EXPECT_EQ(m.exit_code, 0);
  EXPECT_NE(m.out.find("\"member\":true"), std::string::npos);
  auto l = cli_cases::run(kCli, "lift --vars x,y --ideal 'y^2-x^3' --w 2,3 --N 10 --json");
  EXPECT_EQ(l.exit_code, 0);
  EXPECT_NE(l.out.find("\"point\":[\"t^(2)\",\"t^(3)\"]"), std::string::npos);
  auto n = cli_cases::run(kCli, "trop-member --vars x,y --ideal 'x+y' --w 1,2");
  EXPECT_EQ(n.exit_code, 1);
  EXPECT_NE(n.out.find("member: false"), std::string::npos);
}

TEST(Cli, MalformedArgumentsExitWithUsage) {
  for (const char* args : {"", "nonsense", "lift --vars x,y", "lift --vars x,y --ideal 'y^2-x^3'", "cone --vars x,y --ideal 'y^2' --w 1,a",
                           "lift --vars x,y --ideal 'y^2-x^3' --w 2,3 --mode laurent", "trop-member --vars x,y --ideal @/nonexistent --w 1,1",
                           "trop-member --vars x,y --ideal '1+x' --w 1,1", "lift --vars x,y --ideal 'y-x' --w 1,1 --N 0"}) {
    auto o = cli_cases::run(kCli, args);
    EXPECT_EQ(o.exit_code, 2) << args << "\n" << o.out;
  }
}

TEST(Cli, ParsersOnlyRaiseUsageErrors) {
  // Random byte soup drawn from the grammar's alphabet.
  const std::string alphabet = "xyzt0123456789+-*/^()., sqrtinfO";
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 24);
  Ring ring = support::R("x,y,z");
  int accepted = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    for (std::size_t k = len(rng); k > 0; --k) s.push_back(alphabet[pick(rng)]);
    auto attempt = [&](auto&& fn) {
      try {
        fn();
        ++accepted;
      } catch (const UsageError&) {
      } catch (const std::exception& e) {
        ADD_FAILURE() << "unexpected exception for '" << s << "': " << e.what();
      }
    };
    attempt([&] { (void)parse_polynomial(s, ring); });
    attempt([&] { (void)parse_series(s, SeriesMode::Hahn); });
    attempt([&] { (void)parse_ext_weight(s); });
    attempt([&] { (void)parse_vars(s); });
  }
  EXPECT_GT(accepted, 0);
}
