#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TRIPLES_CLI_PATH) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kType = "--n1 2 --n2 1 --d1 3 --d2 0";

}  // namespace

TEST(Cli, SubcommandsSucceed) {
  for (const char* sub : {"bounds", "walls", "chambers", "flips", "report"}) {
    EXPECT_EQ(run(std::string(sub) + " " + kType).code, 0) << sub;
  }
  EXPECT_EQ(run("higgs --p 2 --q 1 --a -1 --b 0").code, 0);
  EXPECT_EQ(run("selfcheck --max-rank 3 --max-degree 1 --genus 2").code, 0);
}

TEST(Cli, CodimFailuresExitThree) {
  EXPECT_EQ(run("flips --n1 1 --n2 2 --d1 0 --d2 -4 --genus 3").code, 3);
  EXPECT_EQ(run("selfcheck --max-rank 3 --max-degree 2 --genus 3").code, 3);
}

TEST(Cli, CsvWalls) {
  const auto r = run("report " + kType + " --format csv_walls");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3,2,2,na\n3,1,4,1\n9,2,2,inf\n6,1,4,na\n");
}

TEST(Cli, JsonWalls) {
  const auto r = run("walls " + kType + " --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"num\""), std::string::npos);
}

TEST(Cli, DomainErrorsExitTwo) {
  EXPECT_EQ(run("flips " + kType + " --alpha 2").code, 2);
  EXPECT_EQ(run("flips " + kType + " --alpha 3/2").code, 2);
  EXPECT_EQ(run("walls " + kType + " --window-lo 1 --window-hi 4").code, 2);
  EXPECT_EQ(run("walls --n1 0 --n2 1 --d1 0 --d2 0").code, 2);
  EXPECT_EQ(run("walls " + kType + " --genus 1").code, 2);
  EXPECT_EQ(run("higgs --p 1 --q 1 --a 0 --b 0 --vanishing delta").code, 2);
  EXPECT_EQ(run("walls --n1 2").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}

TEST(Cli, FlipsAtAWall) {
  const auto r = run("flips " + kType + " --alpha 3 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Plus"), std::string::npos);
}
