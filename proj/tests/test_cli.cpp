#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "posetpoly/cli.hpp"

using posetpoly::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval human output") {
  Result r = call({"eval", "X"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("x_free: no") != std::string::npos);
  REQUIRE(r.out.find("family_f: yes") != std::string::npos);
  REQUIRE(r.out.find("linear_extensions: 4") != std::string::npos);
  REQUIRE(r.out.find("main_le ok") != std::string::npos);
  REQUIRE(r.out.find("equal no") != std::string::npos);
}

TEST_CASE("eval json output") {
  Result r = call({"eval", "--json", "A(2) < C(1)"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["n"] == 3);
  REQUIRE(j["x_free"] == true);
  REQUIRE(j["s_order"] == nlohmann::json({"1", "5", "8", "4"}));
  REQUIRE(j["s_chain"] == nlohmann::json({"1", "5", "8", "4"}));
  REQUIRE(j["s0_order"] == nlohmann::json({"0", "1", "4", "4"}));
  REQUIRE(j["s0_chain"] == nlohmann::json({"0", "1", "3", "2"}));
  REQUIRE(j["verdicts"]["main_le"] == true);
  REQUIRE(j["verdicts"]["equal"] == true);
  REQUIRE(!j.contains("f_order"));
}

TEST_CASE("eval with the oracle") {
  Result r = call({"eval", "--json", "--oracle", "A(2) < C(1)"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["f_order"] == nlohmann::json({"1", "5", "8", "5", "1"}));
  REQUIRE(j["f_chain"] == nlohmann::json({"1", "5", "8", "5", "1"}));
}

TEST_CASE("eval csv output") {
  Result r = call({"eval", "--csv", "C(2)"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row));
  REQUIRE(header.rfind("description,n,x_free", 0) == 0);
  REQUIRE(row.find("1;3;3;1") != std::string::npos);
}

TEST_CASE("family command") {
  Result r = call({"family", "X + C(2)"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("Parallel(Ordinal(A(2), C(1), A(2)), C(2))") != std::string::npos);
  // '<' binds tighter than '+', so the minimal expression needs no parens.
  REQUIRE(r.out.find("expression: A(2) < C(1) < A(2) + C(2)") != std::string::npos);
}

TEST_CASE("family spots non-members") {
  // X with an extra element above one minimum only: connected, ordinally
  // indecomposable and not x-free.
  const char* path = "cli_nonmember.txt";
  {
    std::ofstream f(path);
    f << "6\n0 2\n1 2\n2 3\n2 4\n0 5\n";
  }
  Result r = call({"family", std::string("file:") + path});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("not in F") != std::string::npos);
  std::remove(path);
}

TEST_CASE("family keeps x-free posets whole") {
  // x-free posets are leaves even when they would split further.
  Result r = call({"family", "C(3) + A(2)"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("poset{5: 0<1 1<2}") != std::string::npos);
}

TEST_CASE("verify single expression") {
  Result r = call({"verify", "X"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("all checks passed") != std::string::npos);
  REQUIRE(r.out.find("FAIL") == std::string::npos);

  Result rec = call({"verify", "A(2) < (C(1) + C(1))"});
  REQUIRE(rec.code == 0);
  REQUIRE(rec.out.find("recursion.ordinal_order_total") != std::string::npos);
  REQUIRE(rec.out.find("recursion.product_order") != std::string::npos);
  REQUIRE(rec.out.find("recursion.chain_structural") != std::string::npos);
}

TEST_CASE("verify catalog with oracle") {
  Result r = call({"verify", "--all", "3", "--oracle"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("all checks passed") != std::string::npos);
  REQUIRE(r.out.find("oracle.order.simplex_polys_match") != std::string::npos);
}

TEST_CASE("scan catalog") {
  Result r = call({"scan", "--all", "3"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("summary: 9 posets") != std::string::npos);
  REQUIRE(r.out.find("0:1 1:1 2:2 3:5") != std::string::npos);
  // Byte-deterministic.
  REQUIRE(call({"scan", "--all", "3"}).out == r.out);

  Result zero = call({"scan", "--all", "0"});
  REQUIRE(zero.code == 0);
  REQUIRE(zero.out.find("summary: 1 posets") != std::string::npos);
}

TEST_CASE("scan csv keeps the stream clean") {
  Result r = call({"scan", "--all", "2", "--csv"});
  REQUIRE(r.code == 0);
  // Every stdout line is CSV: header plus one row per poset.
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    REQUIRE(line.find("summary") == std::string::npos);
    ++count;
  }
  REQUIRE(count == 1 + 4);
  REQUIRE(r.err.find("summary: 4 posets") != std::string::npos);
}

TEST_CASE("verify output is deterministic") {
  Result a = call({"verify", "--all", "4"});
  Result b = call({"verify", "--all", "4"});
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
}

TEST_CASE("verify accepts file atoms") {
  const char* path = "cli_verify_file.txt";
  {
    std::ofstream f(path);
    f << "3\n0 1\n2 1\n";
  }
  Result r = call({"verify", std::string("file:") + path + " < C(1)"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("all checks passed") != std::string::npos);
  std::remove(path);
}

TEST_CASE("scan random is deterministic and seeded") {
  Result r = call({"scan", "--random", "5", "4", "99", "--json"});
  REQUIRE(r.code == 0);
  REQUIRE(call({"scan", "--random", "5", "4", "99", "--json"}).out == r.out);
  REQUIRE(call({"scan", "--random", "5", "4", "100", "--json"}).out != r.out);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t records = 0;
  bool saw_summary = false;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    if (j.contains("summary"))
      saw_summary = true;
    else
      ++records;
  }
  REQUIRE(records == 5);
  REQUIRE(saw_summary);
}

TEST_CASE("usage errors exit with 2") {
  REQUIRE(call({"eval", "A(2"}).code == 2);
  REQUIRE(call({"eval", "A(2) + $"}).code == 2);
  REQUIRE(call({"eval", "A(30)"}).code == 2);        // above the --max-n bound
  REQUIRE(call({"eval", "A(9999)"}).code == 2);      // above the hard element limit
  REQUIRE(call({"scan"}).code == 2);                 // needs --all or --random
  REQUIRE(call({"scan", "--all", "2", "--random", "1", "2", "3"}).code == 2);
  REQUIRE(call({"verify"}).code == 2);
  REQUIRE(call({"verify", "--all", "9"}).code == 2);  // catalog cap without --force
  REQUIRE(call({"nonsense"}).code == 2);
  REQUIRE(call({}).code == 2);
}

TEST_CASE("max-n can be raised") {
  REQUIRE(call({"eval", "C(13)"}).code == 2);
  Result r = call({"eval", "C(13)", "--max-n", "13", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["n"] == 13);
  REQUIRE(j["verdicts"]["equal"] == true);
}

TEST_CASE("help exits cleanly") {
  REQUIRE(call({"--help"}).code == 0);
  REQUIRE(call({"eval", "--help"}).code == 0);
}
