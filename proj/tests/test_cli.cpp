#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ringstd/cli.hpp"
#include "ringstd/errors.hpp"
#include "support.hpp"

using namespace ringstd;

namespace {

const std::string kRoot = RINGSTD_SOURCE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  return s.substr(b);
}

}  // namespace

TEST_CASE("parse a full problem") {
  const char* text = R"(# comment
ring ZZ;
vars t | x, y;
order w(-1,3,3):lex;
prime 2;
gens: 2 - t, 1 + t^6*x + t^4*y + t^7*x^2 + t^5*x*y + t^8*y^2;
query: 2*x;
)";
  Problem p = parse_problem(text);
  CHECK(p.ring == Ring::integers());
  CHECK(p.t_vars == std::vector<std::string>{"t"});
  CHECK(p.x_vars == std::vector<std::string>{"x", "y"});
  CHECK(p.gens.size() == 2);
  CHECK(p.query);
  CHECK(*p.prime == 2);
  CHECK(p.space->ordering().describe() == "w(-1,3,3):lex");
  CHECK(format_poly(p.gens[1]) == "t^5*x*y + 1 + t^7*x^2 + t^4*y + t^8*y^2 + t^6*x");
  CHECK(format_lead(p.gens[1]) == "t^5*x*y");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_problem("ring QQ;\nvars x, y, x;\ngens: x;\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(parse_problem("ring QQ;\nvars t | x, y;\norder w(-1,1):lex;\ngens: x;\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring QQ;\nvars x;\ngens: x + z;\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring QQ;\nvars x;\ngens: x +;\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring RR;\nvars x;\ngens: x;\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring QQ;\nvars t | x;\norder w(1,1):lex;\ngens: x;\n"), ParseError);
}

TEST_CASE("orderings by spec") {
  const std::vector<std::string> names{"t", "x", "y"};
  CHECK(parse_ordering("lex(y>x)", names, 1)->describe() == "lex(2>1)");
  CHECK(parse_ordering("lex(2>1)", names, 1)->describe() == "lex(2>1)");
  CHECK(parse_ordering("deglex pot", names, 1, 2)->describe() == "deglex pot");
  auto w = parse_ordering("w(-1,1/2,3):degrevlex", names, 1);
  CHECK(w->describe() == "w(-1,1/2,3):degrevlex");
  CHECK(parse_ordering(w->describe(), names, 1)->describe() == w->describe());
  CHECK_THROWS(parse_ordering("lex(x>q)", names, 1));
  CHECK(parse_rationals("3, -1/2") == std::vector<Coeff>{3, Coeff(-1, 2)});
}

TEST_CASE("print and parse round trip") {
  rtest::Rng rng(4);
  for (Ring R : {Ring::integers(), Ring::rationals(), Ring::integers_mod(6)}) {
    auto s = rtest::space(R, make_weighted({-1, 2, 1}, make_degrevlex(3, 1, 2)), {"t", "x", "y"});
    for (int trial = 0; trial < 100; ++trial) {
      const Poly f = rtest::random_poly(s, rng, 5, 3);
      const std::string once = format_poly(f);
      CHECK(parse_poly(once, s) == f);
      CHECK(format_poly(parse_poly(once, s)) == once);
    }
  }
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"std", kRoot + "/problems/does_not_exist.txt"}).code == kExitUsage);
  CHECK(run({"nf", kRoot + "/problems/tropical_t.txt"}).code == kExitUsage);
  auto b = run({"std", "--budget", "1", kRoot + "/problems/zz_xy.txt"});
  CHECK(b.code == kExitBudget);
  CHECK(b.err.find("budget") != std::string::npos);
  CHECK(run({"--version"}).code == kExitOk);
}

TEST_CASE("cli budget from the environment") {
  ::setenv("RINGSTD_BUDGET", "1", 1);
  auto b = run({"std", kRoot + "/problems/zz_xy.txt"});
  ::unsetenv("RINGSTD_BUDGET");
  CHECK(b.code == kExitBudget);
  auto ok = run({"std", kRoot + "/problems/zz_xy.txt"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("budget: 10000") != std::string::npos);
}

TEST_CASE("golden outputs are byte stable") {
  ::unsetenv("RINGSTD_BUDGET");
  std::ifstream manifest(kRoot + "/tests/golden/manifest.txt");
  REQUIRE(manifest);
  std::string line;
  int cases = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    const std::string name = trim(line.substr(0, bar));
    std::istringstream words(line.substr(bar + 1));
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w.starts_with("problems/") ? kRoot + "/" + w : w);
    CAPTURE(name);
    const Run first = run(args);
    const Run second = run(args);
    CHECK(first.code == kExitOk);
    CHECK(first.out == second.out);
    CHECK(first.out == slurp(kRoot + "/tests/golden/" + name));
    ++cases;
  }
  CHECK(cases >= 20);
}
