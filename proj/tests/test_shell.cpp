#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mmv/closedforms.hpp"
#include "mmv/shell.hpp"
#include "ast_gen.hpp"
#include "test_util.hpp"

using namespace mmv;

namespace {

struct Out {
  int rc;
  std::string out, err;
};

Out cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int rc = run(args, o, e);
  return {rc, o.str(), e.str()};
}

std::filesystem::path tmp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mmv_test_" + std::to_string(::getpid()) + "_" + name);
}


}  // namespace

TEST_CASE("parser examples") {
  const Expr m = parse_expr("M(1,2,-3)");
  CHECK(m.kind == Expr::Kind::Value);
  CHECK(m.atom == atom_M(Index{{1, 2, 3}, {1, 1, -1}}));
  CHECK(parse_expr("Tconv(2|1,1,1)").atom == atom_convT({2}, {1, 1, 1}));
  CHECK(parse_expr("psi(1,2;3)").atom == atom_psi({1, 2}, 3));
  CHECK(parse_expr("zeta(3)").kind == Expr::Kind::Const);
  CHECK(parse_expr("zeta(-1,3)").atom == atom_alt(AltIndex{{1, 3}, {-1, 1}}));
  const Sym z = to_sym(parse_expr("2*T(3) - psi(1;2)"));
  CHECK(testutil::close(eval_sym(z, 40), Real(0), "1e-40"));
  CHECK(to_sym(parse_expr("3/6*(log2 + 1)")) == sym_q(Q(1, 2)) * (sym_atom(atom_log2()) + sym_q(1)));
}

TEST_CASE("syntax errors carry an offset") {
  for (const char* s : {"M(1,2", "2*", "T(3)) ", "foo(2)", "M(,2)", "1/0", "2 $ 3", ""}) {
    CHECK_THROWS_AS(parse_expr(s), ParseError);
  }
  try {
    parse_expr("T(3) + foo(2)");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 7);
  }
}

TEST_CASE("arity and signature errors are domain errors") {
  for (const char* s : {"M(2,1)", "T(-2)", "T(1)", "zeta(1)", "zeta(-1,1)", "psi(2;1)", "psi(2)", "T(2;3)",
                        "M(2|2)", "Tconv(2)", "M(0,2)"}) {
    CHECK_THROWS_AS(parse_expr(s), DomainError);
  }
}

TEST_CASE("render gives canonical text") {
  CHECK(render(parse_expr("(1+2)")) == "1 + 2");
  CHECK(render(parse_expr("1-(2-3)")) == "1 - (2 - 3)");
  CHECK(render(parse_expr("(1-2)-3")) == "1 - 2 - 3");
  CHECK(render(parse_expr("2*(log2+pi)")) == "2*(log2 + pi)");
  CHECK(render(parse_expr("-(-T(2))")) == "--T(2)");
  CHECK(render(parse_expr("M( 1 , -2 )")) == "M(1,-2)");
}

TEST_CASE("parse inverts render on 1000 random trees") {
  testutil::AstGen g(2024);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = g.gen(5);
    const std::string s = render(e);
    const Expr back = parse_expr(s);
    CHECK_MESSAGE(back == e, s);
    CHECK(render(back) == s);
  }
}

TEST_CASE("CLI eval matches the library digits") {
  const Out o = cli({"eval", "T(1,2) + log2*S(1,2)", "--digits", "40"});
  CHECK(o.rc == kOk);
  const Sym s = to_sym(parse_expr("T(1,2) + log2*S(1,2)"));
  CHECK(o.out == format_truncated(eval_sym(s, 40), 40) + "\n");
  const Out pi2 = cli({"eval", "M(-2)", "--digits", "30"});
  CHECK(pi2.out == "2.467401100272339654708622749969 (±1ulp)\n");
}

TEST_CASE("digits from the environment, flag wins") {
  ::setenv("MMV_KIT_DIGITS", "12", 1);
  CHECK(cli({"eval", "pi"}).out == "3.141592653589 (±1ulp)\n");
  CHECK(cli({"eval", "pi", "--digits", "6"}).out == "3.141592 (±1ulp)\n");
  ::unsetenv("MMV_KIT_DIGITS");
}

TEST_CASE("CLI dual and product") {
  CHECK(cli({"dual", "M(-1,1,2)"}).out == "M(-1,-3) - M(-1,3) + M(-4)\n");
  CHECK(cli({"dual", "S(1,2)"}).rc == kDomainError);
  const Out st = cli({"product", "--mode", "st", "M(-2)", "M(3)"});
  CHECK(st.rc == kOk);
  CHECK(st.out == render(stuffle_indices(Index{{2}, {-1}}, Index{{3}, {1}})) + "\n");
  const Out sh = cli({"product", "M(-2)", "M(-2)"});
  CHECK(sh.out == render(to_indices(shuffle(testutil::W("0-"), testutil::W("0-")))) + "\n");
  CHECK(cli({"product", "--mode", "xx", "M(-2)", "M(-2)"}).rc == kUsage);
  CHECK(cli({"product", "M(-2)", "log2"}).rc == kDomainError);
}

TEST_CASE("CLI dim emits the relation schema") {
  const Out o = cli({"dim", "--weight", "4"});
  REQUIRE(o.rc == kOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j.at("weight") == 4);
  CHECK(j.at("bound") == 4);
  CHECK(j.at("fibonacci_bound") == 4);
  CHECK(j.at("table1") == 4);
  CHECK(j.at("rank").is_number_integer());
  CHECK(j.at("generators").size() == 18);
  for (const auto& g : j.at("generators")) CHECK(g.is_string());
  CHECK(j.at("relations").is_array());
  CHECK(cli({"dim", "--weight", "0"}).rc == kDomainError);
  CHECK(cli({"dim", "--weight", "99"}).rc == kDomainError);
}

TEST_CASE("CLI relations writes a file") {
  const auto path = tmp_file("rel.json");
  const Out o = cli({"relations", "--weight", "3", "--out", path.string()});
  CHECK(o.rc == kOk);
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  CHECK(j.at("weight") == 3);
  CHECK_FALSE(j.at("relations").empty());
  std::filesystem::remove(path);
  CHECK(cli({"relations", "--weight", "3", "--out", "/nonexistent/dir/x.json"}).rc == kUsage);
}

TEST_CASE("CLI verify") {
  const auto good = tmp_file("good.jsonl"), bad = tmp_file("bad.jsonl");
  {
    std::ofstream g(good);
    g << R"j({"name":"psi12","lhs":"psi(1;2)","rhs":"2*T(3)","digits":40,"paper_ref":"psi(1;2) as a T-value"})j" << "\n\n";
    g << R"j({"name":"T12","lhs":"T(1,2)","rhs":"T(3)","digits":30,"paper_ref":"duality"})j" << "\n";
    std::ofstream b(bad);
    b << R"j({"name":"wrong","lhs":"T(3)","rhs":"T(2)","digits":40,"paper_ref":"false"})j" << "\n";
  }
  const Out g = cli({"verify", good.string()});
  CHECK(g.rc == kOk);
  CHECK(g.out.find("PASS psi12") != std::string::npos);
  CHECK(g.out.find("2/2 identities verified") != std::string::npos);
  const Out b = cli({"verify", bad.string()});
  CHECK(b.rc == kVerifyFailed);
  CHECK(b.out.find("FAIL wrong") != std::string::npos);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
  CHECK(cli({"verify", "/nonexistent.jsonl"}).rc == kUsage);
}

TEST_CASE("CLI exit codes") {
  CHECK(cli({"eval", "M(1,2"}).rc == kParseError);
  CHECK(cli({"eval", "M(2,1)"}).rc == kDomainError);
  CHECK(cli({"eval", "T(3)", "--digits", "2"}).rc == kUsage);
  CHECK(cli({"frobnicate"}).rc == kUsage);
  CHECK(cli({}).rc == kUsage);
  CHECK(cli({"--help"}).rc == kOk);
  CHECK(cli({"eval", "T(2)"}).rc == kOk);
}
