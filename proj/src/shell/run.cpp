#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmv/closedforms.hpp"
#include "mmv/linrel.hpp"
#include "mmv/shell.hpp"

namespace mmv {

namespace {

// A single named value that has an MMV index.
Index value_index(const std::string& src) {
  const Expr e = parse_expr(src);
  if (e.kind != Expr::Kind::Value) throw DomainError("expected a single M, T or S value: " + src);
  const Atom& a = e.atom;
  switch (a.kind) {
    case AtomKind::M: return Index{a.a, a.b};
    case AtomKind::T: return T_index(a.a);
    case AtomKind::S: return S_index(a.a);
    default: throw DomainError("expected a single M, T or S value: " + src);
  }
}

int check_weight(int w) {
  if (w < 1 || w > kMaxWeight) {
    throw DomainError("weight must lie in 1.." + std::to_string(kMaxWeight));
  }
  return w;
}

int cmd_verify(const std::string& path, int digits_override, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  int failures = 0, count = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line);
    const std::string name = j.at("name").get<std::string>();
    const int D = digits_override > 0 ? digits_override : j.value("digits", default_digits());
    const Sym lhs = to_sym(parse_expr(j.at("lhs").get<std::string>()));
    const Sym rhs = to_sym(parse_expr(j.at("rhs").get<std::string>()));
    const VerifyResult r = verify_identity(lhs, rhs, D);
    ++count;
    if (!r.pass) ++failures;
    out << (r.pass ? "PASS " : "FAIL ") << name << "  residual " << r.residual.str(3, std::ios_base::scientific)
        << "  tol " << r.tolerance.str(1, std::ios_base::scientific) << "\n";
  }
  out << count - failures << "/" << count << " identities verified\n";
  return failures ? kVerifyFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple mixed values: evaluation, algebra and relation tools", "mmvkit"};
  app.require_subcommand(1);

  int digits = 0;
  std::string expr, value, v1, v2, mode = "sha", out_path, fixtures;
  int weight = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expr, "Expression")->required();
  eval->add_option("--digits", digits, "Digits after the point (default: MMV_KIT_DIGITS or 50)")
      ->check(CLI::Range(5, 5000));

  auto* dual = app.add_subcommand("dual", "Dual of an odd-signature admissible value");
  dual->add_option("value", value, "Value such as M(-1,1,2)")->required();

  auto* prod = app.add_subcommand("product", "Shuffle or stuffle product of two values");
  prod->add_option("--mode", mode, "sha or st")->check(CLI::IsMember({"sha", "st"}));
  prod->add_option("v1", v1)->required();
  prod->add_option("v2", v2)->required();

  auto* rel = app.add_subcommand("relations", "Harvest linear relations of a weight");
  rel->add_option("--weight", weight)->required();
  rel->add_option("--out", out_path, "Write JSON here instead of stdout");

  auto* dim = app.add_subcommand("dim", "Dimension bound of a weight");
  dim->add_option("--weight", weight)->required();

  auto* ver = app.add_subcommand("verify", "Check identity fixtures (JSON lines)");
  ver->add_option("fixtures", fixtures)->required();
  ver->add_option("--digits", digits, "Override the digits of every fixture")->check(CLI::Range(5, 5000));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*eval) {
      const int D = digits > 0 ? digits : default_digits();
      const Sym s = to_sym(parse_expr(expr));
      out << format_truncated(eval_sym(s, D), D) << "\n";
    } else if (*dual) {
      const Index idx = value_index(value);
      out << render(to_indices(dual_word(index_to_word(idx)))) << "\n";
    } else if (*prod) {
      const Index a = value_index(v1), b = value_index(v2);
      const IndexComb c =
          mode == "st" ? stuffle_indices(a, b) : to_indices(shuffle(index_to_word(a), index_to_word(b)));
      out << render(c) << "\n";
    } else if (*rel) {
      const std::string js = to_json(harvest(check_weight(weight)), true);
      if (out_path.empty()) {
        out << js << "\n";
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << js << "\n";
      }
    } else if (*dim) {
      out << to_json(harvest(check_weight(weight)), false) << "\n";
    } else if (*ver) {
      return cmd_verify(fixtures, digits, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace mmv
