#include <algorithm>
#include <cctype>

#include "mmv/shell.hpp"

namespace mmv {

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Num: return num == o.num;
    case Kind::Const:
    case Kind::Value: return atom == o.atom;
    default: return args == o.args;
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static Expr binary(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+')) e = binary(Expr::Kind::Add, std::move(e), term());
      else if (accept('-')) e = binary(Expr::Kind::Sub, std::move(e), term());
      else return e;
    }
  }

  Expr term() {
    Expr e = factor();
    while (accept('*')) e = binary(Expr::Kind::Mul, std::move(e), factor());
    return e;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::string d = digits();
    if (d.empty()) {
      pos_ = start;
      fail("expected an integer");
    }
    if (d.size() > 6) {
      pos_ = start;
      fail("integer too large");
    }
    int v = std::stoi(d);
    return neg ? -v : v;
  }

  Expr factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (c == '-') {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.args.push_back(factor());
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return named();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    std::string n = digits();
    std::string d = "1";
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      d = digits();
      if (d.empty()) fail("expected a denominator");
      if (Z(d) == 0) {
        pos_ = start;
        fail("zero denominator");
      }
    }
    Expr e;
    e.kind = Expr::Kind::Num;
    e.num = Q(Z(n), Z(d));
    e.num.canonicalize();
    return e;
  }

  Expr named() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    Expr e;
    if (name == "log2" || name == "pi") {
      e.kind = Expr::Kind::Const;
      e.atom = name == "pi" ? atom_pi() : atom_log2();
      return e;
    }
    if (name != "M" && name != "T" && name != "t" && name != "S" && name != "zeta" && name != "psi" &&
        name != "Tconv") {
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    const std::size_t open = start;
    expect('(');
    std::vector<std::vector<int>> groups(1);
    groups[0].push_back(integer());
    int s = 0;
    bool has_s = false;
    for (;;) {
      if (accept(',')) groups.back().push_back(integer());
      else if (accept('|')) groups.emplace_back().push_back(integer());
      else if (accept(';')) {
        s = integer();
        has_s = true;
        expect(')');
        break;
      } else {
        expect(')');
        break;
      }
    }
    e.kind = Expr::Kind::Value;
    e.atom = make_atom(name, groups, has_s, s, open);
    if (e.atom.kind == AtomKind::Zeta) e.kind = Expr::Kind::Const;
    return e;
  }

  static Atom make_atom(const std::string& name, const std::vector<std::vector<int>>& g, bool has_s, int s,
                        std::size_t at) {
    auto bad = [&](const std::string& m) -> Atom {
      throw DomainError(name + ": " + m + " at offset " + std::to_string(at));
    };
    if (name == "Tconv") {
      if (g.size() != 2) return bad("expects two argument lists separated by '|'");
    } else if (g.size() != 1) {
      return bad("'|' is only allowed in Tconv");
    }
    if (name == "psi") {
      if (!has_s) return bad("expects ';s' after the composition");
      if (s < 2) return bad("s must be at least 2");
    } else if (has_s) {
      return bad("';' is only allowed in psi");
    }
    Comp k;
    Signs sg;
    for (int v : g[0]) {
      if (v == 0) return bad("entries must be nonzero");
      k.push_back(v < 0 ? -v : v);
      sg.push_back(v < 0 ? -1 : 1);
    }
    const bool any_neg = std::find(sg.begin(), sg.end(), -1) != sg.end();
    if (name == "M") {
      Index idx{k, sg};
      if (!idx.admissible()) return bad("last exponent must be at least 2");
      return atom_M(idx);
    }
    if (name == "zeta") {
      if (k.size() == 1 && !any_neg) {
        if (k[0] < 2) return bad("zeta(1) diverges");
        return atom_zeta(k[0]);
      }
      AltIndex a{k, sg};
      if (!a.admissible()) return bad("divergent alternating zeta value");
      return atom_alt(a);
    }
    if (any_neg) return bad("signed entries are only allowed in M and zeta");
    if (name == "Tconv") {
      Comp l;
      for (int v : g[1]) {
        if (v <= 0) return bad("entries must be positive");
        l.push_back(v);
      }
      return atom_convT(k, l);
    }
    if (name == "psi") return atom_psi(k, s);
    if (k.back() < 2) return bad("last exponent must be at least 2");
    if (name == "T") return atom_T(k);
    if (name == "t") return atom_t(k);
    return atom_S(k);
  }
};

int prec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    default: return 4;
  }
}

std::string wrap(const Expr& e, int need) {
  std::string s = render(e);
  return prec(e) < need ? "(" + s + ")" : s;
}

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Num: return e.num.get_str();
    case Expr::Kind::Const:
    case Expr::Kind::Value: return render_atom(e.atom);
    case Expr::Kind::Add: return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
    case Expr::Kind::Sub: return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
    case Expr::Kind::Mul: return wrap(e.args[0], 2) + "*" + wrap(e.args[1], 3);
    case Expr::Kind::Neg: return "-" + wrap(e.args[0], 3);
  }
  return "";
}

Sym to_sym(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Num: return sym_q(e.num);
    case Expr::Kind::Const:
    case Expr::Kind::Value: return sym_atom(e.atom);
    case Expr::Kind::Add: return to_sym(e.args[0]) + to_sym(e.args[1]);
    case Expr::Kind::Sub: return to_sym(e.args[0]) - to_sym(e.args[1]);
    case Expr::Kind::Mul: return to_sym(e.args[0]) * to_sym(e.args[1]);
    case Expr::Kind::Neg: return -to_sym(e.args[0]);
  }
  return Sym();
}

}  // namespace mmv
