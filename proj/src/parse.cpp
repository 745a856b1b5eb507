#include <cctype>
#include <sstream>

#include "trichow/system.hpp"

namespace trichow {

VarSet standard_vars(unsigned m, unsigned n) {
  return VarSet::numbered("Y", m).concat(VarSet::numbered("X", n));
}

SystemInput SystemInput::make(unsigned m, unsigned n, std::vector<MPoly<mpq_class>> gens) {
  SystemInput s;
  s.m = m;
  s.n = n;
  s.vars = standard_vars(m, n);
  for (auto& g : gens) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero generator");
    s.gens.push_back(g.remap(s.vars));
  }
  return s;
}

SystemInput SystemInput::from_strings(unsigned m, unsigned n, const std::vector<std::string>& gens) {
  VarSet vars = standard_vars(m, n);
  std::vector<MPoly<mpq_class>> polys;
  for (const auto& g : gens) polys.push_back(parse_poly(g, vars));
  return make(m, n, std::move(polys));
}

VarSet SystemInput::yvars() const { return VarSet::numbered("Y", m); }
VarSet SystemInput::xvars() const { return VarSet::numbered("X", n); }

namespace {

using Q = MPoly<mpq_class>;

class ExprParser {
 public:
  ExprParser(std::string_view text, const VarSet& vars, int line, int first_column)
      : s_(text), vars_(vars), line_(line), col0_(first_column) {}

  Q parse() {
    Q r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::Parse) const {
    throw ParseError(kind, msg, line_, col0_ + static_cast<int>(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  Q constant(const mpq_class& c) const { return Q::constant(vars_, NoCtx{}, c); }

  Q expr() {
    Q r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r = r + term();
      } else if (peek('-')) {
        ++pos_;
        r = r - term();
      } else {
        return r;
      }
    }
  }
  Q term() {
    Q r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = r * unary();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        Q d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division by a non-constant");
        }
        r = r.scale(1 / d.lc());
      } else {
        return r;
      }
    }
  }
  Q unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }
  Q power() {
    Q base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  Q atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Q r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = vars_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable " + name, ErrorKind::UnknownVariable);
      }
      return Q::variable(vars_, NoCtx{}, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const VarSet& vars_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly<mpq_class> parse_poly(std::string_view text, const VarSet& vars, int line, int first_column) {
  return ExprParser(text, vars, line, first_column).parse();
}

SystemInput parse_system(std::string_view text) {
  bool have_header = false;
  unsigned m = 0, n = 0;
  VarSet vars;
  std::vector<Q> gens;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t kw_end = i;
    while (kw_end < line.size() && std::isalpha(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    std::string_view kw = line.substr(i, kw_end - i);
    if (kw == "params") {
      if (have_header) throw ParseError(ErrorKind::Parse, "duplicate params line", line_no, static_cast<int>(i) + 1);
      std::istringstream in{std::string(line.substr(kw_end))};
      std::string tok;
      bool got_m = false, got_n = false;
      while (in >> tok) {
        auto eq = tok.find('=');
        std::string key = tok.substr(0, eq);
        std::string val = eq == std::string::npos ? "" : tok.substr(eq + 1);
        bool digits = !val.empty() && val.size() < 4 &&
                      std::all_of(val.begin(), val.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
        int col = static_cast<int>(line.find(tok)) + 1;
        if (!digits || (key != "m" && key != "n"))
          throw ParseError(ErrorKind::Parse, "malformed parameter '" + tok + "'", line_no, col);
        (key == "m" ? m : n) = static_cast<unsigned>(std::stoul(val));
        (key == "m" ? got_m : got_n) = true;
      }
      if (!got_m || !got_n) throw ParseError(ErrorKind::Parse, "params line needs m= and n=", line_no, static_cast<int>(i) + 1);
      have_header = true;
      vars = standard_vars(m, n);
    } else if (kw == "poly") {
      if (!have_header) throw ParseError(ErrorKind::Parse, "poly before params line", line_no, static_cast<int>(i) + 1);
      Q p = parse_poly(line.substr(kw_end), vars, line_no, static_cast<int>(kw_end) + 1);
      if (p.is_zero()) throw ParseError(ErrorKind::ZeroPolynomial, "polynomial is zero", line_no, static_cast<int>(kw_end) + 2);
      gens.push_back(std::move(p));
    } else {
      throw ParseError(ErrorKind::Parse, "expected 'params' or 'poly'", line_no, static_cast<int>(i) + 1);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(ErrorKind::Parse, "missing params line", 1, 1);
  if (gens.empty()) throw ParseError(ErrorKind::Parse, "no polynomials", line_no, 1);
  return SystemInput::make(m, n, std::move(gens));
}

std::string print_system(const SystemInput& sys) {
  std::string out = "params m=" + std::to_string(sys.m) + " n=" + std::to_string(sys.n) + "\n";
  for (const auto& g : sys.gens) out += "poly " + g.str() + "\n";
  return out;
}

}  // namespace trichow
