#include <cctype>
#include <sstream>
#include <stdexcept>

#include "coxflat/ncalg.hpp"

namespace coxflat {

namespace {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error near position " << pos_ << ": " << msg;
    throw std::invalid_argument(os.str());
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Token::End, ""};
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Ident, s_.substr(start, pos_ - start)};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      tok_ = {Token::Number, s_.substr(start, pos_ - start)};
      return;
    }
    tok_ = {Token::Punct, std::string(1, c)};
    ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Token tok_;
};

class ExprParser {
 public:
  ExprParser(Lexer& lex, const std::vector<std::string>& gen_names)
      : lex_(lex), gen_names_(gen_names) {}

  NcPoly expr() {
    NcPoly p = term();
    while (is_punct("+") || is_punct("-")) {
      bool plus = lex_.take().text == "+";
      NcPoly q = term();
      p = plus ? p + q : p - q;
    }
    return p;
  }

 private:
  bool is_punct(const std::string& t) const {
    return lex_.peek().kind == Token::Punct && lex_.peek().text == t;
  }

  NcPoly term() {
    NcPoly p = factor();
    while (true) {
      if (is_punct("*")) {
        lex_.take();
        p = p * factor();
      } else if (lex_.peek().kind == Token::Ident || lex_.peek().kind == Token::Number ||
                 is_punct("(")) {
        p = p * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return p;
  }

  NcPoly factor() {
    NcPoly p = primary();
    if (is_punct("^")) {
      lex_.take();
      if (lex_.peek().kind != Token::Number) lex_.fail("expected exponent");
      std::string n = lex_.take().text;
      if (n.find('/') != std::string::npos) lex_.fail("exponent must be an integer");
      p = p.pow(std::stoi(n));
    }
    return p;
  }

  NcPoly primary() {
    if (is_punct("-")) {
      lex_.take();
      return -primary();
    }
    const Token& t = lex_.peek();
    if (t.kind == Token::Number) return NcPoly::constant(parse_rational(lex_.take().text));
    if (t.kind == Token::Ident) {
      std::string name = lex_.take().text;
      for (std::size_t i = 0; i < gen_names_.size(); ++i)
        if (gen_names_[i] == name) return NcPoly::gen(static_cast<int>(i));
      lex_.fail("unknown generator '" + name + "'");
    }
    if (is_punct("(")) {
      lex_.take();
      NcPoly p = expr();
      if (!is_punct(")")) lex_.fail("expected ')'");
      lex_.take();
      return p;
    }
    lex_.fail("expected a generator, number, or '('");
  }

  Lexer& lex_;
  const std::vector<std::string>& gen_names_;
};

}  // namespace

NcPoly parse_nc_poly(const std::string& expr, const std::vector<std::string>& gen_names) {
  Lexer lex(expr);
  ExprParser parser(lex, gen_names);
  NcPoly p = parser.expr();
  if (lex.peek().kind != Token::End) lex.fail("trailing input");
  return p;
}

Presentation parse_presentation(const std::string& text) {
  Lexer lex(text);
  Presentation p;
  auto expect_punct = [&](const std::string& t) {
    if (lex.peek().kind != Token::Punct || lex.peek().text != t)
      lex.fail("expected '" + t + "'");
    lex.take();
  };
  if (lex.peek().kind != Token::Ident || lex.peek().text != "gens")
    lex.fail("expected 'gens'");
  lex.take();
  expect_punct(":");
  while (true) {
    if (lex.peek().kind != Token::Ident) lex.fail("expected generator name");
    std::string name = lex.take().text;
    for (const std::string& g : p.gen_names)
      if (g == name) lex.fail("duplicate generator '" + name + "'");
    p.gen_names.push_back(name);
    if (lex.peek().kind == Token::Punct && lex.peek().text == ",") {
      lex.take();
      continue;
    }
    break;
  }
  expect_punct(";");
  while (lex.peek().kind != Token::End) {
    if (lex.peek().kind != Token::Ident || lex.peek().text != "rel")
      lex.fail("expected 'rel'");
    lex.take();
    expect_punct(":");
    ExprParser parser(lex, p.gen_names);
    p.relations.push_back(parser.expr());
    expect_punct(";");
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (std::size_t i = 0; i < p.gen_names.size(); ++i)
    os << (i ? ", " : " ") << p.gen_names[i];
  os << ";";
  for (const NcPoly& r : p.relations) os << "\nrel: " << r.str(p.gen_names) << ";";
  os << "\n";
  return os.str();
}

}  // namespace coxflat
