#include "lpa/parse.hpp"

#include <cctype>
#include <optional>

namespace lpa {

namespace {

struct Token {
  enum Kind { Atom, LBracket, RBracket, Pipe, Plus, Minus, Star, Slash, End } kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t at = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::End, "", at};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      ++pos_;
      current_ = {k, std::string(1, c), at};
    };
    switch (c) {
      case '[': return single(Token::LBracket);
      case ']': return single(Token::RBracket);
      case '|': return single(Token::Pipe);
      case '+': return single(Token::Plus);
      case '-': return single(Token::Minus);
      case '*': return single(Token::Star);
      case '/': return single(Token::Slash);
      default: break;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_ = {Token::Atom, text_.substr(start, pos_ - start), at};
      return;
    }
    fail(ErrorKind::SyntaxError,
         "unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(at));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_{Token::End, "", 0};
};

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void syntax_error(const Token& t, const std::string& expected) {
  fail(ErrorKind::SyntaxError,
       "expected " + expected + " at offset " + std::to_string(t.offset) +
           (t.kind == Token::End ? " (end of input)" : " near '" + t.text + "'"));
}

class ElementParser {
 public:
  ElementParser(const std::string& text, const Graph& g) : lex_(text), g_(g) {}

  RawElement parse() {
    RawElement out;
    parse_term(out, 1);
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      int sign = lex_.take().kind == Token::Minus ? -1 : 1;
      parse_term(out, sign);
    }
    if (lex_.peek().kind != Token::End) syntax_error(lex_.peek(), "'+', '-' or end of element");
    return out;
  }

 private:
  void parse_term(RawElement& out, int sign) {
    Rational coeff = sign;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      coeff = -coeff;
    }
    if (lex_.peek().kind == Token::Atom && all_digits(lex_.peek().text)) {
      Rational value(Integer(lex_.take().text));
      if (lex_.peek().kind == Token::Slash) {
        lex_.take();
        if (lex_.peek().kind != Token::Atom || !all_digits(lex_.peek().text))
          syntax_error(lex_.peek(), "denominator digits");
        Integer den(lex_.take().text);
        if (den == 0) fail(ErrorKind::SyntaxError, "zero denominator");
        value /= Rational(den);
      }
      if (lex_.peek().kind != Token::Star) syntax_error(lex_.peek(), "'*' after coefficient");
      lex_.take();
      coeff *= value;
    }
    out.emplace_back(parse_mono(), coeff);
  }

  Monomial parse_mono() {
    if (lex_.peek().kind != Token::LBracket) syntax_error(lex_.peek(), "'['");
    lex_.take();
    Path alpha = parse_leg(Token::Pipe);
    lex_.take();  // the pipe
    Path beta = parse_leg(Token::RBracket);
    lex_.take();  // the bracket
    Monomial m{std::move(alpha), std::move(beta)};
    validate_monomial(g_, m);
    return m;
  }

  Path parse_leg(Token::Kind terminator) {
    std::vector<std::string> ids;
    while (lex_.peek().kind == Token::Atom) ids.push_back(lex_.take().text);
    if (lex_.peek().kind != terminator)
      syntax_error(lex_.peek(), terminator == Token::Pipe ? "'|'" : "']'");
    if (ids.empty()) syntax_error(lex_.peek(), "a vertex id or edge ids");
    if (ids.size() == 1) {
      if (auto v = g_.find_vertex(ids[0])) return Path::at_vertex(*v);
      if (auto pos = g_.find_edge_pos(ids[0])) return Path::from_edges(g_, {*pos});
      fail(ErrorKind::UnknownId, "'" + ids[0] + "' names no vertex or edge");
    }
    std::vector<int> positions;
    for (const std::string& id : ids) {
      auto pos = g_.find_edge_pos(id);
      if (!pos) fail(ErrorKind::UnknownId, "'" + id + "' names no edge");
      positions.push_back(*pos);
    }
    return Path::from_edges(g_, positions);
  }

  Lexer lex_;
  const Graph& g_;
};

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

RawElement parse_element_raw(const std::string& text, const Graph& g) {
  g.require_simple("parse_element");
  if (trimmed(text) == "0") return {};
  return ElementParser(text, g).parse();
}

LpaElement parse_element(const std::string& text, GraphPtr graph) {
  RawElement raw = parse_element_raw(text, *graph);
  return LpaElement::from_terms(std::move(graph), raw);
}

LassoPath parse_lasso(const std::string& text, const Graph& g) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    fail(ErrorKind::SyntaxError, "lasso syntax is \"prefix;cycle\"");
  if (text.find(';', semi + 1) != std::string::npos)
    fail(ErrorKind::SyntaxError, "lasso has more than one ';'");

  auto split_ids = [](const std::string& part) {
    std::vector<std::string> ids;
    std::string cur;
    for (char c : part) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) ids.push_back(std::exchange(cur, {}));
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) ids.push_back(cur);
    return ids;
  };

  auto to_positions = [&](const std::vector<std::string>& ids, const char* what) {
    std::vector<int> out;
    for (const std::string& id : ids) {
      auto pos = g.find_edge_pos(id);
      if (!pos) fail(ErrorKind::UnknownId, std::string("'") + id + "' names no edge in " + what);
      out.push_back(*pos);
    }
    return out;
  };

  std::vector<std::string> prefix_ids = split_ids(text.substr(0, semi));
  std::vector<std::string> cycle_ids = split_ids(text.substr(semi + 1));
  if (cycle_ids.empty()) fail(ErrorKind::InvalidLasso, "lasso cycle must be nonempty");

  LassoPath lasso;
  lasso.cycle = Path::from_edges(g, to_positions(cycle_ids, "the cycle"));
  if (prefix_ids.empty()) {
    lasso.prefix = Path::at_vertex(lasso.cycle.range());
  } else if (prefix_ids.size() == 1 && g.find_vertex(prefix_ids[0])) {
    lasso.prefix = Path::at_vertex(*g.find_vertex(prefix_ids[0]));
  } else {
    lasso.prefix = Path::from_edges(g, to_positions(prefix_ids, "the prefix"));
  }
  validate_lasso(g, lasso);
  return lasso;
}

}  // namespace lpa
