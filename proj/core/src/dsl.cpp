#include "valdim/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace valdim {

std::string ParseError::to_string() const {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
         message;
}

std::string ValueAst::text() const {
  switch (kind) {
    case Kind::Name: {
      std::string out;
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) out += '.';
        out += path[i];
      }
      return out;
    }
    case Kind::Set: {
      std::string out = "{";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ',';
        out += items[i].text();
      }
      out += '}';
      return out;
    }
    case Kind::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ',';
        out += items[i].text();
      }
      out += ')';
      return out;
    }
  }
  return "";
}

const std::vector<std::string>& builtin_scenarios() {
  static const std::vector<std::string> names = {"ellsberg", "fossowamba", "wigner"};
  return names;
}

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> words = {
      "dim",     "state",   "base", "power",    "product", "disjoint", "union", "atoms",
      "order",   "compare", "compose", "incompat", "meta",  "iota",     "hasse", "run"};
  return words;
}

struct Token {
  enum class T {
    Name,
    Keyword,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Equals,
    Less,
    At,
    Dot,
    End
  };
  T t = T::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Abort {
  ParseError error;
};

[[noreturn]] void fail(ParseError::Kind kind, const Token& at, std::string message) {
  throw Abort{ParseError{kind, at.line, at.column, std::move(message)}};
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      std::size_t end = i;
      while (end < text.size() && text[end] != '\n') ++end;
      advance(end - i);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    auto single = [&](Token::T t) {
      tok.t = t;
      tok.text = c;
      advance(1);
    };
    switch (c) {
      case '{':
        single(Token::T::LBrace);
        break;
      case '}':
        single(Token::T::RBrace);
        break;
      case '(':
        single(Token::T::LParen);
        break;
      case ')':
        single(Token::T::RParen);
        break;
      case ',':
        single(Token::T::Comma);
        break;
      case ':':
        single(Token::T::Colon);
        break;
      case '=':
        single(Token::T::Equals);
        break;
      case '<':
        single(Token::T::Less);
        break;
      case '@':
        single(Token::T::At);
        break;
      case '.':
        single(Token::T::Dot);
        break;
      default: {
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t end = i;
          while (end < text.size() &&
                 (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
            ++end;
          }
          tok.text = std::string(text.substr(i, end - i));
          tok.t = keywords().count(tok.text) ? Token::T::Keyword : Token::T::Name;
          advance(end - i);
        } else {
          fail(ParseError::Kind::Syntax, tok,
               std::string("unexpected character '") + c + "'");
        }
      }
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.t = Token::T::End;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

const char* describe(Token::T t) {
  switch (t) {
    case Token::T::Name:
      return "a name";
    case Token::T::Keyword:
      return "a keyword";
    case Token::T::LBrace:
      return "'{'";
    case Token::T::RBrace:
      return "'}'";
    case Token::T::LParen:
      return "'('";
    case Token::T::RParen:
      return "')'";
    case Token::T::Comma:
      return "','";
    case Token::T::Colon:
      return "':'";
    case Token::T::Equals:
      return "'='";
    case Token::T::Less:
      return "'<'";
    case Token::T::At:
      return "'@'";
    case Token::T::Dot:
      return "'.'";
    case Token::T::End:
      return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ScenarioDoc run() {
    ScenarioDoc doc;
    while (peek().t != Token::T::End) {
      const Token& tok = peek();
      if (tok.t != Token::T::Keyword) {
        fail(ParseError::Kind::Syntax, tok,
             "expected a statement, found " + std::string(describe(tok.t)));
      }
      if (tok.text == "dim") {
        doc.dims.push_back(dim_decl());
      } else if (tok.text == "state") {
        doc.states.push_back(state_decl());
      } else {
        doc.queries.push_back(query());
      }
    }
    return doc;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  const Token& expect(Token::T t) {
    const Token& tok = peek();
    if (tok.t != t) {
      fail(ParseError::Kind::Syntax, tok,
           "expected " + std::string(describe(t)) + ", found " +
               std::string(describe(tok.t)));
    }
    return take();
  }

  std::string expect_name() { return expect(Token::T::Name).text; }

  void expect_keyword(const std::string& word) {
    const Token& tok = peek();
    if (tok.t != Token::T::Keyword || tok.text != word) {
      fail(ParseError::Kind::Syntax, tok,
           "expected '" + word + "', found " + std::string(describe(tok.t)));
    }
    take();
  }

  bool at_keyword(const std::string& word) const {
    return peek().t == Token::T::Keyword && peek().text == word;
  }

  void declare(const Token& at, const std::string& name) {
    if (dims_.count(name) || states_.count(name)) {
      fail(ParseError::Kind::DuplicateName, at, "'" + name + "' is already declared");
    }
  }

  void require_dim(const Token& at, const std::string& name) const {
    if (!dims_.count(name)) {
      fail(ParseError::Kind::UnknownName, at, "'" + name + "' is not a declared dimension");
    }
  }

  void require_state(const Token& at, const std::string& name) const {
    if (!states_.count(name)) {
      fail(ParseError::Kind::UnknownName, at, "'" + name + "' is not a declared state");
    }
  }

  DimDecl dim_decl() {
    expect_keyword("dim");
    const Token& name_tok = peek();
    DimDecl decl;
    decl.name = expect_name();
    declare(name_tok, decl.name);
    expect(Token::T::Equals);
    decl.expr = expr();
    dims_.insert(decl.name);
    return decl;
  }

  ExprAst expr() {
    const Token& tok = peek();
    if (tok.t == Token::T::Name) {
      ExprAst e;
      e.kind = ExprAst::Kind::Ref;
      e.name = take().text;
      require_dim(tok, e.name);
      return e;
    }
    if (tok.t != Token::T::Keyword) {
      fail(ParseError::Kind::Syntax, tok,
           "expected an expression, found " + std::string(describe(tok.t)));
    }
    if (tok.text == "base") return base_expr();
    if (tok.text == "power") return combinator(ExprAst::Kind::Power, "power", 1);
    if (tok.text == "product") return combinator(ExprAst::Kind::Product, "product", 0);
    if (tok.text == "disjoint") return combinator(ExprAst::Kind::Disjoint, "disjoint", 0);
    if (tok.text == "union") return combinator(ExprAst::Kind::Union, "union", 0);
    if (tok.text == "atoms") return atoms_expr();
    fail(ParseError::Kind::Syntax, tok, "'" + tok.text + "' does not start an expression");
  }

  ExprAst base_expr() {
    expect_keyword("base");
    ExprAst e;
    e.kind = ExprAst::Kind::Base;
    expect(Token::T::LBrace);
    e.elements.push_back(expect_name());
    while (peek().t == Token::T::Comma) {
      take();
      e.elements.push_back(expect_name());
    }
    expect(Token::T::RBrace);
    std::sort(e.elements.begin(), e.elements.end());
    if (at_keyword("order")) {
      take();
      expect(Token::T::LBrace);
      e.order.push_back(order_pair());
      while (peek().t == Token::T::Comma) {
        take();
        e.order.push_back(order_pair());
      }
      expect(Token::T::RBrace);
      std::sort(e.order.begin(), e.order.end());
    }
    return e;
  }

  std::pair<std::string, std::string> order_pair() {
    std::string lo = expect_name();
    expect(Token::T::Less);
    std::string hi = expect_name();
    return {std::move(lo), std::move(hi)};
  }

  ExprAst combinator(ExprAst::Kind kind, const std::string& word, std::size_t exact) {
    expect_keyword(word);
    ExprAst e;
    e.kind = kind;
    expect(Token::T::LParen);
    e.children.push_back(expr());
    while (peek().t == Token::T::Comma) {
      take();
      e.children.push_back(expr());
    }
    const Token& close = peek();
    expect(Token::T::RParen);
    if (exact != 0 && e.children.size() != exact) {
      fail(ParseError::Kind::Syntax, close,
           "'" + word + "' takes exactly " + std::to_string(exact) + " argument");
    }
    return e;
  }

  ExprAst atoms_expr() {
    expect_keyword("atoms");
    ExprAst e;
    e.kind = ExprAst::Kind::Atoms;
    expect(Token::T::LParen);
    auto item = [this] {
      ExprAst part;
      part.kind = ExprAst::Kind::Ref;
      part.name = expect_name();  // undeclared names are bare atoms
      return part;
    };
    e.children.push_back(item());
    while (peek().t == Token::T::Comma) {
      take();
      e.children.push_back(item());
    }
    expect(Token::T::RParen);
    std::sort(e.children.begin(), e.children.end(),
              [](const ExprAst& a, const ExprAst& b) { return a.name < b.name; });
    return e;
  }

  StateDecl state_decl() {
    expect_keyword("state");
    const Token& name_tok = peek();
    StateDecl decl;
    decl.name = expect_name();
    declare(name_tok, decl.name);
    expect(Token::T::Equals);
    expect(Token::T::LBrace);
    if (peek().t != Token::T::RBrace) {
      state_entry(decl);
      while (peek().t == Token::T::Comma) {
        take();
        state_entry(decl);
      }
    }
    expect(Token::T::RBrace);
    std::sort(decl.entries.begin(), decl.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    states_.insert(decl.name);
    return decl;
  }

  void state_entry(StateDecl& decl) {
    const Token& dim_tok = peek();
    std::string dim = expect_name();
    require_dim(dim_tok, dim);
    for (const auto& [existing, ignored] : decl.entries) {
      if (existing == dim) {
        fail(ParseError::Kind::DuplicateName, dim_tok,
             "dimension '" + dim + "' assigned twice");
      }
    }
    expect(Token::T::Colon);
    decl.entries.emplace_back(std::move(dim), value());
  }

  ValueAst value() {
    const Token& tok = peek();
    if (tok.t == Token::T::LBrace) {
      take();
      ValueAst v;
      v.kind = ValueAst::Kind::Set;
      if (peek().t != Token::T::RBrace) {
        v.items.push_back(value());
        while (peek().t == Token::T::Comma) {
          take();
          v.items.push_back(value());
        }
      }
      expect(Token::T::RBrace);
      std::sort(v.items.begin(), v.items.end(),
                [](const ValueAst& a, const ValueAst& b) { return a.text() < b.text(); });
      return v;
    }
    if (tok.t == Token::T::LParen) {
      take();
      ValueAst v;
      v.kind = ValueAst::Kind::Tuple;
      v.items.push_back(value());
      while (peek().t == Token::T::Comma) {
        take();
        v.items.push_back(value());
      }
      expect(Token::T::RParen);
      return v;
    }
    ValueAst v;
    v.kind = ValueAst::Kind::Name;
    v.path.push_back(expect_name());
    while (peek().t == Token::T::Dot) {
      take();
      v.path.push_back(expect_name());
    }
    return v;
  }

  Query query() {
    const Token& tok = peek();
    Query q;
    if (tok.text == "compare" || tok.text == "compose") {
      q.kind = tok.text == "compare" ? Query::Kind::Compare : Query::Kind::Compose;
      take();
      const Token& a_tok = peek();
      q.a = expect_name();
      require_state(a_tok, q.a);
      const Token& b_tok = peek();
      q.b = expect_name();
      require_state(b_tok, q.b);
      return q;
    }
    if (tok.text == "incompat") {
      q.kind = Query::Kind::Incompat;
      take();
      const Token& a_tok = peek();
      q.a = expect_name();
      require_state(a_tok, q.a);
      expect(Token::T::Dot);
      const Token& dim_tok = peek();
      q.dim = expect_name();
      require_dim(dim_tok, q.dim);
      expect(Token::T::At);
      q.value = value();
      const Token& b_tok = peek();
      q.b = expect_name();
      require_state(b_tok, q.b);
      return q;
    }
    if (tok.text == "meta") {
      q.kind = Query::Kind::Meta;
      take();
      const Token& a_tok = peek();
      q.a = expect_name();
      require_state(a_tok, q.a);
      return q;
    }
    if (tok.text == "iota" || tok.text == "hasse") {
      q.kind = tok.text == "iota" ? Query::Kind::Iota : Query::Kind::Hasse;
      take();
      const Token& a_tok = peek();
      q.a = expect_name();
      require_dim(a_tok, q.a);
      return q;
    }
    if (tok.text == "run") {
      q.kind = Query::Kind::Run;
      take();
      const Token& a_tok = peek();
      q.a = expect_name();
      const auto& known = builtin_scenarios();
      if (std::find(known.begin(), known.end(), q.a) == known.end()) {
        fail(ParseError::Kind::UnknownName, a_tok,
             "'" + q.a + "' is not a built-in scenario");
      }
      return q;
    }
    fail(ParseError::Kind::Syntax, tok, "'" + tok.text + "' does not start a statement");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string> dims_;
  std::set<std::string> states_;
};

void emit_value(std::string& out, const ValueAst& v) {
  switch (v.kind) {
    case ValueAst::Kind::Name:
      out += v.text();
      return;
    case ValueAst::Kind::Set: {
      out += '{';
      for (std::size_t i = 0; i < v.items.size(); ++i) {
        if (i > 0) out += ", ";
        emit_value(out, v.items[i]);
      }
      out += '}';
      return;
    }
    case ValueAst::Kind::Tuple: {
      out += '(';
      for (std::size_t i = 0; i < v.items.size(); ++i) {
        if (i > 0) out += ", ";
        emit_value(out, v.items[i]);
      }
      out += ')';
      return;
    }
  }
}

void emit_expr(std::string& out, const ExprAst& e) {
  switch (e.kind) {
    case ExprAst::Kind::Ref:
      out += e.name;
      return;
    case ExprAst::Kind::Base: {
      out += "base{";
      for (std::size_t i = 0; i < e.elements.size(); ++i) {
        if (i > 0) out += ", ";
        out += e.elements[i];
      }
      out += '}';
      if (!e.order.empty()) {
        out += " order{";
        for (std::size_t i = 0; i < e.order.size(); ++i) {
          if (i > 0) out += ", ";
          out += e.order[i].first;
          out += " < ";
          out += e.order[i].second;
        }
        out += '}';
      }
      return;
    }
    case ExprAst::Kind::Atoms: {
      out += "atoms(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += ", ";
        out += e.children[i].name;
      }
      out += ')';
      return;
    }
    default: {
      switch (e.kind) {
        case ExprAst::Kind::Power:
          out += "power(";
          break;
        case ExprAst::Kind::Product:
          out += "product(";
          break;
        case ExprAst::Kind::Disjoint:
          out += "disjoint(";
          break;
        default:
          out += "union(";
          break;
      }
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += ", ";
        emit_expr(out, e.children[i]);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

ParseOutcome parse(std::string_view text) {
  try {
    Parser parser(lex(text));
    return ParseOutcome{parser.run(), std::nullopt};
  } catch (const Abort& abort) {
    return ParseOutcome{std::nullopt, abort.error};
  }
}

std::string serialize(const ScenarioDoc& doc) {
  std::string out;
  for (const auto& dim : doc.dims) {
    out += "dim ";
    out += dim.name;
    out += " = ";
    emit_expr(out, dim.expr);
    out += '\n';
  }
  for (const auto& state : doc.states) {
    out += "state ";
    out += state.name;
    out += " = { ";
    for (std::size_t i = 0; i < state.entries.size(); ++i) {
      if (i > 0) out += ", ";
      out += state.entries[i].first;
      out += ": ";
      emit_value(out, state.entries[i].second);
    }
    out += state.entries.empty() ? "}\n" : " }\n";
  }
  for (const auto& q : doc.queries) {
    switch (q.kind) {
      case Query::Kind::Compare:
        out += "compare " + q.a + " " + q.b;
        break;
      case Query::Kind::Compose:
        out += "compose " + q.a + " " + q.b;
        break;
      case Query::Kind::Incompat: {
        out += "incompat " + q.a + "." + q.dim + " @ ";
        emit_value(out, q.value);
        out += " " + q.b;
        break;
      }
      case Query::Kind::Meta:
        out += "meta " + q.a;
        break;
      case Query::Kind::Iota:
        out += "iota " + q.a;
        break;
      case Query::Kind::Hasse:
        out += "hasse " + q.a;
        break;
      case Query::Kind::Run:
        out += "run " + q.a;
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace valdim
