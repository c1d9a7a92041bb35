#include "gr1core/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "gr1core/errors.hpp"

namespace gr1core {

ParseError::ParseError(ParseErrorKind kind, std::string message, int line,
                       int column)
    : Error([&] {
        std::ostringstream os;
        os << line << ":" << column << ": " << message;
        return os.str();
      }()),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  ident,
  number,
  kw_env,
  kw_sys,
  kw_boolean,
  kw_int,
  kw_asm,
  kw_gar,
  kw_ini,
  kw_alw,
  kw_alw_ev,
  kw_monitor,
  kw_responds_to,
  kw_next,
  kw_true,
  kw_false,
  lparen,
  rparen,
  lbrace,
  rbrace,
  semi,
  comma,
  dotdot,
  bang,
  amp,
  pipe,
  arrow,
  iff,
  eq,
  neq,
  lt,
  le,
  gt,
  ge,
  plus,
  minus,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  int line = 1;
  int column = 1;
};

const std::map<std::string, Tok, std::less<>> kKeywords = {
    {"env", Tok::kw_env},         {"sys", Tok::kw_sys},
    {"boolean", Tok::kw_boolean}, {"Int", Tok::kw_int},
    {"asm", Tok::kw_asm},         {"gar", Tok::kw_gar},
    {"ini", Tok::kw_ini},         {"alw", Tok::kw_alw},
    {"alwEv", Tok::kw_alw_ev},    {"monitor", Tok::kw_monitor},
    {"respondsTo", Tok::kw_responds_to},
    {"next", Tok::kw_next},       {"true", Tok::kw_true},
    {"false", Tok::kw_false},
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Token t = next_token();
      out.push_back(t);
      if (t.kind == Tok::end) break;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(ParseErrorKind::syntax, msg, line_, column_);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char peek2() const {
    return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '/' && peek2() == '/') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token next_token() {
    Token t;
    t.line = line_;
    t.column = column_;
    if (eof()) {
      t.kind = Tok::end;
      return t;
    }
    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                        peek() == '_')) {
        word += peek();
        advance();
      }
      auto it = kKeywords.find(word);
      t.kind = it != kKeywords.end() ? it->second : Tok::ident;
      t.text = std::move(word);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + (peek() - '0');
        advance();
      }
      t.kind = Tok::number;
      t.value = v;
      return t;
    }
    auto two = [&](char a, char b) {
      return c == a && peek2() == b;
    };
    if (c == '<' && peek2() == '-') {
      // `<->`
      advance();
      advance();
      if (eof() || peek() != '>') fail("expected '>' after '<-'");
      advance();
      t.kind = Tok::iff;
      return t;
    }
    if (two('-', '>')) {
      advance();
      advance();
      t.kind = Tok::arrow;
      return t;
    }
    if (two('!', '=')) {
      advance();
      advance();
      t.kind = Tok::neq;
      return t;
    }
    if (two('<', '=')) {
      advance();
      advance();
      t.kind = Tok::le;
      return t;
    }
    if (two('>', '=')) {
      advance();
      advance();
      t.kind = Tok::ge;
      return t;
    }
    if (two('.', '.')) {
      advance();
      advance();
      t.kind = Tok::dotdot;
      return t;
    }
    advance();
    switch (c) {
      case '(': t.kind = Tok::lparen; return t;
      case ')': t.kind = Tok::rparen; return t;
      case '{': t.kind = Tok::lbrace; return t;
      case '}': t.kind = Tok::rbrace; return t;
      case ';': t.kind = Tok::semi; return t;
      case ',': t.kind = Tok::comma; return t;
      case '!': t.kind = Tok::bang; return t;
      case '&': t.kind = Tok::amp; return t;
      case '|': t.kind = Tok::pipe; return t;
      case '=': t.kind = Tok::eq; return t;
      case '<': t.kind = Tok::lt; return t;
      case '>': t.kind = Tok::gt; return t;
      case '+': t.kind = Tok::plus; return t;
      case '-': t.kind = Tok::minus; return t;
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

enum class ExprType { boolean, integer };

// Prime-placement policy per assertion context.
struct ExprRules {
  bool allow_primes = false;
  bool primes_env_only = false;
  bool env_vars_only = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  SpecAst run() {
    while (!at(Tok::end)) declaration();
    if (spec_.vars.empty() && spec_.element_table.empty()) {
      throw ParseError(ParseErrorKind::empty_spec,
                       "specification declares nothing", 1, 1);
    }
    return std::move(spec_);
  }

 private:
  const Token& cur() const { return tokens_[idx_]; }
  bool at(Tok k) const { return cur().kind == k; }

  Token eat() { return tokens_[idx_++]; }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail_syntax(std::string("expected ") + what);
    return eat();
  }

  [[noreturn]] void fail_syntax(const std::string& msg) const {
    throw ParseError(ParseErrorKind::syntax, msg, cur().line, cur().column);
  }

  [[noreturn]] void fail(ParseErrorKind kind, const std::string& msg,
                         const Token& tok) const {
    throw ParseError(kind, msg, tok.line, tok.column);
  }

  [[noreturn]] void fail_at(ParseErrorKind kind, const std::string& msg,
                            const ExprPtr& e) const {
    throw ParseError(kind, msg, e->line, e->column);
  }

  // ---- declarations ----

  void declaration() {
    switch (cur().kind) {
      case Tok::kw_env:
      case Tok::kw_sys:
        var_decl();
        return;
      case Tok::kw_asm:
      case Tok::kw_gar:
        element_decl();
        return;
      case Tok::kw_monitor:
        monitor_decl();
        return;
      default:
        fail_syntax("expected a declaration (env/sys/asm/gar/monitor)");
    }
  }

  void var_decl() {
    Token head = eat();
    Owner owner = head.kind == Tok::kw_env ? Owner::env : Owner::sys;
    VarDecl v;
    v.owner = owner;
    if (at(Tok::kw_boolean)) {
      eat();
      v.is_bool = true;
    } else if (at(Tok::kw_int)) {
      eat();
      expect(Tok::lparen, "'('");
      Token lo = expect(Tok::number, "a number");
      expect(Tok::dotdot, "'..'");
      Token hi = expect(Tok::number, "a number");
      expect(Tok::rparen, "')'");
      if (lo.value > hi.value)
        fail(ParseErrorKind::syntax, "empty integer range", lo);
      v.is_bool = false;
      v.lo = static_cast<int>(lo.value);
      v.hi = static_cast<int>(hi.value);
    } else {
      fail_syntax("expected 'boolean' or 'Int(lo..hi)'");
    }
    Token name = expect(Tok::ident, "a variable name");
    expect(Tok::semi, "';'");
    v.name = name.text;
    declare_var(std::move(v), name);
  }

  void declare_var(VarDecl v, const Token& name_tok) {
    if (var_index_.count(v.name)) {
      fail(ParseErrorKind::duplicate_variable,
           "duplicate variable '" + v.name + "'", name_tok);
    }
    var_index_[v.name] = static_cast<VarId>(spec_.vars.size());
    spec_.vars.push_back(std::move(v));
  }

  void element_decl() {
    Token head = eat();
    Side side = head.kind == Tok::kw_asm ? Side::assumption : Side::guarantee;

    if (at(Tok::kw_responds_to)) {
      if (side != Side::guarantee)
        fail_syntax("respondsTo patterns are guarantees");
      pattern_decl(head.line);
      return;
    }

    ElementKind kind = ElementKind::ini;
    if (at(Tok::kw_ini)) {
      eat();
    } else if (at(Tok::kw_alw)) {
      eat();
      kind = ElementKind::alw;
    } else if (at(Tok::kw_alw_ev)) {
      eat();
      kind = ElementKind::alw_ev;
    }
    ExprPtr e = expression();
    expect(Tok::semi, "';'");

    check_assertion(e, side, kind);

    DeclaredElement decl;
    decl.id = next_id();
    decl.side = side;
    decl.kind = kind;
    decl.expr = e;
    decl.source_line = head.line;
    spec_.elements.push_back(decl);
    add_info(decl.id, side, kind, ElementOrigin::declared, head.line,
             to_string(e));
  }

  void pattern_decl(int line) {
    expect(Tok::kw_responds_to, "'respondsTo'");
    expect(Tok::lparen, "'('");
    ExprPtr trigger = expression();
    expect(Tok::comma, "','");
    ExprPtr response = expression();
    expect(Tok::rparen, "')'");
    expect(Tok::semi, "';'");

    for (const ExprPtr* e : {&trigger, &response}) {
      require_type(*e, ExprType::boolean);
      if (expr::mentions_prime(*e))
        fail_at(ParseErrorKind::prime_placement,
                "pattern operands must be unprimed", *e);
    }

    PatternDecl p;
    p.id = next_id();
    p.trigger = trigger;
    p.response = response;
    p.source_line = line;
    spec_.patterns.push_back(p);
    add_info(p.id, Side::guarantee, ElementKind::pattern,
             ElementOrigin::pattern, line,
             "respondsTo(" + to_string(trigger) + ", " + to_string(response) +
                 ")");
  }

  void monitor_decl() {
    Token head = eat();
    expect(Tok::kw_boolean, "'boolean'");
    Token name = expect(Tok::ident, "a monitor variable name");
    expect(Tok::lbrace, "'{'");

    MonitorDecl m;
    m.var_name = name.text;
    m.source_line = head.line;
    VarDecl v;
    v.name = name.text;
    v.owner = Owner::aux;
    v.is_bool = true;
    declare_var(std::move(v), name);
    m.var = var_index_.at(name.text);

    while (!at(Tok::rbrace)) {
      Token kw = cur();
      ElementKind kind;
      if (at(Tok::kw_ini)) {
        eat();
        kind = ElementKind::ini;
      } else if (at(Tok::kw_alw)) {
        eat();
        kind = ElementKind::alw;
      } else {
        fail_syntax("expected 'ini' or 'alw' inside monitor");
      }
      ExprPtr e = expression();
      expect(Tok::semi, "';'");
      // Monitor assertions become system guarantees after reduction.
      check_assertion(e, Side::guarantee, kind);

      MonitorAssertion a;
      a.id = next_id();
      a.kind = kind;
      a.expr = e;
      a.source_line = kw.line;
      add_info(a.id, Side::guarantee, kind, ElementOrigin::monitor_internal,
               kw.line, to_string(e));
      m.assertions.push_back(std::move(a));
    }
    expect(Tok::rbrace, "'}'");
    if (m.assertions.empty())
      fail(ParseErrorKind::syntax, "monitor has no assertions", head);
    spec_.monitors.push_back(std::move(m));
  }

  ElementId next_id() {
    return static_cast<ElementId>(spec_.element_table.size());
  }

  void add_info(ElementId id, Side side, ElementKind kind,
                ElementOrigin origin, int line, std::string text) {
    ElementInfo info;
    info.id = id;
    info.side = side;
    info.kind = kind;
    info.origin = origin;
    info.source_line = line;
    info.text = std::move(text);
    spec_.element_table.push_back(std::move(info));
  }

  // ---- expression grammar ----
  //
  //   iff   := impl ('<->' impl)*
  //   impl  := or ('->' impl)?          right associative
  //   or    := and ('|' and)*
  //   and   := cmp ('&' cmp)*
  //   cmp   := add (relop add)?
  //   add   := unary (('+'|'-') number)*
  //   unary := '!' unary | primary

  ExprPtr expression() { return iff_expr(); }

  ExprPtr iff_expr() {
    ExprPtr e = impl_expr();
    while (at(Tok::iff)) {
      Token t = eat();
      e = located(expr::binary(ExprOp::iff, e, impl_expr()), t);
    }
    return e;
  }

  ExprPtr impl_expr() {
    ExprPtr e = or_expr();
    if (at(Tok::arrow)) {
      Token t = eat();
      e = located(expr::binary(ExprOp::implies, e, impl_expr()), t);
    }
    return e;
  }

  ExprPtr or_expr() {
    ExprPtr e = and_expr();
    while (at(Tok::pipe)) {
      Token t = eat();
      e = located(expr::binary(ExprOp::or_, e, and_expr()), t);
    }
    return e;
  }

  ExprPtr and_expr() {
    ExprPtr e = cmp_expr();
    while (at(Tok::amp)) {
      Token t = eat();
      e = located(expr::binary(ExprOp::and_, e, cmp_expr()), t);
    }
    return e;
  }

  ExprPtr cmp_expr() {
    ExprPtr e = add_expr();
    ExprOp op;
    switch (cur().kind) {
      case Tok::eq: op = ExprOp::eq; break;
      case Tok::neq: op = ExprOp::ne; break;
      case Tok::lt: op = ExprOp::lt; break;
      case Tok::le: op = ExprOp::le; break;
      case Tok::gt: op = ExprOp::gt; break;
      case Tok::ge: op = ExprOp::ge; break;
      default:
        return e;
    }
    Token t = eat();
    return located(expr::binary(op, e, add_expr()), t);
  }

  ExprPtr add_expr() {
    ExprPtr e = unary_expr();
    while (at(Tok::plus) || at(Tok::minus)) {
      Token t = eat();
      Token n = expect(Tok::number, "an integer constant");
      ExprPtr c = located(expr::int_const(n.value), n);
      e = located(
          expr::binary(t.kind == Tok::plus ? ExprOp::add : ExprOp::sub, e, c),
          t);
    }
    return e;
  }

  ExprPtr unary_expr() {
    if (at(Tok::bang)) {
      Token t = eat();
      return located(expr::negate(unary_expr()), t);
    }
    return primary_expr();
  }

  ExprPtr primary_expr() {
    Token t = cur();
    switch (t.kind) {
      case Tok::kw_true:
        eat();
        return located(expr::bool_const(true), t);
      case Tok::kw_false:
        eat();
        return located(expr::bool_const(false), t);
      case Tok::number:
        eat();
        return located(expr::int_const(t.value), t);
      case Tok::lparen: {
        eat();
        ExprPtr e = expression();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::kw_next: {
        eat();
        expect(Tok::lparen, "'('");
        Token name = expect(Tok::ident, "a variable name");
        expect(Tok::rparen, "')'");
        return located(make_var(name, true), t);
      }
      case Tok::ident:
        eat();
        return located(make_var(t, false), t);
      default:
        fail_syntax("expected an expression");
    }
  }

  ExprPtr make_var(const Token& name, bool primed) {
    auto it = var_index_.find(name.text);
    if (it == var_index_.end())
      fail(ParseErrorKind::syntax, "unknown variable '" + name.text + "'",
           name);
    return expr::var_ref(it->second, name.text, primed);
  }

  static ExprPtr located(ExprPtr e, const Token& t) {
    auto n = std::const_pointer_cast<ExprNode>(e);
    n->line = t.line;
    n->column = t.column;
    return n;
  }

  // ---- typing and prime placement ----

  ExprType type_of(const ExprPtr& e) const {
    switch (e->op) {
      case ExprOp::bool_const:
        return ExprType::boolean;
      case ExprOp::int_const:
        return ExprType::integer;
      case ExprOp::var_ref:
        return spec_.vars[e->var].is_bool ? ExprType::boolean
                                          : ExprType::integer;
      case ExprOp::not_:
        require_type(e->lhs, ExprType::boolean);
        return ExprType::boolean;
      case ExprOp::and_:
      case ExprOp::or_:
      case ExprOp::implies:
      case ExprOp::iff:
        require_type(e->lhs, ExprType::boolean);
        require_type(e->rhs, ExprType::boolean);
        return ExprType::boolean;
      case ExprOp::eq:
      case ExprOp::ne: {
        ExprType l = type_of(e->lhs);
        ExprType r = type_of(e->rhs);
        if (l != r)
          fail_at(ParseErrorKind::type,
                  "'='/'!=' operands must have the same type", e);
        return ExprType::boolean;
      }
      case ExprOp::lt:
      case ExprOp::le:
      case ExprOp::gt:
      case ExprOp::ge:
        require_type(e->lhs, ExprType::integer);
        require_type(e->rhs, ExprType::integer);
        return ExprType::boolean;
      case ExprOp::add:
      case ExprOp::sub:
        require_type(e->lhs, ExprType::integer);
        if (e->rhs->op != ExprOp::int_const)
          fail_at(ParseErrorKind::type,
                  "integer arithmetic only with constant right operand", e);
        return ExprType::integer;
    }
    return ExprType::boolean;
  }

  void require_type(const ExprPtr& e, ExprType want) const {
    if (type_of(e) != want)
      fail_at(ParseErrorKind::type,
              want == ExprType::boolean ? "expected a boolean expression"
                                        : "expected an integer expression",
              e);
  }

  void check_assertion(const ExprPtr& e, Side side, ElementKind kind) const {
    require_type(e, ExprType::boolean);

    ExprRules rules;
    if (kind == ElementKind::ini) {
      rules.allow_primes = false;
      rules.env_vars_only = side == Side::assumption;
    } else if (kind == ElementKind::alw) {
      rules.allow_primes = true;
      rules.primes_env_only = side == Side::assumption;
    } else {  // alwEv
      rules.allow_primes = false;
    }

    if (!rules.allow_primes && expr::mentions_prime(e)) {
      fail_at(ParseErrorKind::prime_placement,
              "next(...) is not allowed in this assertion", e);
    }
    if (rules.primes_env_only) {
      for (VarId v : expr::primed_vars(e)) {
        if (spec_.vars[v].owner != Owner::env)
          fail_at(ParseErrorKind::prime_placement,
                  "assumptions may only prime environment variables", e);
      }
    }
    if (rules.env_vars_only) {
      for (VarId v : expr::referenced_vars(e)) {
        if (spec_.vars[v].owner != Owner::env)
          fail_at(ParseErrorKind::prime_placement,
                  "initial assumptions may only mention environment variables",
                  e);
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
  SpecAst spec_;
  std::map<std::string, VarId, std::less<>> var_index_;
};

}  // namespace

SpecAst parse_spec(std::string_view text) { return Parser(text).run(); }

}  // namespace gr1core
