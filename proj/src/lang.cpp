#include "domval/lang.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace domval::lang {

namespace {

enum class Tok {
  ident,
  number,
  lbrace,
  rbrace,
  lparen,
  rparen,
  semi,
  colon,
  comma,
  eq,
  dot,
  arrow,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

[[noreturn]] void fail_at(Errc code, int line, int col, const std::string& message) {
  raise(code, "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + message);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (source[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += count;
  };
  while (i < source.size()) {
    char c = source[i];
    if (c == '#') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int tok_line = line;
    int tok_col = col;
    auto push = [&](Tok kind, std::size_t len) {
      tokens.push_back({kind, std::string(source.substr(i, len)), tok_line, tok_col});
      advance(len);
    };
    if (ident_start(c)) {
      std::size_t len = 1;
      while (i + len < source.size() && ident_char(source[i + len])) ++len;
      push(Tok::ident, len);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (i + len < source.size() && std::isdigit(static_cast<unsigned char>(source[i + len]))) ++len;
      if (i + len < source.size() && source[i + len] == '.') {
        fail_at(Errc::syntax_error, tok_line, tok_col, "decimal literals are rejected, use p/q");
      }
      if (i + len + 1 < source.size() && source[i + len] == '/' &&
          std::isdigit(static_cast<unsigned char>(source[i + len + 1]))) {
        ++len;
        while (i + len < source.size() && std::isdigit(static_cast<unsigned char>(source[i + len]))) ++len;
      }
      push(Tok::number, len);
      continue;
    }
    if (c == '-' && i + 1 < source.size() && source[i + 1] == '>') {
      push(Tok::arrow, 2);
      continue;
    }
    switch (c) {
      case '{': push(Tok::lbrace, 1); continue;
      case '}': push(Tok::rbrace, 1); continue;
      case '(': push(Tok::lparen, 1); continue;
      case ')': push(Tok::rparen, 1); continue;
      case ';': push(Tok::semi, 1); continue;
      case ':': push(Tok::colon, 1); continue;
      case ',': push(Tok::comma, 1); continue;
      case '=': push(Tok::eq, 1); continue;
      case '.': push(Tok::dot, 1); continue;
      default:
        fail_at(Errc::syntax_error, tok_line, tok_col,
                std::string("unexpected character '") + c + "'");
    }
  }
  tokens.push_back({Tok::end, "", line, col});
  return tokens;
}

const std::set<std::string, std::less<>> kKeywords = {
    "poset", "elem",   "cover",  "def", "main", "const", "var",
    "fail",  "choice", "sample", "let", "in",   "case"};

class Parser {
 public:
  explicit Parser(std::string_view source) : tokens_(tokenize(source)) {}

  Program run() {
    while (!at(Tok::end)) {
      if (at_keyword("poset")) {
        parse_poset_decl();
      } else if (at_keyword("def")) {
        parse_def();
      } else if (at_keyword("main")) {
        parse_main();
      } else {
        const Token& t = peek();
        fail_at(Errc::syntax_error, t.line, t.col,
                "expected 'poset', 'def' or 'main', got '" + t.text + "'");
      }
      while (accept(Tok::semi)) {
      }
    }
    if (!program_.main) {
      raise(Errc::syntax_error, "program has no 'main' expression");
    }
    resolve_calls();
    check_recursion();
    return std::move(program_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token get() { return tokens_[pos_++]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::ident && peek().text == kw;
  }
  bool accept(Tok kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok kind, const char* what) {
    if (!at(kind)) {
      const Token& t = peek();
      fail_at(Errc::syntax_error, t.line, t.col,
              std::string("expected ") + what + ", got '" +
                  (t.kind == Tok::end ? "<eof>" : t.text) + "'");
    }
    return get();
  }
  void expect_keyword(const char* kw) {
    if (!at_keyword(kw)) {
      const Token& t = peek();
      fail_at(Errc::syntax_error, t.line, t.col,
              std::string("expected '") + kw + "', got '" + t.text + "'");
    }
    get();
  }
  Token expect_name(const char* what) {
    Token t = expect(Tok::ident, what);
    if (kKeywords.count(t.text)) {
      fail_at(Errc::syntax_error, t.line, t.col,
              "keyword '" + t.text + "' cannot be used as a name");
    }
    return t;
  }

  PosetPtr lookup_poset(const Token& name) const {
    auto it = program_.posets.find(name.text);
    if (it == program_.posets.end()) {
      fail_at(Errc::resolution_error, name.line, name.col, "unknown poset '" + name.text + "'");
    }
    return it->second;
  }

  void parse_poset_decl() {
    get();  // poset
    Token name = expect_name("poset name");
    if (program_.posets.count(name.text)) {
      fail_at(Errc::resolution_error, name.line, name.col,
              "poset '" + name.text + "' declared twice");
    }
    expect(Tok::lbrace, "'{'");
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> covers;
    while (!accept(Tok::rbrace)) {
      if (accept(Tok::semi)) continue;
      if (at_keyword("elem")) {
        get();
        elems.push_back(expect_name("element name").text);
      } else if (at_keyword("cover")) {
        get();
        std::string lo = expect_name("element name").text;
        std::string hi = expect_name("element name").text;
        covers.emplace_back(std::move(lo), std::move(hi));
      } else {
        const Token& t = peek();
        fail_at(Errc::syntax_error, t.line, t.col,
                "expected 'elem' or 'cover' in poset body, got '" + t.text + "'");
      }
    }
    program_.posets.emplace(name.text, build_poset(name.text, std::move(elems), covers));
  }

  void parse_def() {
    Token kw = get();  // def
    FunctionDef def;
    def.line = kw.line;
    def.col = kw.col;
    Token name = expect_name("function name");
    def.name = name.text;
    if (program_.find_def(def.name)) {
      fail_at(Errc::resolution_error, name.line, name.col,
              "function '" + def.name + "' defined twice");
    }
    expect(Tok::lparen, "'('");
    if (!accept(Tok::rparen)) {
      while (true) {
        Token param = expect_name("parameter name");
        expect(Tok::colon, "':'");
        Token poset_name = expect(Tok::ident, "poset name");
        def.params.emplace_back(param.text, lookup_poset(poset_name));
        if (accept(Tok::rparen)) break;
        expect(Tok::comma, "','");
      }
    }
    expect(Tok::eq, "'='");
    scope_.clear();
    for (const auto& [pname, unused] : def.params) scope_.push_back(pname);
    def.body = parse_expr();
    scope_.clear();
    program_.defs.push_back(std::move(def));
  }

  void parse_main() {
    Token kw = get();  // main
    if (program_.main) {
      fail_at(Errc::resolution_error, kw.line, kw.col, "'main' defined twice");
    }
    expect(Tok::eq, "'='");
    scope_.clear();
    program_.main = parse_expr();
  }

  static ExprPtr finish(Expr expr, const Token& at_token) {
    expr.line = at_token.line;
    expr.col = at_token.col;
    return std::make_shared<Expr>(std::move(expr));
  }

  ExprPtr parse_expr() {
    if (at_keyword("let")) {
      Token kw = get();
      Token var = expect_name("variable name");
      expect(Tok::eq, "'='");
      ExprPtr bound = parse_expr();
      expect_keyword("in");
      scope_.push_back(var.text);
      ExprPtr body = parse_expr();
      scope_.pop_back();
      return finish({LetNode{var.text, std::move(bound), std::move(body)}, 0, 0}, kw);
    }
    if (at_keyword("case")) {
      Token kw = get();
      ExprPtr scrutinee = parse_expr();
      expect(Tok::lbrace, "'{'");
      std::vector<std::pair<std::string, ExprPtr>> arms;
      while (!accept(Tok::rbrace)) {
        if (accept(Tok::semi)) continue;
        Token elem = expect_name("element name");
        for (const auto& [seen, unused] : arms) {
          if (seen == elem.text) {
            fail_at(Errc::resolution_error, elem.line, elem.col,
                    "duplicate case arm for '" + elem.text + "'");
          }
        }
        expect(Tok::arrow, "'->'");
        arms.emplace_back(elem.text, parse_expr());
      }
      if (arms.empty()) {
        fail_at(Errc::syntax_error, kw.line, kw.col, "case needs at least one arm");
      }
      return finish({CaseNode{std::move(scrutinee), std::move(arms)}, 0, 0}, kw);
    }
    if (at_keyword("choice")) {
      Token kw = get();
      Token bias_tok = expect(Tok::number, "probability p/q");
      Rational bias = Rational::parse(bias_tok.text);
      if (!in_unit_interval(bias)) {
        fail_at(Errc::syntax_error, bias_tok.line, bias_tok.col,
                "choice bias " + bias.to_string() + " outside [0,1]");
      }
      ExprPtr left = parse_primary();
      ExprPtr right = parse_primary();
      return finish({ChoiceNode{std::move(bias), std::move(left), std::move(right)}, 0, 0}, kw);
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    const Token t = peek();
    if (at_keyword("const")) {
      Token kw = get();
      Token poset_name = expect(Tok::ident, "poset name");
      PosetPtr poset = lookup_poset(poset_name);
      expect(Tok::dot, "'.'");
      Token elem = expect_name("element name");
      auto idx = poset->find(elem.text);
      if (!idx) {
        fail_at(Errc::resolution_error, elem.line, elem.col,
                "poset '" + poset->name() + "' has no element '" + elem.text + "'");
      }
      return finish({ConstNode{std::move(poset), *idx}, 0, 0}, kw);
    }
    if (at_keyword("var")) {
      Token kw = get();
      Token name = expect_name("variable name");
      if (std::find(scope_.begin(), scope_.end(), name.text) == scope_.end()) {
        fail_at(Errc::resolution_error, name.line, name.col,
                "unbound variable '" + name.text + "'");
      }
      return finish({VarNode{name.text}, 0, 0}, kw);
    }
    if (at_keyword("fail")) {
      Token kw = get();
      Token poset_name = expect(Tok::ident, "poset name");
      return finish({FailNode{lookup_poset(poset_name)}, 0, 0}, kw);
    }
    if (at_keyword("sample")) {
      Token kw = get();
      Token cdf_name = expect_name("cdf name");
      Token step_name = expect_name("step map name");
      return finish({SampleNode{cdf_name.text, step_name.text}, 0, 0}, kw);
    }
    if (at(Tok::lparen)) {
      get();
      ExprPtr inner = parse_expr();
      expect(Tok::rparen, "')'");
      return inner;
    }
    if (at(Tok::ident) && !kKeywords.count(t.text)) {
      Token name = get();
      expect(Tok::lparen, "'(' after function name");
      std::vector<ExprPtr> args;
      if (!accept(Tok::rparen)) {
        while (true) {
          args.push_back(parse_expr());
          if (accept(Tok::rparen)) break;
          expect(Tok::comma, "','");
        }
      }
      calls_.push_back({name.text, name.line, name.col, args.size()});
      return finish({CallNode{name.text, std::move(args)}, 0, 0}, name);
    }
    fail_at(Errc::syntax_error, t.line, t.col, "expected expression, got '" + t.text + "'");
  }

  void resolve_calls() const {
    for (const auto& call : calls_) {
      const FunctionDef* def = program_.find_def(call.name);
      if (!def) {
        fail_at(Errc::resolution_error, call.line, call.col,
                "call to undefined function '" + call.name + "'");
      }
      if (def->params.size() != call.arity) {
        fail_at(Errc::resolution_error, call.line, call.col,
                "function '" + call.name + "' takes " + std::to_string(def->params.size()) +
                    " arguments, got " + std::to_string(call.arity));
      }
    }
  }

  // The language is total by construction: the call graph must be acyclic.
  void check_recursion() const {
    std::map<std::string, std::vector<std::string>> graph;
    for (const auto& def : program_.defs) collect_calls(def.body, graph[def.name]);
    std::map<std::string, int> state;  // 0 new, 1 active, 2 done
    for (const auto& def : program_.defs) dfs_cycle(def.name, graph, state);
  }

  static void collect_calls(const ExprPtr& expr, std::vector<std::string>& out) {
    const Expr& e = *expr;
    if (const auto* call = std::get_if<CallNode>(&e.node)) {
      out.push_back(call->fn);
      for (const auto& a : call->args) collect_calls(a, out);
    } else if (const auto* choice = std::get_if<ChoiceNode>(&e.node)) {
      collect_calls(choice->left, out);
      collect_calls(choice->right, out);
    } else if (const auto* let = std::get_if<LetNode>(&e.node)) {
      collect_calls(let->bound, out);
      collect_calls(let->body, out);
    } else if (const auto* kase = std::get_if<CaseNode>(&e.node)) {
      collect_calls(kase->scrutinee, out);
      for (const auto& [unused, arm] : kase->arms) collect_calls(arm, out);
    }
  }

  static void dfs_cycle(const std::string& name,
                        const std::map<std::string, std::vector<std::string>>& graph,
                        std::map<std::string, int>& state) {
    int& s = state[name];
    if (s == 2) return;
    if (s == 1) {
      raise(Errc::recursion_error, "recursive call cycle through function '" + name + "'");
    }
    s = 1;
    auto it = graph.find(name);
    if (it != graph.end()) {
      for (const auto& callee : it->second) dfs_cycle(callee, graph, state);
    }
    state[name] = 2;
  }

  struct PendingCall {
    std::string name;
    int line;
    int col;
    std::size_t arity;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Program program_;
  std::vector<std::string> scope_;
  std::vector<PendingCall> calls_;
};

// Static types: the poset each subexpression denotes a valuation on.
class Typer {
 public:
  Typer(const Program& program, const SampleEnv& env) : program_(program), env_(env) {}

  using Scope = std::map<std::string, PosetPtr>;

  PosetPtr infer(const ExprPtr& expr, Scope& scope) const {
    const Expr& e = *expr;
    if (const auto* c = std::get_if<ConstNode>(&e.node)) return c->poset;
    if (const auto* v = std::get_if<VarNode>(&e.node)) {
      auto it = scope.find(v->name);
      if (it == scope.end()) {
        fail_at(Errc::resolution_error, e.line, e.col, "unbound variable '" + v->name + "'");
      }
      return it->second;
    }
    if (const auto* f = std::get_if<FailNode>(&e.node)) return f->poset;
    if (const auto* ch = std::get_if<ChoiceNode>(&e.node)) {
      PosetPtr left = infer(ch->left, scope);
      PosetPtr right = infer(ch->right, scope);
      if (!same_poset(left, right)) {
        fail_at(Errc::poset_mismatch, e.line, e.col,
                "choice branches on posets '" + left->name() + "' and '" + right->name() + "'");
      }
      return left;
    }
    if (const auto* s = std::get_if<SampleNode>(&e.node)) {
      env_.cdf(s->cdf);  // existence check
      return env_.step(s->step).target();
    }
    if (const auto* let = std::get_if<LetNode>(&e.node)) {
      PosetPtr bound = infer(let->bound, scope);
      return infer_with(scope, let->var, bound, let->body);
    }
    if (const auto* call = std::get_if<CallNode>(&e.node)) {
      const FunctionDef* def = program_.find_def(call->fn);
      if (!def) {
        fail_at(Errc::resolution_error, e.line, e.col,
                "call to undefined function '" + call->fn + "'");
      }
      if (def->params.size() != call->args.size()) {
        fail_at(Errc::resolution_error, e.line, e.col, "arity mismatch calling '" + call->fn + "'");
      }
      for (std::size_t i = 0; i < call->args.size(); ++i) {
        PosetPtr arg = infer(call->args[i], scope);
        if (!same_poset(arg, def->params[i].second)) {
          fail_at(Errc::poset_mismatch, e.line, e.col,
                  "argument " + std::to_string(i + 1) + " of '" + call->fn + "' is on poset '" +
                      arg->name() + "', expected '" + def->params[i].second->name() + "'");
        }
      }
      return body_poset(*def);
    }
    const auto& kase = std::get<CaseNode>(e.node);
    PosetPtr scrutinee = infer(kase.scrutinee, scope);
    if (kase.arms.size() != scrutinee->size()) {
      fail_at(Errc::resolution_error, e.line, e.col,
              "case needs exactly one arm per element of '" + scrutinee->name() + "'");
    }
    PosetPtr result;
    for (const auto& [elem, arm] : kase.arms) {
      if (!scrutinee->find(elem)) {
        fail_at(Errc::resolution_error, e.line, e.col,
                "case arm '" + elem + "' is not an element of '" + scrutinee->name() + "'");
      }
      PosetPtr arm_poset = infer(arm, scope);
      if (result && !same_poset(result, arm_poset)) {
        fail_at(Errc::poset_mismatch, e.line, e.col, "case arms land on different posets");
      }
      result = arm_poset;
    }
    return result;
  }

  // Inference under one extra binding, with shadowing handled.
  PosetPtr infer_with(Scope& scope, const std::string& var, PosetPtr poset,
                      const ExprPtr& body) const {
    auto it = scope.find(var);
    std::optional<PosetPtr> saved;
    if (it != scope.end()) saved = it->second;
    scope[var] = std::move(poset);
    PosetPtr result = infer(body, scope);
    if (saved) {
      scope[var] = *saved;
    } else {
      scope.erase(var);
    }
    return result;
  }

  PosetPtr body_poset(const FunctionDef& def) const {
    Scope scope;
    for (const auto& [name, poset] : def.params) scope[name] = poset;
    return infer(def.body, scope);
  }

  void check_program() const {
    for (const auto& def : program_.defs) body_poset(def);
    Scope scope;
    infer(program_.main, scope);
  }

 private:
  const Program& program_;
  const SampleEnv& env_;
};

class Evaluator {
 public:
  Evaluator(const Program& program, const SampleEnv& env)
      : program_(program), env_(env), typer_(program, env) {}

  struct Binding {
    PosetPtr poset;
    std::size_t element;
  };
  using Env = std::map<std::string, Binding>;

  SimpleValuation run() const {
    typer_.check_program();
    Env env;
    return eval(program_.main, env);
  }

  PosetPtr result_poset() const {
    Typer::Scope scope;
    return typer_.infer(program_.main, scope);
  }

 private:
  SimpleValuation eval(const ExprPtr& expr, Env& env) const {
    const Expr& e = *expr;
    if (const auto* c = std::get_if<ConstNode>(&e.node)) {
      return SimpleValuation::dirac(c->poset, c->element);
    }
    if (const auto* v = std::get_if<VarNode>(&e.node)) {
      const Binding& b = env.at(v->name);
      return SimpleValuation::dirac(b.poset, b.element);
    }
    if (const auto* f = std::get_if<FailNode>(&e.node)) {
      return SimpleValuation::zero(f->poset);
    }
    if (const auto* ch = std::get_if<ChoiceNode>(&e.node)) {
      SimpleValuation left = eval(ch->left, env).scaled(ch->bias);
      SimpleValuation right = eval(ch->right, env).scaled(Rational(1) - ch->bias);
      std::vector<SimpleValuation::Atom> atoms = left.atoms();
      atoms.insert(atoms.end(), right.atoms().begin(), right.atoms().end());
      return SimpleValuation::make(left.poset(), std::move(atoms));
    }
    if (const auto* s = std::get_if<SampleNode>(&e.node)) {
      return pushforward(env_.cdf(s->cdf), env_.step(s->step));
    }
    if (const auto* let = std::get_if<LetNode>(&e.node)) {
      SimpleValuation bound = eval(let->bound, env);
      Typer::Scope type_scope = types_of(env);
      PosetPtr target = typer_.infer_with(type_scope, let->var, bound.poset(), let->body);
      return bind_one(let->var, bound, let->body, target, env);
    }
    if (const auto* call = std::get_if<CallNode>(&e.node)) {
      const FunctionDef& def = *program_.find_def(call->fn);
      std::vector<SimpleValuation> args;
      args.reserve(call->args.size());
      for (const auto& arg : call->args) args.push_back(eval(arg, env));
      Env fn_env;
      return bind_params(def, args, typer_.body_poset(def), 0, fn_env);
    }
    const auto& kase = std::get<CaseNode>(e.node);
    SimpleValuation scrutinee = eval(kase.scrutinee, env);
    const PosetPtr& poset = scrutinee.poset();
    std::vector<ExprPtr> arm_for(poset->size());
    for (const auto& [elem, arm] : kase.arms) arm_for[poset->index_of(elem)] = arm;
    // Dispatch is a binding too: the arm map must be monotone on the
    // scrutinee poset (vacuously so when it is an antichain). Typing ran
    // before evaluation, so arms are total and the table is never empty.
    std::vector<SimpleValuation> table;
    table.reserve(poset->size());
    for (std::size_t v = 0; v < poset->size(); ++v) {
      table.push_back(eval(arm_for[v], env));
    }
    PosetPtr target = table.front().poset();
    KleisliMap map = KleisliMap::make(poset, target, std::move(table));
    return kleisli_ext(map, scrutinee);
  }

  static Typer::Scope types_of(const Env& env) {
    Typer::Scope scope;
    for (const auto& [name, binding] : env) scope[name] = binding.poset;
    return scope;
  }

  // let var = bound in body, by Kleisli extension of the environment map.
  // The KleisliMap constructor enforces the continuity requirement.
  SimpleValuation bind_one(const std::string& var, const SimpleValuation& bound,
                           const ExprPtr& body, const PosetPtr& target, Env& env) const {
    const PosetPtr& poset = bound.poset();
    std::vector<SimpleValuation> table;
    table.reserve(poset->size());
    auto it = env.find(var);
    std::optional<Binding> saved;
    if (it != env.end()) saved = it->second;
    for (std::size_t v = 0; v < poset->size(); ++v) {
      env[var] = Binding{poset, v};
      table.push_back(eval(body, env));
    }
    if (saved) {
      env[var] = *saved;
    } else {
      env.erase(var);
    }
    KleisliMap map = KleisliMap::make(poset, target, std::move(table));
    return kleisli_ext(map, bound);
  }

  // Function application as nested lets over the parameters, left to right.
  SimpleValuation bind_params(const FunctionDef& def, const std::vector<SimpleValuation>& args,
                              const PosetPtr& body_target, std::size_t k, Env& fn_env) const {
    if (k == def.params.size()) return eval(def.body, fn_env);
    const auto& [name, poset] = def.params[k];
    std::vector<SimpleValuation> table;
    table.reserve(poset->size());
    for (std::size_t v = 0; v < poset->size(); ++v) {
      fn_env[name] = Binding{poset, v};
      table.push_back(bind_params(def, args, body_target, k + 1, fn_env));
      fn_env.erase(name);
    }
    KleisliMap map = KleisliMap::make(poset, body_target, std::move(table));
    return kleisli_ext(map, args[k]);
  }

  const Program& program_;
  const SampleEnv& env_;
  Typer typer_;
};

}  // namespace

const FunctionDef* Program::find_def(std::string_view name) const {
  for (const auto& def : defs) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

void SampleEnv::add(const Cdf& cdf) {
  if (!cdfs_.emplace(cdf.name(), cdf).second) {
    raise(Errc::duplicate_name, "cdf '" + cdf.name() + "' already registered");
  }
}

void SampleEnv::add(const StepMap& step) {
  if (!steps_.emplace(step.name(), step).second) {
    raise(Errc::duplicate_name, "step map '" + step.name() + "' already registered");
  }
}

const Cdf& SampleEnv::cdf(const std::string& name) const {
  auto it = cdfs_.find(name);
  if (it == cdfs_.end()) raise(Errc::resolution_error, "unknown cdf '" + name + "'");
  return it->second;
}

const StepMap& SampleEnv::step(const std::string& name) const {
  auto it = steps_.find(name);
  if (it == steps_.end()) raise(Errc::resolution_error, "unknown step map '" + name + "'");
  return it->second;
}

Program parse(std::string_view source) { return Parser(source).run(); }

PosetPtr result_poset(const Program& program, const SampleEnv& env) {
  return Evaluator(program, env).result_poset();
}

SimpleValuation eval(const Program& program, const SampleEnv& env) {
  return Evaluator(program, env).run();
}

bool check_equiv(const Program& p1, const Program& p2, const SampleEnv& env) {
  SimpleValuation v1 = eval(p1, env);
  SimpleValuation v2 = eval(p2, env);
  if (!same_poset(v1.poset(), v2.poset())) {
    raise(Errc::poset_mismatch, "programs denote valuations on different posets");
  }
  return v1 == v2;
}

}  // namespace domval::lang
