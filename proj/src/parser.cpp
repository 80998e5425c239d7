#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "dcc/syntax.hpp"

namespace dcc {

namespace {

enum class Tok {
  Ident, Zero, LBracket, RBracket, LParen, RParen, Comma, Dot, Plus, Bang, Star,
  Tensor, Oplus, EqEq, Eq, Semi, End
};

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

std::string describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Plus: return "'+'";
    case Tok::Bang: return "'!'";
    case Tok::Star: return "'^*'";
    case Tok::Tensor: return "'(x)'";
    case Tok::Oplus: return "'(+)'";
    case Tok::EqEq: return "'=='";
    case Tok::Eq: return "'='";
    case Tok::Semi: return "';'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourceLoc loc{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    struct Fixed {
      std::string_view text;
      Tok kind;
    };
    static constexpr Fixed kFixed[] = {
        {"(x)", Tok::Tensor}, {"(+)", Tok::Oplus}, {"==", Tok::EqEq}, {"^*", Tok::Star},
        {"0", Tok::Zero},     {"[", Tok::LBracket}, {"]", Tok::RBracket}, {"(", Tok::LParen},
        {")", Tok::RParen},   {",", Tok::Comma},    {".", Tok::Dot},      {"+", Tok::Plus},
        {"!", Tok::Bang},     {"=", Tok::Eq},       {";", Tok::Semi}};
    bool matched = false;
    for (const auto& f : kFixed) {
      if (starts(f.text)) {
        out.push_back({f.kind, std::string(f.text), loc});
        advance(f.text.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    throw ParseError(loc, "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

const std::map<std::string, Prim, std::less<>>& prim_table() {
  static const std::map<std::string, Prim, std::less<>> table = {
      {"id", Prim::Id},       {"alpha", Prim::Alpha},   {"alpha_inv", Prim::AlphaInv},
      {"alphainv", Prim::AlphaInv}, {"lam", Prim::Lam}, {"lam_inv", Prim::LamInv},
      {"laminv", Prim::LamInv}, {"sigma", Prim::Sigma}, {"eta", Prim::Eta},
      {"eps", Prim::Eps},     {"pi1", Prim::Pi1},       {"pi2", Prim::Pi2},
      {"iota1", Prim::Iota1}, {"iota2", Prim::Iota2},   {"zero", Prim::Zero}};
  return table;
}

bool reserved(std::string_view name) {
  static const std::set<std::string, std::less<>> words = {"p", "I", "x", "gens", "let", "check", "inv"};
  return words.count(name) != 0 || prim_table().count(name) != 0;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Alphabet* alphabet)
      : toks_(std::move(toks)), alphabet_(alphabet) {}

  Program program() {
    expect_word("gens");
    std::vector<std::string> names;
    while (peek().kind == Tok::Ident) {
      const Token& t = next();
      if (reserved(t.text)) fail(t, "'" + t.text + "' is reserved and cannot name a generator");
      for (const auto& n : names) {
        if (n == t.text) fail(t, "generator '" + t.text + "' declared twice");
      }
      names.push_back(t.text);
    }
    if (names.empty()) fail(peek(), "expected at least one generator name");
    expect(Tok::Semi);
    Program prog{Alphabet(names), {}, {}};
    alphabet_ = &prog.alphabet;
    while (peek().kind != Tok::End) {
      const Token& kw = next();
      if (kw.kind == Tok::Ident && kw.text == "let") {
        const Token& name = expect(Tok::Ident);
        if (reserved(name.text) || alphabet_->find(name.text)) {
          fail(name, "'" + name.text + "' cannot be used as a definition name");
        }
        if (lets_.count(name.text)) fail(name, "'" + name.text + "' defined twice");
        expect(Tok::Eq);
        Term t = term();
        expect(Tok::Semi);
        lets_.emplace(name.text, t);
        prog.lets.emplace_back(name.text, t);
      } else if (kw.kind == Tok::Ident && kw.text == "check") {
        Term l = term();
        expect(Tok::EqEq);
        Term r = term();
        expect(Tok::Semi);
        prog.checks.push_back({l, r, kw.loc});
      } else {
        fail(kw, "expected 'let' or 'check'");
      }
    }
    return prog;
  }

  Term whole_term() {
    Term t = term();
    expect(Tok::End);
    return t;
  }

  Obj whole_object() {
    Obj a = object();
    expect(Tok::End);
    return a;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.loc, msg); }
  const Token& expect(Tok k) {
    if (peek().kind != k) {
      fail(peek(), "expected " + describe(k) + ", found " +
                       (peek().kind == Tok::Ident ? "'" + peek().text + "'" : describe(peek().kind)));
    }
    return next();
  }
  void expect_word(std::string_view w) {
    if (peek().kind != Tok::Ident || peek().text != w) fail(peek(), "expected '" + std::string(w) + "'");
    next();
  }

  Term term() {
    Term t = sum();
    while (peek().kind == Tok::Dot) {
      SourceLoc loc = next().loc;
      t = Term::compose(t, sum(), loc);
    }
    return t;
  }
  Term sum() {
    Term t = direct_sum();
    while (peek().kind == Tok::Plus) {
      SourceLoc loc = next().loc;
      t = Term::plus(t, direct_sum(), loc);
    }
    return t;
  }
  Term direct_sum() {
    Term t = product();
    while (peek().kind == Tok::Oplus) {
      SourceLoc loc = next().loc;
      t = Term::oplus(t, product(), loc);
    }
    return t;
  }
  Term product() {
    Term t = postfix();
    while (peek().kind == Tok::Tensor) {
      SourceLoc loc = next().loc;
      t = Term::tensor(t, postfix(), loc);
    }
    return t;
  }
  Term postfix() {
    Term t = atom();
    while (peek().kind == Tok::Bang) t = Term::dagger(t, next().loc);
    return t;
  }
  Term atom() {
    const Token& t = peek();
    if (accept(Tok::LParen)) {
      Term inner = term();
      expect(Tok::RParen);
      return inner;
    }
    if (t.kind != Tok::Ident) fail(t, "expected a term, found " + describe(t.kind));
    next();
    if (t.text == "inv") {
      expect(Tok::LParen);
      const Token& g = expect(Tok::Ident);
      auto id = alphabet_->find(g.text);
      if (!id) fail(g, "undeclared generator '" + g.text + "'");
      expect(Tok::RParen);
      return Term::geninv(*id, t.loc);
    }
    if (auto it = prim_table().find(t.text); it != prim_table().end()) {
      expect(Tok::LBracket);
      std::vector<Obj> args;
      if (peek().kind != Tok::RBracket) {
        args.push_back(object());
        while (accept(Tok::Comma)) args.push_back(object());
      }
      const Token& close = expect(Tok::RBracket);
      if (args.size() != arity(it->second)) {
        fail(close, t.text + " takes " + std::to_string(arity(it->second)) + " object argument(s), got " +
                        std::to_string(args.size()));
      }
      return Term::prim(it->second, std::move(args), t.loc);
    }
    if (auto id = alphabet_->find(t.text)) return Term::gen(*id, t.loc);
    if (auto it = lets_.find(t.text); it != lets_.end()) return it->second;
    fail(t, "unknown name '" + t.text + "'");
  }

  Obj object() {
    Obj a = object_product();
    while (accept(Tok::Oplus)) a = Obj::oplus(a, object_product());
    return a;
  }
  Obj object_product() {
    Obj a = object_postfix();
    while (accept(Tok::Tensor)) a = Obj::tensor(a, object_postfix());
    return a;
  }
  Obj object_postfix() {
    Obj a = object_atom();
    while (accept(Tok::Star)) a = Obj::star(a);
    return a;
  }
  Obj object_atom() {
    const Token& t = peek();
    if (accept(Tok::LParen)) {
      Obj a = object();
      expect(Tok::RParen);
      return a;
    }
    if (accept(Tok::Zero)) return Obj::zero();
    if (t.kind == Tok::Ident && (t.text == "p" || t.text == "I")) {
      next();
      return t.text == "p" ? Obj::p() : Obj::unit();
    }
    fail(t, "expected an object (p, I, 0 or a parenthesised formula)");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Alphabet* alphabet_;
  std::map<std::string, Term, std::less<>> lets_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(lex(text), nullptr).program(); }

Term parse_term(std::string_view text, const Alphabet& alphabet) {
  return Parser(lex(text), &alphabet).whole_term();
}

Obj parse_object(std::string_view text) { return Parser(lex(text), nullptr).whole_object(); }

}  // namespace dcc
