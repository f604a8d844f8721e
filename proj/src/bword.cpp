#include "skewbrace/bword.hpp"

#include <cctype>

#include "skewbrace/errors.hpp"

namespace skewbrace {

BWordRef BWord::zero() { return BWordRef(new BWord(Kind::zero, {}, nullptr, nullptr)); }
BWordRef BWord::gen(std::string name) {
  return BWordRef(new BWord(Kind::gen, std::move(name), nullptr, nullptr));
}
BWordRef BWord::sum(BWordRef l, BWordRef r) {
  return BWordRef(new BWord(Kind::sum, {}, std::move(l), std::move(r)));
}
BWordRef BWord::prod(BWordRef l, BWordRef r) {
  return BWordRef(new BWord(Kind::prod, {}, std::move(l), std::move(r)));
}
BWordRef BWord::neg(BWordRef w) { return BWordRef(new BWord(Kind::neg, {}, std::move(w), nullptr)); }
BWordRef BWord::inv(BWordRef w) { return BWordRef(new BWord(Kind::inv, {}, std::move(w), nullptr)); }

bool structurally_equal(const BWordRef& a, const BWordRef& b) {
  if (a == b) return true;
  if (!a || !b || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case BWord::Kind::zero:
      return true;
    case BWord::Kind::gen:
      return a->name() == b->name();
    case BWord::Kind::neg:
    case BWord::Kind::inv:
      return structurally_equal(a->lhs(), b->lhs());
    case BWord::Kind::sum:
    case BWord::Kind::prod:
      return structurally_equal(a->lhs(), b->lhs()) && structurally_equal(a->rhs(), b->rhs());
  }
  return false;
}

BWordRef lambda_word(const BWordRef& a, const BWordRef& b) {
  return BWord::sum(BWord::neg(a), BWord::prod(a, b));
}

BWordRef star_word(const BWordRef& a, const BWordRef& b) {
  return BWord::sum(lambda_word(a, b), BWord::neg(b));
}

std::string print_bword(const BWordRef& w) {
  switch (w->kind()) {
    case BWord::Kind::zero:
      return "0";
    case BWord::Kind::gen:
      return w->name();
    case BWord::Kind::sum:
      return "(" + print_bword(w->lhs()) + " + " + print_bword(w->rhs()) + ")";
    case BWord::Kind::prod:
      return "(" + print_bword(w->lhs()) + " o " + print_bword(w->rhs()) + ")";
    case BWord::Kind::neg:
      return "(- " + print_bword(w->lhs()) + ")";
    case BWord::Kind::inv:
      return "(" + print_bword(w->lhs()) + " ~)";
  }
  return {};
}

namespace {

struct Token {
  enum class Type { zero, name, lparen, rparen, plus, prod, minus, tilde, end };
  Type type;
  std::string text;
  int col;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) return {Token::Type::end, "", col};
    const char c = s_[pos_];
    switch (c) {
      case '(': ++pos_; return {Token::Type::lparen, "(", col};
      case ')': ++pos_; return {Token::Type::rparen, ")", col};
      case '+': ++pos_; return {Token::Type::plus, "+", col};
      case '-': ++pos_; return {Token::Type::minus, "-", col};
      case '~': ++pos_; return {Token::Type::tilde, "~", col};
      case '0': ++pos_; return {Token::Type::zero, "0", col};
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      size_t end = pos_ + 1;
      while (end < s_.size() && ((s_[end] >= 'a' && s_[end] <= 'z') || std::isdigit(static_cast<unsigned char>(s_[end]))))
        ++end;
      std::string name = s_.substr(pos_, end - pos_);
      pos_ = end;
      if (name == "o") return {Token::Type::prod, "o", col};
      return {Token::Type::name, std::move(name), col};
    }
    throw FormatError(std::string("unexpected character '") + c + "' in b-word", -1, col);
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  BWordRef parse() {
    BWordRef w = word();
    if (tok_.type != Token::Type::end)
      throw FormatError("trailing input after b-word", -1, tok_.col);
    return w;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  void expect(Token::Type t, const char* what) {
    if (tok_.type != t) throw FormatError(std::string("expected ") + what, -1, tok_.col);
    advance();
  }

  BWordRef word() {
    switch (tok_.type) {
      case Token::Type::zero:
        advance();
        return BWord::zero();
      case Token::Type::name: {
        BWordRef g = BWord::gen(tok_.text);
        advance();
        return g;
      }
      case Token::Type::lparen: {
        advance();
        if (tok_.type == Token::Type::minus) {
          advance();
          BWordRef w = word();
          expect(Token::Type::rparen, "')'");
          return BWord::neg(w);
        }
        BWordRef l = word();
        switch (tok_.type) {
          case Token::Type::plus: {
            advance();
            BWordRef r = word();
            expect(Token::Type::rparen, "')'");
            return BWord::sum(l, r);
          }
          case Token::Type::prod: {
            advance();
            BWordRef r = word();
            expect(Token::Type::rparen, "')'");
            return BWord::prod(l, r);
          }
          case Token::Type::tilde: {
            advance();
            expect(Token::Type::rparen, "')'");
            return BWord::inv(l);
          }
          default:
            throw FormatError("expected '+', 'o' or '~'", -1, tok_.col);
        }
      }
      default:
        throw FormatError("expected '0', a generator name or '('", -1, tok_.col);
    }
  }

  Lexer lex_;
  Token tok_{Token::Type::end, "", 1};
};

}  // namespace

BWordRef parse_bword(const std::string& text) { return Parser(text).parse(); }

void collect_generators(const BWordRef& w, std::set<std::string>& out) {
  switch (w->kind()) {
    case BWord::Kind::zero:
      return;
    case BWord::Kind::gen:
      out.insert(w->name());
      return;
    case BWord::Kind::neg:
    case BWord::Kind::inv:
      collect_generators(w->lhs(), out);
      return;
    case BWord::Kind::sum:
    case BWord::Kind::prod:
      collect_generators(w->lhs(), out);
      collect_generators(w->rhs(), out);
      return;
  }
}

int eval_bword(const BWordRef& w, const FiniteSkewBrace& b, const Assignment& a) {
  switch (w->kind()) {
    case BWord::Kind::zero:
      return 0;
    case BWord::Kind::gen: {
      auto it = a.find(w->name());
      if (it == a.end()) throw PreconditionError("unbound generator '" + w->name() + "'");
      if (it->second < 0 || it->second >= b.n)
        throw PreconditionError("assignment of '" + w->name() + "' out of range");
      return it->second;
    }
    case BWord::Kind::sum:
      return b.add_at(eval_bword(w->lhs(), b, a), eval_bword(w->rhs(), b, a));
    case BWord::Kind::prod:
      return b.mul_at(eval_bword(w->lhs(), b, a), eval_bword(w->rhs(), b, a));
    case BWord::Kind::neg:
      return b.neg_of(eval_bword(w->lhs(), b, a));
    case BWord::Kind::inv:
      return b.inv_of(eval_bword(w->lhs(), b, a));
  }
  throw std::logic_error("unreachable b-word kind");
}

namespace {

bool valid_generator_name(const std::string& s) {
  if (s.empty() || s == "o") return false;
  if (s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
  return true;
}

}  // namespace

void validate_presentation(const SkewBracePresentation& p) {
  std::set<std::string> declared;
  for (const auto& g : p.generators) {
    if (!valid_generator_name(g)) throw FormatError("invalid generator name '" + g + "'");
    if (!declared.insert(g).second) throw FormatError("duplicate generator '" + g + "'");
  }
  for (size_t i = 0; i < p.relators.size(); ++i) {
    std::set<std::string> used;
    collect_generators(p.relators[i], used);
    for (const auto& g : used)
      if (!declared.count(g))
        throw FormatError("relator " + std::to_string(i + 1) + " uses undeclared generator '" + g + "'");
  }
}

std::vector<int> failing_relators(const SkewBracePresentation& p, const FiniteSkewBrace& b,
                                  const Assignment& a) {
  std::vector<int> out;
  for (size_t i = 0; i < p.relators.size(); ++i)
    if (eval_bword(p.relators[i], b, a) != 0) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace skewbrace
