#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "rbx/free_rb.hpp"

namespace rbx {

namespace {

struct Token {
  enum Kind { ident, number, lbracket, rbracket, plus, minus, times, slash, dot, star_postfix, end };
  Kind kind = end;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t pos) const {
    throw InputError("position " + std::to_string(pos), what);
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.pos = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::end;
      current_.text.clear();
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_.kind = Token::ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_.kind = Token::number;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    ++pos_;
    switch (c) {
      case '[': current_.kind = Token::lbracket; return;
      case ']': current_.kind = Token::rbracket; return;
      case '+': current_.kind = Token::plus; return;
      case '-': current_.kind = Token::minus; return;
      case '*': current_.kind = Token::times; return;
      case '/': current_.kind = Token::slash; return;
      case '.': current_.kind = Token::dot; return;
      case '^':
        if (pos_ < text_.size() && text_[pos_] == '*') {
          ++pos_;
          current_.kind = Token::star_postfix;
          return;
        }
        fail("'^' must be followed by '*'", pos_ - 1);
      default: fail(std::string("unexpected character '") + c + "'", pos_ - 1);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

// One parsed letter position: a combination of letters (a starred tensor
// symbol or a bracketed element may expand to several).
using LetterOptions = std::vector<std::pair<LetterId, Rational>>;

class Parser {
public:
  Parser(FreeRbContext& ctx, std::string_view text) : ctx_(ctx), lex_(text) {}

  RbElement parse() {
    RbElement e = expression();
    if (lex_.peek().kind != Token::end) lex_.fail("trailing input", lex_.peek().pos);
    return e;
  }

private:
  RbElement expression() {
    bool negative = false;
    if (lex_.peek().kind == Token::minus) {
      lex_.next();
      negative = true;
    } else if (lex_.peek().kind == Token::plus) {
      lex_.next();
    }
    RbElement out = scale(negative ? Rational(-1) : Rational(1), product());
    while (lex_.peek().kind == Token::plus || lex_.peek().kind == Token::minus) {
      const bool minus = lex_.next().kind == Token::minus;
      out = add(out, scale(minus ? Rational(-1) : Rational(1), product()));
    }
    return out;
  }

  RbElement product() {
    RbElement out = term();
    while (lex_.peek().kind == Token::dot) {
      lex_.next();
      out = word_product(ctx_, out, term(), ctx_.depth_cap());
    }
    return out;
  }

  RbElement term() {
    Rational coeff(1);
    if (lex_.peek().kind == Token::number) {
      const Token num = lex_.next();
      BigInt p{num.text}, q{1};
      if (lex_.peek().kind == Token::slash) {
        lex_.next();
        if (lex_.peek().kind != Token::number) lex_.fail("expected denominator", lex_.peek().pos);
        q = BigInt{lex_.next().text};
        if (q.is_zero()) lex_.fail("zero denominator", num.pos);
      }
      if (lex_.peek().kind != Token::times) {
        if (p.is_zero()) return {};  // a bare 0 is the zero element
        lex_.fail("expected '*' after coefficient", lex_.peek().pos);
      }
      lex_.next();
      coeff = Rational(p, q);
    }
    return scale(coeff, word());
  }

  // A word: juxtaposed letters. In tensor mode consecutive identifiers
  // merge into a single tensor-word letter (whitespace separates the
  // factors); in plain mode each identifier is its own letter and the
  // alternation check rejects adjacent generators.
  RbElement word() {
    std::vector<std::pair<LetterOptions, std::size_t>> slots;  // options + position
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::ident) {
        std::size_t pos = t.pos;
        auto factors = tensor_factors();
        if (ctx_.tensor_mode()) {
          slots.push_back({expand_tensor_letter(factors), pos});
        } else {
          for (const auto& [idx, starred] : factors) slots.push_back({plain_letter(idx, starred), pos});
        }
      } else if (t.kind == Token::lbracket) {
        const std::size_t pos = lex_.next().pos;
        RbElement inner = expression();
        if (lex_.peek().kind != Token::rbracket) lex_.fail("expected ']'", lex_.peek().pos);
        lex_.next();
        if (lex_.peek().kind == Token::star_postfix) {
          lex_.next();
          inner = word_involution(ctx_, inner);
        }
        LetterOptions opts;
        for (const RbTerm& rt : inner) opts.emplace_back(bracket_letter(rt.word), rt.coeff);
        slots.push_back({std::move(opts), pos});
      } else {
        break;
      }
    }
    if (slots.empty()) lex_.fail("expected a word", lex_.peek().pos);

    std::vector<std::pair<std::vector<LetterId>, Rational>> partial{{{}, Rational(1)}};
    for (const auto& [options, pos] : slots) {
      std::vector<std::pair<std::vector<LetterId>, Rational>> next;
      for (const auto& [seq, c] : partial)
        for (const auto& [letter, lc] : options) {
          auto s = seq;
          s.push_back(letter);
          next.emplace_back(std::move(s), c * lc);
        }
      partial = std::move(next);
      if (partial.empty()) return {};  // a slot expanded to zero
    }
    RbElement out;
    for (auto& [seq, c] : partial) {
      for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (is_bracket(seq[i]) == is_bracket(seq[i + 1]))
          lex_.fail(is_bracket(seq[i]) ? "adjacent bracketed letters violate alternation"
                                       : "adjacent generator letters violate alternation",
                    slots[i + 1].second);
      out.push_back({ctx_.intern(std::move(seq)), c});
    }
    return normalize(std::move(out));
  }

  // Consecutive identifiers, each optionally starred.
  std::vector<std::pair<Index, bool>> tensor_factors() {
    std::vector<std::pair<Index, bool>> factors;
    while (lex_.peek().kind == Token::ident) {
      const Token t = lex_.next();
      const Index idx = symbol_index(t);
      bool starred = false;
      if (lex_.peek().kind == Token::star_postfix) {
        lex_.next();
        starred = true;
      }
      factors.emplace_back(idx, starred);
      if (!ctx_.tensor_mode()) break;  // plain mode: one identifier per letter
    }
    return factors;
  }

  Index symbol_index(const Token& t) {
    const auto& names = ctx_.names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == t.text) return static_cast<Index>(i);
    lex_.fail("unknown symbol '" + t.text + "'", t.pos);
  }

  LetterOptions plain_letter(Index idx, bool starred) {
    if (!starred) return {{static_cast<LetterId>(idx), Rational(1)}};
    LetterOptions out;
    const Mat& inv = ctx_.base().inv;
    for (Index k = 0; k < inv.rows(); ++k)
      if (!inv(k, idx).is_zero()) out.emplace_back(static_cast<LetterId>(k), inv(k, idx));
    return out;
  }

  // Tensor letter from factors, expanding starred symbols through the
  // alphabet involution.
  LetterOptions expand_tensor_letter(const std::vector<std::pair<Index, bool>>& factors) {
    const Mat& inv = ctx_.v_involution();
    std::vector<std::pair<std::vector<Index>, Rational>> partial{{{}, Rational(1)}};
    for (const auto& [idx, starred] : factors) {
      std::vector<std::pair<std::vector<Index>, Rational>> next;
      for (const auto& [seq, c] : partial) {
        if (!starred) {
          auto s = seq;
          s.push_back(idx);
          next.emplace_back(std::move(s), c);
          continue;
        }
        for (Index k = 0; k < inv.rows(); ++k) {
          if (inv(k, idx).is_zero()) continue;
          auto s = seq;
          s.push_back(k);
          next.emplace_back(std::move(s), c * inv(k, idx));
        }
      }
      partial = std::move(next);
    }
    LetterOptions out;
    for (auto& [seq, c] : partial) out.emplace_back(ctx_.tensor_letter(std::move(seq)), c);
    return out;
  }

  FreeRbContext& ctx_;
  Lexer lex_;
};

}  // namespace

RbElement parse_expression(FreeRbContext& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

}  // namespace rbx
