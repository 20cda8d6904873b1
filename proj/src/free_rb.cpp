#include "rbx/free_rb.hpp"

#include <algorithm>
#include <cstring>

namespace rbx {

namespace {

std::string pool_key(const std::vector<std::int32_t>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size() * sizeof(std::int32_t)};
}

std::string pool_key_idx(const std::vector<Index>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size() * sizeof(Index)};
}

}  // namespace

FreeRbContext FreeRbContext::plain(InvolutiveAlgebra base, std::vector<std::string> names, int depth_cap) {
  if (names.empty())
    for (Index i = 0; i < base.dim; ++i) names.push_back("e" + std::to_string(i));
  if (static_cast<Index>(names.size()) != base.dim) throw ShapeError("one name per basis symbol");
  FreeRbContext ctx;
  ctx.tensor_mode_ = false;
  ctx.depth_cap_ = depth_cap;
  ctx.base_ = std::move(base);
  ctx.names_ = std::move(names);
  return ctx;
}

FreeRbContext FreeRbContext::tensor(Index v_dim, Mat v_inv, std::vector<std::string> names, int depth_cap) {
  if (names.empty())
    for (Index i = 0; i < v_dim; ++i) names.push_back("e" + std::to_string(i));
  if (static_cast<Index>(names.size()) != v_dim) throw ShapeError("one name per basis symbol");
  if (v_inv.rows() != v_dim || v_inv.cols() != v_dim) throw ShapeError("alphabet involution must be dim x dim");
  FreeRbContext ctx;
  ctx.tensor_mode_ = true;
  ctx.depth_cap_ = depth_cap;
  ctx.v_dim_ = v_dim;
  ctx.v_inv_ = std::move(v_inv);
  ctx.names_ = std::move(names);
  return ctx;
}

LetterId FreeRbContext::symbol_letter(Index i) {
  if (i < 0 || i >= alphabet_dim()) throw ShapeError("symbol index out of range");
  if (!tensor_mode_) return static_cast<LetterId>(i);
  return tensor_letter({i});
}

LetterId FreeRbContext::tensor_letter(std::vector<Index> factors) {
  internal_check(tensor_mode_, "tensor letters exist only in tensor mode");
  internal_check(!factors.empty(), "tensor letters are nonempty");
  const std::string key = pool_key_idx(factors);
  if (auto it = gen_pool_.find(key); it != gen_pool_.end()) return it->second;
  const LetterId id = static_cast<LetterId>(gen_seqs_.size());
  gen_seqs_.push_back(std::move(factors));
  gen_pool_.emplace(key, id);
  return id;
}

WordId FreeRbContext::intern(std::vector<LetterId> letters) {
  if (letters.empty()) throw InputError("", "empty word");
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (is_bracket(letters[i]) == is_bracket(letters[i + 1]))
      throw InputError("", "letters must alternate between generators and brackets");
  const std::string key = pool_key(letters);
  if (auto it = word_pool_.find(key); it != word_pool_.end()) return it->second;
  int depth = 0;
  for (const LetterId l : letters)
    if (is_bracket(l)) depth = std::max(depth, this->depth(bracket_content(l)) + 1);
  const WordId id = static_cast<WordId>(words_.size());
  words_.push_back({std::move(letters), depth});
  word_pool_.emplace(key, id);
  return id;
}

WordId FreeRbContext::letter_word(LetterId l) { return intern({l}); }

bool word_less(const FreeRbContext& ctx, WordId a, WordId b) {
  if (a == b) return false;
  const auto& la = ctx.letters(a);
  const auto& lb = ctx.letters(b);
  const std::size_t n = std::min(la.size(), lb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const LetterId x = la[i], y = lb[i];
    if (x == y) continue;
    if (is_bracket(x) != is_bracket(y)) return is_bracket(x);  // brackets first
    if (!is_bracket(x)) {
      if (!ctx.tensor_mode()) return x < y;
      const auto& fx = ctx.tensor_factors(x);
      const auto& fy = ctx.tensor_factors(y);
      if (fx != fy) return std::lexicographical_compare(fx.begin(), fx.end(), fy.begin(), fy.end());
      return false;
    }
    const WordId cx = bracket_content(x), cy = bracket_content(y);
    if (cx != cy) return word_less(ctx, cx, cy);
  }
  return la.size() < lb.size();
}

RbElement normalize(RbElement e) {
  std::sort(e.begin(), e.end(), [](const RbTerm& a, const RbTerm& b) { return a.word < b.word; });
  RbElement out;
  for (const RbTerm& t : e) {
    if (!out.empty() && out.back().word == t.word)
      out.back().coeff += t.coeff;
    else
      out.push_back(t);
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  }
  return out;
}

RbElement add(const RbElement& a, const RbElement& b) {
  RbElement e = a;
  e.insert(e.end(), b.begin(), b.end());
  return normalize(std::move(e));
}

RbElement scale(const Rational& c, const RbElement& e) {
  if (c.is_zero()) return {};
  RbElement out = e;
  for (RbTerm& t : out) t.coeff *= c;
  return out;
}

RbElement element_of(WordId w) { return {{w, Rational(1)}}; }

WordStats word_stats(const FreeRbContext& ctx, WordId w) {
  const auto& letters = ctx.letters(w);
  WordStats s;
  s.breadth = static_cast<int>(letters.size());
  s.head = is_bracket(letters.front()) ? 1 : 0;
  s.tail = is_bracket(letters.back()) ? 1 : 0;
  s.depth = ctx.depth(w);
  return s;
}

namespace {

// Letter-level product for letters of equal kind (the interacting case).
RbElement letter_product(FreeRbContext& ctx, LetterId l1, LetterId l2, int depth_cap);

// Brackets every term; the depth check lives here.
RbElement bracket_all(FreeRbContext& ctx, const RbElement& e, int depth_cap, LetterId lhs, LetterId rhs) {
  RbElement out;
  out.reserve(e.size());
  for (const RbTerm& t : e) {
    if (ctx.depth(t.word) + 1 > depth_cap)
      throw DepthCapError(depth_cap, print_word(ctx, ctx.letter_word(lhs)), print_word(ctx, ctx.letter_word(rhs)));
    out.push_back({ctx.letter_word(bracket_letter(t.word)), t.coeff});
  }
  return normalize(std::move(out));
}

RbElement letter_product(FreeRbContext& ctx, LetterId l1, LetterId l2, int depth_cap) {
  if (!is_bracket(l1)) {  // generator * generator
    if (ctx.tensor_mode()) {
      std::vector<Index> seq = ctx.tensor_factors(l1);
      const auto& s2 = ctx.tensor_factors(l2);
      seq.insert(seq.end(), s2.begin(), s2.end());
      return element_of(ctx.letter_word(ctx.tensor_letter(std::move(seq))));
    }
    const InvolutiveAlgebra& b = ctx.base();
    RbElement out;
    const auto row = b.mul.row(static_cast<Index>(l1) * b.dim + static_cast<Index>(l2));
    for (Index k = 0; k < b.dim; ++k)
      if (!row(k).is_zero()) out.push_back({ctx.letter_word(static_cast<LetterId>(k)), row(k)});
    return normalize(std::move(out));
  }
  // [x] * [y] = [[x] * y'] + [x * [y']]
  const WordId xbar = bracket_content(l1), ybar = bracket_content(l2);
  const RbElement left = word_product_words(ctx, ctx.letter_word(l1), ybar, depth_cap);
  const RbElement right = word_product_words(ctx, xbar, ctx.letter_word(l2), depth_cap);
  return add(bracket_all(ctx, left, depth_cap, l1, l2), bracket_all(ctx, right, depth_cap, l1, l2));
}

}  // namespace

RbElement word_product_words(FreeRbContext& ctx, WordId x, WordId y, int depth_cap) {
  const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
                            static_cast<std::uint32_t>(y);
  if (auto it = ctx.product_memo.find(key); it != ctx.product_memo.end()) {
    for (const RbTerm& t : it->second)
      if (ctx.depth(t.word) > depth_cap)
        throw DepthCapError(depth_cap, print_word(ctx, x), print_word(ctx, y));
    return it->second;
  }

  // Copies: interning below may reallocate the word arena.
  const std::vector<LetterId> lx = ctx.letters(x);
  const std::vector<LetterId> ly = ctx.letters(y);
  RbElement result;
  if (is_bracket(lx.back()) != is_bracket(ly.front())) {
    std::vector<LetterId> cat = lx;
    cat.insert(cat.end(), ly.begin(), ly.end());
    result = element_of(ctx.intern(std::move(cat)));
  } else {
    const RbElement core = letter_product(ctx, lx.back(), ly.front(), depth_cap);
    if (lx.size() == 1 && ly.size() == 1) {
      result = core;
    } else {
      for (const RbTerm& t : core) {
        std::vector<LetterId> spliced(lx.begin(), lx.end() - 1);
        const auto& mid = ctx.letters(t.word);
        spliced.insert(spliced.end(), mid.begin(), mid.end());
        spliced.insert(spliced.end(), ly.begin() + 1, ly.end());
        result.push_back({ctx.intern(std::move(spliced)), t.coeff});
      }
      result = normalize(std::move(result));
    }
  }
  ctx.product_memo.emplace(key, result);
  return result;
}

RbElement word_product(FreeRbContext& ctx, const RbElement& x, const RbElement& y, int depth_cap) {
  RbElement out;
  for (const RbTerm& tx : x)
    for (const RbTerm& ty : y) {
      const RbElement p = word_product_words(ctx, tx.word, ty.word, depth_cap);
      for (const RbTerm& t : p) out.push_back({t.word, tx.coeff * ty.coeff * t.coeff});
    }
  return normalize(std::move(out));
}

RbElement word_product(FreeRbContext& ctx, const RbElement& x, const RbElement& y) {
  return word_product(ctx, x, y, ctx.depth_cap());
}

RbElement rb_apply(FreeRbContext& ctx, const RbElement& x, int depth_cap) {
  RbElement out;
  out.reserve(x.size());
  for (const RbTerm& t : x) {
    if (ctx.depth(t.word) + 1 > depth_cap)
      throw DepthCapError(depth_cap, print_word(ctx, t.word), "R_B");
    out.push_back({ctx.letter_word(bracket_letter(t.word)), t.coeff});
  }
  return normalize(std::move(out));
}

RbElement rb_apply(FreeRbContext& ctx, const RbElement& x) { return rb_apply(ctx, x, ctx.depth_cap()); }

namespace {

// Involution image of one letter, as a combination of letters.
std::vector<std::pair<LetterId, Rational>> star_letter(FreeRbContext& ctx, LetterId l) {
  std::vector<std::pair<LetterId, Rational>> out;
  if (is_bracket(l)) {
    for (const RbTerm& t : word_involution_word(ctx, bracket_content(l))) out.emplace_back(bracket_letter(t.word), t.coeff);
    return out;
  }
  if (!ctx.tensor_mode()) {
    const InvolutiveAlgebra& b = ctx.base();
    for (Index k = 0; k < b.dim; ++k)
      if (!b.inv(k, static_cast<Index>(l)).is_zero()) out.emplace_back(static_cast<LetterId>(k), b.inv(k, static_cast<Index>(l)));
    return out;
  }
  // (v_1 (x) ... (x) v_n)* = v_n* (x) ... (x) v_1*, expanded over the
  // alphabet involution.
  const auto& factors = ctx.tensor_factors(l);
  const Mat& inv = ctx.v_involution();
  std::vector<std::pair<std::vector<Index>, Rational>> partial{{{}, Rational(1)}};
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    std::vector<std::pair<std::vector<Index>, Rational>> next;
    for (const auto& [seq, coeff] : partial)
      for (Index k = 0; k < inv.rows(); ++k) {
        if (inv(k, *it).is_zero()) continue;
        auto s = seq;
        s.push_back(k);
        next.emplace_back(std::move(s), coeff * inv(k, *it));
      }
    partial = std::move(next);
  }
  for (auto& [seq, coeff] : partial) out.emplace_back(ctx.tensor_letter(std::move(seq)), coeff);
  return out;
}

}  // namespace

RbElement word_involution_word(FreeRbContext& ctx, WordId w) {
  if (auto it = ctx.star_memo.find(w); it != ctx.star_memo.end()) return it->second;
  const std::vector<LetterId> letters = ctx.letters(w);  // copy: star_letter interns
  std::vector<std::pair<std::vector<LetterId>, Rational>> partial{{{}, Rational(1)}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const auto options = star_letter(ctx, *it);
    std::vector<std::pair<std::vector<LetterId>, Rational>> next;
    next.reserve(partial.size() * options.size());
    for (const auto& [seq, coeff] : partial)
      for (const auto& [letter, c] : options) {
        auto s = seq;
        s.push_back(letter);
        next.emplace_back(std::move(s), coeff * c);
      }
    partial = std::move(next);
  }
  RbElement out;
  out.reserve(partial.size());
  for (auto& [seq, coeff] : partial) out.push_back({ctx.intern(std::move(seq)), coeff});
  out = normalize(std::move(out));
  ctx.star_memo.emplace(w, out);
  return out;
}

RbElement word_involution(FreeRbContext& ctx, const RbElement& x) {
  RbElement out;
  for (const RbTerm& t : x) out = add(out, scale(t.coeff, word_involution_word(ctx, t.word)));
  return out;
}

std::string print_word(const FreeRbContext& ctx, WordId w) {
  std::string out;
  for (const LetterId l : ctx.letters(w)) {
    if (is_bracket(l)) {
      out += '[';
      out += print_word(ctx, bracket_content(l));
      out += ']';
    } else if (ctx.tensor_mode()) {
      const auto& factors = ctx.tensor_factors(l);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += ' ';
        out += ctx.names()[static_cast<std::size_t>(factors[i])];
      }
    } else {
      out += ctx.names()[static_cast<std::size_t>(l)];
    }
  }
  return out;
}

std::string print_element(const FreeRbContext& ctx, const RbElement& e) {
  if (e.empty()) return "0";
  RbElement sorted = e;
  std::sort(sorted.begin(), sorted.end(),
            [&](const RbTerm& a, const RbTerm& b) { return word_less(ctx, a.word, b.word); });
  std::string out;
  bool first = true;
  for (const RbTerm& t : sorted) {
    const bool negative = t.coeff.sign() < 0;
    const Rational mag = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (!(mag == Rational(1))) {
      out += mag.str();
      out += '*';
    }
    out += print_word(ctx, t.word);
  }
  return out;
}

EnvelopingRelations enveloping_relations(const DendriformAlgebra& d, std::vector<std::string> names) {
  const ValidationReport valid = validate_dendriform(d);
  if (!valid.ok())
    throw PreconditionError("enveloping relations need a valid dendriform algebra (" + valid.violations.front().axiom + ")");
  const Mat inv = d.inv ? *d.inv : Mat::Identity(d.dim, d.dim);
  EnvelopingRelations out{FreeRbContext::tensor(d.dim, inv, std::move(names)), {}};
  FreeRbContext& ctx = out.ctx;

  const auto symbol_word = [&](Index i) { return element_of(ctx.letter_word(ctx.symbol_letter(i))); };
  const auto product_as_element = [&](const Mat& tensor, Index p, Index q) {
    RbElement e;
    for (Index k = 0; k < d.dim; ++k) {
      const Rational c = tensor(p * d.dim + q, k);
      if (!c.is_zero()) e.push_back({ctx.letter_word(ctx.symbol_letter(k)), c});
    }
    return normalize(std::move(e));
  };

  for (Index p = 0; p < d.dim; ++p)
    for (Index q = 0; q < d.dim; ++q) {
      // x<y - x[y]
      const LetterId gp = ctx.symbol_letter(p), gq = ctx.symbol_letter(q);
      const WordId x_bracket_y = ctx.intern({gp, bracket_letter(ctx.letter_word(gq))});
      out.relations.push_back({true, p, q,
                               add(product_as_element(d.prec, p, q), scale(Rational(-1), element_of(x_bracket_y))),
                               {}});
      // x>y - [x]y
      const WordId bracket_x_y = ctx.intern({bracket_letter(ctx.letter_word(gp)), gq});
      out.relations.push_back({false, p, q,
                               add(product_as_element(d.succ, p, q), scale(Rational(-1), element_of(bracket_x_y))),
                               {}});
    }

  if (d.inv) {
    const auto find_relation = [&](bool from_prec, Index p, Index q) -> const RbElement& {
      for (const auto& r : out.relations)
        if (r.from_prec == from_prec && r.p == p && r.q == q) return r.element;
      throw InternalCheckError("relation lookup failed");
    };
    for (auto& rel : out.relations) {
      // (x_p < x_q - x_p [x_q])* = sum inv(k,q) inv(l,p) (x_k > x_l - [x_k] x_l),
      // and symmetrically for the succ generators.
      RbElement expected;
      for (Index k = 0; k < d.dim; ++k)
        for (Index l = 0; l < d.dim; ++l) {
          const Rational c = (*d.inv)(k, rel.q) * (*d.inv)(l, rel.p);
          if (c.is_zero()) continue;
          expected = add(expected, scale(c, find_relation(!rel.from_prec, k, l)));
          rel.star_decomposition.emplace_back(k, l, c);
        }
      internal_check(word_involution(ctx, rel.element) == expected,
                     "J_R generator involution image must decompose over the generators");
    }
  }
  return out;
}

}  // namespace rbx
