#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rbx/algebra.hpp"
#include "rbx/dendriform.hpp"
#include "rbx/errors.hpp"
#include "rbx/linalg.hpp"

namespace rbx {

/// Letters are interned integers: id >= 0 is a generator letter, id < 0 is
/// the bracket letter [w] for word -(id+1).
using LetterId = std::int32_t;
using WordId = std::int32_t;

inline bool is_bracket(LetterId l) { return l < 0; }
inline WordId bracket_content(LetterId l) { return -(l + 1); }
inline LetterId bracket_letter(WordId w) { return -(w + 1); }

struct RbTerm {
  WordId word;
  Rational coeff;
  friend bool operator==(const RbTerm& a, const RbTerm& b) { return a.word == b.word && a.coeff == b.coeff; }
};

/// Rational combination of Rota-Baxter words; kept sorted by word id with
/// no zero coefficients.
using RbElement = std::vector<RbTerm>;

struct WordStats {
  int breadth = 0;
  int head = 0;  // 0 when the first letter is a generator, 1 when bracketed
  int tail = 0;
  int depth = 0;  // maximal bracket nesting
};

/// Raised when a product would create a word deeper than the context cap.
/// Carries the offending pair; nothing is silently truncated.
class DepthCapError : public std::runtime_error {
public:
  DepthCapError(int cap, std::string lhs, std::string rhs)
      : std::runtime_error("depth cap " + std::to_string(cap) + " exceeded by " + lhs + " ◇ " + rhs),
        lhs(std::move(lhs)),
        rhs(std::move(rhs)) {}
  std::string lhs, rhs;
};

/// Interning arena for the free Rota-Baxter algebra over a base algebra B.
/// Two alphabets: `plain` (B given by a finite basis with a multiplication
/// table and involution) and `tensor` (B = T(V), letters are nonempty
/// tensor words in V-symbols, products concatenate).
class FreeRbContext {
public:
  static FreeRbContext plain(InvolutiveAlgebra base, std::vector<std::string> names, int depth_cap = 4);
  static FreeRbContext tensor(Index v_dim, Mat v_inv, std::vector<std::string> names, int depth_cap = 4);

  bool tensor_mode() const { return tensor_mode_; }
  int depth_cap() const { return depth_cap_; }
  void set_depth_cap(int cap) { depth_cap_ = cap; }

  Index alphabet_dim() const { return tensor_mode_ ? v_dim_ : base_.dim; }
  const std::vector<std::string>& names() const { return names_; }
  std::int64_t interned_words() const { return static_cast<std::int64_t>(words_.size()); }

  /// Generator letter for a single base symbol.
  LetterId symbol_letter(Index i);
  /// Generator letter for a tensor word (tensor mode only).
  LetterId tensor_letter(std::vector<Index> factors);
  const std::vector<Index>& tensor_factors(LetterId l) const { return gen_seqs_[static_cast<std::size_t>(l)]; }

  /// Interns a letter sequence; validates non-emptiness and alternation.
  WordId intern(std::vector<LetterId> letters);
  const std::vector<LetterId>& letters(WordId w) const { return words_[static_cast<std::size_t>(w)].letters; }
  int depth(WordId w) const { return words_[static_cast<std::size_t>(w)].depth; }

  /// Single-letter word.
  WordId letter_word(LetterId l);

  // Product / involution memo tables (results are cap-independent; hits are
  // re-checked against the current cap by the product code).
  std::unordered_map<std::uint64_t, RbElement> product_memo;
  std::unordered_map<WordId, RbElement> star_memo;

  const InvolutiveAlgebra& base() const { return base_; }
  const Mat& v_involution() const { return v_inv_; }

private:
  FreeRbContext() = default;

  struct WordRec {
    std::vector<LetterId> letters;
    int depth = 0;
  };

  bool tensor_mode_ = false;
  int depth_cap_ = 4;
  InvolutiveAlgebra base_;  // plain mode
  Index v_dim_ = 0;         // tensor mode
  Mat v_inv_;
  std::vector<std::string> names_;

  std::unordered_map<std::string, LetterId> gen_pool_;  // tensor mode: key = factor indices
  std::vector<std::vector<Index>> gen_seqs_;
  std::unordered_map<std::string, WordId> word_pool_;
  std::vector<WordRec> words_;
};

/// Canonical structural order on words (generators before brackets,
/// then recursively); used for deterministic printing.
bool word_less(const FreeRbContext& ctx, WordId a, WordId b);

/// Normalizes: merges duplicate words, drops zeros, sorts by word id.
RbElement normalize(RbElement e);
RbElement add(const RbElement& a, const RbElement& b);
RbElement scale(const Rational& c, const RbElement& e);

WordStats word_stats(const FreeRbContext& ctx, WordId w);

/// The diamond product, bilinear on elements: concatenation when
/// tail(x) != head(y), the three-case Fard-Guo recursion otherwise.
/// Throws DepthCapError when a bracket would exceed depth_cap.
RbElement word_product(FreeRbContext& ctx, const RbElement& x, const RbElement& y, int depth_cap);
RbElement word_product(FreeRbContext& ctx, const RbElement& x, const RbElement& y);
RbElement word_product_words(FreeRbContext& ctx, WordId x, WordId y, int depth_cap);

/// The Rota-Baxter operator R_B(x) = [x], extended linearly.
RbElement rb_apply(FreeRbContext& ctx, const RbElement& x, int depth_cap);
RbElement rb_apply(FreeRbContext& ctx, const RbElement& x);

/// The involution: ([x])* = [x*], (x_1 ... x_b)* = x_b* ... x_1*, with the
/// base-algebra involution on generator letters.
RbElement word_involution(FreeRbContext& ctx, const RbElement& x);
RbElement word_involution_word(FreeRbContext& ctx, WordId w);

/// Single word / element with coefficient 1.
RbElement element_of(WordId w);

std::string print_word(const FreeRbContext& ctx, WordId w);
std::string print_element(const FreeRbContext& ctx, const RbElement& e);

/// Generators of the Rota-Baxter ideal J_R of the enveloping construction,
/// over T(D) for a dendriform algebra D, with the exact decomposition of
/// each generator's involution image over the generator set.
struct EnvelopingRelation {
  bool from_prec = true;  // true: x<y - x[y]; false: x>y - [x]y
  Index p = 0, q = 0;
  RbElement element;
  /// g*(p,q) = sum coeff * partner(k,l); empty for non-involutive input.
  std::vector<std::tuple<Index, Index, Rational>> star_decomposition;
};

struct EnvelopingRelations {
  FreeRbContext ctx;
  std::vector<EnvelopingRelation> relations;
};

/// The generator set { x<y - x[y], x>y - [x]y } over basis pairs of D.
/// When D carries an involution, each generator's involution image is
/// verified to be the stated exact combination of generators.
EnvelopingRelations enveloping_relations(const DendriformAlgebra& d, std::vector<std::string> names = {});

/// Parses the bracketed-word expression grammar ('.' is the diamond
/// product); see the README for the syntax. Positions in errors are byte
/// offsets into the input.
RbElement parse_expression(FreeRbContext& ctx, std::string_view text);

}  // namespace rbx
