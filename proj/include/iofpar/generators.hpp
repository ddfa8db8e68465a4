#ifndef IOFPAR_GENERATORS_HPP
#define IOFPAR_GENERATORS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iofpar/pinj.hpp"

namespace iofpar {

enum class Family : char { V = 'v', U = 'u', X = 'x' };

/// One letter of the generator alphabet X_n = {v_1..v_n, u_1..u_{n-2},
/// x_1..x_{n-2}}. Index validity depends on n and is checked at evaluation.
struct GeneratorSymbol {
  Family family = Family::V;
  int index = 0;

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// A finite word over the generator alphabet, evaluated left to right.
/// The empty word evaluates to the identity.
struct Word {
  std::vector<GeneratorSymbol> symbols;

  bool empty() const noexcept { return symbols.empty(); }
  std::size_t size() const noexcept { return symbols.size(); }

  /// "v3 u4 x1"; the empty word encodes as "".
  std::string encode() const;
  static Word decode(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
};

/// A same-family run with indices stepping by two: family U with start i and
/// length j denotes the word u_i u_{i+2} ... u_{i+2j-2} (likewise for X).
/// Legal when i is in 1..n-2 and j in 1..floor((n-i)/2).
struct BlockWord {
  Family family = Family::U;  // U or X
  int start = 0;              // i
  int length = 0;             // j

  friend bool operator==(const BlockWord&, const BlockWord&) = default;
};

/// Partial identity on {1..n} minus {i}. Requires 1 <= i <= n.
PartialInjection gen_v(int n, int i);

/// Shift-up generator: 1..i moves to 3..i+2, the three points i+1..i+3 are
/// deleted, i+4..n is fixed. Requires 1 <= i <= n-2.
PartialInjection gen_u(int n, int i);

/// Shift-down generator, the inverse of gen_u(n, i).
PartialInjection gen_x(int n, int i);

/// The transformation of a single letter; validates the index against n.
PartialInjection symbol_transformation(int n, GeneratorSymbol s);

/// Transformation of the run word read forwards: for a U block,
/// u_i u_{i+2} ... u_{i+2j-2} composed left to right.
PartialInjection run_product(int n, const BlockWord& block);

/// Transformation of the run word read backwards, which is how X blocks are
/// emitted in normal forms. A reversed X run is the inverse of the matching
/// U run product.
PartialInjection run_product_reversed(int n, const BlockWord& block);

/// The block's letters, forwards or backwards.
Word expand(const BlockWord& block);
Word expand_reversed(const BlockWord& block);

/// The standard generating set of size 3n-6 with its conventional names:
/// v_1..v_n, u_1..u_{n-4}, u_{n-2}, x_1..x_{n-4}, x_{n-2} (index n-3 is
/// omitted from the U and X families). Requires n >= 4.
std::vector<std::pair<std::string, PartialInjection>> standard_generating_set(int n);

/// Left-to-right product of the letters' transformations.
PartialInjection eval_word(int n, const Word& w);

/// Rewrites the two letters whose transformations fall outside the standard
/// generating set: u_{n-3} becomes v_{n-2} u_{n-2} and x_{n-3} becomes
/// v_n x_{n-2}. Evaluation is unchanged.
Word expand_to_an(int n, const Word& w);

}  // namespace iofpar

#endif  // IOFPAR_GENERATORS_HPP
