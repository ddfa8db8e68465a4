#ifndef IOFPAR_PINJ_HPP
#define IOFPAR_PINJ_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iofpar {

/// Invalid values, violated preconditions, mismatched universes.
class ValueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input.
class ParseError : public ValueError {
 public:
  using ValueError::ValueError;
};

/// A partial injection on {1..n}: a one-to-one map from a subset of {1..n}
/// into {1..n}.
///
/// Values are immutable and canonical. The graph is stored as (domain point,
/// image point) pairs sorted strictly by domain point, so structural equality
/// coincides with equality of maps, and the defaulted ordering is a total
/// order usable as a canonical sort key. The universe size n is part of the
/// value: maps over different universes are never equal and never compose.
class PartialInjection {
 public:
  using Pair = std::pair<int, int>;

  PartialInjection() = default;  // the empty map on the empty universe n=0

  /// Validates and canonicalizes; input pairs may arrive in any order.
  /// Rejects points outside 1..n, duplicate domain points and duplicate
  /// image points.
  static PartialInjection make(int n, std::vector<Pair> pairs);

  /// The identity map on {1..n}.
  static PartialInjection identity(int n);

  /// The empty map (rank 0) on {1..n}.
  static PartialInjection empty(int n);

  int n() const noexcept { return n_; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  /// |dom| = |im|.
  int rank() const noexcept { return static_cast<int>(pairs_.size()); }

  bool defined_at(int x) const noexcept;
  std::optional<int> apply(int x) const noexcept;

  std::vector<int> domain() const;
  std::vector<int> image() const;

  /// Left-to-right composition: x(a.compose(b)) = (xa)b. Defined where xa
  /// lands in dom(b). Throws ValueError when universes differ.
  PartialInjection compose(const PartialInjection& rhs) const;

  /// Transposed graph, re-canonicalized.
  PartialInjection inverse() const;

  /// True when every domain point is fixed (includes identity and empty).
  bool is_partial_identity() const noexcept;

  /// Text form "n=6;1>1,4>6" with pairs sorted by domain point; the empty
  /// map encodes as "n=6;".
  std::string encode() const;
  static PartialInjection decode(std::string_view text);

  /// Image table packed 4 bits per point (0 = undefined). A perfect dedup
  /// key for universes with n <= 15.
  std::uint64_t packed_key() const;

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;
  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;

 private:
  PartialInjection(int n, std::vector<Pair> pairs)
      : n_(n), pairs_(std::move(pairs)) {}

  int n_ = 0;
  std::vector<Pair> pairs_;
};

/// Left-to-right composition, same as a.compose(b).
PartialInjection operator*(const PartialInjection& a, const PartialInjection& b);

/// Parses a bare "d>m,d>m" pair list (whitespace tolerated, "" accepted as
/// the empty list). Range checks against n happen later in make().
std::vector<PartialInjection::Pair> parse_pair_list(std::string_view text);

}  // namespace iofpar

#endif  // IOFPAR_PINJ_HPP
