#ifndef IOFPAR_SEARCH_HPP
#define IOFPAR_SEARCH_HPP

#include <span>
#include <vector>

#include "iofpar/pinj.hpp"

namespace iofpar {

/// A deduplicated set of transformations over one universe, held in the
/// canonical order (sorted by graph). Iteration order is deterministic
/// regardless of how the set was produced.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(int n, std::vector<PartialInjection> elements);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<PartialInjection>& elements() const noexcept { return elements_; }
  bool contains(const PartialInjection& x) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int n_ = 0;
  std::vector<PartialInjection> elements_;
};

/// Every member over {1..n}, produced by backtracking over pair sequences
/// pruned by the four membership conditions.
ElementSet enumerate_members(int n);

/// All of I_n, every partial injection on {1..n}. Grows like n!·e-ish;
/// kept for oracle duty at n <= 8.
std::vector<PartialInjection> all_partial_injections(int n);

/// Smallest submonoid containing the generators: worklist saturation with
/// canonical dedup. The identity is always included (empty product).
/// Desk-scale: n <= 15.
ElementSet closure(int n, std::span<const PartialInjection> gens);

/// closure(gens) equals enumerate_members(n).
bool is_generating(int n, std::span<const PartialInjection> gens);

/// Exact minimum size of a generating set, by subset search.
///
/// For n <= 3 the search is raw: subsets of ascending size over the whole
/// monoid (minus the identity, which is free). For n >= 4 the search is
/// pruned by the necessary-element facts: every generating set contains all
/// n partial identities of rank n-1, the two shift generators of rank n-2,
/// and for each i <= n-4 a non-identity element with domain {1..i, i+4..n}
/// and one with that image. Candidates violating these are never tried.
///
/// max_subset_size caps the candidate size (0 = no cap); throws ValueError
/// when the budget is exhausted before a generating set appears.
int brute_rank(int n, int max_subset_size = 0);

/// All members of rank exactly k.
ElementSet classify_rank(int n, int k);

/// True when no proper subset of the standard generating set generates
/// (drop-one test over all 3n-6 elements). Requires n >= 4.
bool check_minimality(int n);

}  // namespace iofpar

#endif  // IOFPAR_SEARCH_HPP
