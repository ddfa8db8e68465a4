#ifndef IOFPAR_FACTORIZE_HPP
#define IOFPAR_FACTORIZE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "iofpar/generators.hpp"

namespace iofpar {

/// Gap structure of a member transformation (d_1 < ... < d_p / m_1 ... m_p).
///
/// A breakpoint is a position r in 1..p-1 where the domain gap
/// d_{r+1} - d_r differs from the image gap m_{r+1} - m_r. Each breakpoint
/// contributes one shift block: an X run when the image gap wins, a U run
/// when the domain gap wins, the run length absorbing half the difference.
/// When d_p != m_p a tail block closes the remaining offset.
///
/// Anchors tie the block list back to the graph: entry k holds (k_u, k_x),
/// computed from block data alone by the backward recursion, and always
/// equal to (d at position r_k, m at position r_k) with r_{last} = p.
struct BreakpointData {
  int rank = 0;                              // p
  std::vector<int> positions;                // r_1 < ... < r_l, each in 1..p-1
  std::vector<BlockWord> blocks;             // w_1..w_l, plus the tail block when d_p != m_p
  std::vector<std::pair<int, int>> anchors;  // l+1 entries, one per block position plus p

  int breakpoint_count() const noexcept { return static_cast<int>(positions.size()); }
  bool has_tail_block() const noexcept { return blocks.size() == positions.size() + 1; }
};

/// Normal form of a member: guard set A (rendered as the prefix of partial
/// identities v_A) followed by the shift blocks, U runs first in construction
/// order, then the X runs letterwise reversed with the last-constructed run
/// emitted first.
struct Factorization {
  int n = 0;
  std::vector<int> guard;                   // A, ascending, disjoint from dom
  std::vector<BlockWord> u_blocks;          // construction order
  std::vector<BlockWord> x_blocks;          // emission order (reverse of construction)
  std::optional<BreakpointData> breakdown;  // absent on the partial-identity path
};

/// Computes the breakpoint structure. Requires a member with n >= 4 that is
/// not a partial identity (in particular not empty and not the identity).
BreakpointData breakpoints(const PartialInjection& a);

/// The guard set A for a member with the given breakpoint structure:
/// the indices of the v letters that delete every point the blocks do not
/// already delete. Disjoint from dom(a).
std::vector<int> guard_set(const PartialInjection& a, const BreakpointData& bp);

/// Full normal form. The identity factors as the empty word; partial
/// identities factor as v_A with A the domain complement; everything else
/// goes through the breakpoint construction. Requires membership and n >= 4.
Factorization factorize(const PartialInjection& a);

/// v_A then the blocks, as a word over the full alphabet X_n.
Word render(const Factorization& f);

/// The block part only (no guard prefix).
Word render_blocks(const Factorization& f);

/// Like render, then rewrites index-(n-3) letters so every letter's
/// transformation lies in the standard generating set.
Word render_over_an(const Factorization& f);

/// The block word of the inverse member evaluates to the inverse of the
/// block word of the member. Checks that identity by evaluation; requires a
/// member with n >= 4.
bool check_inverse_word(const PartialInjection& a);

/// Breadth-first search for a shortest word over the full alphabet X_n that
/// evaluates to the given member. Covers the small universes (n <= 3) that
/// the normal-form construction excludes; works for any member with n <= 15.
Word factorize_by_search(const PartialInjection& a);

}  // namespace iofpar

#endif  // IOFPAR_FACTORIZE_HPP
