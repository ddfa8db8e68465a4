#ifndef IOFPAR_FENCE_HPP
#define IOFPAR_FENCE_HPP

#include <optional>
#include <string>

#include "iofpar/pinj.hpp"

namespace iofpar {

/// The up-fence (zig-zag order) 1 < 2 > 3 < 4 > ... on {1..n}: the only
/// comparable pairs are adjacent integers, odd points sit at the bottom.
/// Returns x < y in that order. Throws on points outside 1..n.
bool fence_below(int x, int y, int n);

/// x < y implies xa <= ya on the domain (linear order).
bool is_order_preserving(const PartialInjection& a);

/// x and xa share parity for every domain point.
bool is_parity_preserving(const PartialInjection& a);

/// x below y in the fence implies xa below ya, over the domain.
bool is_fence_preserving(const PartialInjection& a);

/// Definition-based membership test: order-, parity-, and fence-preserving,
/// with fence-preserving inverse. Quantifies over the domain literally; kept
/// as the slow reference check.
bool is_member_direct(const PartialInjection& a);

/// Four-condition membership characterization over the sorted graph
/// (d_1 < ... < d_p / m_1 ... m_p):
///   (i)   m_1 < m_2 < ... < m_p
///   (ii)  d_1 and m_1 share parity
///   (iii) d_{i+1}-d_i = 1 exactly when m_{i+1}-m_i = 1
///   (iv)  d_{i+1}-d_i is even exactly when m_{i+1}-m_i is even
/// The empty map is a member; rank-1 maps are members when (ii) holds.
bool is_member_fast(const PartialInjection& a);

/// The first violated condition of is_member_fast, spelled out, or nullopt
/// for members.
std::optional<std::string> member_violation(const PartialInjection& a);

}  // namespace iofpar

#endif  // IOFPAR_FENCE_HPP
