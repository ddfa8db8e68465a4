#include "iofpar/factorize.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "iofpar/fence.hpp"

namespace iofpar {

namespace {

void require_member(const PartialInjection& a) {
  if (auto why = member_violation(a)) {
    throw ValueError("not a member: " + *why);
  }
}

}  // namespace

BreakpointData breakpoints(const PartialInjection& a) {
  require_member(a);
  if (a.n() < 4) throw ValueError("breakpoint construction requires n >= 4");
  if (a.is_partial_identity()) {
    throw ValueError("breakpoint construction excludes partial identities");
  }

  const auto& ps = a.pairs();
  const int p = a.rank();
  BreakpointData bp;
  bp.rank = p;

  for (int r = 1; r < p; ++r) {
    const int gd = ps[r].first - ps[r - 1].first;
    const int gm = ps[r].second - ps[r - 1].second;
    if (gd == gm) continue;
    bp.positions.push_back(r);
    // member gaps agree in parity and on adjacency, so the difference is
    // even and both gaps are at least 2
    if (gm > gd) {
      bp.blocks.push_back({Family::X, ps[r - 1].second, (gm - gd) / 2});
    } else {
      bp.blocks.push_back({Family::U, ps[r - 1].first, (gd - gm) / 2});
    }
  }
  const int dp = ps[p - 1].first;
  const int mp = ps[p - 1].second;
  if (dp != mp) {
    if (dp > mp) {
      bp.blocks.push_back({Family::X, mp, (dp - mp) / 2});
    } else {
      bp.blocks.push_back({Family::U, dp, (mp - dp) / 2});
    }
  }

  // Anchors run backwards: the final entry comes straight from (d_p, m_p),
  // every earlier entry from its block and the entry after it.
  const std::size_t l = bp.positions.size();
  bp.anchors.assign(l + 1, {0, 0});
  if (dp == mp) {
    bp.anchors[l] = {dp, dp};
  } else {
    const BlockWord& tail = bp.blocks.back();
    bp.anchors[l] = tail.family == Family::U
                        ? std::pair{tail.start, tail.start + 2 * tail.length}
                        : std::pair{tail.start + 2 * tail.length, tail.start};
  }
  for (std::size_t k = l; k-- > 0;) {
    const BlockWord& b = bp.blocks[k];
    const auto [next_u, next_x] = bp.anchors[k + 1];
    if (b.family == Family::U) {
      const int gap_above = next_u - b.start - 2 * b.length - 2;
      bp.anchors[k] = {b.start, next_x - gap_above - 2};
    } else {
      const int gap_above = next_x - b.start - 2 * b.length - 2;
      bp.anchors[k] = {next_u - gap_above - 2, b.start};
    }
  }

#ifndef NDEBUG
  // anchors recover the graph points at the breakpoint positions
  for (std::size_t k = 0; k <= l; ++k) {
    const int r = k < l ? bp.positions[k] : p;
    assert(bp.anchors[k].first == ps[r - 1].first);
    assert(bp.anchors[k].second == ps[r - 1].second);
  }
  // same-family blocks are separated: no shared letters, gaps of at least 2
  for (std::size_t k = 0; k < bp.blocks.size(); ++k) {
    for (std::size_t k2 = k + 1; k2 < bp.blocks.size(); ++k2) {
      if (bp.blocks[k].family == bp.blocks[k2].family) {
        assert(bp.blocks[k].start + 2 * bp.blocks[k].length + 1 < bp.blocks[k2].start);
      }
    }
  }
#endif
  return bp;
}

std::vector<int> guard_set(const PartialInjection& a, const BreakpointData& bp) {
  if (bp.rank != a.rank()) throw ValueError("breakpoint data does not match the transformation");
  const auto& ps = a.pairs();
  const int n = a.n();
  const int p = a.rank();
  const int dp = ps[p - 1].first;
  const int mp = ps[p - 1].second;

  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  auto add_range = [&](int lo, int hi) {
    for (int v = lo; v <= hi; ++v) in[static_cast<std::size_t>(v)] = 1;
  };

  // Above the last domain point. A trailing U run deletes everything past
  // the image top, a trailing X run everything past the domain top; the
  // guard covers only the remainder.
  if (dp <= n - 2) {
    if (mp < dp) {
      add_range(dp + 2, n);
    } else if (dp < mp && mp < n - 1) {
      add_range(mp + 2, n);
    } else if (mp == dp) {
      add_range(mp + 1, n);
    }
  } else if (dp == n - 1 && mp == n - 1) {
    add_range(n, n);
  }

  // Between consecutive domain points. Where the gaps agree the blocks move
  // nothing, so every interior point needs a guard letter; at a breakpoint
  // the block already deletes part of the interval.
  for (int k = 2; k <= p; ++k) {
    const int gd = ps[k - 1].first - ps[k - 2].first;
    const int gm = ps[k - 1].second - ps[k - 2].second;
    if (gm == gd && gm >= 2) {
      add_range(ps[k - 2].first + 1, ps[k - 1].first - 1);
    } else if (2 < gm && gm < gd) {
      add_range(ps[k - 1].first - (gm - 2), ps[k - 1].first - 1);
    } else if (gm > gd && gd > 2) {
      add_range(ps[k - 2].first + 2, ps[k - 1].first - 1);
    }
  }

  // Below the first domain point. A leading X run already deletes the
  // lowest d_1 - m_1 points when the image starts lower than the domain.
  const int d1 = ps[0].first;
  const int m1 = ps[0].second;
  if (d1 != 1 && m1 != 1) {
    if (d1 <= m1) {
      add_range(1, d1 - 1);
    } else {
      add_range(d1 - m1 + 1, d1 - 1);
    }
  }

  std::vector<int> guard;
  for (int v = 1; v <= n; ++v) {
    if (in[static_cast<std::size_t>(v)]) guard.push_back(v);
  }
#ifndef NDEBUG
  for (int g : guard) assert(!a.defined_at(g));
#endif
  return guard;
}

Factorization factorize(const PartialInjection& a) {
  require_member(a);
  if (a.n() < 4) throw ValueError("normal form construction requires n >= 4");

  Factorization f;
  f.n = a.n();
  if (a.is_partial_identity()) {
    for (int v = 1; v <= a.n(); ++v) {
      if (!a.defined_at(v)) f.guard.push_back(v);
    }
    return f;
  }

  BreakpointData bp = breakpoints(a);
  f.guard = guard_set(a, bp);
  for (const BlockWord& b : bp.blocks) {
    (b.family == Family::U ? f.u_blocks : f.x_blocks).push_back(b);
  }
  std::reverse(f.x_blocks.begin(), f.x_blocks.end());
  f.breakdown = std::move(bp);
  return f;
}

Word render_blocks(const Factorization& f) {
  Word w;
  for (const BlockWord& b : f.u_blocks) {
    Word part = expand(b);
    w.symbols.insert(w.symbols.end(), part.symbols.begin(), part.symbols.end());
  }
  for (const BlockWord& b : f.x_blocks) {
    Word part = expand_reversed(b);
    w.symbols.insert(w.symbols.end(), part.symbols.begin(), part.symbols.end());
  }
  return w;
}

Word render(const Factorization& f) {
  Word w;
  w.symbols.reserve(f.guard.size());
  for (int g : f.guard) w.symbols.push_back({Family::V, g});
  Word blocks = render_blocks(f);
  w.symbols.insert(w.symbols.end(), blocks.symbols.begin(), blocks.symbols.end());
  return w;
}

Word render_over_an(const Factorization& f) {
  return expand_to_an(f.n, render(f));
}

bool check_inverse_word(const PartialInjection& a) {
  require_member(a);
  if (a.n() < 4) throw ValueError("normal form construction requires n >= 4");
  const Word star = render_blocks(factorize(a));
  const Word star_inv = render_blocks(factorize(a.inverse()));
  return eval_word(a.n(), star_inv) == eval_word(a.n(), star).inverse();
}

Word factorize_by_search(const PartialInjection& a) {
  require_member(a);
  const int n = a.n();
  if (n > 15) throw ValueError("word search is desk-scale only (n <= 15)");

  std::vector<GeneratorSymbol> alphabet;
  for (int i = 1; i <= n; ++i) alphabet.push_back({Family::V, i});
  for (int i = 1; i <= n - 2; ++i) alphabet.push_back({Family::U, i});
  for (int i = 1; i <= n - 2; ++i) alphabet.push_back({Family::X, i});
  std::vector<PartialInjection> letter_maps;
  letter_maps.reserve(alphabet.size());
  for (GeneratorSymbol s : alphabet) letter_maps.push_back(symbol_transformation(n, s));

  const std::uint64_t target = a.packed_key();
  struct Step {
    std::uint64_t prev;
    int letter;  // index into alphabet, -1 at the root
  };
  std::unordered_map<std::uint64_t, Step> seen;
  std::deque<std::pair<PartialInjection, std::uint64_t>> queue;

  PartialInjection id = PartialInjection::identity(n);
  seen.emplace(id.packed_key(), Step{0, -1});
  queue.emplace_back(id, id.packed_key());

  while (!queue.empty()) {
    auto [t, key] = std::move(queue.front());
    queue.pop_front();
    if (key == target) {
      Word w;
      for (std::uint64_t at = key; seen.at(at).letter >= 0; at = seen.at(at).prev) {
        w.symbols.push_back(alphabet[static_cast<std::size_t>(seen.at(at).letter)]);
      }
      std::reverse(w.symbols.begin(), w.symbols.end());
      return w;
    }
    for (std::size_t i = 0; i < letter_maps.size(); ++i) {
      PartialInjection next = t.compose(letter_maps[i]);
      std::uint64_t nk = next.packed_key();
      if (seen.emplace(nk, Step{key, static_cast<int>(i)}).second) {
        queue.emplace_back(std::move(next), nk);
      }
    }
  }
  // the alphabet generates the whole monoid, so every member is reached
  throw ValueError("word search failed to reach the target");
}

}  // namespace iofpar
