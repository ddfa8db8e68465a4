#include "iofpar/search.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_set>

#include "iofpar/fence.hpp"
#include "iofpar/generators.hpp"

namespace iofpar {

namespace {

void require_universe(int n, int cap, const char* what) {
  if (n < 1) throw ValueError("universe size must be positive");
  if (n > cap) {
    throw ValueError(std::string(what) + " is desk-scale only (n <= " + std::to_string(cap) + ")");
  }
}

}  // namespace

ElementSet::ElementSet(int n, std::vector<PartialInjection> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n < 1) throw ValueError("universe size must be positive");
  for (const auto& e : elements_) {
    if (e.n() != n_) {
      throw ValueError("element over n=" + std::to_string(e.n()) +
                       " in a set over n=" + std::to_string(n_));
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool ElementSet::contains(const PartialInjection& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

ElementSet enumerate_members(int n) {
  require_universe(n, 15, "member enumeration");
  std::vector<PartialInjection> out;
  std::vector<PartialInjection::Pair> seq;

  // Depth-first over pair sequences; every prefix of a valid sequence is
  // valid, so each node emits. Ascending (d, m) iteration yields canonical
  // order directly.
  std::function<void()> extend = [&] {
    out.push_back(PartialInjection::make(n, seq));
    const auto [ld, lm] = seq.back();
    for (int d = ld + 1; d <= n; ++d) {
      for (int m = lm + 1; m <= n; ++m) {
        const int gd = d - ld;
        const int gm = m - lm;
        if ((gd == 1) != (gm == 1)) continue;
        if (gd % 2 != gm % 2) continue;
        seq.emplace_back(d, m);
        extend();
        seq.pop_back();
      }
    }
  };

  out.push_back(PartialInjection::empty(n));
  for (int d = 1; d <= n; ++d) {
    for (int m = 1; m <= n; ++m) {
      if ((d - m) % 2 != 0) continue;
      seq.emplace_back(d, m);
      extend();
      seq.pop_back();
    }
  }
  return ElementSet(n, std::move(out));
}

std::vector<PartialInjection> all_partial_injections(int n) {
  require_universe(n, 8, "exhaustive enumeration of all partial injections");
  std::vector<PartialInjection> out;
  std::vector<PartialInjection::Pair> seq;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);

  // choose domain points ascending, image points freely among the unused
  std::function<void(int)> extend = [&](int min_d) {
    out.push_back(PartialInjection::make(n, seq));
    for (int d = min_d; d <= n; ++d) {
      for (int m = 1; m <= n; ++m) {
        if (used[static_cast<std::size_t>(m)]) continue;
        used[static_cast<std::size_t>(m)] = 1;
        seq.emplace_back(d, m);
        extend(d + 1);
        seq.pop_back();
        used[static_cast<std::size_t>(m)] = 0;
      }
    }
  };
  extend(1);
  return out;
}

ElementSet closure(int n, std::span<const PartialInjection> gens) {
  require_universe(n, 15, "closure");
  for (const auto& g : gens) {
    if (g.n() != n) {
      throw ValueError("generator over n=" + std::to_string(g.n()) +
                       " in a closure over n=" + std::to_string(n));
    }
  }

  std::vector<PartialInjection> elems;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::size_t> work;
  auto add = [&](PartialInjection t) {
    if (seen.insert(t.packed_key()).second) {
      elems.push_back(std::move(t));
      work.push_back(elems.size() - 1);
    }
  };

  add(PartialInjection::identity(n));
  for (const auto& g : gens) add(g);

  // Each element pairs with everything present when it pops; later arrivals
  // pick up the reverse pairs when they pop themselves.
  while (!work.empty()) {
    const std::size_t i = work.back();
    work.pop_back();
    for (std::size_t j = 0; j < elems.size(); ++j) {
      add(elems[i].compose(elems[j]));
      add(elems[j].compose(elems[i]));
    }
  }
  return ElementSet(n, std::move(elems));
}

bool is_generating(int n, std::span<const PartialInjection> gens) {
  return closure(n, gens) == enumerate_members(n);
}

namespace {

// Search candidate subsets of ascending size for one that generates.
// Elements are drawn from `pool` on top of the fixed `base`; returns the
// total size of the first generating candidate, or -1.
int search_with_extras(int n, const ElementSet& target,
                       const std::vector<PartialInjection>& base,
                       const std::vector<PartialInjection>& pool, int extras) {
  std::vector<PartialInjection> candidate = base;
  std::function<bool(std::size_t, int)> pick = [&](std::size_t from, int left) {
    if (left == 0) {
      return closure(n, candidate) == target;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= pool.size(); ++i) {
      candidate.push_back(pool[i]);
      if (pick(i + 1, left - 1)) return true;
      candidate.pop_back();
    }
    return false;
  };
  return pick(0, extras) ? static_cast<int>(base.size()) + extras : -1;
}

}  // namespace

int brute_rank(int n, int max_subset_size) {
  require_universe(n, 15, "rank search");
  const ElementSet members = enumerate_members(n);

  if (n <= 3) {
    // raw ascending-size subset search; the identity is free as the empty
    // product and never needed in a candidate
    std::vector<PartialInjection> pool;
    const PartialInjection id = PartialInjection::identity(n);
    for (const auto& e : members.elements()) {
      if (e != id) pool.push_back(e);
    }
    const int cap = max_subset_size > 0
                        ? std::min<int>(max_subset_size, static_cast<int>(pool.size()))
                        : static_cast<int>(pool.size());
    for (int k = 0; k <= cap; ++k) {
      if (int found = search_with_extras(n, members, {}, pool, k); found >= 0) return found;
    }
    throw ValueError("rank search budget exceeded (max subset size " +
                     std::to_string(cap) + ")");
  }

  // Forced elements: all v_i, plus u_{n-2} and x_{n-2}.
  std::vector<PartialInjection> forced;
  for (int i = 1; i <= n; ++i) forced.push_back(gen_v(n, i));
  forced.push_back(gen_u(n, n - 2));
  forced.push_back(gen_x(n, n - 2));

  // Witness classes: for each i <= n-4 a non-identity member with domain
  // {1..i, i+4..n} and one with that image. Witnesses are pairwise distinct
  // across classes and distinct from the forced elements (different ranks),
  // so candidate sizes start at n + 2 + 2(n-4) = 3n-6.
  std::vector<std::vector<PartialInjection>> classes;
  for (int i = 1; i <= n - 4; ++i) {
    std::vector<int> ji;
    for (int k = 1; k <= i; ++k) ji.push_back(k);
    for (int k = i + 4; k <= n; ++k) ji.push_back(k);
    std::vector<PartialInjection> with_dom;
    std::vector<PartialInjection> with_im;
    for (const auto& e : members.elements()) {
      if (e.is_partial_identity()) continue;
      if (e.domain() == ji) with_dom.push_back(e);
      if (e.image() == ji) with_im.push_back(e);
    }
    if (with_dom.empty() || with_im.empty()) {
      throw ValueError("witness class unexpectedly empty");
    }
    classes.push_back(std::move(with_dom));
    classes.push_back(std::move(with_im));
  }

  const int floor_size = static_cast<int>(forced.size() + classes.size());
  const int cap = max_subset_size > 0
                      ? max_subset_size
                      : static_cast<int>(members.size()) - 1;
  if (cap < floor_size) {
    throw ValueError("rank search budget exceeded (candidates need at least " +
                     std::to_string(floor_size) + " elements)");
  }

  // Everything outside the forced set and the identity may serve as an
  // extra element once the witness floor fails to generate.
  std::set<PartialInjection> forced_set(forced.begin(), forced.end());
  std::vector<PartialInjection> free_pool;
  const PartialInjection id = PartialInjection::identity(n);
  for (const auto& e : members.elements()) {
    if (e != id && !forced_set.count(e)) free_pool.push_back(e);
  }

  for (int size = floor_size; size <= cap; ++size) {
    const int extras = size - floor_size;
    std::vector<PartialInjection> candidate = forced;
    std::function<bool(std::size_t)> choose = [&](std::size_t ci) -> bool {
      if (ci == classes.size()) {
        std::vector<PartialInjection> pool;
        std::set<PartialInjection> chosen(candidate.begin(), candidate.end());
        for (const auto& e : free_pool) {
          if (!chosen.count(e)) pool.push_back(e);
        }
        return search_with_extras(n, members, candidate, pool, extras) >= 0;
      }
      for (const auto& w : classes[ci]) {
        candidate.push_back(w);
        if (choose(ci + 1)) return true;
        candidate.pop_back();
      }
      return false;
    };
    if (choose(0)) return size;
  }
  throw ValueError("rank search budget exceeded (max subset size " +
                   std::to_string(cap) + ")");
}

ElementSet classify_rank(int n, int k) {
  if (k < 0 || k > n) {
    throw ValueError("rank " + std::to_string(k) + " out of range for n=" + std::to_string(n));
  }
  const ElementSet members = enumerate_members(n);
  std::vector<PartialInjection> picked;
  for (const auto& e : members.elements()) {
    if (e.rank() == k) picked.push_back(e);
  }
  return ElementSet(n, std::move(picked));
}

bool check_minimality(int n) {
  const auto gens = standard_generating_set(n);
  const ElementSet members = enumerate_members(n);
  std::vector<PartialInjection> reduced;
  reduced.reserve(gens.size() - 1);
  for (std::size_t drop = 0; drop < gens.size(); ++drop) {
    reduced.clear();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i != drop) reduced.push_back(gens[i].second);
    }
    if (closure(n, reduced) == members) return false;
  }
  return true;
}

}  // namespace iofpar
