#include "iofpar/fence.hpp"

#include <cstdlib>
#include <sstream>

namespace iofpar {

namespace {

// x below y in the up-fence, no range validation.
bool below(int x, int y) {
  return std::abs(x - y) == 1 && x % 2 == 1 && y % 2 == 0;
}

}  // namespace

bool fence_below(int x, int y, int n) {
  if (n < 1) throw ValueError("universe size must be positive");
  if (x < 1 || x > n) throw ValueError("point " + std::to_string(x) + " out of range for n=" + std::to_string(n));
  if (y < 1 || y > n) throw ValueError("point " + std::to_string(y) + " out of range for n=" + std::to_string(n));
  return below(x, y);
}

bool is_order_preserving(const PartialInjection& a) {
  const auto& ps = a.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      // d_i < d_j by canonical order
      if (!(ps[i].second <= ps[j].second)) return false;
    }
  }
  return true;
}

bool is_parity_preserving(const PartialInjection& a) {
  for (const auto& [d, m] : a.pairs()) {
    if ((d - m) % 2 != 0) return false;
  }
  return true;
}

bool is_fence_preserving(const PartialInjection& a) {
  const auto& ps = a.pairs();
  for (const auto& [x, xm] : ps) {
    for (const auto& [y, ym] : ps) {
      if (below(x, y) && !below(xm, ym)) return false;
    }
  }
  return true;
}

bool is_member_direct(const PartialInjection& a) {
  return is_order_preserving(a) && is_parity_preserving(a) &&
         is_fence_preserving(a) && is_fence_preserving(a.inverse());
}

std::optional<std::string> member_violation(const PartialInjection& a) {
  const auto& ps = a.pairs();
  if (ps.empty()) return std::nullopt;
  std::ostringstream os;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    if (ps[i + 1].second <= ps[i].second) {
      os << "(i) image points not strictly increasing at position " << (i + 1);
      return os.str();
    }
  }
  if ((ps[0].first - ps[0].second) % 2 != 0) {
    os << "(ii) first pair " << ps[0].first << ">" << ps[0].second << " mixes parities";
    return os.str();
  }
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    int gd = ps[i + 1].first - ps[i].first;
    int gm = ps[i + 1].second - ps[i].second;
    if ((gd == 1) != (gm == 1)) {
      os << "(iii) domain gap " << gd << " and image gap " << gm
         << " disagree on adjacency at position " << (i + 1);
      return os.str();
    }
    if (gd % 2 != gm % 2) {
      os << "(iv) domain gap " << gd << " and image gap " << gm
         << " differ in parity at position " << (i + 1);
      return os.str();
    }
  }
  return std::nullopt;
}

bool is_member_fast(const PartialInjection& a) {
  const auto& ps = a.pairs();
  if (ps.empty()) return true;
  if ((ps[0].first - ps[0].second) % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    if (ps[i + 1].second <= ps[i].second) return false;
    int gd = ps[i + 1].first - ps[i].first;
    int gm = ps[i + 1].second - ps[i].second;
    if ((gd == 1) != (gm == 1)) return false;
    if (gd % 2 != gm % 2) return false;
  }
  return true;
}

}  // namespace iofpar
