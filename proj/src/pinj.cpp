#include "iofpar/pinj.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace iofpar {

namespace {

void require_point(int x, int n, const char* what) {
  if (x < 1 || x > n) {
    std::ostringstream os;
    os << what << " " << x << " out of range for n=" << n;
    throw ValueError(os.str());
  }
}

}  // namespace

PartialInjection PartialInjection::make(int n, std::vector<Pair> pairs) {
  if (n < 1) throw ValueError("universe size must be positive");
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    require_point(pairs[i].first, n, "domain point");
    require_point(pairs[i].second, n, "image point");
    if (i > 0 && pairs[i].first == pairs[i - 1].first) {
      throw ValueError("duplicate domain point " + std::to_string(pairs[i].first));
    }
  }
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [d, m] : pairs) {
    if (used[static_cast<std::size_t>(m)]) {
      throw ValueError("duplicate image point " + std::to_string(m));
    }
    used[static_cast<std::size_t>(m)] = 1;
  }
  return PartialInjection(n, std::move(pairs));
}

PartialInjection PartialInjection::identity(int n) {
  if (n < 1) throw ValueError("universe size must be positive");
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) pairs.emplace_back(k, k);
  return PartialInjection(n, std::move(pairs));
}

PartialInjection PartialInjection::empty(int n) {
  if (n < 1) throw ValueError("universe size must be positive");
  return PartialInjection(n, {});
}

bool PartialInjection::defined_at(int x) const noexcept {
  return apply(x).has_value();
}

std::optional<int> PartialInjection::apply(int x) const noexcept {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), x,
                             [](const Pair& p, int v) { return p.first < v; });
  if (it == pairs_.end() || it->first != x) return std::nullopt;
  return it->second;
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> out;
  out.reserve(pairs_.size());
  for (const auto& [d, m] : pairs_) out.push_back(d);
  return out;
}

std::vector<int> PartialInjection::image() const {
  std::vector<int> out;
  out.reserve(pairs_.size());
  for (const auto& [d, m] : pairs_) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

PartialInjection PartialInjection::compose(const PartialInjection& rhs) const {
  if (n_ != rhs.n_) {
    throw ValueError("cannot compose maps over different universes (n=" +
                     std::to_string(n_) + " and n=" + std::to_string(rhs.n_) + ")");
  }
  std::vector<Pair> out;
  out.reserve(std::min(pairs_.size(), rhs.pairs_.size()));
  for (const auto& [d, m] : pairs_) {
    if (auto y = rhs.apply(m)) out.emplace_back(d, *y);
  }
  // domain points stay sorted; injectivity of both factors keeps images distinct
  return PartialInjection(n_, std::move(out));
}

PartialInjection PartialInjection::inverse() const {
  std::vector<Pair> out;
  out.reserve(pairs_.size());
  for (const auto& [d, m] : pairs_) out.emplace_back(m, d);
  std::sort(out.begin(), out.end());
  return PartialInjection(n_, std::move(out));
}

bool PartialInjection::is_partial_identity() const noexcept {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [](const Pair& p) { return p.first == p.second; });
}

std::string PartialInjection::encode() const {
  std::ostringstream os;
  os << "n=" << n_ << ";";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) os << ",";
    os << pairs_[i].first << ">" << pairs_[i].second;
  }
  return os.str();
}

std::uint64_t PartialInjection::packed_key() const {
  if (n_ > 15) throw ValueError("packed keys require n <= 15");
  std::uint64_t key = 0;
  for (const auto& [d, m] : pairs_) {
    key |= static_cast<std::uint64_t>(m) << (4 * (d - 1));
  }
  return key;
}

PartialInjection operator*(const PartialInjection& a, const PartialInjection& b) {
  return a.compose(b);
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, const char* what) {
  token = strip(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(std::string("expected ") + what + ", got \"" + std::string(token) + "\"");
  }
  return value;
}

}  // namespace

std::vector<PartialInjection::Pair> parse_pair_list(std::string_view text) {
  std::vector<PartialInjection::Pair> pairs;
  text = strip(text);
  if (text.empty()) return pairs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    std::size_t arrow = token.find('>');
    if (arrow == std::string_view::npos) {
      throw ParseError("expected \"d>m\" pair, got \"" + std::string(strip(token)) + "\"");
    }
    int d = parse_int(token.substr(0, arrow), "domain point");
    int m = parse_int(token.substr(arrow + 1), "image point");
    pairs.emplace_back(d, m);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return pairs;
}

PartialInjection PartialInjection::decode(std::string_view text) {
  std::string_view s = strip(text);
  if (s.substr(0, 2) != "n=") {
    throw ParseError("transformation encoding must start with \"n=\"");
  }
  std::size_t semi = s.find(';');
  if (semi == std::string_view::npos) {
    throw ParseError("transformation encoding missing \";\"");
  }
  int n = parse_int(s.substr(2, semi - 2), "universe size");
  auto pairs = parse_pair_list(s.substr(semi + 1));
  return make(n, std::move(pairs));
}

}  // namespace iofpar
