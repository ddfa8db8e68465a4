#include "iofpar/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace iofpar {

namespace {

void require_index(bool ok, Family f, int i, int n) {
  if (!ok) {
    std::ostringstream os;
    os << "generator " << static_cast<char>(f) << i << " undefined for n=" << n;
    throw ValueError(os.str());
  }
}

}  // namespace

PartialInjection gen_v(int n, int i) {
  if (n < 1) throw ValueError("universe size must be positive");
  require_index(1 <= i && i <= n, Family::V, i, n);
  std::vector<PartialInjection::Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) - 1);
  for (int k = 1; k <= n; ++k) {
    if (k != i) pairs.emplace_back(k, k);
  }
  return PartialInjection::make(n, std::move(pairs));
}

PartialInjection gen_u(int n, int i) {
  if (n < 1) throw ValueError("universe size must be positive");
  require_index(1 <= i && i <= n - 2, Family::U, i, n);
  std::vector<PartialInjection::Pair> pairs;
  for (int k = 1; k <= i; ++k) pairs.emplace_back(k, k + 2);
  for (int k = i + 4; k <= n; ++k) pairs.emplace_back(k, k);
  return PartialInjection::make(n, std::move(pairs));
}

PartialInjection gen_x(int n, int i) {
  if (n < 1) throw ValueError("universe size must be positive");
  require_index(1 <= i && i <= n - 2, Family::X, i, n);
  return gen_u(n, i).inverse();
}

PartialInjection symbol_transformation(int n, GeneratorSymbol s) {
  switch (s.family) {
    case Family::V:
      return gen_v(n, s.index);
    case Family::U:
      return gen_u(n, s.index);
    case Family::X:
      return gen_x(n, s.index);
  }
  throw ValueError("unknown generator family");
}

namespace {

void require_block(int n, const BlockWord& b) {
  if (b.family == Family::V) throw ValueError("runs are only defined for the u and x families");
  if (b.start < 1 || b.start > n - 2 || b.length < 1 || b.length > (n - b.start) / 2) {
    std::ostringstream os;
    os << "run " << static_cast<char>(b.family) << "(" << b.start << "," << b.length
       << ") out of range for n=" << n;
    throw ValueError(os.str());
  }
}

}  // namespace

Word expand(const BlockWord& block) {
  Word w;
  w.symbols.reserve(static_cast<std::size_t>(block.length));
  for (int k = 0; k < block.length; ++k) {
    w.symbols.push_back({block.family, block.start + 2 * k});
  }
  return w;
}

Word expand_reversed(const BlockWord& block) {
  Word w = expand(block);
  std::reverse(w.symbols.begin(), w.symbols.end());
  return w;
}

PartialInjection run_product(int n, const BlockWord& block) {
  require_block(n, block);
  return eval_word(n, expand(block));
}

PartialInjection run_product_reversed(int n, const BlockWord& block) {
  require_block(n, block);
  return eval_word(n, expand_reversed(block));
}

std::vector<std::pair<std::string, PartialInjection>> standard_generating_set(int n) {
  if (n < 4) throw ValueError("the standard generating set requires n >= 4");
  std::vector<std::pair<std::string, PartialInjection>> gens;
  gens.reserve(static_cast<std::size_t>(3 * n - 6));
  for (int i = 1; i <= n; ++i) gens.emplace_back("v" + std::to_string(i), gen_v(n, i));
  std::vector<int> idx;
  for (int i = 1; i <= n - 4; ++i) idx.push_back(i);
  idx.push_back(n - 2);
  for (int i : idx) gens.emplace_back("u" + std::to_string(i), gen_u(n, i));
  for (int i : idx) gens.emplace_back("x" + std::to_string(i), gen_x(n, i));
  return gens;
}

PartialInjection eval_word(int n, const Word& w) {
  PartialInjection acc = PartialInjection::identity(n);
  for (GeneratorSymbol s : w.symbols) {
    acc = acc.compose(symbol_transformation(n, s));
  }
  return acc;
}

Word expand_to_an(int n, const Word& w) {
  Word out;
  out.symbols.reserve(w.symbols.size());
  for (GeneratorSymbol s : w.symbols) {
    if (s.index == n - 3 && s.family == Family::U) {
      out.symbols.push_back({Family::V, n - 2});
      out.symbols.push_back({Family::U, n - 2});
    } else if (s.index == n - 3 && s.family == Family::X) {
      out.symbols.push_back({Family::V, n});
      out.symbols.push_back({Family::X, n - 2});
    } else {
      out.symbols.push_back(s);
    }
  }
  return out;
}

std::string Word::encode() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) os << " ";
    os << static_cast<char>(symbols[i].family) << symbols[i].index;
  }
  return os.str();
}

Word Word::decode(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    char c = text[pos];
    Family fam;
    if (c == 'v') fam = Family::V;
    else if (c == 'u') fam = Family::U;
    else if (c == 'x') fam = Family::X;
    else throw ParseError(std::string("expected generator letter v/u/x, got \"") + c + "\"");
    ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, index);
    if (ec != std::errc{} || ptr == text.data() + pos || index < 1) {
      throw ParseError("generator letter needs a positive index");
    }
    w.symbols.push_back({fam, index});
    pos = end;
  }
  return w;
}

}  // namespace iofpar
