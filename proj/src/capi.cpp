#include "iofpar.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "iofpar/factorize.hpp"
#include "iofpar/fence.hpp"
#include "iofpar/generators.hpp"
#include "iofpar/pinj.hpp"
#include "iofpar/search.hpp"

struct iof_pinj {
  iofpar::PartialInjection v;
};

struct iof_word {
  iofpar::Word v;
};

struct iof_element_set {
  iofpar::ElementSet v;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs the body, translating exceptions into status codes.
template <typename Fn>
iof_status guarded(Fn&& fn) {
  try {
    fn();
    return IOF_OK;
  } catch (const iofpar::ParseError& e) {
    set_error(e.what());
    return IOF_ERR_PARSE;
  } catch (const iofpar::ValueError& e) {
    set_error(e.what());
    return IOF_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return IOF_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return IOF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

iof_status require(bool ok, const char* msg) {
  if (ok) return IOF_OK;
  set_error(msg);
  return IOF_ERR_ARGUMENT;
}

std::string trace_json(const iofpar::Factorization& f) {
  std::ostringstream os;
  os << "{\"method\":\"normal-form\",\"l\":";
  const auto* bd = f.breakdown ? &*f.breakdown : nullptr;
  os << (bd ? bd->breakpoint_count() : 0);
  os << ",\"r\":[";
  if (bd) {
    for (std::size_t i = 0; i < bd->positions.size(); ++i) {
      if (i) os << ",";
      os << bd->positions[i];
    }
  }
  os << "],\"blocks\":[";
  if (bd) {
    for (std::size_t i = 0; i < bd->blocks.size(); ++i) {
      if (i) os << ",";
      os << "{\"family\":\"" << static_cast<char>(bd->blocks[i].family)
         << "\",\"start\":" << bd->blocks[i].start
         << ",\"length\":" << bd->blocks[i].length << "}";
    }
  }
  os << "],\"guard\":[";
  for (std::size_t i = 0; i < f.guard.size(); ++i) {
    if (i) os << ",";
    os << f.guard[i];
  }
  os << "]}";
  return os.str();
}

std::vector<iofpar::PartialInjection> collect(const iof_pinj* const* elems, size_t count) {
  std::vector<iofpar::PartialInjection> v;
  v.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (!elems[i]) throw iofpar::ValueError("null element handle");
    v.push_back(elems[i]->v);
  }
  return v;
}

}  // namespace

extern "C" {

const char* iof_version(void) { return "0.1.0"; }

const char* iof_last_error(void) { return g_last_error.c_str(); }

void iof_string_free(char* s) { std::free(s); }

/* ---- partial injections ---------------------------------------------- */

iof_status iof_pinj_make(int n, const int* dom, const int* img, size_t count,
                         iof_pinj** out) {
  if (iof_status st = require(out && (count == 0 || (dom && img)),
                              "iof_pinj_make: null argument"))
    return st;
  return guarded([&] {
    std::vector<iofpar::PartialInjection::Pair> pairs;
    pairs.reserve(count);
    for (size_t i = 0; i < count; ++i) pairs.emplace_back(dom[i], img[i]);
    *out = new iof_pinj{iofpar::PartialInjection::make(n, std::move(pairs))};
  });
}

iof_status iof_pinj_identity(int n, iof_pinj** out) {
  if (iof_status st = require(out != nullptr, "iof_pinj_identity: null output")) return st;
  return guarded([&] { *out = new iof_pinj{iofpar::PartialInjection::identity(n)}; });
}

iof_status iof_pinj_empty(int n, iof_pinj** out) {
  if (iof_status st = require(out != nullptr, "iof_pinj_empty: null output")) return st;
  return guarded([&] { *out = new iof_pinj{iofpar::PartialInjection::empty(n)}; });
}

iof_status iof_pinj_parse(const char* text, iof_pinj** out) {
  if (iof_status st = require(text && out, "iof_pinj_parse: null argument")) return st;
  return guarded([&] { *out = new iof_pinj{iofpar::PartialInjection::decode(text)}; });
}

iof_status iof_pinj_parse_pairs(int n, const char* pairs, iof_pinj** out) {
  if (iof_status st = require(pairs && out, "iof_pinj_parse_pairs: null argument")) return st;
  return guarded([&] {
    *out = new iof_pinj{iofpar::PartialInjection::make(n, iofpar::parse_pair_list(pairs))};
  });
}

iof_status iof_pinj_copy(const iof_pinj* p, iof_pinj** out) {
  if (iof_status st = require(p && out, "iof_pinj_copy: null argument")) return st;
  return guarded([&] { *out = new iof_pinj{p->v}; });
}

void iof_pinj_free(iof_pinj* p) { delete p; }

int iof_pinj_n(const iof_pinj* p) { return p ? p->v.n() : 0; }

int iof_pinj_rank(const iof_pinj* p) { return p ? p->v.rank() : 0; }

int iof_pinj_apply(const iof_pinj* p, int x) {
  if (!p || x < 1 || x > p->v.n()) return -1;
  return p->v.apply(x).value_or(0);
}

int iof_pinj_equal(const iof_pinj* a, const iof_pinj* b) {
  if (!a || !b) return a == b;
  return a->v == b->v;
}

int iof_pinj_is_partial_identity(const iof_pinj* p) {
  return p && p->v.is_partial_identity();
}

iof_status iof_pinj_compose(const iof_pinj* a, const iof_pinj* b, iof_pinj** out) {
  if (iof_status st = require(a && b && out, "iof_pinj_compose: null argument")) return st;
  return guarded([&] { *out = new iof_pinj{a->v.compose(b->v)}; });
}

iof_status iof_pinj_inverse(const iof_pinj* p, iof_pinj** out) {
  if (iof_status st = require(p && out, "iof_pinj_inverse: null argument")) return st;
  return guarded([&] { *out = new iof_pinj{p->v.inverse()}; });
}

iof_status iof_pinj_format(const iof_pinj* p, char** out) {
  if (iof_status st = require(p && out, "iof_pinj_format: null argument")) return st;
  return guarded([&] { *out = dup_string(p->v.encode()); });
}

/* ---- membership ------------------------------------------------------ */

int iof_is_member(const iof_pinj* p) { return p && iofpar::is_member_fast(p->v); }

int iof_is_member_direct(const iof_pinj* p) { return p && iofpar::is_member_direct(p->v); }

iof_status iof_member_violation(const iof_pinj* p, char** out) {
  if (iof_status st = require(p && out, "iof_member_violation: null argument")) return st;
  return guarded([&] {
    auto why = iofpar::member_violation(p->v);
    *out = why ? dup_string(*why) : nullptr;
  });
}

/* ---- generators and words -------------------------------------------- */

iof_status iof_generator(int n, char family, int index, iof_pinj** out) {
  if (iof_status st = require(out != nullptr, "iof_generator: null output")) return st;
  return guarded([&] {
    iofpar::Family f;
    switch (family) {
      case 'v': f = iofpar::Family::V; break;
      case 'u': f = iofpar::Family::U; break;
      case 'x': f = iofpar::Family::X; break;
      default: throw iofpar::ValueError("generator family must be 'v', 'u' or 'x'");
    }
    *out = new iof_pinj{iofpar::symbol_transformation(n, {f, index})};
  });
}

iof_status iof_word_parse(const char* text, iof_word** out) {
  if (iof_status st = require(text && out, "iof_word_parse: null argument")) return st;
  return guarded([&] { *out = new iof_word{iofpar::Word::decode(text)}; });
}

iof_status iof_word_format(const iof_word* w, char** out) {
  if (iof_status st = require(w && out, "iof_word_format: null argument")) return st;
  return guarded([&] { *out = dup_string(w->v.encode()); });
}

size_t iof_word_length(const iof_word* w) { return w ? w->v.size() : 0; }

void iof_word_free(iof_word* w) { delete w; }

iof_status iof_word_eval(int n, const iof_word* w, iof_pinj** out) {
  if (iof_status st = require(w && out, "iof_word_eval: null argument")) return st;
  return guarded([&] { *out = new iof_pinj{iofpar::eval_word(n, w->v)}; });
}

iof_status iof_word_expand_an(int n, const iof_word* w, iof_word** out) {
  if (iof_status st = require(w && out, "iof_word_expand_an: null argument")) return st;
  return guarded([&] { *out = new iof_word{iofpar::expand_to_an(n, w->v)}; });
}

/* ---- factorization ---------------------------------------------------- */

iof_status iof_factorize(const iof_pinj* p, int over_an, iof_word** out_word,
                         char** out_trace_json) {
  if (iof_status st = require(p && out_word, "iof_factorize: null argument")) return st;
  return guarded([&] {
    iofpar::Word w;
    std::string trace;
    if (p->v.n() <= 3) {
      w = iofpar::factorize_by_search(p->v);
      if (over_an) w = iofpar::expand_to_an(p->v.n(), w);
      trace = "{\"method\":\"word-search\"}";
    } else {
      iofpar::Factorization f = iofpar::factorize(p->v);
      w = over_an ? iofpar::render_over_an(f) : iofpar::render(f);
      trace = trace_json(f);
    }
    if (out_trace_json) *out_trace_json = dup_string(trace);
    *out_word = new iof_word{std::move(w)};
  });
}

/* ---- enumeration, closure, rank -------------------------------------- */

iof_status iof_enumerate(int n, iof_element_set** out) {
  if (iof_status st = require(out != nullptr, "iof_enumerate: null output")) return st;
  return guarded([&] { *out = new iof_element_set{iofpar::enumerate_members(n)}; });
}

iof_status iof_closure(int n, const iof_pinj* const* gens, size_t count,
                       iof_element_set** out) {
  if (iof_status st = require(out && (count == 0 || gens), "iof_closure: null argument"))
    return st;
  return guarded([&] {
    auto v = collect(gens, count);
    *out = new iof_element_set{iofpar::closure(n, v)};
  });
}

iof_status iof_standard_generating_set(int n, iof_element_set** out) {
  if (iof_status st = require(out != nullptr, "iof_standard_generating_set: null output"))
    return st;
  return guarded([&] {
    std::vector<iofpar::PartialInjection> v;
    for (auto& [name, g] : iofpar::standard_generating_set(n)) v.push_back(std::move(g));
    *out = new iof_element_set{iofpar::ElementSet(n, std::move(v))};
  });
}

iof_status iof_element_set_create(int n, const iof_pinj* const* elems, size_t count,
                                  iof_element_set** out) {
  if (iof_status st = require(out && (count == 0 || elems),
                              "iof_element_set_create: null argument"))
    return st;
  return guarded([&] {
    *out = new iof_element_set{iofpar::ElementSet(n, collect(elems, count))};
  });
}

void iof_element_set_free(iof_element_set* s) { delete s; }

size_t iof_element_set_size(const iof_element_set* s) { return s ? s->v.size() : 0; }

int iof_element_set_n(const iof_element_set* s) { return s ? s->v.n() : 0; }

iof_status iof_element_set_get(const iof_element_set* s, size_t index, iof_pinj** out) {
  if (iof_status st = require(s && out, "iof_element_set_get: null argument")) return st;
  if (iof_status st = require(index < s->v.size(), "iof_element_set_get: index out of range"))
    return st;
  return guarded([&] { *out = new iof_pinj{s->v.elements()[index]}; });
}

int iof_element_set_equal(const iof_element_set* a, const iof_element_set* b) {
  if (!a || !b) return a == b;
  return a->v == b->v;
}

int iof_element_set_contains(const iof_element_set* s, const iof_pinj* p) {
  return s && p && s->v.contains(p->v);
}

iof_status iof_is_generating(int n, const iof_pinj* const* gens, size_t count, int* out) {
  if (iof_status st = require(out && (count == 0 || gens), "iof_is_generating: null argument"))
    return st;
  return guarded([&] {
    auto v = collect(gens, count);
    *out = iofpar::is_generating(n, v) ? 1 : 0;
  });
}

iof_status iof_classify_rank(int n, int k, iof_element_set** out) {
  if (iof_status st = require(out != nullptr, "iof_classify_rank: null output")) return st;
  return guarded([&] { *out = new iof_element_set{iofpar::classify_rank(n, k)}; });
}

iof_status iof_brute_rank(int n, int max_subset_size, int* out_rank) {
  if (iof_status st = require(out_rank != nullptr, "iof_brute_rank: null output")) return st;
  return guarded([&] { *out_rank = iofpar::brute_rank(n, max_subset_size); });
}

iof_status iof_check_minimality(int n, int* out_minimal) {
  if (iof_status st = require(out_minimal != nullptr, "iof_check_minimality: null output"))
    return st;
  return guarded([&] { *out_minimal = iofpar::check_minimality(n) ? 1 : 0; });
}

} /* extern "C" */
