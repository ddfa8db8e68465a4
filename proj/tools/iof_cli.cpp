// Command-line front end for the iofpar shared library.
//
// Talks to the library exclusively through the C interface in iofpar.h.
// Data goes to stdout, diagnostics to stderr; every verb exits nonzero on
// malformed input, and the verify verbs exit nonzero when a check fails.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iofpar.h"

using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(iof_status st) {
  if (st != IOF_OK) throw CliError(iof_last_error());
}

struct PinjDeleter {
  void operator()(iof_pinj* p) const { iof_pinj_free(p); }
};
struct WordDeleter {
  void operator()(iof_word* w) const { iof_word_free(w); }
};
struct SetDeleter {
  void operator()(iof_element_set* s) const { iof_element_set_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { iof_string_free(s); }
};

using Pinj = std::unique_ptr<iof_pinj, PinjDeleter>;
using WordPtr = std::unique_ptr<iof_word, WordDeleter>;
using SetPtr = std::unique_ptr<iof_element_set, SetDeleter>;
using CStr = std::unique_ptr<char, StringDeleter>;

std::string format(const iof_pinj* p) {
  char* s = nullptr;
  check(iof_pinj_format(p, &s));
  CStr holder(s);
  return s;
}

std::string format(const iof_word* w) {
  char* s = nullptr;
  check(iof_word_format(w, &s));
  CStr holder(s);
  return s;
}

Pinj parse_transformation(const std::string& text, std::optional<int> n) {
  iof_pinj* p = nullptr;
  if (text.rfind("n=", 0) == 0) {
    check(iof_pinj_parse(text.c_str(), &p));
    Pinj out(p);
    if (n && iof_pinj_n(p) != *n) {
      throw CliError("encoding says n=" + std::to_string(iof_pinj_n(p)) +
                     " but -n " + std::to_string(*n) + " was given");
    }
    return out;
  }
  if (!n) throw CliError("bare pair list needs -n");
  check(iof_pinj_parse_pairs(*n, text.c_str(), &p));
  return Pinj(p);
}

// compose arguments: "n=..." and bare pair lists are transformations,
// anything led by a generator letter is a word; "" is the empty word.
Pinj parse_operand(const std::string& text, std::optional<int> n) {
  const std::size_t first = text.find_first_not_of(" \t");
  const char lead = first == std::string::npos ? '\0' : text[first];
  if (lead == 'v' || lead == 'u' || lead == 'x' || lead == '\0') {
    if (!n) throw CliError("word operand needs -n");
    iof_word* w = nullptr;
    check(iof_word_parse(text.c_str(), &w));
    WordPtr word(w);
    iof_pinj* p = nullptr;
    check(iof_word_eval(*n, w, &p));
    return Pinj(p);
  }
  return parse_transformation(text, n);
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<Pinj> set_elements(const iof_element_set* s) {
  std::vector<Pinj> out;
  out.reserve(iof_element_set_size(s));
  for (size_t i = 0; i < iof_element_set_size(s); ++i) {
    iof_pinj* p = nullptr;
    check(iof_element_set_get(s, i, &p));
    out.emplace_back(p);
  }
  return out;
}

int expected_rank(int n) {
  // listed small ranks, then the 3n-6 formula
  switch (n) {
    case 1: return 1;
    case 2: return 2;
    case 3: return 5;
    default: return 3 * n - 6;
  }
}

/* ---- verbs ------------------------------------------------------------ */

int run_member(int n, const std::string& arg, bool as_json) {
  Pinj p = parse_transformation(arg, n);
  char* why = nullptr;
  check(iof_member_violation(p.get(), &why));
  CStr holder(why);
  json j{{"n", iof_pinj_n(p.get())}, {"input", format(p.get())}, {"member", why == nullptr}};
  std::string text;
  if (why) {
    j["violation"] = why;
    text = std::string("false: ") + why + "\n";
  } else {
    text = "true\n";
  }
  emit(as_json, j, text);
  return 0;
}

int run_compose(std::optional<int> n, const std::vector<std::string>& args, bool as_json) {
  Pinj acc = parse_operand(args[0], n);
  for (std::size_t i = 1; i < args.size(); ++i) {
    Pinj next = parse_operand(args[i], n);
    iof_pinj* prod = nullptr;
    check(iof_pinj_compose(acc.get(), next.get(), &prod));
    acc.reset(prod);
  }
  const std::string enc = format(acc.get());
  emit(as_json, json{{"n", iof_pinj_n(acc.get())}, {"result", enc}}, enc + "\n");
  return 0;
}

int run_invert(int n, const std::string& arg, bool as_json) {
  Pinj p = parse_transformation(arg, n);
  iof_pinj* inv = nullptr;
  check(iof_pinj_inverse(p.get(), &inv));
  Pinj holder(inv);
  const std::string enc = format(inv);
  emit(as_json, json{{"n", n}, {"result", enc}}, enc + "\n");
  return 0;
}

std::string trace_text(const json& trace) {
  if (trace.value("method", "") == "word-search") return "method=word-search\n";
  std::string out = "method=normal-form l=" + std::to_string(trace["l"].get<int>()) + " r=[";
  bool first = true;
  for (const auto& r : trace["r"]) {
    if (!first) out += " ";
    out += std::to_string(r.get<int>());
    first = false;
  }
  out += "] blocks=[";
  first = true;
  for (const auto& b : trace["blocks"]) {
    if (!first) out += " ";
    out += b["family"].get<std::string>() + "(" + std::to_string(b["start"].get<int>()) +
           "," + std::to_string(b["length"].get<int>()) + ")";
    first = false;
  }
  out += "] guard=[";
  first = true;
  for (const auto& g : trace["guard"]) {
    if (!first) out += " ";
    out += std::to_string(g.get<int>());
    first = false;
  }
  return out + "]\n";
}

int run_factorize(int n, const std::string& arg, const std::string& alphabet, bool as_json) {
  Pinj p = parse_transformation(arg, n);
  iof_word* w = nullptr;
  char* trace = nullptr;
  check(iof_factorize(p.get(), alphabet == "an" ? 1 : 0, &w, &trace));
  WordPtr word(w);
  CStr trace_holder(trace);
  const json jtrace = json::parse(trace);
  const std::string word_text = format(w);

  json j{{"n", iof_pinj_n(p.get())},
         {"input", format(p.get())},
         {"alphabet", alphabet},
         {"word", word_text},
         {"method", jtrace.value("method", "")}};
  if (jtrace.value("method", "") == "normal-form") {
    json t = jtrace;
    t.erase("method");
    j["trace"] = t;
  } else {
    j["trace"] = nullptr;
  }
  emit(as_json, j, word_text + "\n" + trace_text(jtrace));
  return 0;
}

int run_enumerate(int n, bool as_json, bool count_only) {
  iof_element_set* s = nullptr;
  check(iof_enumerate(n, &s));
  SetPtr set(s);
  const auto elems = set_elements(s);
  if (count_only) {
    emit(as_json, json{{"n", n}, {"count", elems.size()}},
         std::to_string(elems.size()) + "\n");
    return 0;
  }
  json arr = json::array();
  std::string text;
  for (const auto& e : elems) {
    const std::string enc = format(e.get());
    arr.push_back(enc);
    text += enc + "\n";
  }
  emit(as_json, json{{"n", n}, {"count", elems.size()}, {"elements", arr}}, text);
  return 0;
}

int run_closure(int n, const std::vector<std::string>& args, bool standard, bool as_json) {
  std::vector<Pinj> gens;
  if (standard) {
    iof_element_set* an = nullptr;
    check(iof_standard_generating_set(n, &an));
    SetPtr holder(an);
    gens = set_elements(an);
  }
  for (const auto& a : args) gens.push_back(parse_transformation(a, n));

  std::vector<const iof_pinj*> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) raw.push_back(g.get());
  iof_element_set* s = nullptr;
  check(iof_closure(n, raw.data(), raw.size(), &s));
  SetPtr set(s);

  const auto elems = set_elements(s);
  json arr = json::array();
  std::string text;
  for (const auto& e : elems) {
    const std::string enc = format(e.get());
    arr.push_back(enc);
    text += enc + "\n";
  }
  emit(as_json, json{{"n", n}, {"count", elems.size()}, {"elements", arr}}, text);
  return 0;
}

int run_verify_rank(std::optional<int> n, std::optional<int> max_n, int max_subset,
                    bool as_json) {
  std::vector<int> ns;
  if (n) ns.push_back(*n);
  else
    for (int k = 1; k <= *max_n; ++k) ns.push_back(k);

  json results = json::array();
  std::string text;
  bool all_ok = true;
  for (int k : ns) {
    int rank = 0;
    check(iof_brute_rank(k, max_subset, &rank));
    const int expected = expected_rank(k);
    const bool ok = rank == expected;
    all_ok &= ok;
    results.push_back(json{{"n", k}, {"rank", rank}, {"expected", expected}, {"ok", ok}});
    std::string line = "rank=" + std::to_string(rank) +
                       " expected=" + std::to_string(expected) + (ok ? " OK" : " FAIL");
    if (!n) line = "n=" + std::to_string(k) + " " + line;
    text += line + "\n";
  }
  json j = n ? results[0] : json{{"results", results}, {"ok", all_ok}};
  emit(as_json, j, text);
  return all_ok ? 0 : 1;
}

// the n-2 rank class must be exactly the two-point partial identities plus
// the two extreme shift generators
bool check_rank_classes(int n, int k, std::string& detail) {
  iof_element_set* got = nullptr;
  check(iof_classify_rank(n, k, &got));
  SetPtr got_holder(got);

  std::vector<Pinj> expected;
  if (k == n - 1) {
    for (int i = 1; i <= n; ++i) {
      iof_pinj* g = nullptr;
      check(iof_generator(n, 'v', i, &g));
      expected.emplace_back(g);
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      for (int j2 = i + 1; j2 <= n; ++j2) {
        std::vector<int> dom;
        for (int v = 1; v <= n; ++v) {
          if (v != i && v != j2) dom.push_back(v);
        }
        iof_pinj* g = nullptr;
        check(iof_pinj_make(n, dom.data(), dom.data(), dom.size(), &g));
        expected.emplace_back(g);
      }
    }
    for (char fam : {'u', 'x'}) {
      iof_pinj* g = nullptr;
      check(iof_generator(n, fam, n - 2, &g));
      expected.emplace_back(g);
    }
  }
  std::vector<const iof_pinj*> raw;
  for (const auto& e : expected) raw.push_back(e.get());
  iof_element_set* want = nullptr;
  check(iof_element_set_create(n, raw.data(), raw.size(), &want));
  SetPtr want_holder(want);

  detail = std::to_string(iof_element_set_size(got)) + " elements";
  return iof_element_set_equal(got, want) != 0;
}

bool check_j_witnesses(int n, std::string& detail) {
  iof_element_set* s = nullptr;
  check(iof_enumerate(n, &s));
  SetPtr set(s);
  const auto elems = set_elements(s);
  for (int i = 1; i <= n - 4; ++i) {
    bool has_dom = false;
    bool has_im = false;
    for (const auto& e : elems) {
      if (iof_pinj_is_partial_identity(e.get())) continue;
      bool dom_match = true;
      bool im_match = true;
      std::vector<char> in_image(static_cast<size_t>(n) + 1, 0);
      for (int x = 1; x <= n; ++x) {
        const int y = iof_pinj_apply(e.get(), x);
        if (y > 0) in_image[static_cast<size_t>(y)] = 1;
        const bool in_j = x <= i || x >= i + 4;
        if ((y > 0) != in_j) dom_match = false;
      }
      for (int x = 1; x <= n; ++x) {
        const bool in_j = x <= i || x >= i + 4;
        if ((in_image[static_cast<size_t>(x)] != 0) != in_j) im_match = false;
      }
      has_dom |= dom_match;
      has_im |= im_match;
      if (has_dom && has_im) break;
    }
    if (!has_dom || !has_im) {
      detail = "no witness for i=" + std::to_string(i);
      return false;
    }
  }
  detail = std::to_string(2 * (n - 4)) + " witness classes";
  return true;
}

int run_verify_lemmas(std::optional<int> n, std::optional<int> max_n, bool as_json) {
  std::vector<int> ns;
  if (n) ns.push_back(*n);
  else
    for (int k = 4; k <= *max_n; ++k) ns.push_back(k);

  json results = json::array();
  std::string text;
  bool all_ok = true;
  auto record = [&](int k, const std::string& name, bool ok, const std::string& detail) {
    all_ok &= ok;
    results.push_back(json{{"n", k}, {"check", name}, {"ok", ok}, {"detail", detail}});
    text += "n=" + std::to_string(k) + " " + name + (ok ? " OK" : " FAIL") +
            (detail.empty() ? "" : " (" + detail + ")") + "\n";
  };

  for (int k : ns) {
    if (k < 4) throw CliError("verify-lemmas needs n >= 4");
    std::string detail;
    record(k, "rank-class-n-1", check_rank_classes(k, k - 1, detail), detail);
    record(k, "rank-class-n-2", check_rank_classes(k, k - 2, detail), detail);
    record(k, "j-class-witnesses", check_j_witnesses(k, detail), detail);
    int minimal = 0;
    check(iof_check_minimality(k, &minimal));
    record(k, "minimality", minimal != 0, std::to_string(3 * k - 6) + " drop-one runs");
  }
  emit(as_json, json{{"results", results}, {"ok", all_ok}}, text);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-, fence-, and parity-preserving partial injections"};
  app.require_subcommand(1);

  // member
  auto* member = app.add_subcommand("member", "test membership, naming the violated condition");
  int member_n = 0;
  std::string member_arg;
  bool member_json = false;
  member->add_option("-n", member_n, "universe size")->required();
  member->add_option("transformation", member_arg, "pair list like \"1>1,4>6\"")->required();
  member->add_flag("--json", member_json, "JSON output");

  // compose
  auto* compose = app.add_subcommand("compose", "compose transformations and words left to right");
  std::optional<int> compose_n;
  std::vector<std::string> compose_args;
  bool compose_json = false;
  compose->add_option("-n", compose_n, "universe size");
  compose->add_option("operands", compose_args,
                      "pair lists, full encodings, or generator words")
      ->required()
      ->expected(-1);
  compose->add_flag("--json", compose_json, "JSON output");

  // invert
  auto* invert = app.add_subcommand("invert", "invert a transformation");
  int invert_n = 0;
  std::string invert_arg;
  bool invert_json = false;
  invert->add_option("-n", invert_n, "universe size")->required();
  invert->add_option("transformation", invert_arg, "pair list")->required();
  invert->add_flag("--json", invert_json, "JSON output");

  // factorize
  auto* factorize = app.add_subcommand("factorize", "factor a member over the generators");
  int fact_n = 0;
  std::string fact_arg;
  std::string fact_alphabet = "xn";
  bool fact_json = false;
  factorize->add_option("-n", fact_n, "universe size")->required();
  factorize->add_option("transformation", fact_arg, "pair list")->required();
  factorize->add_option("--alphabet", fact_alphabet, "xn (full alphabet) or an (generating set)")
      ->check(CLI::IsMember({"xn", "an"}));
  factorize->add_flag("--json", fact_json, "JSON output");

  // enumerate / count
  auto* enumerate = app.add_subcommand("enumerate", "list every member, one per line");
  int enum_n = 0;
  bool enum_json = false;
  enumerate->add_option("-n", enum_n, "universe size")->required();
  enumerate->add_flag("--json", enum_json, "JSON output");

  auto* count = app.add_subcommand("count", "count the members");
  int count_n = 0;
  bool count_json = false;
  count->add_option("-n", count_n, "universe size")->required();
  count->add_flag("--json", count_json, "JSON output");

  // closure
  auto* closure = app.add_subcommand("closure", "saturate a generating set under composition");
  int closure_n = 0;
  std::vector<std::string> closure_args;
  bool closure_standard = false;
  bool closure_json = false;
  closure->add_option("-n", closure_n, "universe size")->required();
  closure->add_option("generators", closure_args, "pair lists or full encodings");
  closure->add_flag("--standard", closure_standard, "seed with the standard generating set");
  closure->add_flag("--json", closure_json, "JSON output");

  // verify-rank
  auto* vrank = app.add_subcommand("verify-rank", "search the minimum generating-set size");
  std::optional<int> vrank_n;
  std::optional<int> vrank_max_n;
  int vrank_budget = 0;
  bool vrank_json = false;
  vrank->add_option("-n", vrank_n, "single universe size");
  vrank->add_option("--max-n", vrank_max_n, "verify every n up to this");
  vrank->add_option("--max-subset-size", vrank_budget, "search budget (0 = unbounded)");
  vrank->add_flag("--json", vrank_json, "JSON output");

  // verify-lemmas
  auto* vlem = app.add_subcommand("verify-lemmas", "rank-class and minimality checks");
  std::optional<int> vlem_n;
  std::optional<int> vlem_max_n;
  bool vlem_json = false;
  vlem->add_option("-n", vlem_n, "single universe size (>= 4)");
  vlem->add_option("--max-n", vlem_max_n, "verify every n from 4 up to this");
  vlem->add_flag("--json", vlem_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*member) return run_member(member_n, member_arg, member_json);
    if (*compose) return run_compose(compose_n, compose_args, compose_json);
    if (*invert) return run_invert(invert_n, invert_arg, invert_json);
    if (*factorize) return run_factorize(fact_n, fact_arg, fact_alphabet, fact_json);
    if (*enumerate) return run_enumerate(enum_n, enum_json, false);
    if (*count) return run_enumerate(count_n, count_json, true);
    if (*closure) {
      if (!closure_standard && closure_args.empty()) {
        throw CliError("closure needs generators or --standard");
      }
      return run_closure(closure_n, closure_args, closure_standard, closure_json);
    }
    if (*vrank) {
      if (vrank_n.has_value() == vrank_max_n.has_value()) {
        throw CliError("verify-rank needs exactly one of -n and --max-n");
      }
      return run_verify_rank(vrank_n, vrank_max_n, vrank_budget, vrank_json);
    }
    if (*vlem) {
      if (vlem_n.has_value() == vlem_max_n.has_value()) {
        throw CliError("verify-lemmas needs exactly one of -n and --max-n");
      }
      return run_verify_lemmas(vlem_n, vlem_max_n, vlem_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
