// Black-box tests against the shared-library C interface.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "iofpar.h"

namespace {

struct PinjDeleter {
  void operator()(iof_pinj* p) const { iof_pinj_free(p); }
};
struct WordDeleter {
  void operator()(iof_word* w) const { iof_word_free(w); }
};
struct SetDeleter {
  void operator()(iof_element_set* s) const { iof_element_set_free(s); }
};

using Pinj = std::unique_ptr<iof_pinj, PinjDeleter>;
using WordPtr = std::unique_ptr<iof_word, WordDeleter>;
using SetPtr = std::unique_ptr<iof_element_set, SetDeleter>;

Pinj parse(const std::string& text) {
  iof_pinj* p = nullptr;
  REQUIRE(iof_pinj_parse(text.c_str(), &p) == IOF_OK);
  return Pinj(p);
}

std::string format(const iof_pinj* p) {
  char* s = nullptr;
  REQUIRE(iof_pinj_format(p, &s) == IOF_OK);
  std::string out = s;
  iof_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse and format round trip") {
  Pinj p = parse("n=6;1>1,4>6");
  CHECK(iof_pinj_n(p.get()) == 6);
  CHECK(iof_pinj_rank(p.get()) == 2);
  CHECK(format(p.get()) == "n=6;1>1,4>6");

  iof_pinj* q = nullptr;
  CHECK(iof_pinj_parse_pairs(6, "4>6, 1>1", &q) == IOF_OK);
  Pinj qq(q);
  CHECK(iof_pinj_equal(p.get(), q) == 1);

  iof_pinj* bad = nullptr;
  CHECK(iof_pinj_parse("garbage", &bad) == IOF_ERR_PARSE);
  CHECK(std::string(iof_last_error()).size() > 0);
  CHECK(iof_pinj_parse_pairs(6, "1>1,1>2", &bad) == IOF_ERR_ARGUMENT);
  CHECK(iof_pinj_parse(nullptr, &bad) == IOF_ERR_ARGUMENT);
}

TEST_CASE("compose, inverse, apply") {
  Pinj u2 = parse("n=4;1>3,2>4");
  iof_pinj* inv = nullptr;
  REQUIRE(iof_pinj_inverse(u2.get(), &inv) == IOF_OK);
  Pinj x2(inv);
  CHECK(format(x2.get()) == "n=4;3>1,4>2");

  iof_pinj* prod = nullptr;
  REQUIRE(iof_pinj_compose(u2.get(), x2.get(), &prod) == IOF_OK);
  Pinj fix(prod);
  CHECK(format(fix.get()) == "n=4;1>1,2>2");
  CHECK(iof_pinj_is_partial_identity(fix.get()) == 1);

  CHECK(iof_pinj_apply(u2.get(), 1) == 3);
  CHECK(iof_pinj_apply(u2.get(), 3) == 0);
  CHECK(iof_pinj_apply(u2.get(), 9) == -1);

  Pinj other = parse("n=5;");
  iof_pinj* out = nullptr;
  CHECK(iof_pinj_compose(u2.get(), other.get(), &out) == IOF_ERR_ARGUMENT);
}

TEST_CASE("membership") {
  Pinj yes = parse("n=6;1>1,4>6");
  CHECK(iof_is_member(yes.get()) == 1);
  CHECK(iof_is_member_direct(yes.get()) == 1);
  char* why = nullptr;
  REQUIRE(iof_member_violation(yes.get(), &why) == IOF_OK);
  CHECK(why == nullptr);

  Pinj no = parse("n=6;1>1,4>2");
  CHECK(iof_is_member(no.get()) == 0);
  REQUIRE(iof_member_violation(no.get(), &why) == IOF_OK);
  REQUIRE(why != nullptr);
  CHECK(std::string(why).find("(iii)") != std::string::npos);
  iof_string_free(why);
}

TEST_CASE("generators and words") {
  iof_pinj* g = nullptr;
  REQUIRE(iof_generator(6, 'u', 2, &g) == IOF_OK);
  Pinj u2(g);
  CHECK(format(u2.get()) == "n=6;1>3,2>4,6>6");
  CHECK(iof_generator(6, 'u', 5, &g) == IOF_ERR_ARGUMENT);
  CHECK(iof_generator(6, 'q', 1, &g) == IOF_ERR_ARGUMENT);

  iof_word* w = nullptr;
  REQUIRE(iof_word_parse("v3 u4 x1", &w) == IOF_OK);
  WordPtr word(w);
  CHECK(iof_word_length(w) == 3);
  char* text = nullptr;
  REQUIRE(iof_word_format(w, &text) == IOF_OK);
  CHECK(std::string(text) == "v3 u4 x1");
  iof_string_free(text);

  iof_pinj* value = nullptr;
  REQUIRE(iof_word_eval(6, w, &value) == IOF_OK);
  Pinj v(value);
  CHECK(format(v.get()) == "n=6;1>1,4>6");

  iof_word* expanded = nullptr;
  REQUIRE(iof_word_parse("u2", &w) == IOF_OK);
  WordPtr u2w(w);
  REQUIRE(iof_word_expand_an(5, w, &expanded) == IOF_OK);
  WordPtr ex(expanded);
  REQUIRE(iof_word_format(expanded, &text) == IOF_OK);
  CHECK(std::string(text) == "v3 u3");
  iof_string_free(text);
}

TEST_CASE("factorization returns a word and an audit trace") {
  Pinj a = parse("n=6;1>1,4>6");
  iof_word* w = nullptr;
  char* trace = nullptr;
  REQUIRE(iof_factorize(a.get(), 0, &w, &trace) == IOF_OK);
  WordPtr word(w);
  char* text = nullptr;
  REQUIRE(iof_word_format(w, &text) == IOF_OK);
  CHECK(std::string(text) == "v3 u4 x1");
  iof_string_free(text);

  auto j = nlohmann::json::parse(trace);
  iof_string_free(trace);
  CHECK(j["method"] == "normal-form");
  CHECK(j["l"] == 1);
  CHECK(j["r"] == nlohmann::json::array({1}));
  CHECK(j["guard"] == nlohmann::json::array({3}));
  REQUIRE(j["blocks"].size() == 2);
  CHECK(j["blocks"][0]["family"] == "x");
  CHECK(j["blocks"][1]["start"] == 4);

  // evaluating the word reproduces the input
  iof_pinj* back = nullptr;
  REQUIRE(iof_word_eval(6, w, &back) == IOF_OK);
  Pinj b(back);
  CHECK(iof_pinj_equal(a.get(), back) == 1);

  // the small-universe path reports itself
  Pinj tiny = parse("n=3;1>3");
  iof_word* tw = nullptr;
  char* ttrace = nullptr;
  REQUIRE(iof_factorize(tiny.get(), 0, &tw, &ttrace) == IOF_OK);
  WordPtr tword(tw);
  auto tj = nlohmann::json::parse(ttrace);
  iof_string_free(ttrace);
  CHECK(tj["method"] == "word-search");
  iof_pinj* tback = nullptr;
  REQUIRE(iof_word_eval(3, tw, &tback) == IOF_OK);
  Pinj tb(tback);
  CHECK(iof_pinj_equal(tiny.get(), tback) == 1);

  Pinj nonmember = parse("n=6;1>1,4>2");
  CHECK(iof_factorize(nonmember.get(), 0, &tw, nullptr) == IOF_ERR_ARGUMENT);
}

TEST_CASE("factorization over the generating set alphabet") {
  Pinj a = parse("n=5;1>3,2>4");
  iof_word* w = nullptr;
  REQUIRE(iof_factorize(a.get(), 1, &w, nullptr) == IOF_OK);
  WordPtr word(w);
  char* text = nullptr;
  REQUIRE(iof_word_format(w, &text) == IOF_OK);
  CHECK(std::string(text) == "v3 u3");
  iof_string_free(text);
}

TEST_CASE("enumeration, closure and the rank suite") {
  iof_element_set* s = nullptr;
  REQUIRE(iof_enumerate(4, &s) == IOF_OK);
  SetPtr members(s);
  CHECK(iof_element_set_size(s) == 22);
  CHECK(iof_element_set_n(s) == 4);

  iof_element_set* an = nullptr;
  REQUIRE(iof_standard_generating_set(4, &an) == IOF_OK);
  SetPtr gens(an);
  CHECK(iof_element_set_size(an) == 6);

  std::vector<Pinj> hold;
  std::vector<const iof_pinj*> raw;
  for (size_t i = 0; i < iof_element_set_size(an); ++i) {
    iof_pinj* p = nullptr;
    REQUIRE(iof_element_set_get(an, i, &p) == IOF_OK);
    hold.emplace_back(p);
    raw.push_back(p);
  }
  iof_element_set* closed = nullptr;
  REQUIRE(iof_closure(4, raw.data(), raw.size(), &closed) == IOF_OK);
  SetPtr closure(closed);
  CHECK(iof_element_set_equal(closed, s) == 1);

  int generating = 0;
  REQUIRE(iof_is_generating(4, raw.data(), raw.size(), &generating) == IOF_OK);
  CHECK(generating == 1);

  iof_element_set* cls = nullptr;
  REQUIRE(iof_classify_rank(4, 3, &cls) == IOF_OK);
  SetPtr class3(cls);
  CHECK(iof_element_set_size(cls) == 4);

  int rank = 0;
  REQUIRE(iof_brute_rank(3, 0, &rank) == IOF_OK);
  CHECK(rank == 5);
  CHECK(iof_brute_rank(3, 2, &rank) == IOF_ERR_ARGUMENT);

  int minimal = 0;
  REQUIRE(iof_check_minimality(4, &minimal) == IOF_OK);
  CHECK(minimal == 1);

  // element-set construction from handles
  iof_element_set* made = nullptr;
  REQUIRE(iof_element_set_create(4, raw.data(), raw.size(), &made) == IOF_OK);
  SetPtr made_holder(made);
  CHECK(iof_element_set_equal(made, an) == 1);
  CHECK(iof_element_set_contains(made, raw[0]) == 1);
}

TEST_CASE("null arguments are rejected, not crashed on") {
  CHECK(iof_pinj_parse("n=3;", nullptr) == IOF_ERR_ARGUMENT);
  CHECK(iof_pinj_compose(nullptr, nullptr, nullptr) == IOF_ERR_ARGUMENT);
  CHECK(iof_word_parse(nullptr, nullptr) == IOF_ERR_ARGUMENT);
  CHECK(iof_enumerate(4, nullptr) == IOF_ERR_ARGUMENT);
  iof_pinj_free(nullptr);
  iof_word_free(nullptr);
  iof_element_set_free(nullptr);
  iof_string_free(nullptr);
  CHECK(std::string(iof_version()) == "0.1.0");
}
