#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "superperm/constructions.hpp"
#include "superperm/error.hpp"

using namespace superperm;

namespace {

PermSequence seq(std::initializer_list<const char*> items) {
  PermSequence out;
  for (const char* s : items) out.push_back(Permutation::from_string(s));
  return out;
}

const char* const kPalindromic5 =
    "123451234152341253412354123145231425314235142315423124531243512431524312543121345213425134"
    "215342135421324513241532413524132541321453214352143251432154321";

}  // namespace

TEST_CASE("expand") {
  CHECK(expand(seq({"12", "21"})) == seq({"123", "231", "312", "213", "132", "321"}));
  CHECK(expand(seq({"1"})) == seq({"12", "21"}));
  CHECK(expand(first_appearance_order("123121321", 3)).size() == 24);
  CHECK_THROWS_AS(expand(seq({"12"})), InputError);
  CHECK_THROWS_AS(expand(seq({"12", "12"})), InputError);
}

TEST_CASE("compress") {
  CHECK(compress(seq({"123", "231", "312", "213", "132", "321"})) == "123121321");
  CHECK(compress(seq({"123"})) == "123");
  CHECK(compress(seq({"12", "21"})) == "121");
  CHECK_THROWS_AS(compress({}), InputError);
  CHECK_THROWS_AS(compress(seq({"12", "123"})), InputError);
}

TEST_CASE("palindromic strings from the recursive construction") {
  CHECK(palindromic(1) == "1");
  CHECK(palindromic(2) == "121");
  CHECK(palindromic(3) == "123121321");
  CHECK(palindromic(4) == "123412314231243121342132413214321");
  CHECK(palindromic(5) == kPalindromic5);
  CHECK_THROWS_AS(palindromic(0), InputError);
  CHECK_THROWS_AS(palindromic(9), InputError);
}

TEST_CASE("palindromic lengths, symmetry and coverage") {
  std::size_t expected = 0;
  for (int n = 1; n <= 6; ++n) {
    expected += factorial(n);
    const std::string s = palindromic(n);
    CHECK(s.size() == expected);
    CHECK(std::equal(s.begin(), s.end(), s.rbegin()));
    CHECK(oracle::covered(s, n) == factorial(n));
  }
}

TEST_CASE("first_appearance_order") {
  CHECK(first_appearance_order("121", 2) == seq({"12", "21"}));
  CHECK(first_appearance_order("123121321", 3) ==
        seq({"123", "231", "312", "213", "132", "321"}));
  CHECK(first_appearance_order("1", 1) == seq({"1"}));
  CHECK_THROWS_AS(first_appearance_order("112", 2), InputError);
}

TEST_CASE("extending any superpermutation gives a superpermutation") {
  const std::string from_1221 = extend_superpermutation("1221", 2);
  CHECK(oracle::covered(from_1221, 3) == 6);
  CHECK(extend_superpermutation("123121321", 3) == palindromic(4));
}
