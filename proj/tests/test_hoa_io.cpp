#include <doctest.h>

#include <string>

#include "bacomp/complement.hpp"
#include "bacomp/error.hpp"
#include "bacomp/hoa_io.hpp"
#include "bacomp/oracle.hpp"
#include "fixtures.hpp"

using namespace bacomp;
using namespace fixtures;

namespace {

ErrorKind kind_of_failure(const std::string& text, std::string* message = nullptr) {
  try {
    parse_hoa(text);
  } catch (const Error& e) {
    if (message != nullptr) *message = e.what();
    return e.kind();
  }
  FAIL("parse succeeded: " << text);
  return ErrorKind::Contract;
}

const char* kHeader = "HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\n";

}  // namespace

TEST_CASE("Buchi input") {
  Sgra a = parse_hoa(std::string(kHeader) + "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n[t] 0 {0}\n--END--\n");
  CHECK(a.is_buchi());
  CHECK(a.num_letters() == 2);
  CHECK(a.alphabet().label(0) == "!a");
  REQUIRE(a.transitions().size() == 2);
  for (const Transition& t : a.transitions()) CHECK(t.colors == kAcc);
}

TEST_CASE("Fin and Inf input") {
  Sgra a = parse_hoa(std::string(kHeader) + "Acceptance: 2 Fin(0) & Inf(1)\n--BODY--\nState: 0\n[0] 0 {0 1}\n--END--\n");
  CHECK(a.num_colors() == 2);
  CHECK(a.fin_used());
  REQUIRE(a.transitions().size() == 1);
  CHECK(a.transitions()[0].letter == 1);
  CHECK(a.transitions()[0].colors == ColorSet(0b11));

  // Inf sets get colors in formula order; Fin may come last.
  Sgra b = parse_hoa(std::string(kHeader) +
                     "Acceptance: 3 Inf(2) & Inf(0) & Fin(1)\n--BODY--\nState: 0\n[t] 0 {2}\n[!0] 0 {1}\n--END--\n");
  CHECK(b.num_colors() == 3);
  CHECK(b.outgoing(0, 1)[0].colors == ColorSet::single(1));
  CHECK(b.outgoing(0, 0).size() == 2);
}

TEST_CASE("state-based acceptance is pushed to transitions") {
  Sgra a = parse_hoa(std::string(kHeader) + "Acceptance: 1 Inf(0)\n--BODY--\nState: 0 {0}\n[0] 0\n[!0] 0\n--END--\n");
  for (const Transition& t : a.transitions()) CHECK(t.colors == kAcc);
}

TEST_CASE("label formulas") {
  Sgra a = parse_hoa(
      "HOA: v1\nStates: 1\nStart: 0\nAP: 2 \"p\" \"q\"\nAcceptance: 0 t\n--BODY--\n"
      "State: 0 \"s\"\n[0 & !1 | (1 & 0)] 0\n--END--\n");
  CHECK(a.num_colors() == 1);
  REQUIRE(a.transitions().size() == 2);
  CHECK(a.transitions()[0].letter == 1);
  CHECK(a.transitions()[1].letter == 3);
}

TEST_CASE("comments and unknown headers are skipped") {
  Sgra a = parse_hoa(
      "HOA: v1 /* c */\nname: \"x\"\ntool: \"t\" \"1\"\nStates: 1\nStart: 0\nAP: 0\n"
      "acc-name: Buchi\nAcceptance: 1 Inf(0)\nproperties: trans-acc\n--BODY--\nState: 0\n[t] 0 {0}\n--END--\n");
  CHECK(a.num_letters() == 1);
  CHECK(a.transitions().size() == 1);
}

TEST_CASE("unsupported acceptance") {
  std::string msg;
  CHECK(kind_of_failure(std::string(kHeader) + "Acceptance: 2 Inf(0) | Inf(1)\n--BODY--\n--END--\n", &msg) ==
        ErrorKind::UnsupportedAcceptance);
  CHECK(kind_of_failure(std::string(kHeader) + "Acceptance: 2 Fin(0) & Fin(1)\n--BODY--\n--END--\n") ==
        ErrorKind::UnsupportedAcceptance);
  CHECK(kind_of_failure(std::string(kHeader) + "Acceptance: 1 Inf(!0)\n--BODY--\n--END--\n") ==
        ErrorKind::UnsupportedAcceptance);
  CHECK(kind_of_failure(std::string(kHeader) + "Acceptance: 1 Fin(0) & Inf(0)\n--BODY--\n--END--\n") ==
        ErrorKind::UnsupportedAcceptance);
}

TEST_CASE("parse errors carry positions") {
  std::string msg;
  CHECK(kind_of_failure("HOA: v1\nStates: x\n", &msg) == ErrorKind::Parse);
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(kind_of_failure(std::string(kHeader) + "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n[0] 3\n--END--\n") ==
        ErrorKind::Parse);
  CHECK(kind_of_failure(std::string(kHeader) + "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n0\n--END--\n") ==
        ErrorKind::Parse);
  CHECK(kind_of_failure(std::string(kHeader) + "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n[1] 0\n--END--\n") ==
        ErrorKind::Parse);
  CHECK(kind_of_failure(std::string(kHeader) + "Alias: @a 0\nAcceptance: 1 Inf(0)\n--BODY--\n--END--\n") ==
        ErrorKind::Parse);
  CHECK(kind_of_failure(std::string(kHeader) + "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n[t] 0 {3}\n--END--\n") ==
        ErrorKind::Parse);
}

TEST_CASE("AP limit") {
  CHECK_THROWS_AS(parse_hoa("HOA: v1\nStates: 0\nAP: 3 \"a\" \"b\" \"c\"\nAcceptance: 0 t\n--BODY--\n--END--\n", 2),
                  Error);
}

TEST_CASE("printer") {
  const std::string fin = print_hoa(aut_fin_a());
  CHECK(fin.find("acc-name: Buchi\nAcceptance: 1 Inf(0)\n") != std::string::npos);
  CHECK(fin.find("AP: 1 \"p0\"") != std::string::npos);
  CHECK(fin.find("[!0] 0 {0}\n[0] 0\n") != std::string::npos);

  Sgra k3(sigma_a(), 1, {0}, {{0, 0, 0, ColorSet::range(0, 3)}}, 3, true);
  const std::string g = print_hoa(k3);
  CHECK(g.find("Acceptance: 3 Fin(0) & Inf(1) & Inf(2)\n") != std::string::npos);
  CHECK(g.find("[t] 0 {0 1 2}\n") != std::string::npos);

  CHECK(print_hoa(aut_fin_a(), "x").find("name: \"x\"\n") != std::string::npos);
}

TEST_CASE("HOA round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Sgra a = random_ba({seed, 1 + seed % 6, 2 + 2 * (seed % 2), 1.6, 0.3});
    CHECK(parse_hoa(print_hoa(a)) == a);
    Sgra c = complement(a);
    CHECK(parse_hoa(print_hoa(c)) == c);
  }
}

TEST_CASE(".ba input") {
  Sgra a = parse_ba("a,[0]->[0]\n[0]\n");
  CHECK(a.num_states() == 1);
  CHECK(a.initial() == StateSet{0});
  REQUIRE(a.transitions().size() == 1);
  CHECK(a.transitions()[0].colors == kAcc);

  Sgra b = parse_ba("[s]\nb,[s]->[t]\na,[t]->[s]\n");
  CHECK(b.alphabet().labels() == std::vector<std::string>{"a", "b"});
  for (const Transition& t : b.transitions()) CHECK(t.colors.empty());

  CHECK_THROWS_AS(parse_ba("a,[0]-[0]\n"), Error);
  CHECK_THROWS_AS(parse_ba("a,[0]->[0]\n[0]\nb,[0]->[0]\n"), Error);
  CHECK_THROWS_AS(parse_ba("a,0->[0]\n"), Error);
}

TEST_CASE(".ba round trip keeps the language") {
  Sgra nonuniform = Sgra::buchi(sigma_ab(), 1, {0}, {{0, 0, 0, kAcc}, {0, 1, 0, kNone}});
  Sgra two_init = Sgra::buchi(sigma_ab(), 2, {0, 1}, {{0, 0, 0, kAcc}, {1, 1, 1, kAcc}});
  for (const Sgra& a : {nonuniform, two_init, aut_iwac()}) {
    Sgra back = relabel(parse_ba(print_ba(a)), a.alphabet());
    CHECK(back.initial().size() == 1);
    for_each_lasso(a.num_letters(), 3, 3, [&](const LassoWord& w) { CHECK(member(a, w) == member(back, w)); });
  }
}
