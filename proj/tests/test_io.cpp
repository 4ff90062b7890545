#include <sstream>

#include "doctest.h"
#include "jacrank/errors.hpp"
#include "jacrank/report.hpp"

using namespace jacrank;

TEST_CASE("curve files round trip") {
  auto j = Json::parse(R"({"p": 7, "h": 1, "m": 3, "exponents": [1, 1, 2], "branch": [0, 1, 3], "base": "P1"})");
  auto C = curve_from_json(j);
  CHECK(C.m == 3);
  CHECK(C.branch[2] == FqElem{3});
  CHECK(to_json(C) == j);
  auto k = Json::parse(R"({"p": 5, "h": 2, "m": 3, "exponents": [1, 2], "branch": [[0, 1], [2]]})");
  auto D = curve_from_json(k);
  CHECK(D.field->coeffs(D.branch[0]) == std::vector<std::uint64_t>{0, 1});
  CHECK(to_json(D)["branch"][1] == Json::parse("[2, 0]"));
}

TEST_CASE("curve file errors name the field") {
  auto msg = [](const char* text) {
    try {
      curve_from_json(Json::parse(text));
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg(R"({"h": 1, "m": 3})").find("/p") != std::string::npos);
  CHECK(msg(R"({"p": 7, "h": 1, "m": 3, "exponents": [1, 3], "branch": [0, 1]})").find("/exponents/1") !=
        std::string::npos);
  CHECK(msg(R"({"p": 7, "h": 1, "m": 3, "exponents": [1, 1], "branch": [0, 9]})").find("/branch/1") !=
        std::string::npos);
  CHECK(msg(R"({"p": 25, "h": 1, "m": 3, "exponents": [1, 1], "branch": [0, 1]})").find("/p") != std::string::npos);
  CHECK(msg(R"({"p": 7, "h": 1, "m": 3, "exponents": [1], "branch": [0], "base": {"m0": 2}})").find("/base/f0") !=
        std::string::npos);
}

TEST_CASE("reports") {
  std::vector<int> a{1, 1, 2};
  auto J = jacobi_report(3, 7, 1, a);
  CHECK(J["abs_square"] == 49);
  CHECK(J["field"]["modulus"] == Json::parse("[0, 1]"));
  for (const auto& v : J["valuations"]) CHECK(v["valuation"] == v["predicted"]);
  auto D = deuring_report(5);
  CHECK(D["coeffs"] == Json::parse("[1, 4, 1]"));
  CHECK(D["roots"].size() == 2);
  auto C = cartier_report(5, std::vector<std::int64_t>{0, 2, 2, 1});
  CHECK(C["matrix"] == Json::parse("[[3]]"));
}

TEST_CASE("branch search is thread independent") {
  auto t = Json::parse(R"({"p": 13, "h": 1, "m": 3, "exponents": [1, 1, 2], "branch": [0, 1, null]})");
  std::ostringstream one, four;
  RunConfig c1, c4;
  c4.threads = 4;
  auto n1 = search_branch(t, one, c1);
  auto n4 = search_branch(t, four, c4);
  CHECK(n1 == n4);
  CHECK(one.str() == four.str());
  RunConfig tiny;
  tiny.max_terms = 5;
  std::ostringstream sink;
  CHECK_THROWS_AS(search_branch(t, sink, tiny), Error);
}
