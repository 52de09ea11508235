// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

#include <sstream>  // for istringstream
#include <string>   // for string

#include "catch2/catch_amalgamated.hpp"

#include "ybe/corpus.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/io.hpp"

namespace ybe {

  namespace {
    ErrorKind kind_of(auto&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      return ErrorKind::internal;
    }

    ErrorKind read_kind(std::string const& text) {
      return kind_of([&] { (void) io::solution_from_json(io::parse(text)); });
    }
  }  // namespace

  TEST_CASE("sigma documents", "[io]") {
    auto j = io::to_json(s4());
    REQUIRE(io::dump(j) == R"({"n":4,"sigma":[[1,2,4,3],[1,2,4,3],[2,1,3,4],[2,1,3,4]]})");
    REQUIRE(io::solution_from_json(j) == s4());
  }

  TEST_CASE("round trips are exact", "[io]") {
    std::vector<Solution> all{e24(), s4(), trivial(1)};
    for (auto& s : enumerate_square_free(4)) {
      all.push_back(std::move(s));
    }
    for (auto const& s : all) {
      auto text = io::dump(io::to_json(s));
      auto back = io::solution_from_json(io::parse(text));
      REQUIRE(back == s);
      REQUIRE(back.flat_sigma() == s.flat_sigma());
      REQUIRE(io::dump(io::to_json(back)) == text);
      REQUIRE(io::dump(io::to_json(back), true) == io::dump(io::to_json(s), true));
    }
  }

  TEST_CASE("r documents", "[io]") {
    auto s = io::solution_from_json(io::parse(R"({"n":2,"r":[[[1,1],[2,1]],[[1,2],[2,2]]]})"));
    REQUIRE(s == trivial(2));

    // r(x, y) = (f(y), f⁻¹(x)) with f = (1 2)
    auto t = io::solution_from_json(io::parse(R"({"n":2,"r":[[[2,2],[1,2]],[[2,1],[1,1]]]})"));
    REQUIRE_FALSE(t.square_free());
    REQUIRE(io::to_json(t)["sigma"] == io::json::parse("[[2,1],[2,1]]"));

    std::istringstream in(R"({"n": 1, "r": [[[1, 1]]]})");
    REQUIRE(io::solution_from_json(io::parse(in)) == trivial(1));
  }

  TEST_CASE("malformed documents", "[io]") {
    REQUIRE(read_kind("{") == ErrorKind::parse_error);
    REQUIRE(read_kind("[]") == ErrorKind::parse_error);
    REQUIRE(read_kind(R"({"sigma":[[1]]})") == ErrorKind::parse_error);
    REQUIRE(read_kind(R"({"n":0,"sigma":[]})") == ErrorKind::parse_error);
    REQUIRE(read_kind(R"({"n":2})") == ErrorKind::parse_error);
    REQUIRE(read_kind(R"({"n":2,"sigma":[[1,2]]})") == ErrorKind::parse_error);
    REQUIRE(read_kind(R"({"n":2,"sigma":[[1,2],[1,3]]})") == ErrorKind::parse_error);
    REQUIRE(read_kind(R"({"n":2,"sigma":[[1,2],[1,"2"]]})") == ErrorKind::parse_error);
    REQUIRE(read_kind(R"({"n":2,"r":[[[1,1],[2,1]],[[1,2],[2]]]})") == ErrorKind::parse_error);
  }

  TEST_CASE("invalid solutions are reported by kind", "[io]") {
    REQUIRE(read_kind(R"({"n":2,"sigma":[[1,1],[1,2]]})") == ErrorKind::not_nondegenerate);
    REQUIRE(read_kind(R"({"n":2,"sigma":[[2,1],[1,2]]})") == ErrorKind::not_nondegenerate);
    REQUIRE(read_kind(R"({"n":2,"r":[[[1,2],[2,1]],[[1,2],[2,2]]]})")
            == ErrorKind::not_involutive);
  }

  TEST_CASE("report documents", "[io]") {
    auto rep = io::to_json(validate(e24()));
    REQUIRE(rep["ok"] == true);
    REQUIRE(rep["square_free"] == true);
    REQUIRE(rep["first_failure"].is_null());

    GtuViolation v{4, 16, 0, 0, 2, 0, 5};
    REQUIRE(io::to_json(v) == io::json::parse(R"({"condition":4,"z":17,"y":1,"left":3,"right":1,"point":6})"));

    REQUIRE(io::to_json(Partition::from_classes(3, {{0, 2}, {1}}))
            == io::json::parse("[[1,3],[2]]"));
    auto x = gen(s4(), 0);
    REQUIRE(io::to_json(x) == io::json::parse(R"({"vec":[1,0,0,0],"perm":[1,2,4,3]})"));
  }

}  // namespace ybe
