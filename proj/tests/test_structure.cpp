// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

#include <limits>  // for numeric_limits
#include <map>     // for map
#include <random>  // for mt19937
#include <vector>  // for vector

#include "catch2/catch_amalgamated.hpp"

#include "support.hpp"
#include "ybe/corpus.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/structure.hpp"

namespace ybe {

  namespace {
    using Vec = std::vector<exponent_type>;

    ErrorKind kind_of(auto&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      return ErrorKind::internal;
    }

    Word random_word(std::size_t n, std::size_t len, bool positive, std::mt19937& rng) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      std::bernoulli_distribution                coin(0.5);
      Word                                       w;
      for (std::size_t k = 0; k < len; ++k) {
        w.push_back({pick(rng), !positive && coin(rng)});
      }
      return w;
    }

    // The G_r component computed directly from the σ's.
    Perm project(Solution const& s, Word const& w) {
      auto p = Perm::identity(s.size());
      for (auto const& l : w) {
        auto const& g = s.sigma(l.generator);
        p             = compose(p, l.inverted ? inverse(g) : g);
      }
      return p;
    }
  }  // namespace

  TEST_CASE("the action on exponent vectors", "[structure]") {
    auto p = support::perm("(1,2,3)", 3);
    // coordinate j moves to position p(j)
    REQUIRE(act(p, Vec{5, 6, 7}) == Vec{7, 5, 6});
    REQUIRE(act(Perm::identity(3), Vec{1, 2, 3}) == Vec{1, 2, 3});
    REQUIRE(kind_of([&] { (void) act(p, Vec{1, 2}); }) == ErrorKind::degree_mismatch);
  }

  TEST_CASE("generators and products in s4", "[structure]") {
    auto s  = s4();
    auto x1 = gen(s, 0), x3 = gen(s, 2);
    REQUIRE(x1.vec == Vec{1, 0, 0, 0});
    REQUIRE(x1.perm == support::perm("(3,4)", 4));

    auto y = mul(x1, x3);
    REQUIRE(y.vec == Vec{1, 0, 0, 1});
    REQUIRE(y.perm == support::perm("(1,2)(3,4)", 4));

    // r(1, 3) = (4, 2), so x1 x3 = x4 x2
    REQUIRE(s.r(0, 2) == pair_type{3, 1});
    REQUIRE(mul(gen(s, 3), gen(s, 1)) == y);

    REQUIRE(mul(inv(y), y) == StructureElem::identity(4));
    REQUIRE(mul(y, inv(y)) == StructureElem::identity(4));
    REQUIRE(kind_of([&] { (void) gen(s, 4); }) == ErrorKind::index_out_of_range);
    REQUIRE(kind_of([&] { (void) mul(y, StructureElem::identity(3)); })
            == ErrorKind::degree_mismatch);
  }

  TEST_CASE("parse_word", "[structure]") {
    REQUIRE(parse_word("x1 x3 x2^-1") == Word{{0, false}, {2, false}, {1, true}});
    REQUIRE(parse_word("x2^3") == Word{{1, false}, {1, false}, {1, false}});
    REQUIRE(parse_word("x1^-2*x4") == Word{{0, true}, {0, true}, {3, false}});
    REQUIRE(parse_word("1").empty());
    REQUIRE(parse_word("").empty());
    REQUIRE(parse_word("  ").empty());
    REQUIRE(to_string(parse_word("x1 x3 x2^-1")) == "x1 x3 x2^-1");
    REQUIRE(to_string(Word{}) == "1");

    for (char const* bad : {"y1", "x0", "x1^0", "x1^", "x", "x1^-", "x1 1"}) {
      CAPTURE(bad);
      REQUIRE(kind_of([&] { (void) parse_word(bad); }) == ErrorKind::parse_error);
    }
    REQUIRE(kind_of([] { (void) eval_word(s4(), parse_word("x5")); })
            == ErrorKind::index_out_of_range);
  }

  TEST_CASE("eval_word", "[structure]") {
    auto s = e24();
    REQUIRE(eval_word(s, {}) == StructureElem::identity(24));
    auto x = eval_word(s, parse_word("x1 x9 x17^-1"));
    REQUIRE(x == mul(mul(gen(s, 0), gen(s, 8)), inv(gen(s, 16))));
    REQUIRE(eval_word(s, parse_word("x5 x5^-1")) == StructureElem::identity(24));
  }

  TEST_CASE("defining relations", "[structure]") {
    REQUIRE(check_defining_relations(e24()));
    REQUIRE(check_defining_relations(s4()));
    for (std::size_t n = 1; n <= 6; ++n) {
      REQUIRE(check_defining_relations(trivial(n)));
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& s : enumerate_square_free(n)) {
        REQUIRE(check_defining_relations(s));
      }
    }
  }

  TEST_CASE("group laws on random words", "[structure][property]") {
    std::mt19937 rng(11);
    for (auto const& s : {s4(), e24(), trivial(3)}) {
      for (int trial = 0; trial < 200; ++trial) {
        auto a = eval_word(s, random_word(s.size(), 1 + trial % 7, false, rng));
        auto b = eval_word(s, random_word(s.size(), 1 + trial % 5, false, rng));
        auto c = eval_word(s, random_word(s.size(), 1 + trial % 3, false, rng));
        REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
        REQUIRE(mul(a, inv(a)) == StructureElem::identity(s.size()));
        REQUIRE(inv(mul(a, b)) == mul(inv(b), inv(a)));
      }
    }
  }

  TEST_CASE("the projection to G_r is a homomorphism", "[structure][property]") {
    std::mt19937 rng(5);
    for (auto const& s : {s4(), e24()}) {
      for (int trial = 0; trial < 300; ++trial) {
        auto w = random_word(s.size(), trial % 12, false, rng);
        REQUIRE(eval_word(s, w).perm == project(s, w));
      }
    }
  }

  TEST_CASE("the exponent vector determines the permutation", "[structure][property]") {
    std::mt19937 rng(3);
    std::vector<Solution> cases{s4(), e24()};
    for (auto const& s : enumerate_square_free(4)) {
      cases.push_back(s);
    }
    for (auto const& s : cases) {
      std::map<Vec, Perm> seen;
      for (int trial = 0; trial < 400; ++trial) {
        auto x        = eval_word(s, random_word(s.size(), 1 + trial % 4, true, rng));
        auto [it, ok] = seen.emplace(x.vec, x.perm);
        REQUIRE(it->second == x.perm);
      }
    }
  }

  TEST_CASE("exponent overflow is reported", "[structure]") {
    auto s   = trivial(2);
    auto big = StructureElem{{std::numeric_limits<exponent_type>::max(), 0}, Perm::identity(2)};
    REQUIRE(kind_of([&] { (void) mul(big, gen(s, 0)); }) == ErrorKind::overflow);
    REQUIRE_NOTHROW(mul(big, gen(s, 1)));

    auto low = StructureElem{{std::numeric_limits<exponent_type>::min(), 0}, Perm::identity(2)};
    REQUIRE(kind_of([&] { (void) inv(low); }) == ErrorKind::overflow);
  }

}  // namespace ybe
