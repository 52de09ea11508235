// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

#include <set>     // for set
#include <vector>  // for vector

#include "catch2/catch_amalgamated.hpp"

#include "oracle.hpp"
#include "support.hpp"
#include "ybe/enumerate.hpp"

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

    EnumerateOptions iso() {
      EnumerateOptions o;
      o.up_to_iso = true;
      return o;
    }
  }  // namespace

  TEST_CASE("counts", "[enumerate]") {
    // labeled, up to isomorphism
    std::size_t const labeled[] = {0, 1, 1, 4, 30, 396};
    std::size_t const classes[] = {0, 1, 1, 2, 5, 17};
    for (std::size_t n = 1; n <= 5; ++n) {
      CAPTURE(n);
      REQUIRE(enumerate_square_free(n).size() == labeled[n]);
      REQUIRE(enumerate_square_free(n, iso()).size() == classes[n]);
    }
  }

  TEST_CASE("counts on six points", "[enumerate][.slow]") {
    EnumerateOptions o;
    o.n_cap = 6;
    REQUIRE(enumerate_square_free(6, o).size() == 7680);
    o.up_to_iso = true;
    REQUIRE(enumerate_square_free(6, o).size() == 68);
  }

  TEST_CASE("enumeration agrees with the brute-force oracle", "[enumerate][oracle]") {
    for (int n = 1; n <= 4; ++n) {
      std::set<oracle::Sigmas> expected;
      for (auto const& s : oracle::all_square_free(n)) {
        expected.insert(s);
      }
      std::set<oracle::Sigmas> got;
      for (auto const& s : enumerate_square_free(n)) {
        got.insert(support::to_oracle(s));
      }
      REQUIRE(got == expected);

      std::set<std::vector<int>> forms;
      for (auto const& s : oracle::classes(oracle::all_square_free(n))) {
        forms.insert(oracle::min_relabeled_table(s));
      }
      std::set<std::vector<int>> ours;
      for (auto const& s : enumerate_square_free(n, iso())) {
        ours.insert(support::flat(s));
      }
      REQUIRE(ours == forms);
    }
  }

  TEST_CASE("output is sorted and canonical", "[enumerate]") {
    auto all = enumerate_square_free(5);
    for (std::size_t k = 1; k < all.size(); ++k) {
      REQUIRE(all[k - 1] < all[k]);
    }
    auto reps = enumerate_square_free(5, iso());
    for (std::size_t a = 0; a < reps.size(); ++a) {
      REQUIRE(canonical_form(reps[a]) == reps[a]);
      for (std::size_t b = a + 1; b < reps.size(); ++b) {
        REQUIRE_FALSE(is_isomorphic(reps[a], reps[b]));
      }
    }
  }

  TEST_CASE("thread count does not change the output", "[enumerate]") {
    for (std::size_t n = 3; n <= 5; ++n) {
      for (bool up_to_iso : {false, true}) {
        EnumerateOptions one, many;
        one.up_to_iso = many.up_to_iso = up_to_iso;
        many.threads                   = 4;
        auto a = enumerate_square_free(n, one);
        auto b = enumerate_square_free(n, many);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
          REQUIRE(a[k].flat_sigma() == b[k].flat_sigma());
        }
      }
    }
  }

  TEST_CASE("enumeration caps", "[enumerate]") {
    REQUIRE(kind_of([] { (void) enumerate_square_free(7); }) == ErrorKind::cap_exceeded);
    EnumerateOptions o;
    o.n_cap = 20;
    REQUIRE(kind_of([&] { (void) enumerate_square_free(9, o); }) == ErrorKind::cap_exceeded);
    REQUIRE(kind_of([] { (void) enumerate_square_free(0); }) == ErrorKind::index_out_of_range);
  }

}  // namespace ybe
