// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

#include <optional>  // for optional
#include <vector>    // for vector

#include "catch2/catch_amalgamated.hpp"

#include "oracle.hpp"
#include "support.hpp"
#include "ybe/corpus.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/retract.hpp"

namespace ybe {

  namespace {
    using Classes = std::vector<std::vector<std::size_t>>;

    // Every σ_i is different, so Ret is the identity map.
    Solution irretractable() {
      using support::perm;
      return Solution::from_r_table(sigma_r_table(
          {perm("(3,4)", 4), perm("(1,3,2,4)", 4), perm("(1,4,2,3)", 4), perm("(1,2)", 4)}));
    }

    // r(x, y) = (f(y), f⁻¹(x)) with f = (1 2): not square-free.
    Solution permutation_solution() {
      auto f = support::perm("(1,2)", 2);
      return Solution::from_r_table(sigma_r_table({f, f}));
    }

    ErrorKind kind_of(auto&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      return ErrorKind::internal;
    }

    std::vector<Solution> small_solutions(std::size_t n_max) {
      std::vector<Solution> out;
      for (std::size_t n = 1; n <= n_max; ++n) {
        for (auto& s : enumerate_square_free(n)) {
          out.push_back(std::move(s));
        }
      }
      return out;
    }
  }  // namespace

  TEST_CASE("retract_classes", "[retract]") {
    REQUIRE(retract_classes(s4()).classes() == Classes{{0, 1}, {2, 3}});
    REQUIRE(retract_classes(trivial(3)).num_classes() == 1);

    auto e = retract_classes(e24());
    REQUIRE(e.num_classes() == 8);
    REQUIRE(e.classes()[4] == std::vector<std::size_t>{8, 11, 12, 15});
    REQUIRE(e.classes()[7] == std::vector<std::size_t>{17, 18, 21, 22});
  }

  TEST_CASE("rho_classes", "[retract]") {
    REQUIRE(rho_classes(s4()) == retract_classes(s4()));
    REQUIRE(rho_classes(trivial(3)) == Partition::discrete(3));
    // The retract classes of e24 already lie inside orbits.
    REQUIRE(rho_classes(e24()) == retract_classes(e24()));

    for (auto const& s : small_solutions(4)) {
      auto rho = rho_classes(s);
      REQUIRE(rho.refines(retract_classes(s)));
      REQUIRE(rho.refines(orbits(s)));
    }
  }

  TEST_CASE("quotient", "[retract]") {
    SECTION("discrete and single-class partitions") {
      auto s = e24();
      REQUIRE(quotient(s, Partition::discrete(24)) == s);
      REQUIRE(quotient(s, Partition::single_class(24)) == trivial(1));
    }
    SECTION("s4 collapses to the trivial solution on two points") {
      REQUIRE(ret(s4()) == trivial(2));
    }
    SECTION("incompatible partition") {
      auto p = Partition::from_classes(4, {{0, 2}, {1}, {3}});
      try {
        (void) quotient(s4(), p);
        FAIL("expected IncompatiblePartition");
      } catch (Error const& e) {
        REQUIRE(e.kind() == ErrorKind::incompatible_partition);
        REQUIRE(e.witness().size() == 4);
      }
    }
    SECTION("size mismatch") {
      REQUIRE(kind_of([] { (void) quotient(s4(), Partition::discrete(3)); })
              == ErrorKind::not_a_partition);
    }
  }

  TEST_CASE("ret agrees with the oracle", "[retract][oracle]") {
    for (auto const& s : small_solutions(5)) {
      auto t = support::to_oracle(s);
      REQUIRE(support::to_oracle(ret(s)) == oracle::retract(t));
      auto m = multipermutation_level(s);
      REQUIRE(m.has_value());
      REQUIRE(static_cast<int>(*m) == oracle::level(t));
    }
    auto e = support::to_oracle(e24());
    REQUIRE(support::to_oracle(ret(e24())) == oracle::retract(e));
    REQUIRE(oracle::level(e) == 3);
  }

  TEST_CASE("retraction towers", "[retract]") {
    auto tower = retraction_tower(e24());
    std::vector<std::size_t> sizes;
    for (auto const& t : tower) {
      sizes.push_back(t.size());
    }
    REQUIRE(sizes == std::vector<std::size_t>{24, 8, 3, 1});
    REQUIRE(tower[2] == trivial(3));

    auto rt = rho_tower(e24());
    REQUIRE(rt.size() == 3);
    REQUIRE(rt.back() == trivial(3));

    REQUIRE(retraction_tower(irretractable()).size() == 1);
    REQUIRE(retraction_tower(trivial(1)).size() == 1);
  }

  TEST_CASE("levels", "[retract]") {
    REQUIRE(multipermutation_level(trivial(1)) == 0u);
    REQUIRE(multipermutation_level(trivial(2)) == 1u);
    REQUIRE(multipermutation_level(trivial(7)) == 1u);
    REQUIRE(multipermutation_level(s4()) == 2u);
    REQUIRE(multipermutation_level(e24()) == 3u);
    REQUIRE(multipermutation_level(permutation_solution()) == 1u);
    REQUIRE_FALSE(multipermutation_level(irretractable()));

    REQUIRE(strong_level(trivial(1)) == 0u);
    REQUIRE(strong_level(trivial(4)) == 0u);
    REQUIRE(strong_level(s4()) == 1u);
    REQUIRE(strong_level(e24()) == 2u);
    REQUIRE_FALSE(strong_level(irretractable()));
  }

  TEST_CASE("lemma checks hold on small solutions", "[retract]") {
    auto all = small_solutions(5);
    all.push_back(e24());
    all.push_back(s4());
    for (auto const& s : all) {
      REQUIRE(check_epimorphism(s));
      REQUIRE(check_orbit_preservation(s));
      REQUIRE(check_rho_compatible(s));
      REQUIRE(check_lemma_key(s));
      if (is_abelian(iyb_group(s))) {
        REQUIRE(check_corollary_identity(s));
        REQUIRE(check_lemma_moves(s));
        REQUIRE(strong_level(s).has_value());
        if (!is_trivial(s)) {
          REQUIRE(check_abelian_collapse(s));
        }
      }
    }
  }

  TEST_CASE("lemma preconditions", "[retract]") {
    REQUIRE(kind_of([] { (void) check_abelian_collapse(trivial(3)); })
            == ErrorKind::precondition_unmet);
    REQUIRE(kind_of([] { (void) check_abelian_collapse(permutation_solution()); })
            == ErrorKind::precondition_unmet);
    REQUIRE(kind_of([] { (void) check_corollary_identity(permutation_solution()); })
            == ErrorKind::precondition_unmet);

    // A square-free solution whose group is not abelian.
    std::optional<Solution> nonabelian;
    for (auto const& s : small_solutions(5)) {
      if (!is_abelian(iyb_group(s))) {
        nonabelian = s;
        break;
      }
    }
    REQUIRE(nonabelian);
    REQUIRE(kind_of([&] { (void) check_lemma_moves(*nonabelian); })
            == ErrorKind::precondition_unmet);
  }

  TEST_CASE("a solution without retraction", "[retract]") {
    auto s = irretractable();
    REQUIRE_FALSE(s.square_free());
    REQUIRE(rho_classes(s).num_classes() == 4);
    REQUIRE(check_rho_compatible(s));
    REQUIRE(check_orbit_preservation(s));
  }

}  // namespace ybe
