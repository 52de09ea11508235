// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Retraction: the relation x_i ~ x_j iff σ_i = σ_j, its refinement ρ by
// G_r-orbits, the induced quotient solutions, and the level computations
// built on iterating them.

#ifndef YBE_RETRACT_HPP_
#define YBE_RETRACT_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "error.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "perm_group.hpp"
#include "solution.hpp"

namespace ybe {

  inline Partition retract_classes(Solution const& s) {
    return Partition::from_labels(s.sigmas());
  }

  inline Partition rho_classes(Solution const& s) {
    return retract_classes(s).meet(orbits(s));
  }

  //! \brief The solution induced on the classes of \p p.
  //!
  //! Point k of the result is the k-th class of \p p; class representatives
  //! are minimal members.
  //!
  //! \throws Error (IncompatiblePartition) if r does not respect \p p; the
  //! witness is (i, j, i', j') with i ~ i', j ~ j' and r(i, j), r(i', j') in
  //! different classes.
  inline Solution quotient(Solution const& s, Partition const& p) {
    if (p.size() != s.size()) {
      throw Error(ErrorKind::not_a_partition, "partition of a different set");
    }
    auto const  reps = p.representatives();
    std::size_t m    = p.num_classes();
    RTable      bar(m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto [k, l] = s.r(reps[a], reps[b]);
        bar(a, b)   = {p.class_of(k), p.class_of(l)};
      }
    }
    for (point_type i = 0; i < s.size(); ++i) {
      for (point_type j = 0; j < s.size(); ++j) {
        auto [k, l]   = s.r(i, j);
        auto expected = bar(p.class_of(i), p.class_of(j));
        if (p.class_of(k) != expected.first || p.class_of(l) != expected.second) {
          std::vector<std::size_t> w{
              i, j, reps[p.class_of(i)], reps[p.class_of(j)]};
          throw Error(ErrorKind::incompatible_partition,
                      "r does not respect the partition at "
                          + detail::one_based_tuple(w),
                      w);
        }
      }
    }
    try {
      return Solution::from_r_table(bar);
    } catch (Error const& e) {
      throw Error(ErrorKind::internal,
                  std::string("induced solution failed validation: ") + e.what(),
                  e.witness());
    }
  }

  namespace detail {
    inline Solution quotient_or_internal(Solution const& s, Partition const& p) {
      try {
        return quotient(s, p);
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::incompatible_partition) {
          throw Error(ErrorKind::internal, e.what(), e.witness());
        }
        throw;
      }
    }
  }  // namespace detail

  inline Solution ret(Solution const& s) {
    return detail::quotient_or_internal(s, retract_classes(s));
  }

  inline Solution ret_rho(Solution const& s) {
    return detail::quotient_or_internal(s, rho_classes(s));
  }

  //! s, Ret(s), Ret²(s), ... until a single point or a fixpoint.
  inline std::vector<Solution> retraction_tower(Solution const& s) {
    std::vector<Solution> tower{s};
    while (tower.back().size() > 1) {
      auto next = ret(tower.back());
      if (next.size() == tower.back().size()) {
        break;
      }
      tower.push_back(std::move(next));
    }
    return tower;
  }

  //! s, Ret_ρ(s), ... until a trivial solution or a fixpoint.
  inline std::vector<Solution> rho_tower(Solution const& s) {
    std::vector<Solution> tower{s};
    while (!is_trivial(tower.back())) {
      auto next = ret_rho(tower.back());
      if (next.size() == tower.back().size()) {
        break;
      }
      tower.push_back(std::move(next));
    }
    return tower;
  }

  //! \brief The least m with |Ret^m(s)| = 1, or nullopt when the iteration
  //! reaches a fixpoint of size > 1 (not retractable).
  inline std::optional<std::size_t> multipermutation_level(Solution const& s) {
    auto tower = retraction_tower(s);
    if (tower.back().size() != 1) {
      return std::nullopt;
    }
    return tower.size() - 1;
  }

  //! \brief The least m ≥ 0 with Ret_ρ^m(s) trivial, or nullopt when not
  //! strongly retractable. An already trivial solution has level 0.
  inline std::optional<std::size_t> strong_level(Solution const& s) {
    auto tower = rho_tower(s);
    if (!is_trivial(tower.back())) {
      return std::nullopt;
    }
    return tower.size() - 1;
  }

  //! \brief σ_i ↦ σ̄_[i] is well defined and compatible with the actions on
  //! X and X/ρ.
  //!
  //! Witness on failure: (i, x) with [σ_i(x)] ≠ σ̄_[i]([x]), or (i, j) with
  //! σ_i = σ_j but σ̄_[i] ≠ σ̄_[j].
  inline Check check_epimorphism(Solution const& s) {
    auto const rho = rho_classes(s);
    auto const bar = quotient(s, rho);
    for (point_type i = 0; i < s.size(); ++i) {
      for (point_type j = i + 1; j < s.size(); ++j) {
        if (s.sigma(i) == s.sigma(j)
            && bar.sigma(rho.class_of(i)) != bar.sigma(rho.class_of(j))) {
          return Check::fail({i, j});
        }
      }
    }
    for (point_type i = 0; i < s.size(); ++i) {
      auto const& image = bar.sigma(rho.class_of(i));
      for (point_type x = 0; x < s.size(); ++x) {
        if (rho.class_of(s.sigma(i)(x)) != image(rho.class_of(x))) {
          return Check::fail({i, x});
        }
      }
    }
    return {};
  }

  //! Orbits of X and of X/ρ correspond: same count, and each quotient orbit
  //! is the image of exactly one orbit of X.
  inline Check check_orbit_preservation(Solution const& s) {
    auto const rho      = rho_classes(s);
    auto const orb      = orbits(s);
    auto const orb_bar  = orbits(quotient(s, rho));
    if (orb.num_classes() != orb_bar.num_classes()) {
      return Check::fail({orb.num_classes(), orb_bar.num_classes()});
    }
    // The image of orbit c must be a whole quotient orbit, and distinct
    // orbits must land in distinct quotient orbits.
    std::vector<std::size_t> target(orb.num_classes(), orb_bar.size());
    for (point_type x = 0; x < s.size(); ++x) {
      auto const img = orb_bar.class_of(rho.class_of(x));
      auto&      t   = target[orb.class_of(x)];
      if (t == orb_bar.size()) {
        t = img;
      } else if (t != img) {
        return Check::fail({x});
      }
    }
    std::vector<bool> used(orb_bar.num_classes(), false);
    for (auto t : target) {
      if (used[t]) {
        return Check::fail({t});
      }
      used[t] = true;
    }
    return {};
  }

  namespace detail {
    inline void require(bool cond, char const* what) {
      if (!cond) {
        throw Error(ErrorKind::precondition_unmet, what);
      }
    }

    inline void require_square_free_abelian(Solution const& s) {
      require(s.square_free(), "solution is not square-free");
      require(is_abelian(iyb_group(s)), "G_r is not abelian");
    }
  }  // namespace detail

  //! \brief Some ρ-class has two or more points.
  //!
  //! \throws Error (PreconditionUnmet) unless s is square-free, non-trivial
  //! and has abelian G_r.
  inline Check check_abelian_collapse(Solution const& s) {
    detail::require_square_free_abelian(s);
    detail::require(!is_trivial(s), "solution is trivial");
    auto const rho = rho_classes(s);
    if (rho.num_classes() < s.size()) {
      return {};
    }
    return Check::fail({});
  }

  //! For abelian G_r: σ_i restricted to the orbit of x_i is the identity.
  inline Check check_corollary_identity(Solution const& s) {
    detail::require_square_free_abelian(s);
    auto const orb = orbits(s);
    for (point_type i = 0; i < s.size(); ++i) {
      for (point_type x = 0; x < s.size(); ++x) {
        if (orb.same_class(i, x) && s.sigma(i)(x) != x) {
          return Check::fail({i, x});
        }
      }
    }
    return {};
  }

  //! For abelian G_r: a σ_i fixing one point of an orbit fixes all of it.
  inline Check check_lemma_moves(Solution const& s) {
    detail::require_square_free_abelian(s);
    auto const orb = orbits(s);
    for (point_type i = 0; i < s.size(); ++i) {
      for (point_type j = 0; j < s.size(); ++j) {
        if (s.sigma(i)(j) != j) {
          continue;
        }
        for (point_type l = 0; l < s.size(); ++l) {
          if (orb.same_class(j, l) && s.sigma(i)(l) != l) {
            return Check::fail({i, j, l});
          }
        }
      }
    }
    return {};
  }

  //! \brief For every orbit X_k on which all σ_l (x_l ∈ X_k) act trivially:
  //! σ_{j1} and σ_{j2} agree on X_k whenever j2 is reached from j1 by
  //! σ's indexed inside X_k.
  //!
  //! Orbits not meeting the hypothesis are skipped.
  inline Check check_lemma_key(Solution const& s) {
    auto const orb     = orbits(s);
    auto const classes = orb.classes();
    for (auto const& xk : classes) {
      bool hypothesis = true;
      for (auto l : xk) {
        for (auto x : xk) {
          hypothesis = hypothesis && s.sigma(l)(x) == x;
        }
      }
      if (!hypothesis) {
        continue;
      }
      for (point_type j1 = 0; j1 < s.size(); ++j1) {
        std::vector<bool>       seen(s.size(), false);
        std::vector<point_type> stack{j1};
        seen[j1] = true;
        while (!stack.empty()) {
          auto j2 = stack.back();
          stack.pop_back();
          for (auto x : xk) {
            if (s.sigma(j1)(x) != s.sigma(j2)(x)) {
              return Check::fail({j1, j2, x});
            }
          }
          for (auto i : xk) {
            auto nxt = s.sigma(i)(j2);
            if (!seen[nxt]) {
              seen[nxt] = true;
              stack.push_back(nxt);
            }
          }
        }
      }
    }
    return {};
  }

  //! ρ is compatible with r, i.e. the ρ-quotient exists.
  inline Check check_rho_compatible(Solution const& s) {
    try {
      (void) quotient(s, rho_classes(s));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::incompatible_partition) {
        return Check::fail(e.witness());
      }
      throw;
    }
    return {};
  }

}  // namespace ybe

#endif  // YBE_RETRACT_HPP_
