// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Cyclic conditions and generalized twisted unions.
//
// The cyclic condition is checked in its one-step form
//
//   γ_{σ_w(j)}(w) = γ_j(w)                         for all w, j,
//
// i.e. r(w, j) and r(w, σ_w(j)) have the same second coordinate; walking the
// σ_w-cycle of j then gives the chain formulation by induction. The full
// cyclic condition adds the dual identity
//
//   σ_{γ_j(w)}(j) = σ_w(j)                         for all w, j,
//
// and the whole grid r(y_a, x_b) = (x_{b+1}, y_{a+1}) follows from the two
// identities by induction on a and b.

#ifndef YBE_TWISTED_HPP_
#define YBE_TWISTED_HPP_

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "error.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "perm_group.hpp"
#include "retract.hpp"
#include "solution.hpp"

namespace ybe {

  inline Check check_cyclic_condition(Solution const& s) {
    for (point_type w = 0; w < s.size(); ++w) {
      for (point_type j = 0; j < s.size(); ++j) {
        if (s.gamma(s.sigma(w)(j))(w) != s.gamma(j)(w)) {
          return Check::fail({w, j});
        }
      }
    }
    return {};
  }

  inline Check check_full_cyclic_condition(Solution const& s) {
    if (auto c = check_cyclic_condition(s); !c) {
      return c;
    }
    for (point_type w = 0; w < s.size(); ++w) {
      for (point_type j = 0; j < s.size(); ++j) {
        if (s.sigma(s.gamma(j)(w))(j) != s.sigma(w)(j)) {
          return Check::fail({w, j});
        }
      }
    }
    return {};
  }

  enum class GtuMode { general, squarefree };

  inline char const* to_string(GtuMode m) noexcept {
    return m == GtuMode::general ? "general" : "squarefree";
  }

  //! \brief One failed instance of a twisted-union condition.
  //!
  //! For condition 3 (y, z) and 4 (z, y): `first` and `second` are the pair,
  //! `left` is σ_first(second) and `right` is `second`; σ_left and σ_right
  //! differ at `point` of the restricting set (Y for 3, Z for 4).
  //!
  //! For condition 1 (z, y, y'): `left` = γ_y(z), `right` = γ_{y'}(z), the
  //! σ's differ on Y. For condition 2 (y, z, z'): `left` = σ_z(y),
  //! `right` = σ_{z'}(y), the γ's differ on Z.
  struct GtuViolation {
    int         condition = 0;
    point_type  first     = 0;
    point_type  second    = 0;
    point_type  third     = 0;  // conditions 1 and 2 only
    point_type  left      = 0;
    point_type  right     = 0;
    point_type  point     = 0;

    friend bool operator==(GtuViolation const&, GtuViolation const&) = default;
  };

  struct GtuCheck {
    bool                      holds = true;
    GtuMode                   mode  = GtuMode::squarefree;
    std::vector<GtuViolation> violations;  // smallest first

    explicit operator bool() const noexcept {
      return holds;
    }

    [[nodiscard]] std::optional<GtuViolation> witness() const {
      if (violations.empty()) {
        return std::nullopt;
      }
      return violations.front();
    }
  };

  namespace detail {
    // First point of `where` on which a and b differ, if any.
    inline std::optional<point_type> first_difference(Perm const&                   a,
                                                      Perm const&                   b,
                                                      std::vector<point_type> const& where) {
      for (auto x : where) {
        if (a(x) != b(x)) {
          return x;
        }
      }
      return std::nullopt;
    }

    inline void check_invariant(Solution const& s, std::vector<bool> const& in) {
      for (point_type i = 0; i < s.size(); ++i) {
        for (point_type x = 0; x < s.size(); ++x) {
          if (in[x] != in[s.sigma(i)(x)]) {
            throw Error(ErrorKind::not_invariant,
                        "sigma_" + std::to_string(i + 1) + " moves "
                            + std::to_string(x + 1) + " across the split",
                        {i, x});
          }
        }
      }
    }
  }  // namespace detail

  //! \brief Checks that X = Y ⊔ Z is a generalized twisted union.
  //!
  //! General mode uses
  //!   (1) σ_{γ_y(z)}|_Y = σ_{γ_{y'}(z)}|_Y   and
  //!   (2) γ_{σ_z(y)}|_Z = γ_{σ_{z'}(y)}|_Z,
  //! squarefree mode the equivalent
  //!   (3) σ_{σ_y(z)}|_Y = σ_z|_Y             and
  //!   (4) σ_{σ_z(y)}|_Z = σ_y|_Z,
  //! for all y, y' ∈ Y and z, z' ∈ Z. With \p all_violations every failing
  //! instance is collected, otherwise the search stops at the first.
  //!
  //! \throws Error (NotAPartition) if Y, Z do not split X into non-empty
  //! parts, (NotInvariant) if they are not G_r-invariant.
  inline GtuCheck check_gtu_pair(Solution const&         s,
                                 std::vector<point_type> Y,
                                 std::vector<point_type> Z,
                                 GtuMode                 mode,
                                 bool                    all_violations = false) {
    std::size_t const n = s.size();
    std::sort(Y.begin(), Y.end());
    std::sort(Z.begin(), Z.end());
    std::vector<int> owner(n, 0);
    for (auto y : Y) {
      if (y >= n || owner[y] != 0) {
        throw Error(ErrorKind::not_a_partition, "Y and Z overlap or exceed X", {y});
      }
      owner[y] = 1;
    }
    for (auto z : Z) {
      if (z >= n || owner[z] != 0) {
        throw Error(ErrorKind::not_a_partition, "Y and Z overlap or exceed X", {z});
      }
      owner[z] = 2;
    }
    if (Y.empty() || Z.empty() || Y.size() + Z.size() != n) {
      throw Error(ErrorKind::not_a_partition, "Y and Z must be non-empty and cover X");
    }
    std::vector<bool> in_y(n);
    for (point_type x = 0; x < n; ++x) {
      in_y[x] = owner[x] == 1;
    }
    detail::check_invariant(s, in_y);

    GtuCheck result;
    result.mode = mode;
    auto record = [&](GtuViolation v) {
      result.holds = false;
      result.violations.push_back(v);
      return !all_violations;
    };

    if (mode == GtuMode::squarefree) {
      for (auto y : Y) {
        for (auto z : Z) {
          auto m = s.sigma(y)(z);
          if (auto d = detail::first_difference(s.sigma(m), s.sigma(z), Y)) {
            if (record({3, y, z, 0, m, z, *d})) {
              return result;
            }
          }
        }
      }
      for (auto z : Z) {
        for (auto y : Y) {
          auto m = s.sigma(z)(y);
          if (auto d = detail::first_difference(s.sigma(m), s.sigma(y), Z)) {
            if (record({4, z, y, 0, m, y, *d})) {
              return result;
            }
          }
        }
      }
      return result;
    }

    for (auto z : Z) {
      for (std::size_t a = 0; a < Y.size(); ++a) {
        for (std::size_t b = a + 1; b < Y.size(); ++b) {
          auto l = s.gamma(Y[a])(z), r = s.gamma(Y[b])(z);
          if (auto d = detail::first_difference(s.sigma(l), s.sigma(r), Y)) {
            if (record({1, z, Y[a], Y[b], l, r, *d})) {
              return result;
            }
          }
        }
      }
    }
    for (auto y : Y) {
      for (std::size_t a = 0; a < Z.size(); ++a) {
        for (std::size_t b = a + 1; b < Z.size(); ++b) {
          auto l = s.sigma(Z[a])(y), r = s.sigma(Z[b])(y);
          if (auto d = detail::first_difference(s.gamma(l), s.gamma(r), Z)) {
            if (record({2, y, Z[a], Z[b], l, r, *d})) {
              return result;
            }
          }
        }
      }
    }
    return result;
  }

  inline GtuMode default_gtu_mode(Solution const& s) {
    return s.square_free() ? GtuMode::squarefree : GtuMode::general;
  }

  struct GtuCandidate {
    std::vector<std::size_t> orbit_indices;  // the orbits making up Y
    std::vector<point_type>  Y;
    std::vector<point_type>  Z;
    GtuCheck                 check;
  };

  //! \brief Every split of X into a non-empty proper union of orbits Y and its
  //! complement Z, in lexicographic order of the orbit index lists of Y.
  //!
  //! Stops after the first passing candidate unless \p exhaustive.
  inline std::vector<GtuCandidate> gtu_candidates(Solution const& s,
                                                  GtuMode         mode,
                                                  bool            exhaustive,
                                                  bool            all_violations = false) {
    auto const  orb = orbits(s);
    auto const  cls = orb.classes();
    std::size_t m   = cls.size();
    if (m >= 8 * sizeof(unsigned long long) - 1) {
      throw Error(ErrorKind::cap_exceeded, "too many orbits for the split search");
    }
    std::vector<std::vector<std::size_t>> subsets;
    for (unsigned long long mask = 1; mask + 1 < (1ULL << m); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < m; ++k) {
        if (mask & (1ULL << k)) {
          idx.push_back(k);
        }
      }
      subsets.push_back(std::move(idx));
    }
    std::sort(subsets.begin(), subsets.end());
    std::vector<GtuCandidate> out;
    for (auto& idx : subsets) {
      GtuCandidate c;
      std::vector<bool> in_y(s.size(), false);
      for (auto k : idx) {
        for (auto x : cls[k]) {
          in_y[x] = true;
        }
      }
      for (point_type x = 0; x < s.size(); ++x) {
        (in_y[x] ? c.Y : c.Z).push_back(x);
      }
      c.orbit_indices = std::move(idx);
      c.check         = check_gtu_pair(s, c.Y, c.Z, mode, all_violations);
      bool const ok   = c.check.holds;
      out.push_back(std::move(c));
      if (ok && !exhaustive) {
        break;
      }
    }
    return out;
  }

  struct GtuDecomposition {
    std::vector<point_type> Y;
    std::vector<point_type> Z;
    GtuMode                 mode;
  };

  //! The first split into unions of orbits that is a generalized twisted
  //! union, using the mode matching s.square_free().
  inline std::optional<GtuDecomposition> find_gtu_decomposition(Solution const& s) {
    if (s.size() < 2) {
      throw Error(ErrorKind::precondition_unmet, "need at least two points");
    }
    auto const mode = default_gtu_mode(s);
    auto       cand = gtu_candidates(s, mode, false);
    if (!cand.empty() && cand.back().check.holds) {
      return GtuDecomposition{cand.back().Y, cand.back().Z, mode};
    }
    return std::nullopt;
  }

  inline Check check_cyclic_generators(Solution const& s) {
    for (point_type i = 0; i < s.size(); ++i) {
      if (!is_cyclic(s.sigma(i))) {
        return Check::fail({i});
      }
    }
    return {};
  }

  namespace detail {
    inline void require_square_free_cyclic(Solution const& s) {
      require(s.square_free(), "solution is not square-free");
      require(check_cyclic_generators(s).holds, "some sigma_i is not a cycle");
    }

    inline bool identity_on(Perm const& p, std::vector<point_type> const& xs) {
      for (auto x : xs) {
        if (p(x) != x) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  //! \brief For cycle generators: within an orbit X_i, all σ_j move the same
  //! orbits X_k, and are pairwise conjugate in G_r.
  //!
  //! Witness: (i1, j, k-representative) for the first part, (i1, j) for the
  //! conjugacy part.
  inline Check check_key2(Solution const& s, std::size_t cap = default_element_cap()) {
    detail::require_square_free_cyclic(s);
    auto const orb     = orbits(s);
    auto const classes = orb.classes();
    for (auto const& xi : classes) {
      for (auto i1 : xi) {
        for (auto const& xk : classes) {
          if (detail::identity_on(s.sigma(i1), xk)) {
            continue;
          }
          for (auto j : xi) {
            if (detail::identity_on(s.sigma(j), xk)) {
              return Check::fail({i1, j, xk.front()});
            }
          }
        }
      }
    }
    auto const group = closure(iyb_group(s, cap));
    for (auto const& xi : classes) {
      for (auto j : xi) {
        if (!are_conjugate(group, s.sigma(xi.front()), s.sigma(j))) {
          return Check::fail({xi.front(), j});
        }
      }
    }
    return {};
  }

  //! Strongly retractable, and a generalized twisted union when n > 1.
  inline Check check_theorem_cyclic1(Solution const& s) {
    detail::require_square_free_cyclic(s);
    if (!strong_level(s)) {
      return Check::fail({0});
    }
    if (s.size() > 1 && !find_gtu_decomposition(s)) {
      return Check::fail({1});
    }
    return {};
  }

}  // namespace ybe

#endif  // YBE_TWISTED_HPP_
