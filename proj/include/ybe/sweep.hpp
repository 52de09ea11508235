// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Runs a named claim over every enumerated square-free solution up to a given
// size. Proven claims are asserted (a failure is a counterexample);
// conjectures are only reported.

#ifndef YBE_SWEEP_HPP_
#define YBE_SWEEP_HPP_

#include <algorithm>   // for max
#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "enumerate.hpp"
#include "error.hpp"
#include "perm_group.hpp"
#include "retract.hpp"
#include "solution.hpp"
#include "structure.hpp"
#include "twisted.hpp"

namespace ybe {

  enum class SweepFilter { all, abelian, cyclic };

  inline char const* to_string(SweepFilter f) noexcept {
    switch (f) {
      case SweepFilter::abelian:
        return "abelian";
      case SweepFilter::cyclic:
        return "cyclic";
      default:
        return "all";
    }
  }

  inline SweepFilter parse_filter(std::string const& name) {
    if (name == "all") {
      return SweepFilter::all;
    }
    if (name == "abelian") {
      return SweepFilter::abelian;
    }
    if (name == "cyclic") {
      return SweepFilter::cyclic;
    }
    throw Error(ErrorKind::parse_error, "unknown filter " + name);
  }

  inline bool matches(Solution const& s, SweepFilter f) {
    switch (f) {
      case SweepFilter::abelian:
        return is_abelian(iyb_group(s));
      case SweepFilter::cyclic:
        return check_cyclic_generators(s).holds;
      default:
        return true;
    }
  }

  enum class Verdict { pass, fail, not_applicable };

  inline char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      default:
        return "n/a";
    }
  }

  struct Claim {
    std::string                              name;
    std::string                              statement;
    bool                                     asserted;
    std::function<Verdict(Solution const&)>  run;
  };

  namespace detail {
    inline Verdict verdict(bool ok) {
      return ok ? Verdict::pass : Verdict::fail;
    }

    inline bool abelian(Solution const& s) {
      return is_abelian(iyb_group(s));
    }

    inline bool cyclic_generators(Solution const& s) {
      return check_cyclic_generators(s).holds;
    }
  }  // namespace detail

  //! Every supported claim, in a fixed order.
  inline std::vector<Claim> const& claims() {
    using detail::verdict;
    static std::vector<Claim> const list = {
        {"abelian_collapse",
         "nontrivial with abelian G_r => two distinct points in one orbit share sigma",
         true,
         [](Solution const& s) {
           if (is_trivial(s) || !detail::abelian(s)) {
             return Verdict::not_applicable;
           }
           return verdict(check_abelian_collapse(s).holds);
         }},
        {"strong_retract_abelian",
         "abelian G_r => strongly retractable",
         true,
         [](Solution const& s) {
           if (!detail::abelian(s)) {
             return Verdict::not_applicable;
           }
           return verdict(strong_level(s).has_value());
         }},
        {"rump_decomposable",
         "n > 1 => more than one G_r-orbit",
         true,
         [](Solution const& s) {
           if (s.size() < 2) {
             return Verdict::not_applicable;
           }
           return verdict(orbits(s).num_classes() > 1);
         }},
        {"lemma_permutat",
         "r(i,j) = (k,l) => sigma_i sigma_j = sigma_k sigma_l",
         true,
         [](Solution const& s) { return verdict(check_lemma_permutat(s).holds); }},
        {"corollary_identity",
         "abelian G_r => sigma_i is the identity on the orbit of x_i",
         true,
         [](Solution const& s) {
           if (!detail::abelian(s)) {
             return Verdict::not_applicable;
           }
           return verdict(check_corollary_identity(s).holds);
         }},
        {"lemma_moves",
         "abelian G_r => sigma_i fixing a point of an orbit fixes the orbit",
         true,
         [](Solution const& s) {
           if (!detail::abelian(s)) {
             return Verdict::not_applicable;
           }
           return verdict(check_lemma_moves(s).holds);
         }},
        {"lemma_key",
         "orbit-local sigmas trivial => sigma restrictions constant along their action",
         true,
         [](Solution const& s) { return verdict(check_lemma_key(s).holds); }},
        {"cyclic_condition",
         "square-free => cyclic condition",
         true,
         [](Solution const& s) { return verdict(check_cyclic_condition(s).holds); }},
        {"full_cyclic_condition",
         "square-free => full cyclic condition",
         true,
         [](Solution const& s) { return verdict(check_full_cyclic_condition(s).holds); }},
        {"rho_compatible",
         "rho is compatible with r",
         true,
         [](Solution const& s) { return verdict(check_rho_compatible(s).holds); }},
        {"lemma_group",
         "sigma_i -> bar sigma_[i] induces an equivariant epimorphism",
         true,
         [](Solution const& s) { return verdict(check_epimorphism(s).holds); }},
        {"lemma_orbits",
         "X and X/rho have corresponding orbits",
         true,
         [](Solution const& s) { return verdict(check_orbit_preservation(s).holds); }},
        {"defining_relations",
         "x_i x_j = x_k x_l in the semidirect product whenever r(i,j) = (k,l)",
         true,
         [](Solution const& s) { return verdict(check_defining_relations(s).holds); }},
        {"key2",
         "cyclic generators => sigmas within an orbit move the same orbits and are conjugate",
         true,
         [](Solution const& s) {
           if (!detail::cyclic_generators(s)) {
             return Verdict::not_applicable;
           }
           return verdict(check_key2(s).holds);
         }},
        {"cyclic1",
         "cyclic generators => strongly retractable, and a twisted union when n > 1",
         true,
         [](Solution const& s) {
           if (!detail::cyclic_generators(s)) {
             return Verdict::not_applicable;
           }
           return verdict(check_theorem_cyclic1(s).holds);
         }},
        {"conjecture_I_bound",
         "n >= 2 => multipermutation level m < n (conjecture, reported only)",
         false,
         [](Solution const& s) {
           if (s.size() < 2) {
             return Verdict::not_applicable;
           }
           auto m = multipermutation_level(s);
           return verdict(m && *m < s.size());
         }},
        {"gtu_universality",
         "multipermutation, n >= 2 => generalized twisted union (conjecture, reported only)",
         false,
         [](Solution const& s) {
           if (s.size() < 2 || !multipermutation_level(s)) {
             return Verdict::not_applicable;
           }
           return verdict(find_gtu_decomposition(s).has_value());
         }},
    };
    return list;
  }

  inline Claim const& find_claim(std::string const& name) {
    for (auto const& c : claims()) {
      if (c.name == name) {
        return c;
      }
    }
    std::string known;
    for (auto const& c : claims()) {
      known += (known.empty() ? "" : ", ") + c.name;
    }
    throw Error(ErrorKind::parse_error, "unknown claim " + name + " (known: " + known + ")");
  }

  inline constexpr std::size_t sweep_default_cap = 5;

  struct SweepOptions {
    SweepFilter filter    = SweepFilter::all;
    bool        up_to_iso = false;
    std::size_t threads   = 1;
    std::size_t n_cap     = sweep_default_cap;
  };

  struct SweepEntry {
    std::size_t n;
    std::size_t index;  // position in the enumeration for this n
    Verdict     verdict;
    Solution    solution;
  };

  struct SweepReport {
    std::string             claim;
    bool                    asserted = true;
    std::size_t             n_max    = 0;
    SweepFilter             filter   = SweepFilter::all;
    bool                    up_to_iso = false;
    std::size_t             examined   = 0;  // solutions passing the filter
    std::size_t             applicable = 0;
    std::size_t             passed     = 0;
    std::size_t             failed     = 0;
    std::vector<SweepEntry> entries;

    //! False only if an asserted claim has a counterexample.
    [[nodiscard]] bool ok() const noexcept {
      return !asserted || failed == 0;
    }
  };

  //! \brief Runs \p claim on every square-free solution with n ≤ n_max that
  //! matches the filter. Extra solutions (e.g. a corpus entry) can be added.
  inline SweepReport sweep(std::size_t                  n_max,
                           std::string const&           claim_name,
                           SweepOptions const&          opts  = {},
                           std::vector<Solution> const& extra = {}) {
    if (n_max > opts.n_cap) {
      throw Error(ErrorKind::cap_exceeded,
                  "sweep up to n = " + std::to_string(n_max) + " exceeds the cap");
    }
    auto const& claim = find_claim(claim_name);
    SweepReport rep;
    rep.claim     = claim.name;
    rep.asserted  = claim.asserted;
    rep.n_max     = n_max;
    rep.filter    = opts.filter;
    rep.up_to_iso = opts.up_to_iso;

    auto visit = [&](Solution const& s, std::size_t n, std::size_t index) {
      if (!matches(s, opts.filter)) {
        return;
      }
      ++rep.examined;
      auto v = claim.run(s);
      if (v != Verdict::not_applicable) {
        ++rep.applicable;
        (v == Verdict::pass ? rep.passed : rep.failed)++;
      }
      rep.entries.push_back({n, index, v, s});
    };

    EnumerateOptions eopts;
    eopts.up_to_iso = opts.up_to_iso;
    eopts.threads   = opts.threads;
    eopts.n_cap     = std::max(opts.n_cap, enumeration_default_cap);
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto sols = enumerate_square_free(n, eopts);
      for (std::size_t k = 0; k < sols.size(); ++k) {
        visit(sols[k], n, k);
      }
    }
    for (std::size_t k = 0; k < extra.size(); ++k) {
      visit(extra[k], extra[k].size(), k);
    }
    return rep;
  }

}  // namespace ybe

#endif  // YBE_SWEEP_HPP_
