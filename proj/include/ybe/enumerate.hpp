// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Exhaustive enumeration of square-free solutions on {0, ..., n - 1}.
//
// A square-free solution is determined by σ_1, ..., σ_n with σ_i(i) = i
// subject to
//
//   σ_i∘σ_j = σ_k∘σ_l   where k = σ_i(j), l = σ_k⁻¹(i),            (*)
//
// for every ordered pair (i, j). The backtracker assigns σ_t in index order.
// After each assignment every instance of (*) with three known factors is
// used: with σ_i, σ_j, σ_k known it fixes σ_l = σ_k⁻¹σ_iσ_j, and with σ_i,
// σ_k, σ_l known it fixes σ_j = σ_i⁻¹σ_kσ_l. A forced value that moves its
// own index, or disagrees with an existing assignment, kills the branch.

#ifndef YBE_ENUMERATE_HPP_
#define YBE_ENUMERATE_HPP_

#include <algorithm>  // for next_permutation, sort, unique
#include <atomic>     // for atomic
#include <cstddef>    // for size_t
#include <numeric>    // for iota
#include <thread>     // for thread
#include <vector>     // for vector

#include "error.hpp"
#include "perm.hpp"
#include "solution.hpp"

namespace ybe {

  inline constexpr std::size_t enumeration_hard_cap    = 8;
  inline constexpr std::size_t enumeration_default_cap = 6;

  struct EnumerateOptions {
    bool        up_to_iso = false;
    std::size_t threads   = 1;
    std::size_t n_cap     = enumeration_default_cap;
  };

  namespace detail {

    // All permutations of degree n fixing `fixed`, in lexicographic order.
    inline std::vector<Perm> perms_fixing(std::size_t n, point_type fixed) {
      std::vector<point_type> im(n);
      std::iota(im.begin(), im.end(), 0);
      std::vector<Perm> out;
      do {
        if (im[fixed] == fixed) {
          out.emplace_back(im);
        }
      } while (std::next_permutation(im.begin(), im.end()));
      return out;
    }

    class SquareFreeBacktracker {
     public:
      explicit SquareFreeBacktracker(std::size_t n) : _n(n) {
        for (point_type i = 0; i < n; ++i) {
          _candidates.push_back(perms_fixing(n, i));
        }
      }

      [[nodiscard]] std::vector<Perm> const& top_level_choices() const {
        return _candidates[0];
      }

      // Every solution whose σ_1 is the given choice.
      [[nodiscard]] std::vector<std::vector<Perm>> branch(Perm const& first) const {
        State s{std::vector<Perm>(_n), std::vector<bool>(_n, false)};
        std::vector<std::vector<Perm>> found;
        if (assign(s, 0, first)) {
          search(s, found);
        }
        return found;
      }

     private:
      struct State {
        std::vector<Perm> sigma;
        std::vector<bool> known;
      };

      void search(State const& s, std::vector<std::vector<Perm>>& found) const {
        point_type t = 0;
        while (t < _n && s.known[t]) {
          ++t;
        }
        if (t == _n) {
          found.push_back(s.sigma);
          return;
        }
        for (auto const& p : _candidates[t]) {
          State next = s;
          if (assign(next, t, p)) {
            search(next, found);
          }
        }
      }

      // Assigns σ_t = p and propagates; false on contradiction.
      bool assign(State& s, point_type t, Perm const& p) const {
        s.sigma[t] = p;
        s.known[t] = true;
        bool changed = true;
        while (changed) {
          changed = false;
          for (point_type i = 0; i < _n; ++i) {
            if (!s.known[i]) {
              continue;
            }
            for (point_type j = 0; j < _n; ++j) {
              auto const k = s.sigma[i](j);
              if (!s.known[k]) {
                continue;
              }
              auto const k_inv = inverse(s.sigma[k]);
              auto const l     = k_inv(i);
              if (s.known[j]) {
                auto want = compose(k_inv, compose(s.sigma[i], s.sigma[j]));
                if (!set_or_check(s, l, std::move(want), changed)) {
                  return false;
                }
              } else if (s.known[l]) {
                auto want = compose(inverse(s.sigma[i]), compose(s.sigma[k], s.sigma[l]));
                if (!set_or_check(s, j, std::move(want), changed)) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      static bool set_or_check(State& s, point_type idx, Perm want, bool& changed) {
        if (s.known[idx]) {
          return s.sigma[idx] == want;
        }
        if (want(idx) != idx) {
          return false;
        }
        s.sigma[idx] = std::move(want);
        s.known[idx] = true;
        changed      = true;
        return true;
      }

      std::size_t                    _n;
      std::vector<std::vector<Perm>> _candidates;
    };

    template <typename Fn>
    void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
      if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
          fn(i);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < std::min(threads, count); ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < count; i = next++) {
            fn(i);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    inline void sort_unique(std::vector<Solution>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }  // namespace detail

  //! \brief All square-free solutions on n points.
  //!
  //! The output is sorted by flattened σ-table. With up_to_iso every entry is
  //! a canonical form and no two entries are isomorphic. Output does not
  //! depend on the thread count.
  //!
  //! \throws Error (CapExceeded) if n exceeds opts.n_cap or 8.
  inline std::vector<Solution> enumerate_square_free(std::size_t n, EnumerateOptions const& opts = {}) {
    if (n == 0) {
      throw Error(ErrorKind::index_out_of_range, "n must be at least 1");
    }
    if (n > opts.n_cap || n > enumeration_hard_cap) {
      throw Error(ErrorKind::cap_exceeded,
                  "enumeration on " + std::to_string(n) + " points exceeds the cap");
    }
    detail::SquareFreeBacktracker bt(n);
    auto const&                   choices = bt.top_level_choices();
    std::vector<std::vector<Solution>> per_branch(choices.size());
    detail::parallel_for(choices.size(), opts.threads, [&](std::size_t b) {
      auto& out = per_branch[b];
      for (auto const& sigma : bt.branch(choices[b])) {
        auto s = Solution::from_sigma(sigma);
        out.push_back(opts.up_to_iso ? canonical_form(s) : std::move(s));
      }
      if (opts.up_to_iso) {
        detail::sort_unique(out);
      }
    });
    std::vector<Solution> all;
    for (auto& v : per_branch) {
      all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    detail::sort_unique(all);
    return all;
  }

}  // namespace ybe

#endif  // YBE_ENUMERATE_HPP_
