// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

#ifndef YBE_SOLUTION_HPP_
#define YBE_SOLUTION_HPP_

#include <algorithm>  // for sort, unique, lexicographical_compare
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "error.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "perm_group.hpp"

namespace ybe {

  using pair_type = std::pair<point_type, point_type>;

  //! \brief A map r: X² → X² on X = {0, ..., n - 1}, stored row-major.
  //!
  //! Nothing is assumed about it; this is the raw input format that
  //! validation runs on.
  class RTable {
   public:
    RTable() = default;
    explicit RTable(std::size_t n) : _n(n), _cells(n * n) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    pair_type& operator()(point_type i, point_type j) {
      return _cells[i * _n + j];
    }

    [[nodiscard]] pair_type const& operator()(point_type i, point_type j) const {
      return _cells[i * _n + j];
    }

   private:
    std::size_t            _n = 0;
    std::vector<pair_type> _cells;
  };

  //! The r-table of the square-free construction
  //! r(i, j) = (σ_i(j), σ⁻¹_{σ_i(j)}(i)).
  inline RTable sigma_r_table(std::vector<Perm> const& sigma) {
    std::size_t const n = sigma.size();
    std::vector<Perm> inv;
    inv.reserve(n);
    for (auto const& s : sigma) {
      if (s.degree() != n) {
        throw Error(ErrorKind::degree_mismatch,
                    "every sigma must have degree " + std::to_string(n));
      }
      inv.push_back(inverse(s));
    }
    RTable r(n);
    for (point_type i = 0; i < n; ++i) {
      for (point_type j = 0; j < n; ++j) {
        auto k  = sigma[i](j);
        r(i, j) = {k, inv[k](i)};
      }
    }
    return r;
  }

  struct Failure {
    ErrorKind                kind;
    std::vector<std::size_t> witness;  // 0-based
  };

  //! \brief Outcome of the exhaustive axiom checks.
  //!
  //! square_free is a property, not an axiom: first_failure only refers to
  //! involutivity, non-degeneracy or the braid relation.
  struct ValidationReport {
    bool                   involutive    = true;
    bool                   nondegenerate = true;
    bool                   braid         = true;
    bool                   square_free   = true;
    std::optional<Failure> first_failure;

    [[nodiscard]] bool ok() const noexcept {
      return involutive && nondegenerate && braid;
    }
  };

  namespace detail {
    inline void check_in_range(RTable const& r) {
      std::size_t const n = r.size();
      for (point_type i = 0; i < n; ++i) {
        for (point_type j = 0; j < n; ++j) {
          if (r(i, j).first >= n || r(i, j).second >= n) {
            throw Error(ErrorKind::index_out_of_range,
                        "r-table entry out of range at " + one_based_tuple({i, j}),
                        {i, j});
          }
        }
      }
    }
  }  // namespace detail

  //! Checks r² = id, bijectivity of every σ_i and γ_j, and the braid relation
  //! on all n³ triples.
  inline ValidationReport validate(RTable const& r) {
    detail::check_in_range(r);
    std::size_t const n = r.size();
    ValidationReport  rep;
    auto              note = [&rep](ErrorKind k, std::vector<std::size_t> w) {
      if (!rep.first_failure) {
        rep.first_failure = Failure{k, std::move(w)};
      }
    };

    for (point_type i = 0; i < n && rep.involutive; ++i) {
      for (point_type j = 0; j < n; ++j) {
        auto [k, l] = r(i, j);
        if (r(k, l) != pair_type{i, j}) {
          rep.involutive = false;
          note(ErrorKind::not_involutive, {i, j});
          break;
        }
      }
    }

    // σ_i(j) = r(i, j).first must be a bijection in j, γ_j(i) = r(i, j).second
    // a bijection in i.
    for (point_type i = 0; i < n && rep.nondegenerate; ++i) {
      std::vector<std::size_t> hit(n, n);
      for (point_type j = 0; j < n; ++j) {
        auto k = r(i, j).first;
        if (hit[k] != n) {
          rep.nondegenerate = false;
          note(ErrorKind::not_nondegenerate, {i, hit[k], j});
          break;
        }
        hit[k] = j;
      }
    }
    for (point_type j = 0; j < n && rep.nondegenerate; ++j) {
      std::vector<std::size_t> hit(n, n);
      for (point_type i = 0; i < n; ++i) {
        auto l = r(i, j).second;
        if (hit[l] != n) {
          rep.nondegenerate = false;
          note(ErrorKind::not_nondegenerate, {hit[l], i, j});
          break;
        }
        hit[l] = i;
      }
    }

    for (point_type i = 0; i < n && rep.braid; ++i) {
      for (point_type j = 0; j < n && rep.braid; ++j) {
        for (point_type k = 0; k < n; ++k) {
          // r12 r23 r12
          auto [a1, b1] = r(i, j);
          auto [b2, c2] = r(b1, k);
          auto [a3, b3] = r(a1, b2);
          // r23 r12 r23
          auto [y1, z1] = r(j, k);
          auto [x2, y2] = r(i, y1);
          auto [y3, z3] = r(y2, z1);
          if (a3 != x2 || b3 != y3 || c2 != z3) {
            rep.braid = false;
            note(ErrorKind::braid_fails, {i, j, k});
            break;
          }
        }
      }
    }

    for (point_type i = 0; i < n; ++i) {
      if (r(i, i) != pair_type{i, i}) {
        rep.square_free = false;
        break;
      }
    }
    return rep;
  }

  //! \brief A validated finite involutive non-degenerate solution.
  //!
  //! Stored through its left and right actions: r(i, j) = (σ_i(j), γ_j(i)).
  //! A Solution value only exists once it has passed validation.
  class Solution {
   public:
    //! \throws Error with kind NotInvolutive, NotNondegenerate or BraidFails,
    //! carrying the witness pair or triple.
    static Solution from_r_table(RTable const& r) {
      auto rep = validate(r);
      if (!rep.ok()) {
        auto const& f = *rep.first_failure;
        throw Error(f.kind, "r-table fails at " + detail::one_based_tuple(f.witness),
                    f.witness);
      }
      return from_valid_table(r);
    }

    //! \brief Square-free construction from σ_1, ..., σ_n.
    //!
    //! Accepts iff σ_i∘σ_j = σ_k∘σ_l whenever r(i, j) = (k, l); the full
    //! braid check runs afterwards as well.
    //!
    //! \throws Error with kind NotSquareFreeInput or CriterionFails.
    static Solution from_sigma(std::vector<Perm> const& sigma) {
      std::size_t const n = sigma.size();
      if (n == 0) {
        throw Error(ErrorKind::index_out_of_range, "empty sigma list");
      }
      for (point_type i = 0; i < n; ++i) {
        if (sigma[i].degree() != n) {
          throw Error(ErrorKind::degree_mismatch,
                      "every sigma must have degree " + std::to_string(n));
        }
        if (sigma[i](i) != i) {
          throw Error(ErrorKind::not_square_free_input,
                      "sigma_" + std::to_string(i + 1) + " moves "
                          + std::to_string(i + 1),
                      {i});
        }
      }
      auto r = sigma_r_table(sigma);
      for (point_type i = 0; i < n; ++i) {
        for (point_type j = 0; j < n; ++j) {
          auto [k, l] = r(i, j);
          if (compose(sigma[i], sigma[j]) != compose(sigma[k], sigma[l])) {
            throw Error(ErrorKind::criterion_fails,
                        "sigma_i sigma_j != sigma_k sigma_l at "
                            + detail::one_based_tuple({i, j}),
                        {i, j});
          }
        }
      }
      return from_r_table(r);
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _sigma.size();
    }

    [[nodiscard]] Perm const& sigma(point_type i) const {
      return _sigma.at(i);
    }

    [[nodiscard]] Perm const& gamma(point_type j) const {
      return _gamma.at(j);
    }

    [[nodiscard]] std::vector<Perm> const& sigmas() const noexcept {
      return _sigma;
    }

    [[nodiscard]] std::vector<Perm> const& gammas() const noexcept {
      return _gamma;
    }

    [[nodiscard]] bool square_free() const noexcept {
      return _square_free;
    }

    //! r(i, j) without range checks.
    [[nodiscard]] pair_type r(point_type i, point_type j) const {
      return {_sigma[i](j), _gamma[j](i)};
    }

    [[nodiscard]] RTable r_table() const {
      RTable t(size());
      for (point_type i = 0; i < size(); ++i) {
        for (point_type j = 0; j < size(); ++j) {
          t(i, j) = r(i, j);
        }
      }
      return t;
    }

    //! σ-tables concatenated row by row; the order used by canonical forms.
    [[nodiscard]] std::vector<point_type> flat_sigma() const {
      std::vector<point_type> out;
      out.reserve(size() * size());
      for (auto const& s : _sigma) {
        out.insert(out.end(), s.images().begin(), s.images().end());
      }
      return out;
    }

    friend bool operator==(Solution const& a, Solution const& b) {
      return a._sigma == b._sigma;
    }

    friend bool operator<(Solution const& a, Solution const& b) {
      return a.flat_sigma() < b.flat_sigma();
    }

    friend Solution relabel(Solution const& s, Perm const& p);

   private:
    Solution(std::vector<Perm> sigma, std::vector<Perm> gamma)
        : _sigma(std::move(sigma)), _gamma(std::move(gamma)) {
      _square_free = true;
      for (point_type i = 0; i < _sigma.size(); ++i) {
        if (_sigma[i](i) != i) {
          _square_free = false;
        }
      }
    }

    static Solution from_valid_table(RTable const& r) {
      std::size_t const                    n = r.size();
      std::vector<std::vector<point_type>> left(n, std::vector<point_type>(n));
      std::vector<std::vector<point_type>> right(n, std::vector<point_type>(n));
      for (point_type i = 0; i < n; ++i) {
        for (point_type j = 0; j < n; ++j) {
          left[i][j]  = r(i, j).first;
          right[j][i] = r(i, j).second;
        }
      }
      std::vector<Perm> sigma, gamma;
      for (point_type i = 0; i < n; ++i) {
        sigma.emplace_back(std::move(left[i]));
        gamma.emplace_back(std::move(right[i]));
      }
      return Solution(std::move(sigma), std::move(gamma));
    }

    std::vector<Perm> _sigma;
    std::vector<Perm> _gamma;
    bool              _square_free = true;
  };

  inline ValidationReport validate(Solution const& s) {
    return validate(s.r_table());
  }

  //! Range-checked r(i, j).
  inline pair_type r_apply(Solution const& s, point_type i, point_type j) {
    if (i >= s.size() || j >= s.size()) {
      throw Error(ErrorKind::index_out_of_range,
                  "pair " + detail::one_based_tuple({i, j}) + " outside X");
    }
    return s.r(i, j);
  }

  //! The IYB group ⟨σ_1, ..., σ_n⟩.
  inline PermGroup iyb_group(Solution const& s,
                             std::size_t     cap = default_element_cap()) {
    return PermGroup(s.size(), s.sigmas(), cap);
  }

  //! ⟨γ_1, ..., γ_n⟩, the same group as a set.
  inline PermGroup gamma_group(Solution const& s,
                               std::size_t     cap = default_element_cap()) {
    return PermGroup(s.size(), s.gammas(), cap);
  }

  inline Partition orbits(Solution const& s) {
    return orbits(iyb_group(s));
  }

  inline bool is_trivial(Solution const& s) {
    for (auto const& p : s.sigmas()) {
      if (!p.is_identity()) {
        return false;
      }
    }
    return true;
  }

  //! A yes/no answer plus the smallest offending indices when it is no.
  struct Check {
    bool                     holds = true;
    std::vector<std::size_t> witness;

    explicit operator bool() const noexcept {
      return holds;
    }

    static Check fail(std::vector<std::size_t> w) {
      return Check{false, std::move(w)};
    }
  };

  //! σ_i∘σ_j = σ_k∘σ_l whenever r(i, j) = (k, l).
  inline Check check_lemma_permutat(Solution const& s) {
    for (point_type i = 0; i < s.size(); ++i) {
      for (point_type j = 0; j < s.size(); ++j) {
        auto [k, l] = s.r(i, j);
        if (compose(s.sigma(i), s.sigma(j)) != compose(s.sigma(k), s.sigma(l))) {
          return Check::fail({i, j});
        }
      }
    }
    return {};
  }

  //! \brief The solution transported along the relabeling \p p.
  //!
  //! Point x becomes p(x); σ'_{p(i)} = p∘σ_i∘p⁻¹, likewise for γ.
  inline Solution relabel(Solution const& s, Perm const& p) {
    if (p.degree() != s.size()) {
      throw Error(ErrorKind::degree_mismatch, "relabeling of wrong degree");
    }
    std::size_t const n = s.size();
    auto const        q = inverse(p);
    std::vector<Perm> sigma(n), gamma(n);
    for (point_type i = 0; i < n; ++i) {
      sigma[p(i)] = compose(compose(p, s.sigma(i)), q);
      gamma[p(i)] = compose(compose(p, s.gamma(i)), q);
    }
    return Solution(std::move(sigma), std::move(gamma));
  }

  //! \brief The solution induced on a G_r-invariant subset.
  //!
  //! The subset is relabeled order-preservingly to {0, ..., |subset| - 1}.
  //!
  //! \throws Error (NotInvariant) if some σ_i maps the subset outside itself.
  inline Solution restrict(Solution const& s, std::vector<point_type> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) {
      throw Error(ErrorKind::not_invariant, "empty subset");
    }
    std::size_t const        n = s.size();
    std::vector<std::size_t> pos(n, n);
    for (std::size_t k = 0; k < subset.size(); ++k) {
      if (subset[k] >= n) {
        throw Error(ErrorKind::index_out_of_range, "subset point out of range");
      }
      pos[subset[k]] = k;
    }
    for (point_type i = 0; i < n; ++i) {
      for (auto x : subset) {
        if (pos[s.sigma(i)(x)] == n) {
          throw Error(ErrorKind::not_invariant,
                      "sigma_" + std::to_string(i + 1) + " maps "
                          + std::to_string(x + 1) + " to "
                          + std::to_string(s.sigma(i)(x) + 1),
                      {i, x});
        }
      }
    }
    RTable r(subset.size());
    for (std::size_t a = 0; a < subset.size(); ++a) {
      for (std::size_t b = 0; b < subset.size(); ++b) {
        auto [k, l] = s.r(subset[a], subset[b]);
        r(a, b)     = {pos[k], pos[l]};
      }
    }
    return Solution::from_r_table(r);
  }

  namespace detail {
    // Per-point data preserved by every isomorphism.
    inline std::vector<std::vector<std::size_t>> point_invariants(Solution const& s) {
      auto const                            orb   = orbits(s);
      auto const                            sizes = [&] {
        std::vector<std::size_t> sz(orb.num_classes(), 0);
        for (std::size_t x = 0; x < s.size(); ++x) {
          ++sz[orb.class_of(x)];
        }
        return sz;
      }();
      std::vector<std::vector<std::size_t>> inv(s.size());
      for (point_type x = 0; x < s.size(); ++x) {
        inv[x] = cycle_type_of(s.sigma(x));
        inv[x].push_back(0);  // separator
        auto g = cycle_type_of(s.gamma(x));
        inv[x].insert(inv[x].end(), g.begin(), g.end());
        inv[x].push_back(0);
        inv[x].push_back(sizes[orb.class_of(x)]);
        inv[x].push_back(s.sigma(x)(x) == x ? 1 : 0);
      }
      return inv;
    }

    class IsoSearch {
     public:
      IsoSearch(Solution const& a, Solution const& b)
          : _a(a), _b(b), _n(a.size()), _p(_n, _n), _pinv(_n, _n) {}

      std::optional<Perm> run(std::vector<std::vector<std::size_t>> const& inv_a,
                              std::vector<std::vector<std::size_t>> const& inv_b) {
        _inv_a = &inv_a;
        _inv_b = &inv_b;
        if (search()) {
          return Perm(_p);
        }
        return std::nullopt;
      }

     private:
      bool search() {
        point_type x = 0;
        while (x < _n && _p[x] != _n) {
          ++x;
        }
        if (x == _n) {
          return true;
        }
        for (point_type y = 0; y < _n; ++y) {
          if (_pinv[y] != _n || (*_inv_a)[x] != (*_inv_b)[y]) {
            continue;
          }
          auto saved_p = _p, saved_pinv = _pinv;
          if (assign(x, y) && search()) {
            return true;
          }
          _p    = std::move(saved_p);
          _pinv = std::move(saved_pinv);
        }
        return false;
      }

      // Sets p(x) = y and propagates p(σ_i(j)) = σ'_{p(i)}(p(j)).
      bool assign(point_type x, point_type y) {
        std::vector<point_type> queue{x};
        _p[x]    = y;
        _pinv[y] = x;
        std::vector<point_type> assigned;
        for (point_type z = 0; z < _n; ++z) {
          if (_p[z] != _n) {
            assigned.push_back(z);
          }
        }
        while (!queue.empty()) {
          auto const u = queue.back();
          queue.pop_back();
          for (std::size_t idx = 0; idx < assigned.size(); ++idx) {
            auto const v = assigned[idx];
            for (auto [i, j] : {pair_type{u, v}, pair_type{v, u}}) {
              auto const src = _a.sigma(i)(j);
              auto const dst = _b.sigma(_p[i])(_p[j]);
              if (_p[src] != _n) {
                if (_p[src] != dst) {
                  return false;
                }
              } else if (_pinv[dst] != _n || (*_inv_a)[src] != (*_inv_b)[dst]) {
                return false;
              } else {
                _p[src]    = dst;
                _pinv[dst] = src;
                assigned.push_back(src);
                queue.push_back(src);
              }
            }
          }
        }
        return true;
      }

      Solution const&                              _a;
      Solution const&                              _b;
      std::size_t                                  _n;
      std::vector<point_type>                      _p;
      std::vector<point_type>                      _pinv;
      std::vector<std::vector<std::size_t>> const* _inv_a = nullptr;
      std::vector<std::vector<std::size_t>> const* _inv_b = nullptr;
    };
  }  // namespace detail

  //! \brief A relabeling p with σ^b_{p(i)} = p∘σ^a_i∘p⁻¹ for all i, if any.
  //!
  //! The search only pairs points with equal invariants (cycle types of σ
  //! and γ, orbit size, diagonal behaviour) and propagates forced images.
  inline std::optional<Perm> is_isomorphic(Solution const& a, Solution const& b) {
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    auto inv_a = detail::point_invariants(a);
    auto inv_b = detail::point_invariants(b);
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return std::nullopt;
    }
    return detail::IsoSearch(a, b).run(inv_a, inv_b);
  }

  inline constexpr std::size_t default_canonical_cap = 12;

  namespace detail {
    // Branch and bound over q = p⁻¹ (new label → old point), filled in label
    // order. Entry (a, b) of the relabeled table is p(σ_{q(a)}(q(b))).
    class CanonicalSearch {
     public:
      explicit CanonicalSearch(Solution const& s)
          : _s(s), _n(s.size()), _q(), _pinv(_n, _n), _auto_transposition(_n, std::vector<bool>(_n, false)) {
        for (point_type x = 0; x < _n; ++x) {
          for (point_type y = x + 1; y < _n; ++y) {
            std::vector<point_type> im(_n);
            for (point_type z = 0; z < _n; ++z) {
              im[z] = z;
            }
            std::swap(im[x], im[y]);
            Perm t(std::move(im));
            if (relabel(s, t) == s) {
              _auto_transposition[x][y] = _auto_transposition[y][x] = true;
            }
          }
        }
      }

      Perm run() {
        search();
        return Perm(_best_p);
      }

     private:
      // -1: prefix of current is smaller, 1: larger (prune), 0: undecided.
      int compare_prefix() const {
        if (_best.empty()) {
          return -1;
        }
        std::size_t const t = _q.size();
        for (std::size_t a = 0; a < _n; ++a) {
          for (std::size_t b = 0; b < _n; ++b) {
            if (a >= t || b >= t) {
              return 0;
            }
            auto const old = _s.sigma(_q[a])(_q[b]);
            auto const ref = _best[a * _n + b];
            if (_pinv[old] != _n) {
              if (_pinv[old] < ref) {
                return -1;
              }
              if (_pinv[old] > ref) {
                return 1;
              }
            } else {
              // The eventual label is at least t.
              return ref < t ? 1 : 0;
            }
          }
        }
        return 0;
      }

      void search() {
        std::size_t const t = _q.size();
        if (t == _n) {
          std::vector<point_type> table(_n * _n);
          for (std::size_t a = 0; a < _n; ++a) {
            for (std::size_t b = 0; b < _n; ++b) {
              table[a * _n + b] = _pinv[_s.sigma(_q[a])(_q[b])];
            }
          }
          if (_best.empty() || table < _best) {
            _best   = std::move(table);
            _best_p = _pinv;
          }
          return;
        }
        std::vector<point_type> tried;
        for (point_type c = 0; c < _n; ++c) {
          if (_pinv[c] != _n) {
            continue;
          }
          bool equivalent = false;
          for (auto d : tried) {
            // The transposition (c d) fixes every assigned point, so when it is
            // an automorphism the two subtrees produce the same tables.
            if (_auto_transposition[c][d]) {
              equivalent = true;
              break;
            }
          }
          if (equivalent) {
            continue;
          }
          tried.push_back(c);
          _q.push_back(c);
          _pinv[c] = t;
          if (compare_prefix() != 1) {
            search();
          }
          _pinv[c] = _n;
          _q.pop_back();
        }
      }

      Solution const&                _s;
      std::size_t                    _n;
      std::vector<point_type>        _q;
      std::vector<point_type>        _pinv;
      std::vector<std::vector<bool>> _auto_transposition;
      std::vector<point_type>        _best;
      std::vector<point_type>        _best_p;
    };
  }  // namespace detail

  //! The relabeling that produces canonical_form(s).
  inline Perm canonical_labeling(Solution const& s,
                                 std::size_t     cap = default_canonical_cap) {
    if (s.size() > cap) {
      throw Error(ErrorKind::cap_exceeded,
                  "canonical form requested for n = " + std::to_string(s.size())
                      + " > cap " + std::to_string(cap));
    }
    return detail::CanonicalSearch(s).run();
  }

  //! \brief The relabeling of \p s with lexicographically minimal flattened
  //! σ-table.
  //!
  //! canonical_form(a) == canonical_form(b) iff a and b are isomorphic.
  inline Solution canonical_form(Solution const& s,
                                 std::size_t     cap = default_canonical_cap) {
    return relabel(s, canonical_labeling(s, cap));
  }

}  // namespace ybe

#endif  // YBE_SOLUTION_HPP_
