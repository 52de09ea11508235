// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Finitely generated permutation groups, closed by explicit breadth-first
// search. There are no stabiliser chains here: the groups that arise from
// desk-scale solutions are small, and an element cap turns misuse into an
// error instead of an endless loop.

#ifndef YBE_PERM_GROUP_HPP_
#define YBE_PERM_GROUP_HPP_

#include <algorithm>  // for sort, unique, binary_search
#include <cstddef>    // for size_t
#include <cstdlib>    // for getenv, strtoull
#include <optional>   // for optional
#include <set>        // for set
#include <utility>    // for move
#include <vector>     // for vector

#include "error.hpp"
#include "partition.hpp"
#include "perm.hpp"

namespace ybe {

  //! \brief The default element cap for closures.
  //!
  //! 1,000,000 unless the environment variable YBE_ELEMENT_CAP holds a
  //! positive integer. Read once per process.
  inline std::size_t default_element_cap() {
    static std::size_t const cap = [] {
      constexpr std::size_t fallback = 1'000'000;
      char const*           env      = std::getenv("YBE_ELEMENT_CAP");
      if (env == nullptr || *env == '\0') {
        return fallback;
      }
      char* end = nullptr;
      auto  v   = std::strtoull(env, &end, 10);
      return (end != nullptr && *end == '\0' && v > 0) ? static_cast<std::size_t>(v)
                                                       : fallback;
    }();
    return cap;
  }

  class PermGroup {
   public:
    PermGroup(std::size_t       degree,
              std::vector<Perm> generators,
              std::size_t       element_cap = default_element_cap())
        : _degree(degree), _generators(std::move(generators)), _cap(element_cap) {
      if (degree == 0) {
        throw Error(ErrorKind::not_a_permutation, "degree must be at least 1");
      }
      if (_generators.empty()) {
        _generators.push_back(Perm::identity(degree));
      }
      for (auto const& g : _generators) {
        if (g.degree() != degree) {
          throw Error(ErrorKind::degree_mismatch, "generator of wrong degree");
        }
      }
      std::sort(_generators.begin(), _generators.end());
      _generators.erase(std::unique(_generators.begin(), _generators.end()),
                        _generators.end());
      if (_cap == 0) {
        throw Error(ErrorKind::cap_exceeded, "element cap must be positive");
      }
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _degree;
    }

    //! Distinct generators, sorted.
    [[nodiscard]] std::vector<Perm> const& generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] std::size_t element_cap() const noexcept {
      return _cap;
    }

    [[nodiscard]] bool is_closed() const noexcept {
      return _elements.has_value();
    }

    //! All elements, sorted; only after closure.
    [[nodiscard]] std::vector<Perm> const& elements() const {
      if (!_elements) {
        throw Error(ErrorKind::precondition_unmet, "group has not been closed");
      }
      return *_elements;
    }

    [[nodiscard]] bool contains(Perm const& p) const {
      return std::binary_search(elements().begin(), elements().end(), p);
    }

    friend PermGroup closure(PermGroup const& g);

   private:
    std::size_t                      _degree;
    std::vector<Perm>                _generators;
    std::size_t                      _cap;
    std::optional<std::vector<Perm>> _elements;
  };

  //! \brief Materialises every element of \p g.
  //!
  //! \throws Error (CapExceeded) if the group has more than element_cap
  //! elements.
  inline PermGroup closure(PermGroup const& g) {
    if (g.is_closed()) {
      return g;
    }
    std::set<Perm>    seen{Perm::identity(g.degree())};
    std::vector<Perm> frontier{Perm::identity(g.degree())};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (auto const& x : frontier) {
        for (auto const& s : g.generators()) {
          auto y = compose(s, x);
          if (seen.insert(y).second) {
            if (seen.size() > g.element_cap()) {
              throw Error(ErrorKind::cap_exceeded,
                          "group has more than " + std::to_string(g.element_cap())
                              + " elements");
            }
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    PermGroup result = g;
    result._elements.emplace(seen.begin(), seen.end());
    return result;
  }

  inline std::size_t order(PermGroup const& g) {
    return g.is_closed() ? g.elements().size() : closure(g).elements().size();
  }

  //! Orbits of the natural action, classes numbered by minimal point.
  inline Partition orbits(PermGroup const& g) {
    std::vector<std::size_t> label(g.degree(), g.degree());
    for (point_type x = 0; x < g.degree(); ++x) {
      if (label[x] != g.degree()) {
        continue;
      }
      label[x] = x;
      std::vector<point_type> stack{x};
      while (!stack.empty()) {
        auto y = stack.back();
        stack.pop_back();
        for (auto const& s : g.generators()) {
          auto z = s(y);
          if (label[z] == g.degree()) {
            label[z] = x;
            stack.push_back(z);
          }
        }
      }
    }
    return Partition::from_labels(label);
  }

  //! Generators commuting pairwise is enough for the whole group.
  inline bool is_abelian(PermGroup const& g) {
    auto const& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (!commute(gens[i], gens[j])) {
          return false;
        }
      }
    }
    return true;
  }

  //! True iff h∘a∘h⁻¹ = b for some h in \p g; closes \p g when needed.
  inline bool are_conjugate(PermGroup const& g, Perm const& a, Perm const& b) {
    check_same_degree(a, b);
    if (a == b) {
      return true;
    }
    if (cycle_type_of(a) != cycle_type_of(b)) {
      return false;
    }
    auto const& closed = g.is_closed() ? g : closure(g);
    for (auto const& h : closed.elements()) {
      if (compose(h, a) == compose(b, h)) {
        return true;
      }
    }
    return false;
  }

}  // namespace ybe

#endif  // YBE_PERM_GROUP_HPP_
