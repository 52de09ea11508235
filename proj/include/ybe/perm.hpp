// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Permutations of {0, ..., n - 1}, stored as image tables.
//
// Points are 0-based inside the library. Everything that leaves the library
// (cycle strings, JSON documents) is 1-based.

#ifndef YBE_PERM_HPP_
#define YBE_PERM_HPP_

#include <algorithm>    // for all_of, sort
#include <cctype>       // for isdigit, isspace
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <numeric>      // for iota
#include <ostream>      // for ostream
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "error.hpp"

namespace ybe {

  using point_type = std::size_t;
  using cycle_type = std::vector<point_type>;

  //! \brief A bijection of {0, ..., n - 1}.
  //!
  //! The image table is validated on construction, so every Perm value is a
  //! genuine permutation. Degree 0 is not allowed.
  class Perm {
   public:
    Perm() = default;

    explicit Perm(std::vector<point_type> images) : _images(std::move(images)) {
      if (_images.empty()) {
        throw Error(ErrorKind::not_a_permutation, "degree must be at least 1");
      }
      std::vector<bool> seen(_images.size(), false);
      for (auto x : _images) {
        if (x >= _images.size() || seen[x]) {
          throw Error(ErrorKind::not_a_permutation,
                      "image table is not a bijection of {1.."
                          + std::to_string(_images.size()) + "}");
        }
        seen[x] = true;
      }
    }

    static Perm identity(std::size_t degree) {
      std::vector<point_type> im(degree);
      std::iota(im.begin(), im.end(), 0);
      return Perm(std::move(im));
    }

    //! Builds a permutation from a 1-based image table.
    static Perm from_one_based(std::span<long long const> images) {
      std::vector<point_type> im;
      im.reserve(images.size());
      for (auto x : images) {
        if (x < 1 || static_cast<std::size_t>(x) > images.size()) {
          throw Error(ErrorKind::not_a_permutation,
                      "image " + std::to_string(x) + " out of range");
        }
        im.push_back(static_cast<point_type>(x - 1));
      }
      return Perm(std::move(im));
    }

    //! \brief Parses cycle notation such as "(9,10)(11,12)".
    //!
    //! Points are 1-based; the empty string and "()" denote the identity.
    //! Cycles need not be disjoint, they are composed right to left.
    static Perm from_cycles(std::string_view text, std::size_t degree);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    [[nodiscard]] point_type operator()(point_type x) const {
      return _images[x];
    }

    [[nodiscard]] point_type at(point_type x) const {
      if (x >= _images.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "point " + std::to_string(x + 1) + " exceeds degree "
                        + std::to_string(_images.size()));
      }
      return _images[x];
    }

    [[nodiscard]] std::span<point_type const> images() const noexcept {
      return _images;
    }

    [[nodiscard]] std::vector<long long> one_based() const {
      std::vector<long long> out;
      out.reserve(_images.size());
      for (auto x : _images) {
        out.push_back(static_cast<long long>(x) + 1);
      }
      return out;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (_images[i] != i) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Perm const&, Perm const&)                  = default;
    friend std::strong_ordering operator<=>(Perm const&, Perm const&) = default;

   private:
    std::vector<point_type> _images;
  };

  inline void check_same_degree(Perm const& a, Perm const& b) {
    if (a.degree() != b.degree()) {
      throw Error(ErrorKind::degree_mismatch,
                  "degrees " + std::to_string(a.degree()) + " and "
                      + std::to_string(b.degree()) + " differ");
    }
  }

  //! Returns a∘b, i.e. the map x ↦ a(b(x)).
  inline Perm compose(Perm const& a, Perm const& b) {
    check_same_degree(a, b);
    std::vector<point_type> im(a.degree());
    for (std::size_t x = 0; x < im.size(); ++x) {
      im[x] = a(b(x));
    }
    return Perm(std::move(im));
  }

  inline Perm inverse(Perm const& a) {
    std::vector<point_type> im(a.degree());
    for (std::size_t x = 0; x < im.size(); ++x) {
      im[a(x)] = x;
    }
    return Perm(std::move(im));
  }

  //! Returns h∘a∘h⁻¹.
  inline Perm conjugate(Perm const& a, Perm const& h) {
    return compose(compose(h, a), inverse(h));
  }

  inline bool commute(Perm const& a, Perm const& b) {
    return compose(a, b) == compose(b, a);
  }

  //! \brief The non-trivial cycles of \p a.
  //!
  //! Each cycle starts at its minimal point and the cycles are ordered by
  //! minimal point. Fixed points are omitted.
  inline std::vector<cycle_type> cycle_decomposition(Perm const& a) {
    std::vector<cycle_type> result;
    std::vector<bool>       seen(a.degree(), false);
    for (point_type x = 0; x < a.degree(); ++x) {
      if (seen[x] || a(x) == x) {
        continue;
      }
      cycle_type c;
      for (point_type y = x; !seen[y]; y = a(y)) {
        seen[y] = true;
        c.push_back(y);
      }
      result.push_back(std::move(c));
    }
    return result;
  }

  //! Identity counts as cyclic (it has no non-trivial cycle at all).
  inline bool is_cyclic(Perm const& a) {
    return cycle_decomposition(a).size() <= 1;
  }

  //! Sorted lengths of the non-trivial cycles.
  inline std::vector<std::size_t> cycle_type_of(Perm const& a) {
    std::vector<std::size_t> lens;
    for (auto const& c : cycle_decomposition(a)) {
      lens.push_back(c.size());
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  }

  //! Inverse of cycle_decomposition: fixed points fill the rest.
  inline Perm from_cycle_list(std::vector<cycle_type> const& cycles,
                              std::size_t                    degree) {
    std::vector<point_type> im(degree);
    std::iota(im.begin(), im.end(), 0);
    std::vector<bool> used(degree, false);
    for (auto const& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] >= degree || used[c[k]]) {
          throw Error(ErrorKind::not_a_permutation,
                      "cycles are not disjoint or exceed the degree");
        }
        used[c[k]] = true;
        im[c[k]]   = c[(k + 1) % c.size()];
      }
    }
    return Perm(std::move(im));
  }

  //! 1-based cycle notation, "()" for the identity.
  inline std::string to_cycle_string(Perm const& a) {
    auto cycles = cycle_decomposition(a);
    if (cycles.empty()) {
      return "()";
    }
    std::string out;
    for (auto const& c : cycles) {
      out += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k != 0) {
          out += ',';
        }
        out += std::to_string(c[k] + 1);
      }
      out += ')';
    }
    return out;
  }

  inline std::ostream& operator<<(std::ostream& os, Perm const& a) {
    return os << to_cycle_string(a);
  }

  inline Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
    auto fail = [&](std::string const& why) {
      return Error(ErrorKind::parse_error,
                   "bad cycle notation \"" + std::string(text) + "\": " + why);
    };
    Perm        result = identity(degree);
    std::size_t pos    = 0;
    auto        skip_ws
        = [&] {
            while (pos < text.size()
                   && std::isspace(static_cast<unsigned char>(text[pos]))) {
              ++pos;
            }
          };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(') {
        throw fail("expected '('");
      }
      ++pos;
      cycle_type c;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
          throw fail("expected a point");
        }
        std::size_t v = 0;
        while (pos < text.size()
               && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = 10 * v + static_cast<std::size_t>(text[pos] - '0');
          if (v > degree) {
            throw fail("point exceeds degree " + std::to_string(degree));
          }
          ++pos;
        }
        if (v == 0) {
          throw fail("points are 1-based");
        }
        c.push_back(v - 1);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_ws();
        }
      }
      if (pos == text.size()) {
        throw fail("unterminated cycle");
      }
      ++pos;  // ')'
      std::vector<bool> in_cycle(degree, false);
      for (auto x : c) {
        if (in_cycle[x]) {
          throw fail("repeated point in a cycle");
        }
        in_cycle[x] = true;
      }
      if (c.size() > 1) {
        result = compose(result, from_cycle_list({c}, degree));
      }
      skip_ws();
    }
    return result;
  }

}  // namespace ybe

#endif  // YBE_PERM_HPP_
