// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// The structure group G(X, r) realised inside Fa_n ⋊ G_r, where Fa_n is the
// free abelian group on u_1, ..., u_n and G_r acts by permuting the u's:
// σ(u_j) = u_{σ(j)}. The generator x_i is (u_i, σ_i).
//
// Action convention: for a permutation p and exponent vector v, p·v puts
// v_j at position p(j). Example with p = (1 2 3): p·(5, 0, 7) = (7, 5, 0),
// because v_1 = 5 moves to position 2 and v_3 = 7 to position 1.

#ifndef YBE_STRUCTURE_HPP_
#define YBE_STRUCTURE_HPP_

#include <cctype>       // for isdigit, isspace
#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "error.hpp"
#include "perm.hpp"
#include "solution.hpp"

namespace ybe {

  using exponent_type = std::int64_t;

  //! An element (a, σ_a) of Fa_n ⋊ G_r.
  struct StructureElem {
    std::vector<exponent_type> vec;
    Perm                       perm;

    static StructureElem identity(std::size_t n) {
      return {std::vector<exponent_type>(n, 0), Perm::identity(n)};
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return vec.size();
    }

    friend bool operator==(StructureElem const&, StructureElem const&) = default;
  };

  namespace detail {
    inline exponent_type checked_add(exponent_type a, exponent_type b) {
      exponent_type out;
      if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::overflow, "exponent vector overflow");
      }
      return out;
    }

    inline exponent_type checked_neg(exponent_type a) {
      exponent_type out;
      if (__builtin_sub_overflow(exponent_type{0}, a, &out)) {
        throw Error(ErrorKind::overflow, "exponent vector overflow");
      }
      return out;
    }
  }  // namespace detail

  //! p·v: coordinate v_j goes to position p(j).
  inline std::vector<exponent_type> act(Perm const& p, std::vector<exponent_type> const& v) {
    if (p.degree() != v.size()) {
      throw Error(ErrorKind::degree_mismatch, "permutation and vector sizes differ");
    }
    std::vector<exponent_type> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      out[p(j)] = v[j];
    }
    return out;
  }

  //! (a, σ)(b, τ) = (a + σ·b, στ).
  inline StructureElem mul(StructureElem const& x, StructureElem const& y) {
    if (x.size() != y.size() || x.perm.degree() != y.perm.degree()) {
      throw Error(ErrorKind::degree_mismatch, "elements of different structure groups");
    }
    auto moved = act(x.perm, y.vec);
    for (std::size_t j = 0; j < moved.size(); ++j) {
      moved[j] = detail::checked_add(x.vec[j], moved[j]);
    }
    return {std::move(moved), compose(x.perm, y.perm)};
  }

  inline StructureElem inv(StructureElem const& x) {
    auto p_inv = inverse(x.perm);
    auto v     = act(p_inv, x.vec);
    for (auto& c : v) {
      c = detail::checked_neg(c);
    }
    return {std::move(v), std::move(p_inv)};
  }

  //! x_i = (u_i, σ_i).
  inline StructureElem gen(Solution const& s, point_type i) {
    if (i >= s.size()) {
      throw Error(ErrorKind::index_out_of_range,
                  "generator x" + std::to_string(i + 1) + " does not exist");
    }
    std::vector<exponent_type> v(s.size(), 0);
    v[i] = 1;
    return {std::move(v), s.sigma(i)};
  }

  struct Letter {
    point_type generator = 0;  // 0-based
    bool       inverted  = false;

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  using Word = std::vector<Letter>;

  //! Left-to-right product; the empty word is the identity.
  inline StructureElem eval_word(Solution const& s, Word const& w) {
    auto acc = StructureElem::identity(s.size());
    for (auto const& l : w) {
      auto g = gen(s, l.generator);
      acc    = mul(acc, l.inverted ? inv(g) : g);
    }
    return acc;
  }

  //! \brief Parses words like "x1 x3 x2^-1" (1-based generators).
  //!
  //! Exponents may be any non-zero integer; "1" or an empty string is the
  //! empty word.
  inline Word parse_word(std::string_view text) {
    auto fail = [&](std::string const& why) {
      return Error(ErrorKind::parse_error,
                   "bad word \"" + std::string(text) + "\": " + why);
    };
    auto read_int = [&](std::size_t& pos) {
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw fail("expected a number");
      }
      long long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = 10 * v + (text[pos] - '0');
        if (v > 1'000'000) {
          throw fail("number too large");
        }
        ++pos;
      }
      return v;
    };
    Word        w;
    std::size_t pos = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        ++pos;
        continue;
      }
      if (c == '1' && w.empty()
          && (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
        ++pos;
        continue;
      }
      if (c != 'x') {
        throw fail("expected 'x'");
      }
      ++pos;
      auto idx = read_int(pos);
      if (idx < 1) {
        throw fail("generators are 1-based");
      }
      long long exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          neg = text[pos] == '-';
          ++pos;
        }
        exp = read_int(pos);
        if (exp == 0) {
          throw fail("zero exponent");
        }
        exp = neg ? -exp : exp;
      }
      Letter l{static_cast<point_type>(idx - 1), exp < 0};
      for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k) {
        w.push_back(l);
      }
    }
    return w;
  }

  inline std::string to_string(Word const& w) {
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'x' + std::to_string(l.generator + 1);
      if (l.inverted) {
        out += "^-1";
      }
    }
    return out.empty() ? "1" : out;
  }

  //! x_i x_j = x_k x_l whenever r(i, j) = (k, l). Witness: (i, j).
  inline Check check_defining_relations(Solution const& s) {
    for (point_type i = 0; i < s.size(); ++i) {
      for (point_type j = 0; j < s.size(); ++j) {
        auto [k, l] = s.r(i, j);
        if (mul(gen(s, i), gen(s, j)) != mul(gen(s, k), gen(s, l))) {
          return Check::fail({i, j});
        }
      }
    }
    return {};
  }

}  // namespace ybe

#endif  // YBE_STRUCTURE_HPP_
