// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

#ifndef YBE_CORPUS_HPP_
#define YBE_CORPUS_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "error.hpp"
#include "perm.hpp"
#include "solution.hpp"

namespace ybe {

  //! r(x, y) = (y, x).
  inline Solution trivial(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::index_out_of_range, "trivial solution needs n >= 1");
    }
    return Solution::from_sigma(std::vector<Perm>(n, Perm::identity(n)));
  }

  namespace corpus {

    //! A row of a σ display: the indices sharing one permutation, and that
    //! permutation in cycle notation exactly as printed.
    struct SigmaRow {
      std::vector<std::size_t> indices;  // 1-based
      std::string_view         cycles;
    };

    //! The 24-point square-free solution of level 3 with abelian IYB group
    //! that is not a generalized twisted union.
    inline std::vector<SigmaRow> const& e24_rows() {
      static std::vector<SigmaRow> const rows = {
          {{1, 2}, "(9,10)(11,12)(13,14)(15,16)(17,18)(19,20)(21,22)(23,24)"},
          {{3, 4}, "(9,11)(10,12)(13,15)(14,16)(17,18)(19,20)(21,22)(23,24)"},
          {{5, 6}, "(9,10)(11,12)(13,14)(15,16)(17,19)(18,20)(21,23)(22,24)"},
          {{7, 8}, "(9,11)(10,12)(13,15)(14,16)(17,19)(18,20)(21,23)(22,24)"},
          {{9, 12, 13, 16}, "(1,5)(2,6)(3,7)(4,8)(17,21)(18,22)(19,23)(20,24)"},
          {{10, 11, 14, 15}, "(1,5)(2,6)(3,7)(4,8)(17,24)(18,23)(19,22)(20,21)"},
          {{17, 20, 21, 24}, "(9,13)(10,14)(11,15)(12,16)(1,3,2,4)(5,7,6,8)"},
          {{18, 19, 22, 23}, "(9,16)(10,15)(11,14)(12,13)(1,3,2,4)(5,7,6,8)"},
      };
      return rows;
    }

    inline std::vector<SigmaRow> const& s4_rows() {
      static std::vector<SigmaRow> const rows = {
          {{1, 2}, "(3,4)"},
          {{3, 4}, "(1,2)"},
      };
      return rows;
    }

    inline std::vector<Perm> sigmas_from_rows(std::size_t n, std::vector<SigmaRow> const& rows) {
      std::vector<Perm> sigma(n);
      std::vector<bool> set(n, false);
      for (auto const& row : rows) {
        auto p = Perm::from_cycles(row.cycles, n);
        for (auto i : row.indices) {
          if (i == 0 || i > n || set[i - 1]) {
            throw Error(ErrorKind::internal, "corpus row indices are malformed");
          }
          sigma[i - 1] = p;
          set[i - 1]   = true;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!set[i]) {
          throw Error(ErrorKind::internal, "corpus rows do not cover every index");
        }
      }
      return sigma;
    }

  }  // namespace corpus

  inline Solution e24() {
    return Solution::from_sigma(corpus::sigmas_from_rows(24, corpus::e24_rows()));
  }

  //! σ_1 = σ_2 = (3 4), σ_3 = σ_4 = (1 2).
  inline Solution s4() {
    return Solution::from_sigma(corpus::sigmas_from_rows(4, corpus::s4_rows()));
  }

  namespace corpus {
    inline std::vector<std::pair<std::string, std::string>> const& names() {
      static std::vector<std::pair<std::string, std::string>> const list = {
          {"e24", "24-point square-free solution, level 3, abelian G_r, not a twisted union"},
          {"s4", "4-point square-free solution, sigma_1 = sigma_2 = (3 4), sigma_3 = sigma_4 = (1 2)"},
          {"trivial<n>", "trivial solution r(x, y) = (y, x) on n points, e.g. trivial3"},
      };
      return list;
    }

    //! Looks up "e24", "s4" or "trivial<n>".
    inline Solution by_name(std::string_view name) {
      if (name == "e24") {
        return e24();
      }
      if (name == "s4") {
        return s4();
      }
      constexpr std::string_view prefix = "trivial";
      if (name.substr(0, prefix.size()) == prefix && name.size() > prefix.size()) {
        std::size_t n = 0;
        for (char c : name.substr(prefix.size())) {
          if (c < '0' || c > '9' || n > 10'000) {
            throw Error(ErrorKind::parse_error, "bad corpus name " + std::string(name));
          }
          n = 10 * n + static_cast<std::size_t>(c - '0');
        }
        return trivial(n);
      }
      throw Error(ErrorKind::parse_error, "unknown corpus entry " + std::string(name));
    }
  }  // namespace corpus

}  // namespace ybe

#endif  // YBE_CORPUS_HPP_
