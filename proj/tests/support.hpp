// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Conversions between ybe values and the raw tables used by the oracles.

#ifndef YBE_TESTS_SUPPORT_HPP_
#define YBE_TESTS_SUPPORT_HPP_

#include <vector>  // for vector

#include "oracle.hpp"
#include "ybe/perm.hpp"
#include "ybe/solution.hpp"

namespace support {

  inline oracle::Sigmas to_oracle(ybe::Solution const& s) {
    oracle::Sigmas out;
    for (auto const& p : s.sigmas()) {
      out.emplace_back(p.images().begin(), p.images().end());
    }
    return out;
  }

  inline ybe::Solution from_oracle(oracle::Sigmas const& t) {
    std::vector<ybe::Perm> sigma;
    for (auto const& row : t) {
      sigma.emplace_back(std::vector<ybe::point_type>(row.begin(), row.end()));
    }
    return ybe::Solution::from_sigma(sigma);
  }

  inline std::vector<int> flat(ybe::Solution const& s) {
    auto f = s.flat_sigma();
    return {f.begin(), f.end()};
  }

  inline ybe::Perm perm(char const* cycles, std::size_t n) {
    return ybe::Perm::from_cycles(cycles, n);
  }

  inline ybe::Solution from_cycles(std::vector<char const*> const& rows) {
    std::vector<ybe::Perm> sigma;
    for (auto c : rows) {
      sigma.push_back(perm(c, rows.size()));
    }
    return ybe::Solution::from_sigma(sigma);
  }

}  // namespace support

#endif  // YBE_TESTS_SUPPORT_HPP_
