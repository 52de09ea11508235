// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// JSON documents. Everything here is 1-based.
//
//   {"n": 4, "sigma": [[1,2,4,3], [1,2,4,3], [2,1,3,4], [2,1,3,4]]}
//   {"n": 2, "r": [[[1,1],[2,1]], [[1,2],[2,2]]]}     (row i, column j)
//
// Readers accept either form, writers emit the sigma form.

#ifndef YBE_IO_HPP_
#define YBE_IO_HPP_

#include <cstddef>  // for size_t
#include <istream>  // for istream
#include <iterator> // for istreambuf_iterator
#include <string>   // for string
#include <vector>   // for vector

#include "nlohmann/json.hpp"

#include "error.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "solution.hpp"
#include "structure.hpp"
#include "twisted.hpp"

namespace ybe::io {

  using json = nlohmann::json;

  inline json to_json(Perm const& p) {
    return p.one_based();
  }

  inline json to_json(Solution const& s) {
    json sigma = json::array();
    for (auto const& p : s.sigmas()) {
      sigma.push_back(to_json(p));
    }
    return json{{"n", s.size()}, {"sigma", std::move(sigma)}};
  }

  inline json to_json(Partition const& p) {
    json out = json::array();
    for (auto const& c : p.classes()) {
      json cls = json::array();
      for (auto x : c) {
        cls.push_back(x + 1);
      }
      out.push_back(std::move(cls));
    }
    return out;
  }

  inline json points_to_json(std::vector<point_type> const& pts) {
    json out = json::array();
    for (auto x : pts) {
      out.push_back(x + 1);
    }
    return out;
  }

  inline json to_json(ValidationReport const& r) {
    json out{{"involutive", r.involutive},
             {"nondegenerate", r.nondegenerate},
             {"braid", r.braid},
             {"square_free", r.square_free},
             {"ok", r.ok()}};
    if (r.first_failure) {
      out["first_failure"] = {{"kind", to_string(r.first_failure->kind)},
                              {"witness", points_to_json(r.first_failure->witness)}};
    } else {
      out["first_failure"] = nullptr;
    }
    return out;
  }

  inline json to_json(StructureElem const& x) {
    return json{{"vec", x.vec}, {"perm", to_json(x.perm)}};
  }

  inline json to_json(GtuViolation const& v) {
    json out{{"condition", v.condition}};
    switch (v.condition) {
      case 1:
        out["z"]       = v.first + 1;
        out["y"]       = v.second + 1;
        out["y_prime"] = v.third + 1;
        break;
      case 2:
        out["y"]       = v.first + 1;
        out["z"]       = v.second + 1;
        out["z_prime"] = v.third + 1;
        break;
      case 3:
        out["y"] = v.first + 1;
        out["z"] = v.second + 1;
        break;
      default:
        out["z"] = v.first + 1;
        out["y"] = v.second + 1;
        break;
    }
    out["left"]  = v.left + 1;
    out["right"] = v.right + 1;
    out["point"] = v.point + 1;
    return out;
  }

  namespace detail {
    [[noreturn]] inline void bad(std::string const& why) {
      throw Error(ErrorKind::parse_error, "bad solution document: " + why);
    }

    inline std::size_t read_index(json const& v, std::size_t n) {
      if (!v.is_number_integer()) {
        bad("entries must be integers");
      }
      auto x = v.get<long long>();
      if (x < 1 || static_cast<std::size_t>(x) > n) {
        bad("entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
      }
      return static_cast<std::size_t>(x - 1);
    }
  }  // namespace detail

  //! \brief The r-table described by a document, without validating it.
  inline RTable table_from_json(json const& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
      detail::bad("missing integer \"n\"");
    }
    auto n_signed = doc["n"].get<long long>();
    if (n_signed < 1) {
      detail::bad("\"n\" must be positive");
    }
    auto n = static_cast<std::size_t>(n_signed);
    if (doc.contains("sigma")) {
      auto const& rows = doc["sigma"];
      if (!rows.is_array() || rows.size() != n) {
        detail::bad("\"sigma\" must hold n rows");
      }
      std::vector<Perm> sigma;
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != n) {
          detail::bad("every sigma row must have n entries");
        }
        std::vector<point_type> im;
        for (auto const& v : row) {
          im.push_back(detail::read_index(v, n));
        }
        try {
          sigma.emplace_back(std::move(im));
        } catch (Error const& e) {
          // σ_i not a bijection: degenerate input.
          throw Error(ErrorKind::not_nondegenerate, e.what(), {sigma.size()});
        }
      }
      return sigma_r_table(sigma);
    }
    if (doc.contains("r")) {
      auto const& rows = doc["r"];
      if (!rows.is_array() || rows.size() != n) {
        detail::bad("\"r\" must hold n rows");
      }
      RTable t(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) {
          detail::bad("every r row must have n entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
          auto const& cell = rows[i][j];
          if (!cell.is_array() || cell.size() != 2) {
            detail::bad("r entries must be pairs");
          }
          t(i, j) = {detail::read_index(cell[0], n), detail::read_index(cell[1], n)};
        }
      }
      return t;
    }
    detail::bad("needs \"sigma\" or \"r\"");
  }

  inline Solution solution_from_json(json const& doc) {
    return Solution::from_r_table(table_from_json(doc));
  }

  inline json parse(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(ErrorKind::parse_error, e.what());
    }
  }

  inline json parse(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
  }

  inline std::string dump(json const& j, bool pretty = false) {
    return pretty ? j.dump(2) : j.dump();
  }

}  // namespace ybe::io

#endif  // YBE_IO_HPP_
