// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

#ifndef YBE_PARTITION_HPP_
#define YBE_PARTITION_HPP_

#include <cstddef>  // for size_t
#include <limits>   // for numeric_limits
#include <map>      // for map
#include <utility>  // for pair
#include <vector>   // for vector

#include "error.hpp"

namespace ybe {

  //! \brief An equivalence partition of {0, ..., n - 1}.
  //!
  //! Classes are numbered 0, 1, ... in the order of their minimal members,
  //! so two Partition values are equal iff they describe the same classes.
  class Partition {
   public:
    Partition() = default;

    //! Normalises arbitrary labels (equal label = same class).
    template <typename Label>
    static Partition from_labels(std::vector<Label> const& labels) {
      Partition                       p;
      std::map<Label, std::size_t>    renumber;
      p._class_of.reserve(labels.size());
      for (auto const& l : labels) {
        auto [it, inserted] = renumber.emplace(l, renumber.size());
        p._class_of.push_back(it->second);
      }
      p._num_classes = renumber.size();
      return p;
    }

    static Partition from_classes(std::size_t                                  n,
                                  std::vector<std::vector<std::size_t>> const& classes) {
      constexpr auto           unset = std::numeric_limits<std::size_t>::max();
      std::vector<std::size_t> labels(n, unset);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) {
          throw Error(ErrorKind::not_a_partition, "empty class");
        }
        for (auto x : classes[c]) {
          if (x >= n || labels[x] != unset) {
            throw Error(ErrorKind::not_a_partition,
                        "point repeated or out of range", {x});
          }
          labels[x] = c;
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (labels[x] == unset) {
          throw Error(ErrorKind::not_a_partition, "point not covered", {x});
        }
      }
      return from_labels(labels);
    }

    static Partition discrete(std::size_t n) {
      std::vector<std::size_t> labels(n);
      for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i;
      }
      return from_labels(labels);
    }

    static Partition single_class(std::size_t n) {
      return from_labels(std::vector<std::size_t>(n, 0));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _class_of.size();
    }

    [[nodiscard]] std::size_t num_classes() const noexcept {
      return _num_classes;
    }

    [[nodiscard]] std::size_t class_of(std::size_t x) const {
      return _class_of.at(x);
    }

    [[nodiscard]] std::vector<std::size_t> const& labels() const noexcept {
      return _class_of;
    }

    [[nodiscard]] bool same_class(std::size_t x, std::size_t y) const {
      return _class_of.at(x) == _class_of.at(y);
    }

    //! Members of every class, each sorted ascending.
    [[nodiscard]] std::vector<std::vector<std::size_t>> classes() const {
      std::vector<std::vector<std::size_t>> out(_num_classes);
      for (std::size_t x = 0; x < _class_of.size(); ++x) {
        out[_class_of[x]].push_back(x);
      }
      return out;
    }

    //! The minimal member of class \p c.
    [[nodiscard]] std::size_t representative(std::size_t c) const {
      for (std::size_t x = 0; x < _class_of.size(); ++x) {
        if (_class_of[x] == c) {
          return x;
        }
      }
      throw Error(ErrorKind::index_out_of_range, "no such class");
    }

    [[nodiscard]] std::vector<std::size_t> representatives() const {
      std::vector<std::size_t> reps(_num_classes);
      for (std::size_t x = _class_of.size(); x-- > 0;) {
        reps[_class_of[x]] = x;
      }
      return reps;
    }

    //! Common refinement.
    [[nodiscard]] Partition meet(Partition const& other) const {
      if (size() != other.size()) {
        throw Error(ErrorKind::degree_mismatch, "partitions of different sets");
      }
      std::vector<std::pair<std::size_t, std::size_t>> labels;
      labels.reserve(size());
      for (std::size_t x = 0; x < size(); ++x) {
        labels.emplace_back(_class_of[x], other._class_of[x]);
      }
      return from_labels(labels);
    }

    //! True iff every class of *this lies inside a class of \p coarser.
    [[nodiscard]] bool refines(Partition const& coarser) const {
      std::vector<std::size_t> image(_num_classes, std::numeric_limits<std::size_t>::max());
      for (std::size_t x = 0; x < size(); ++x) {
        auto& im = image[_class_of[x]];
        if (im == std::numeric_limits<std::size_t>::max()) {
          im = coarser.class_of(x);
        } else if (im != coarser.class_of(x)) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<std::size_t> _class_of;
    std::size_t              _num_classes = 0;
  };

}  // namespace ybe

#endif  // YBE_PARTITION_HPP_
