// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

#ifndef YBE_ERROR_HPP_
#define YBE_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

namespace ybe {

  //! Every failure raised by the library carries one of these kinds.
  enum class ErrorKind {
    degree_mismatch,
    not_a_permutation,
    cap_exceeded,
    not_involutive,
    not_nondegenerate,
    braid_fails,
    not_square_free_input,
    criterion_fails,
    index_out_of_range,
    not_invariant,
    incompatible_partition,
    not_a_partition,
    precondition_unmet,
    overflow,
    parse_error,
    internal
  };

  inline char const* to_string(ErrorKind k) noexcept {
    switch (k) {
      case ErrorKind::degree_mismatch:
        return "DegreeMismatch";
      case ErrorKind::not_a_permutation:
        return "NotAPermutation";
      case ErrorKind::cap_exceeded:
        return "CapExceeded";
      case ErrorKind::not_involutive:
        return "NotInvolutive";
      case ErrorKind::not_nondegenerate:
        return "NotNondegenerate";
      case ErrorKind::braid_fails:
        return "BraidFails";
      case ErrorKind::not_square_free_input:
        return "NotSquareFreeInput";
      case ErrorKind::criterion_fails:
        return "CriterionFails";
      case ErrorKind::index_out_of_range:
        return "IndexOutOfRange";
      case ErrorKind::not_invariant:
        return "NotInvariant";
      case ErrorKind::incompatible_partition:
        return "IncompatiblePartition";
      case ErrorKind::not_a_partition:
        return "NotAPartition";
      case ErrorKind::precondition_unmet:
        return "PreconditionUnmet";
      case ErrorKind::overflow:
        return "Overflow";
      case ErrorKind::parse_error:
        return "ParseError";
      case ErrorKind::internal:
        return "InternalError";
    }
    return "Unknown";
  }

  //! \brief Exception type thrown throughout ybe.
  //!
  //! The witness holds the 0-based points (pair, triple, ...) that exhibit
  //! the failure, when there is one.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what, std::vector<std::size_t> witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind),
          _witness(std::move(witness)) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

    [[nodiscard]] std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorKind                _kind;
    std::vector<std::size_t> _witness;
  };

  namespace detail {
    // Renders 0-based points as a 1-based tuple, e.g. "(1, 9)".
    inline std::string one_based_tuple(std::vector<std::size_t> const& pts) {
      std::string out = "(";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i != 0) {
          out += ", ";
        }
        out += std::to_string(pts[i] + 1);
      }
      return out + ")";
    }
  }  // namespace detail

}  // namespace ybe

#endif  // YBE_ERROR_HPP_
