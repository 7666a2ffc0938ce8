// csext - extensions of completely simple semigroups by groups
//
// Total maps from a finite index set {0, ..., length - 1} into {0, ..., base - 1},
// encoded as integers.  Maps are ordered lexicographically by their value
// tables: the value at index 0 is the most significant digit.

#ifndef CSEXT_FUNCTION_SPACE_HPP_
#define CSEXT_FUNCTION_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "error.hpp"

namespace csext {

  using element_id = std::uint32_t;

  class FunctionSpace {
   public:
    FunctionSpace() : FunctionSpace(1, 0) {}

    FunctionSpace(std::size_t base, std::size_t length)
        : _base(base), _length(length), _weight(length, 1) {
      if (base == 0) {
        throw Error(ErrorCode::ZeroOrder, "function space with empty codomain");
      }
      std::uint64_t size = 1;
      for (std::size_t k = length; k-- > 0;) {
        _weight[k] = size;
        size *= base;
        if (size > std::numeric_limits<element_id>::max()) {
          throw Error(ErrorCode::SizeOverflow,
                      "function space too large to index");
        }
      }
      _size = size;
    }

    std::size_t base() const noexcept {
      return _base;
    }
    std::size_t length() const noexcept {
      return _length;
    }
    std::size_t size() const noexcept {
      return _size;
    }

    element_id value(element_id code, std::size_t index) const noexcept {
      return static_cast<element_id>((code / _weight[index]) % _base);
    }

    element_id encode(std::vector<element_id> const& values) const {
      if (values.size() != _length) {
        throw Error(ErrorCode::OutOfRange, "function table has wrong length");
      }
      std::uint64_t code = 0;
      for (std::size_t k = 0; k < _length; ++k) {
        if (values[k] >= _base) {
          throw Error(ErrorCode::OutOfRange, "function value out of range");
        }
        code += values[k] * _weight[k];
      }
      return static_cast<element_id>(code);
    }

    std::vector<element_id> decode(element_id code) const {
      std::vector<element_id> out(_length);
      for (std::size_t k = 0; k < _length; ++k) {
        out[k] = value(code, k);
      }
      return out;
    }

    element_id constant(element_id v) const {
      return encode(std::vector<element_id>(_length, v));
    }

   private:
    std::size_t                _base;
    std::size_t                _length;
    std::size_t                _size;
    std::vector<std::uint64_t> _weight;
  };

}  // namespace csext

#endif  // CSEXT_FUNCTION_SPACE_HPP_
