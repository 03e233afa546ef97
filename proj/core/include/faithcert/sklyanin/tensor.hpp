#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faithcert/linalg/matrix.hpp"

namespace faithcert::sklyanin {

/// 3^n.
std::uint64_t tensor_dim(std::uint32_t n);

/// Letters of the word with the given index, first letter most significant.
std::vector<unsigned> word_letters(std::uint64_t index, std::uint32_t n);
std::string word_to_string(std::uint64_t index, std::uint32_t n);

/// Element of V^{⊗n} on the monomial basis; the monomial v_{i1}⊗...⊗v_{in}
/// sits at index sum_k i_k 3^{n-k}.
struct TensorElement {
  std::uint32_t degree = 0;
  Vector coords;

  static TensorElement zero(Field field, std::uint32_t n);
  static TensorElement word(Field field, std::uint32_t n, std::uint64_t index);
  /// Degree-one element a x + b y + c z.
  static TensorElement linear(std::span<const Scalar> abc);

  Field field() const { return coords.front().field(); }
  bool is_zero() const { return faithcert::is_zero(coords); }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

TensorElement tensor(const TensorElement& a, const TensorElement& b);
TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator-(const TensorElement& a, const TensorElement& b);
TensorElement operator*(const Scalar& s, const TensorElement& a);

}  // namespace faithcert::sklyanin
