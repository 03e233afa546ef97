#include "faithcert/sklyanin/tensor.hpp"

#include "faithcert/errors.hpp"

namespace faithcert::sklyanin {

namespace {

void require_same_degree(const TensorElement& a, const TensorElement& b) {
  if (a.degree != b.degree) throw DimensionMismatch("tensors of different degrees");
}

}  // namespace

std::uint64_t tensor_dim(std::uint32_t n) {
  std::uint64_t d = 1;
  for (std::uint32_t i = 0; i < n; ++i) d *= 3;
  return d;
}

std::vector<unsigned> word_letters(std::uint64_t index, std::uint32_t n) {
  std::vector<unsigned> letters(n);
  for (std::uint32_t k = n; k-- > 0;) {
    letters[k] = static_cast<unsigned>(index % 3);
    index /= 3;
  }
  return letters;
}

std::string word_to_string(std::uint64_t index, std::uint32_t n) {
  if (n == 0) return "1";
  std::string out;
  for (unsigned letter : word_letters(index, n)) out += "xyz"[letter];
  return out;
}

TensorElement TensorElement::zero(Field field, std::uint32_t n) {
  return TensorElement{n, zero_vector(field, tensor_dim(n))};
}

TensorElement TensorElement::word(Field field, std::uint32_t n, std::uint64_t index) {
  return TensorElement{n, unit_vector(field, tensor_dim(n), index)};
}

TensorElement TensorElement::linear(std::span<const Scalar> abc) {
  if (abc.size() != 3) throw DimensionMismatch("degree-one tensors have three coordinates");
  return TensorElement{1, Vector(abc.begin(), abc.end())};
}

TensorElement tensor(const TensorElement& a, const TensorElement& b) {
  const std::uint64_t nb = b.coords.size();
  TensorElement out = TensorElement::zero(a.field(), a.degree + b.degree);
  for (std::uint64_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::uint64_t j = 0; j < nb; ++j) {
      if (!b.coords[j].is_zero()) out.coords[i * nb + j] = a.coords[i] * b.coords[j];
    }
  }
  return out;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  require_same_degree(a, b);
  TensorElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
  require_same_degree(a, b);
  TensorElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

TensorElement operator*(const Scalar& s, const TensorElement& a) {
  TensorElement out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

}  // namespace faithcert::sklyanin
