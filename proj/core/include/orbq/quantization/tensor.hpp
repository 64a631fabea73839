#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "orbq/algebra/calculus.hpp"
#include "orbq/errors.hpp"

namespace orbq {

enum class Slot { Upper, Lower };

// Dense tensor over a q-dimensional coordinate system; entries are stored in
// row-major order of the index tuple.
template <class E>
class Tensor {
 public:
  Tensor(std::size_t dim, std::vector<Slot> slots, const E& zero)
      : dim_(dim), slots_(std::move(slots)), data_(count(dim, slots_.size()), zero) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return slots_.size(); }
  const std::vector<Slot>& slots() const noexcept { return slots_; }
  const std::vector<E>& data() const noexcept { return data_; }

  const E& operator()(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }
  E& operator()(std::span<const std::size_t> idx) { return data_[offset(idx)]; }
  const E& at_offset(std::size_t off) const { return data_[off]; }
  E& at_offset(std::size_t off) { return data_[off]; }

  std::size_t offset(std::span<const std::size_t> idx) const {
    if (idx.size() != slots_.size()) throw DimensionMismatch("tensor index has wrong length");
    std::size_t off = 0;
    for (std::size_t i : idx) off = off * dim_ + i;
    return off;
  }

 private:
  static std::size_t count(std::size_t dim, std::size_t rank) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < rank; ++i) c *= dim;
    return c;
  }

  std::size_t dim_;
  std::vector<Slot> slots_;
  std::vector<E> data_;
};

using PolyTensor = Tensor<Poly>;
using OpTensor = Tensor<DiffOp>;

// Calls fn for every tuple in {0..dim-1}^rank in lexicographic order.
void for_each_index(std::size_t dim, std::size_t rank, const std::function<void(std::span<const std::size_t>)>& fn);

// S^{i1..ik} as a tensor with k upper slots.
PolyTensor from_symbol(const SymTensor& s);

// nabla T with the new lower slot appended last.
PolyTensor covariant_derivative(const Coords& coords, const Christoffel& gamma, const PolyTensor& t);

// The operators f -> (nabla^r f)_{b1..br}, built as
// (nabla^{r+1})_{b,c} = d_c o (nabla^r)_b - sum_s Gamma^m_{c b_s} (nabla^r)_{..m..}.
OpTensor function_derivatives(const Coords& coords, const Christoffel& gamma, unsigned r);

// Symmetrized Ricci tensor Ric_bc = sum_a R^a_{abc} with
// R(d_a, d_b) d_c = R^d_{abc} d_d.
PolyTensor ricci(const Coords& coords, const Christoffel& gamma);

}  // namespace orbq
