#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orbq/algebra/matrix.hpp"
#include "orbq/algebra/poly.hpp"

namespace orbq {

inline constexpr std::size_t kDefaultGroupCap = 1024;

// Finite subgroup of O(n). elements()[0] is the identity; order is the
// breadth-first closure order of the generators.
class FiniteIsometryGroup {
 public:
  // Trivial group.
  explicit FiniteIsometryGroup(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<OrthMatrix>& elements() const noexcept { return elements_; }
  const std::vector<OrthMatrix>& generators() const noexcept { return generators_; }
  bool contains(const OrthMatrix& g) const;
  std::optional<std::size_t> index_of(const OrthMatrix& g) const;

  // Same element set, regardless of presentation.
  friend bool operator==(const FiniteIsometryGroup& a, const FiniteIsometryGroup& b);

 private:
  friend FiniteIsometryGroup generate_group(std::size_t, std::span<const OrthMatrix>, std::size_t);
  std::size_t dim_;
  std::vector<OrthMatrix> generators_;
  std::vector<OrthMatrix> elements_;
  std::vector<OrthMatrix> sorted_;
};

// Closure of the generators under multiplication. Throws GroupTooLarge once
// the closure exceeds `cap` elements.
FiniteIsometryGroup generate_group(std::size_t dim, std::span<const OrthMatrix> generators,
                                   std::size_t cap = kDefaultGroupCap);
// Dimension taken from the first generator; at least one is required.
FiniteIsometryGroup generate_group(std::span<const OrthMatrix> generators, std::size_t cap = kDefaultGroupCap);

// f(M^-1 x); f's variables are the n spatial coordinates.
Poly act_linear(const Poly& f, const OrthMatrix& m);

// (1/|G|) sum_g act_linear(f, g).
Poly reynolds(const Poly& f, const FiniteIsometryGroup& group);

}  // namespace orbq
