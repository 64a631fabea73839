#include "orbq/algebra/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "orbq/errors.hpp"

namespace orbq {

FiniteIsometryGroup::FiniteIsometryGroup(std::size_t dim) : dim_(dim) {
  elements_.push_back(OrthMatrix::identity(dim));
  sorted_ = elements_;
}

bool FiniteIsometryGroup::contains(const OrthMatrix& g) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), g);
}

std::optional<std::size_t> FiniteIsometryGroup::index_of(const OrthMatrix& g) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == g) return i;
  return std::nullopt;
}

bool operator==(const FiniteIsometryGroup& a, const FiniteIsometryGroup& b) {
  return a.dim_ == b.dim_ && a.sorted_ == b.sorted_;
}

FiniteIsometryGroup generate_group(std::size_t dim, std::span<const OrthMatrix> generators, std::size_t cap) {
  FiniteIsometryGroup group(dim);
  for (const auto& g : generators) {
    if (g.dim() != dim) throw DimensionMismatch("generator dimension differs from group dimension");
  }
  group.generators_.assign(generators.begin(), generators.end());
  std::set<OrthMatrix> seen{OrthMatrix::identity(dim)};
  std::deque<OrthMatrix> frontier{OrthMatrix::identity(dim)};
  while (!frontier.empty()) {
    const OrthMatrix current = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      OrthMatrix next = current * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw GroupTooLarge("group closure exceeds cap of " + std::to_string(cap) + " elements",
                              next.matrix().to_string());
        }
        group.elements_.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  group.sorted_.assign(seen.begin(), seen.end());
  return group;
}

FiniteIsometryGroup generate_group(std::span<const OrthMatrix> generators, std::size_t cap) {
  if (generators.empty()) throw DimensionMismatch("cannot infer group dimension from an empty generator list");
  return generate_group(generators.front().dim(), generators, cap);
}

Poly act_linear(const Poly& f, const OrthMatrix& m) {
  const std::size_t n = m.dim();
  if (f.nvars() != n) {
    if (f.vars().empty()) return f;
    throw DimensionMismatch("act_linear: matrix dimension " + std::to_string(n) + " but polynomial has " +
                            std::to_string(f.nvars()) + " variables");
  }
  // (M^-1 x)_i = sum_j M_ji x_j for orthogonal M.
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly img(f.vars());
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& c = m.matrix()(j, i);
      if (!is_zero(c)) img += Poly::variable(f.vars(), j) * c;
    }
    images.push_back(std::move(img));
  }
  return compose(f, f.vars(), images);
}

Poly reynolds(const Poly& f, const FiniteIsometryGroup& group) {
  Poly sum(f.vars());
  for (const auto& g : group.elements()) sum += act_linear(f, g);
  return sum * ratio(1, static_cast<long>(group.order()));
}

}  // namespace orbq
