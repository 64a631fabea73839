#include "orbq/quantization/tensor.hpp"

namespace orbq {

void for_each_index(std::size_t dim, std::size_t rank, const std::function<void(std::span<const std::size_t>)>& fn) {
  std::vector<std::size_t> idx(rank, 0);
  if (rank > 0 && dim == 0) return;
  while (true) {
    fn(idx);
    std::size_t pos = rank;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < dim) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (rank == 0) return;
  }
}

PolyTensor from_symbol(const SymTensor& s) {
  PolyTensor t(s.dim(), std::vector<Slot>(s.degree(), Slot::Upper), Poly(s.coords().vars));
  for_each_index(s.dim(), s.degree(), [&](std::span<const std::size_t> idx) { t(idx) = s.component(idx); });
  return t;
}

PolyTensor covariant_derivative(const Coords& coords, const Christoffel& gamma, const PolyTensor& t) {
  const std::size_t q = t.dim();
  if (q != coords.dim() || gamma.dim() != q) throw DimensionMismatch("covariant derivative: dimension mismatch");
  std::vector<Slot> slots = t.slots();
  slots.push_back(Slot::Lower);
  PolyTensor out(q, slots, Poly(coords.vars));
  const std::size_t rank = t.rank();
  std::vector<std::size_t> moved(rank);
  for_each_index(q, rank + 1, [&](std::span<const std::size_t> full) {
    const auto idx = full.first(rank);
    const std::size_t c = full[rank];
    Poly v = t(idx).over(coords.vars).derivative(coords.active[c]);
    for (std::size_t s = 0; s < rank; ++s) {
      std::copy(idx.begin(), idx.end(), moved.begin());
      for (std::size_t m = 0; m < q; ++m) {
        moved[s] = m;
        const Poly& entry = t(moved);
        if (entry.is_zero()) continue;
        if (t.slots()[s] == Slot::Upper) {
          const Poly& g = gamma(idx[s], c, m);
          if (!g.is_zero()) v += g * entry;
        } else {
          const Poly& g = gamma(m, c, idx[s]);
          if (!g.is_zero()) v -= g * entry;
        }
      }
    }
    out(full) = std::move(v);
  });
  return out;
}

OpTensor function_derivatives(const Coords& coords, const Christoffel& gamma, unsigned r) {
  const std::size_t q = coords.dim();
  OpTensor cur(q, {}, DiffOp(coords));
  cur.at_offset(0) = DiffOp::identity(coords);
  for (unsigned level = 0; level < r; ++level) {
    std::vector<Slot> slots(level + 1, Slot::Lower);
    OpTensor next(q, slots, DiffOp(coords));
    std::vector<std::size_t> moved(level);
    for_each_index(q, level + 1, [&](std::span<const std::size_t> full) {
      const auto idx = full.first(level);
      const std::size_t c = full[level];
      DiffOp v = cur(idx).partial_then(c);
      for (std::size_t s = 0; s < level; ++s) {
        std::copy(idx.begin(), idx.end(), moved.begin());
        for (std::size_t m = 0; m < q; ++m) {
          const Poly& g = gamma(m, c, idx[s]);
          if (g.is_zero()) continue;
          moved[s] = m;
          v -= g * cur(moved);
        }
      }
      next(full) = std::move(v);
    });
    cur = std::move(next);
  }
  return cur;
}

PolyTensor ricci(const Coords& coords, const Christoffel& gamma) {
  const std::size_t q = coords.dim();
  const Variables& vars = coords.vars;
  auto d = [&](std::size_t a, const Poly& p) { return p.over(vars).derivative(coords.active[a]); };
  PolyTensor raw(q, {Slot::Lower, Slot::Lower}, Poly(vars));
  for (std::size_t b = 0; b < q; ++b) {
    for (std::size_t c = 0; c < q; ++c) {
      Poly sum(vars);
      for (std::size_t a = 0; a < q; ++a) {
        // R^a_{abc} = d_a G^a_bc - d_b G^a_ac + G^a_ae G^e_bc - G^a_be G^e_ac.
        sum += d(a, gamma(a, b, c));
        sum -= d(b, gamma(a, a, c));
        for (std::size_t e = 0; e < q; ++e) {
          sum += gamma(a, a, e) * gamma(e, b, c);
          sum -= gamma(a, b, e) * gamma(e, a, c);
        }
      }
      const std::size_t idx[2] = {b, c};
      raw(idx) = std::move(sum);
    }
  }
  PolyTensor sym(q, {Slot::Lower, Slot::Lower}, Poly(vars));
  const Scalar half = ratio(1, 2);
  for (std::size_t b = 0; b < q; ++b) {
    for (std::size_t c = 0; c < q; ++c) {
      const std::size_t bc[2] = {b, c};
      const std::size_t cb[2] = {c, b};
      Poly v = raw(bc) + raw(cb);
      v *= half;
      sym(bc) = std::move(v);
    }
  }
  return sym;
}

}  // namespace orbq
