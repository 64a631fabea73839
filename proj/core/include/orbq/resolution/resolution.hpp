#pragma once

#include <cstddef>
#include <string>

#include "orbq/foliated/foliated.hpp"
#include "orbq/orbifold/orbifold.hpp"

namespace orbq {

// Frame-bundle resolution of R^n / Gamma through its adapted chart: leaf
// coordinates m1..m_{n(n-1)/2} along the O(n)-orbits and transverse
// coordinates y1..yn identified with x1..xn.
class Resolution {
 public:
  explicit Resolution(OrbifoldPtr orbifold);

  const OrbifoldPtr& orbifold() const noexcept { return orb_; }
  const ChartPtr& chart() const noexcept { return chart_; }
  std::size_t n() const noexcept { return orb_->dim(); }
  std::size_t leaf_dim() const noexcept { return chart_->leaf_dim(); }
  std::size_t transverse_dim() const noexcept { return chart_->transverse_dim(); }
  std::size_t total_dim() const noexcept { return leaf_dim() + transverse_dim(); }

  // x^i -> y^i.
  Poly up(const Poly& f) const;
  // y^i -> x^i; throws NotFoliated if f depends on a leaf variable.
  Poly down(const Poly& f) const;

 private:
  OrbifoldPtr orb_;
  ChartPtr chart_;
};

Resolution resolve(const OrbifoldPtr& orbifold);

// p^*, p^*_D, p^*_S, p^*_Vect, p^*_Omega and p^*_C.
FoliatedFunction pullback(const Resolution& res, const SingularFunction& f);
FoliatedDiffOp pullback(const Resolution& res, const SingularDiffOp& d);
FoliatedSymbol pullback(const Resolution& res, const SingularSymbol& s);
FoliatedVectorField pullback(const Resolution& res, const SingularVectorField& x);
FoliatedOneForm pullback(const Resolution& res, const SingularOneForm& a);
FoliatedConnection pullback(const Resolution& res, const SingularConnection& nabla);

// Inverses. The results are re-validated on the orbifold, so foliated data
// that does not come from Gamma-invariant data is rejected.
SingularFunction pullback_inverse(const Resolution& res, const FoliatedFunction& f);
SingularDiffOp pullback_inverse(const Resolution& res, const FoliatedDiffOp& d);
SingularSymbol pullback_inverse(const Resolution& res, const FoliatedSymbol& s);
SingularVectorField pullback_inverse(const Resolution& res, const FoliatedVectorField& x);
SingularOneForm pullback_inverse(const Resolution& res, const FoliatedOneForm& a);
SingularConnection pullback_inverse(const Resolution& res, const FoliatedConnection& nabla);

// Transverse action of the lift Phi[u] = [phi_* u] of an isometry to the
// resolutions; it acts on y by the same affine map as phi on x.
class ResolvedIsometry {
 public:
  ResolvedIsometry(Resolution source, Resolution target, LocalIsometry phi);

  const Resolution& source() const noexcept { return src_; }
  const Resolution& target() const noexcept { return dst_; }
  const LocalIsometry& isometry() const noexcept { return phi_; }
  const AffineMap& transverse_action() const noexcept { return phi_.lift(); }

  // Phi^* on foliated objects of the target chart.
  FoliatedFunction pullback(const FoliatedFunction& f) const;
  FoliatedDiffOp pullback(const FoliatedDiffOp& d) const;
  FoliatedSymbol pullback(const FoliatedSymbol& s) const;
  FoliatedVectorField pullback(const FoliatedVectorField& x) const;
  FoliatedConnection pullback(const FoliatedConnection& nabla) const;

 private:
  Resolution src_;
  Resolution dst_;
  LocalIsometry phi_;
};

ResolvedIsometry lift_isometry(const Resolution& source, const Resolution& target, const LocalIsometry& phi);

// p^* phi^* = Phi^* p'^*, p^*_S phi^*_S = Phi^*_S p'^*_S, p^*_C phi^*_C = Phi^*_C p'^*_C
// evaluated on the given objects of the target orbifold.
struct CommutationReport {
  bool functions = true;
  bool symbols = true;
  bool connections = true;
  std::string first_diff;
  bool ok() const noexcept { return functions && symbols && connections; }
};

CommutationReport check_commutation(const ResolvedIsometry& lift, const SingularFunction& f, const SingularSymbol& s,
                                    const SingularConnection& nabla);

}  // namespace orbq
