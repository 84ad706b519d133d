#include "puiseux/model.hpp"

namespace puiseux::model {
namespace {

struct MetaTable {
  MonoidMeta operator()(const FiniteGen&) const {
    return {false, true, true, true, Tri::Yes,
            "finitely generated: the conductor is the tail above the Frobenius number"};
  }

  MonoidMeta operator()(const CyclicSemiring& c) const {
    const Rat& r = c.base;
    if (r.is_integer()) {
      return {false, true, true, true, Tri::Yes, "S_r with r in N equals N0, which is root-closed"};
    }
    if (r > Rat(1)) {
      return {false, true, true, false, Tri::No,
              "S_r with r > 1 not in N: the root closure minus S_r is unbounded"};
    }
    if (r.num() == 1) {
      return {true, false, false, false, Tri::Yes,
              "S_{1/b} is root-closed, so its conductor is the whole monoid"};
    }
    return {true, false, false, false, Tri::Unknown, "no result for S_r with r < 1, n(r) > 1"};
  }

  MonoidMeta operator()(const PrimeReciprocal&) const {
    return {true, false, false, false, Tri::Unknown, "no conductor result for <1/p>"};
  }

  MonoidMeta operator()(const DenseTail&) const {
    return {false, false, false, false, Tri::Yes, "{0} union Q>=r contains every rational above r"};
  }

  MonoidMeta operator()(const PrimeFracIncreasing&) const {
    return {false, true, false, false, Tri::Unknown, "no conductor result for <(p-1)/p>"};
  }

  MonoidMeta operator()(const IncreasingDenom&) const {
    return {false, false, false, false, Tri::Unknown, "no conductor result for the increasing-denominator family"};
  }

  MonoidMeta operator()(const FiniteAtomExample&) const {
    return {true, false, false, false, Tri::Unknown, "no conductor result for the m-atom family"};
  }

  MonoidMeta operator()(const Scale& s) const { return meta(s.inner); }

  MonoidMeta operator()(const Union&) const { return {}; }
};

}  // namespace

MonoidMeta meta(const MonoidExpr& m) {
  const auto* u = m.as<Union>();
  if (u == nullptr) return std::visit(MetaTable{}, m.node().value);

  MonoidMeta out;
  bool all_fg = true;
  for (const auto& part : union_operands(m)) {
    MonoidMeta pm = meta(part);
    out.zero_limit_point = out.zero_limit_point || pm.zero_limit_point;
    all_fg = all_fg && pm.finitely_generated;
  }
  out.finitely_generated = all_fg;
  out.increasing = all_fg;
  out.strongly_increasing = all_fg;
  if (all_fg) {
    out.nonempty_conductor = Tri::Yes;
    out.conductor_reason = "finitely generated: the conductor is the tail above the Frobenius number";
  } else if (u->right.is<DenseTail>()) {
    out.nonempty_conductor = Tri::Yes;
    out.conductor_reason = "contains a dense tail Q>=r, so the root closure minus M is bounded by r";
  } else {
    out.conductor_reason = "no conductor result for this union";
  }
  return out;
}

}  // namespace puiseux::model
