#include "puiseux/classify.hpp"

#include "puiseux/closure.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"

#include <utility>

namespace puiseux::classify {
namespace {

using namespace model;
using P = Property;

constexpr std::size_t idx(P p) { return static_cast<std::size_t>(p); }

class Engine {
 public:
  // Returns true when the verdict is new.
  bool set(P p, bool holds, const std::string& certificate) {
    auto& slot = verdicts_[idx(p)];
    const Tri value = holds ? Tri::Yes : Tri::No;
    if (slot.holds == Tri::Unknown) {
      slot.holds = value;
      slot.certificate = certificate;
      return true;
    }
    if (slot.holds != value) {
      throw ContradictionError("rules disagree on " + std::string(property_name(p)) + ": '" +
                               slot.certificate + "' vs '" + certificate + "'");
    }
    return false;
  }

  bool is(P p, bool holds) const {
    return verdicts_[idx(p)].holds == (holds ? Tri::Yes : Tri::No);
  }

  std::vector<PropertyVerdict> result() const {
    std::vector<PropertyVerdict> out;
    for (auto p : kAllProperties) {
      PropertyVerdict v = verdicts_[idx(p)];
      v.property = p;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::array<PropertyVerdict, kAllProperties.size()> verdicts_{};
};

struct Facts {
  MonoidExpr core;
  MonoidMeta meta;
  factor::AtomCount atoms;
  Verdict root_closed;
};

// Family and theorem rules, in catalog order.
void apply_rules(const Facts& f, Engine& e) {
  const MonoidMeta& m = f.meta;

  if (m.finitely_generated) {
    const std::string c = "R-FG: Prop. 'fg PM are NM' (fg iff atomic with finitely many atoms)";
    e.set(P::FinitelyGenerated, true, c);
    e.set(P::Atomic, true, c);
    e.set(P::Increasing, true, c);
    e.set(P::FFM, true, c + "; fg => increasing => FFM");
  } else {
    e.set(P::FinitelyGenerated, false, "R-FG: family table, the generating set is infinite and irredundant");
    if (f.atoms.known && !f.atoms.infinite && f.atoms.count > 0) {
      e.set(P::Atomic, false,
            "R-FG: Prop. 'atomic with finitely many atoms iff fg'; finitely many atoms but not fg");
    }
  }

  if (m.increasing) {
    const std::string c = "R-INC: Thm. 'Every increasing Puiseux monoid is an FFM'";
    e.set(P::Increasing, true, c);
    e.set(P::FFM, true, c);
    e.set(P::Atomic, true, "R-INC: Prop. 'Every increasing Puiseux monoid is atomic'");
  } else if (m.zero_limit_point) {
    e.set(P::Increasing, false,
          "R-INC: an increasing generating sequence is bounded below by its first term, but 0 is a limit point");
  }

  if (m.nonempty_conductor == Tri::Yes) {
    const std::string c = "R-COND: Thm. 'nontrivial Puiseux monoid with nonempty conductor' (BFM iff ACCP iff 0 not a limit point)";
    if (!m.zero_limit_point) {
      e.set(P::BFM, true, c);
    } else {
      e.set(P::ACCP, false, c);
      e.set(P::BFM, false, c);
    }
  }

  if (!m.zero_limit_point) {
    const std::string c = "R-BF: Thm. 'BF sufficient condition' (0 is not a limit point of M*)";
    e.set(P::BFM, true, c);
    e.set(P::Atomic, true, c);
  }

  if (const auto* s = f.core.as<CyclicSemiring>(); s && !s->base.is_integer()) {
    const std::string c = "R-SR: Prop. 'atomic classification of multiplicative cyclic Puiseux monoids'";
    if (s->base.num() == 1) {
      e.set(P::Antimatter, true, c + " (r = 1/b: S_r is antimatter)");
      e.set(P::Atomic, false, c + " (r = 1/b: S_r is antimatter)");
    } else {
      e.set(P::Atomic, true, c + " (atomic with A(S_r) = {r^n})");
      if (s->base < exact::Rat(1)) {
        e.set(P::ACCP, false, "R-SR: Cor. 'does not satisfy the ACCP' (n(r) r^n = d(r) r^{n+1})");
      }
    }
  }

  if (f.core.is<PrimeReciprocal>()) {
    e.set(P::ACCP, true, "R-PR: Thm. 'a class of ACCP monoids' (submonoids of <1/p | p prime> satisfy the ACCP)");
    e.set(P::BFM, false, "R-PR: Cor. 'ACCP but not BFM' (p in L(1) for every prime p)");
  }

  if (e.is(P::Atomic, true) && f.atoms.known) {
    const std::string c = "R-HF: Prop. 'HF PM characterization' (HFM iff UFM iff one atom)";
    const bool one = !f.atoms.infinite && f.atoms.count == 1;
    e.set(P::HFM, one, c);
    e.set(P::UFM, one, c);
    const bool at_most_two = !f.atoms.infinite && f.atoms.count <= 2;
    e.set(P::OHFM, at_most_two,
          "R-OHF: Prop. 'OHF PM characterization' (OHFM iff atomic of embedding dimension 1 or 2)");
  }

  if (f.atoms.known) {
    const bool empty = !f.atoms.infinite && f.atoms.count == 0;
    const std::string c = "R-AM: antimatter means A(M) is empty; atom set from the family description";
    e.set(P::Antimatter, empty, c);
    if (empty) e.set(P::Atomic, false, c + "; a nontrivial antimatter monoid is not atomic");
  }

  if (f.root_closed.holds != Tri::Unknown) {
    const bool rc = f.root_closed.holds == Tri::Yes;
    e.set(P::RootClosed, rc, f.root_closed.certificate);
    e.set(P::Pruefer, rc, "R-RC: Cor. 'closure of a PM' (Pruefer iff root-closed)");
  }

  if (f.core.is<DenseTail>()) {
    e.set(P::FFM, false, "R-DT: Example 'BF but not FF' (|Z(x)| is infinite for x >= 2r)");
  }

  if (f.core.is<IncreasingDenom>()) {
    e.set(P::FFM, true, "R-EQ10: Example 'FF PM that is not increasing' (Hence M is an FFM)");
    e.set(P::Increasing, false, "R-EQ10: Example 'FF PM that is not increasing' (it cannot be increasing)");
  }

  if (factor::pr_tail_union_factor(f.core)) {
    e.set(P::Atomic, true, "R-UNION-PR-T: Example '<1/p> u Q>=1' (M is atomic; asserted, not verified)");
    e.set(P::ACCP, false, "R-UNION-PR-T: Example '<1/p> u Q>=1' (M does not satisfy the ACCP)");
  }
}

struct Implication {
  P from;
  P to;
};

constexpr std::array<Implication, 11> kChain{{
    {P::UFM, P::HFM},
    {P::UFM, P::FFM},
    {P::UFM, P::OHFM},
    {P::HFM, P::BFM},
    {P::FFM, P::BFM},
    {P::BFM, P::ACCP},
    {P::ACCP, P::Atomic},
    {P::OHFM, P::Atomic},
    {P::FinitelyGenerated, P::FFM},
    {P::Increasing, P::FFM},
    {P::Increasing, P::Atomic},
}};

std::string chain_cite(P from, bool from_holds, P to, bool to_holds) {
  return "R-CHAIN: implication chain UFM => FFM => BFM => ACCP => atomic (with UFM => HFM => BFM, "
         "UFM => OHFM => atomic, increasing => FFM); " +
         std::string(property_name(from)) + (from_holds ? " holds" : " fails") + " so " +
         std::string(property_name(to)) + (to_holds ? " holds" : " fails");
}

bool apply_chain(Engine& e) {
  bool changed = false;
  for (auto [from, to] : kChain) {
    if (e.is(from, true)) changed |= e.set(to, true, chain_cite(from, true, to, true));
    if (e.is(to, false)) changed |= e.set(from, false, chain_cite(to, false, from, false));
  }
  if (e.is(P::Antimatter, true)) {
    changed |= e.set(P::Atomic, false, chain_cite(P::Antimatter, true, P::Atomic, false));
  }
  if (e.is(P::Atomic, true)) {
    changed |= e.set(P::Antimatter, false, chain_cite(P::Atomic, true, P::Antimatter, false));
  }
  for (auto [a, b] : {std::pair{P::RootClosed, P::Pruefer}, std::pair{P::Pruefer, P::RootClosed}}) {
    for (bool v : {true, false}) {
      if (e.is(a, v)) changed |= e.set(b, v, "R-RC: Cor. 'closure of a PM' (Pruefer iff root-closed)");
    }
  }
  return changed;
}

}  // namespace

std::string_view property_name(Property p) noexcept {
  switch (p) {
    case P::ACCP: return "ACCP";
    case P::Antimatter: return "Antimatter";
    case P::Atomic: return "Atomic";
    case P::BFM: return "BFM";
    case P::FFM: return "FFM";
    case P::FinitelyGenerated: return "FinitelyGenerated";
    case P::HFM: return "HFM";
    case P::Increasing: return "Increasing";
    case P::OHFM: return "OHFM";
    case P::Pruefer: return "Pruefer";
    case P::RootClosed: return "RootClosed";
    case P::UFM: return "UFM";
  }
  return "?";
}

std::optional<Property> property_from_name(std::string_view name) {
  for (auto p : kAllProperties) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view PropertyVerdict::rule() const {
  std::string_view c = certificate;
  return c.substr(0, c.find(':'));
}

std::vector<PropertyVerdict> classify(const MonoidExpr& m) {
  // Rescaling is an isomorphism, so only the core matters.
  auto [factor_unused, core] = strip_scale(m);
  (void)factor_unused;
  Facts facts{core, meta(core), factor::atom_count(factor::atoms(core)), closure::is_root_closed(core)};

  Engine e;
  bool changed = true;
  while (changed) {
    apply_rules(facts, e);
    changed = apply_chain(e);
  }
  return e.result();
}

const PropertyVerdict& verdict(const std::vector<PropertyVerdict>& v, Property p) {
  return v.at(idx(p));
}

bool WitnessRow::verified() const {
  return holds_verdict.holds == Tri::Yes && fails_verdict.holds == Tri::No &&
         holds_verdict.rule() == expected_holds_rule && fails_verdict.rule() == expected_fails_rule;
}

std::vector<WitnessRow> witness_chain() {
  struct Spec {
    MonoidExpr monoid;
    P holds;
    P fails;
    const char* holds_rule;
    const char* fails_rule;
  };
  const std::array<Spec, 4> rows{{
      {cyclic_semiring(exact::Rat::make(2, 3)), P::Atomic, P::ACCP, "R-SR", "R-SR"},
      {prime_reciprocal(), P::ACCP, P::BFM, "R-PR", "R-PR"},
      {dense_tail(exact::Rat(1)), P::BFM, P::FFM, "R-COND", "R-DT"},
      {prime_frac_increasing(), P::FFM, P::HFM, "R-INC", "R-HF"},
  }};
  std::vector<WitnessRow> out;
  for (const auto& r : rows) {
    auto v = classify(r.monoid);
    out.push_back({r.monoid, r.holds, r.fails, r.holds_rule, r.fails_rule, verdict(v, r.holds),
                   verdict(v, r.fails)});
  }
  return out;
}

HfmCounterexample hfm_counterexample(const numsg::NumericalMonoid& n) {
  const auto& a = n.gens();
  if (a.size() < 2) {
    throw Error(ErrorCode::Validation, "hfm_counterexample needs at least two generators");
  }
  HfmCounterexample out;
  out.element = a[0] * a[1];
  out.first.counts.assign(a.size(), 0);
  out.second.counts.assign(a.size(), 0);
  out.first.counts[0] = a[1];
  out.second.counts[1] = a[0];
  return out;
}

}  // namespace puiseux::classify
