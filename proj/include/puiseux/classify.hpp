#pragma once

// Rule engine deciding the atomic-property lattice of a monoid. Every yes/no
// verdict carries the id of the rule that produced it and a citation.

#include "puiseux/model.hpp"
#include "puiseux/numsg.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace puiseux::classify {

using model::MonoidExpr;
using model::Tri;

// Declared in alphabetical order, which is also the serialization order.
enum class Property {
  ACCP,
  Antimatter,
  Atomic,
  BFM,
  FFM,
  FinitelyGenerated,
  HFM,
  Increasing,
  OHFM,
  Pruefer,
  RootClosed,
  UFM,
};

inline constexpr std::array<Property, 12> kAllProperties{
    Property::ACCP, Property::Antimatter,        Property::Atomic, Property::BFM,
    Property::FFM,  Property::FinitelyGenerated, Property::HFM,    Property::Increasing,
    Property::OHFM, Property::Pruefer,           Property::RootClosed, Property::UFM};

std::string_view property_name(Property p) noexcept;
std::optional<Property> property_from_name(std::string_view name);

/// Rule ids that may appear in certificates.
inline constexpr std::array<std::string_view, 14> kRuleIds{
    "R-FG", "R-INC", "R-BF", "R-SR", "R-PR", "R-COND", "R-HF",
    "R-OHF", "R-AM", "R-RC", "R-DT", "R-EQ10", "R-UNION-PR-T", "R-CHAIN"};

struct PropertyVerdict {
  Property property = Property::Atomic;
  Tri holds = Tri::Unknown;
  std::string certificate;  // "R-XX: citation"; empty when unknown

  /// The part of the certificate before the first ':'.
  std::string_view rule() const;
  friend bool operator==(const PropertyVerdict&, const PropertyVerdict&) = default;
};

/// One verdict per property, in kAllProperties order. Throws ContradictionError
/// if two rules disagree.
std::vector<PropertyVerdict> classify(const MonoidExpr& m);

const PropertyVerdict& verdict(const std::vector<PropertyVerdict>& v, Property p);

struct WitnessRow {
  MonoidExpr monoid;
  Property holds;             // verified yes
  Property fails;             // verified no
  std::string expected_holds_rule;
  std::string expected_fails_rule;
  PropertyVerdict holds_verdict;
  PropertyVerdict fails_verdict;

  bool verified() const;
};

/// Four monoids showing that no implication of the chain
/// FFM => BFM => ACCP => atomic (and FFM <= HFM) reverses.
std::vector<WitnessRow> witness_chain();

struct HfmCounterexample {
  std::uint64_t element = 0;
  numsg::FactorizationVector first;   // a2 copies of a1
  numsg::FactorizationVector second;  // a1 copies of a2
};

/// Two factorizations of a1 * a2 with different lengths. Throws Validation
/// when the embedding dimension is below 2.
HfmCounterexample hfm_counterexample(const numsg::NumericalMonoid& n);

}  // namespace puiseux::classify
