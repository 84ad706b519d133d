#pragma once

// Symbolic Puiseux monoids. The family set is closed: every expression is one
// of the concrete families below, a rational rescaling of one, or the monoid
// generated by the union of two expressions.

#include "puiseux/exact.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace puiseux::model {

using exact::BigInt;
using exact::Rat;

enum class Tri { Yes, No, Unknown };

std::string_view tri_name(Tri t) noexcept;

/// A tri-state answer plus the rule and citation that justify it.
struct Verdict {
  Tri holds = Tri::Unknown;
  std::string certificate;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

class MonoidExpr;

/// <g_1, ..., g_k>; gens positive, distinct, ascending.
struct FiniteGen {
  std::vector<Rat> gens;
  friend bool operator==(const FiniteGen&, const FiniteGen&) = default;
};

/// S_r = <r^n | n >= 0>.
struct CyclicSemiring {
  Rat base;
  friend bool operator==(const CyclicSemiring&, const CyclicSemiring&) = default;
};

/// <1/p | p prime>.
struct PrimeReciprocal {
  friend bool operator==(const PrimeReciprocal&, const PrimeReciprocal&) = default;
};

/// {0} union [r, inf) intersected with Q.
struct DenseTail {
  Rat start;
  friend bool operator==(const DenseTail&, const DenseTail&) = default;
};

/// <(p-1)/p | p prime>.
struct PrimeFracIncreasing {
  friend bool operator==(const PrimeFracIncreasing&, const PrimeFracIncreasing&) = default;
};

/// <(p_{2n}^2 + 1)/p_{2n}, (p_{2n+1} + 1)/p_{2n+1} | n >= 1>, p_k the k-th prime.
struct IncreasingDenom {
  friend bool operator==(const IncreasingDenom&, const IncreasingDenom&) = default;
};

/// <[m, 2m-1] union {q p^{-m-i} | i >= 1}> with p != q primes and q > m.
struct FiniteAtomExample {
  std::uint64_t m = 1;
  std::uint64_t p = 2;
  std::uint64_t q = 3;
  friend bool operator==(const FiniteAtomExample&, const FiniteAtomExample&) = default;
};

struct Scale;
struct Union;

class MonoidExpr {
 public:
  struct Node;

  /// The monoid <1>.
  MonoidExpr();
  explicit MonoidExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }

  template <class T>
  const T* as() const;

  template <class T>
  bool is() const { return as<T>() != nullptr; }

  friend bool operator==(const MonoidExpr& a, const MonoidExpr& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Scale {
  Rat factor;
  MonoidExpr inner;
  friend bool operator==(const Scale&, const Scale&) = default;
};

/// The monoid generated by left and right.
struct Union {
  MonoidExpr left;
  MonoidExpr right;
  friend bool operator==(const Union&, const Union&) = default;
};

using Family = std::variant<FiniteGen, CyclicSemiring, PrimeReciprocal, DenseTail,
                            PrimeFracIncreasing, IncreasingDenom, FiniteAtomExample,
                            Scale, Union>;

struct MonoidExpr::Node {
  Family value;
};

template <class T>
const T* MonoidExpr::as() const {
  return std::get_if<T>(&node_->value);
}

// Canonicalizing constructors. All throw Error(Validation) on bad parameters.
MonoidExpr finite_gen(std::vector<Rat> gens);
MonoidExpr cyclic_semiring(const Rat& base);
MonoidExpr prime_reciprocal();
MonoidExpr dense_tail(const Rat& start);
MonoidExpr prime_frac_increasing();
MonoidExpr increasing_denom();
MonoidExpr finite_atom_example(std::uint64_t m, std::uint64_t p, std::uint64_t q);
/// Folds c = 1, nested scales, and scaled dense tails.
MonoidExpr scale(const Rat& factor, const MonoidExpr& inner);
/// Flattens, merges dense tails into the smallest one, drops duplicates, and
/// returns Union(rest, T(r)) when a dense tail is present; otherwise the
/// operands are right-associated.
MonoidExpr union_of(const MonoidExpr& left, const MonoidExpr& right);

/// Parses the description language. Throws ParseError subclasses carrying the
/// byte offset of the problem.
///
///   expr   := scaled ( "union" scaled )*
///   scaled := [ rat "*" ] atom
///   atom   := "N" | "<" rat ("," rat)* ">" | "S(" rat ")" | "T(" rat ")"
///           | "PR" | "PF" | "ID" | "FA(" int "," int "," int ")" | "(" expr ")"
///   rat    := int [ "/" int ]
MonoidExpr parse(std::string_view text);

/// Canonical text accepted by parse.
std::string print(const MonoidExpr& m);

struct SignedRat {
  bool negative = false;
  Rat magnitude;
};

struct Orientation {
  int sign = 1;
  std::vector<Rat> gens;
};

/// Chooses the orientation in which a set of nonzero rationals generates a
/// Puiseux monoid. Mixed signs generate a group and are rejected.
Orientation orient(std::span<const SignedRat> values);

struct MonoidMeta {
  bool zero_limit_point = false;
  bool increasing = false;
  bool strongly_increasing = false;
  bool finitely_generated = false;
  Tri nonempty_conductor = Tri::Unknown;
  std::string conductor_reason;
};

MonoidMeta meta(const MonoidExpr& m);

/// Splits off the outermost scaling. Dense tails report (r, T(1)) since every
/// T(r) is r * T(1).
std::pair<Rat, MonoidExpr> strip_scale(const MonoidExpr& m);

/// A finite generating set when the expression is finitely generated.
std::optional<std::vector<Rat>> finite_generators(const MonoidExpr& m);

/// Union operands in order (a single-element list for non-unions).
std::vector<MonoidExpr> union_operands(const MonoidExpr& m);

}  // namespace puiseux::model
