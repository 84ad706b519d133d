#include "puiseux/error.hpp"
#include "puiseux/model.hpp"

#include <cctype>

namespace puiseux::model {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MonoidExpr parse_all() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "expression");
    MonoidExpr m = expr();
    skip_ws();
    if (!at_end()) throw SyntaxError(pos_, "'union' or end of input");
    return m;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return !at_end() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c) throw SyntaxError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    return text_.substr(pos_, end - pos_);
  }

  template <class F>
  auto validated(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(ErrorCode::Validation, at,
                       "invalid monoid at " + std::to_string(at) + ": " + e.what());
    }
  }

  BigInt integer() {
    skip_ws();
    if (!at_end() && text_[pos_] == '-') {
      throw ParseError(ErrorCode::NegativeGenerator, pos_,
                       "negative value at " + std::to_string(pos_) +
                           ": Puiseux monoids live in the nonnegative rationals");
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint64_t small_integer() {
    std::size_t at = pos_;
    BigInt n = integer();
    if (n > std::numeric_limits<std::uint64_t>::max()) {
      throw ParseError(ErrorCode::Validation, at, "integer too large at " + std::to_string(at));
    }
    return static_cast<std::uint64_t>(n);
  }

  Rat rational() {
    skip_ws();
    std::size_t at = pos_;
    BigInt num = integer();
    BigInt den = 1;
    if (peek('/')) {
      ++pos_;
      skip_ws();
      std::size_t den_at = pos_;
      den = integer();
      if (den.is_zero()) {
        throw ParseError(ErrorCode::Validation, den_at,
                         "zero denominator at " + std::to_string(den_at));
      }
    }
    return validated(at, [&] { return Rat::make(num, den); });
  }

  MonoidExpr expr() {
    MonoidExpr m = scaled();
    while (peek_word() == "union") {
      pos_ += 5;
      MonoidExpr rhs = scaled();
      m = union_of(m, rhs);
    }
    return m;
  }

  MonoidExpr scaled() {
    skip_ws();
    if (!at_end() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      std::size_t at = pos_;
      Rat factor = rational();
      expect('*');
      MonoidExpr inner = atom();
      return validated(at, [&] { return scale(factor, inner); });
    }
    return atom();
  }

  MonoidExpr atom() {
    skip_ws();
    std::size_t at = pos_;
    if (peek('<')) {
      ++pos_;
      std::vector<Rat> gens{rational()};
      while (peek(',')) {
        ++pos_;
        gens.push_back(rational());
      }
      skip_ws();
      if (!peek('>')) throw SyntaxError(pos_, "',' or '>'");
      ++pos_;
      return validated(at, [&] { return finite_gen(std::move(gens)); });
    }
    if (peek('(')) {
      ++pos_;
      MonoidExpr inner = expr();
      skip_ws();
      if (!peek(')')) throw SyntaxError(pos_, "'union' or ')'");
      ++pos_;
      return inner;
    }
    std::string_view word = peek_word();
    if (word.empty()) throw SyntaxError(pos_, "monoid (N, <...>, S(r), T(r), PR, PF, ID, FA(m,p,q) or '(')");
    pos_ += word.size();
    if (word == "N") return finite_gen({Rat(1)});
    if (word == "PR") return prime_reciprocal();
    if (word == "PF") return prime_frac_increasing();
    if (word == "ID") return increasing_denom();
    if (word == "S" || word == "T") {
      expect('(');
      Rat r = rational();
      expect(')');
      return validated(at, [&] { return word == "S" ? cyclic_semiring(r) : dense_tail(r); });
    }
    if (word == "FA") {
      expect('(');
      std::uint64_t m = small_integer();
      expect(',');
      std::uint64_t p = small_integer();
      expect(',');
      std::uint64_t q = small_integer();
      expect(')');
      return validated(at, [&] { return finite_atom_example(m, p, q); });
    }
    pos_ = at;
    skip_ws();
    throw SyntaxError(pos_, "monoid (N, <...>, S(r), T(r), PR, PF, ID, FA(m,p,q) or '(')");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonoidExpr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace puiseux::model
