#pragma once

#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "doubling/errors.hpp"

namespace doubling {

/// The five concrete bi-ordered groups this library computes in.
enum class GroupKind { integers, zlex, heisenberg, bs12, free2 };

const char* kind_name(GroupKind kind);

/// Element of (Z, +).
struct IntPayload {
  mpz_class n;
  bool operator==(const IntPayload& o) const { return n == o.n; }
};

/// Element of (Z^d, +), ordered lexicographically.
struct LexPayload {
  std::vector<mpz_class> v;
  bool operator==(const LexPayload& o) const { return v == o.v; }
};

/// Element of the discrete Heisenberg group:
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
struct HeisenbergPayload {
  mpz_class a, b, c;
  bool operator==(const HeisenbergPayload& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

/// Dyadic rational m * 2^e in canonical form: m odd, or (m, e) = (0, 0).
struct Dyadic {
  mpz_class m;
  mpz_class e;

  static Dyadic zero() { return Dyadic{0, 0}; }
  /// Canonicalizes an arbitrary mantissa/exponent pair.
  static Dyadic make(mpz_class mantissa, mpz_class exponent);
  static Dyadic add(const Dyadic& p, const Dyadic& q);
  Dyadic negated() const { return Dyadic{-m, m == 0 ? mpz_class(0) : e}; }
  /// Multiplies by 2^shift (exact for any integer shift).
  Dyadic shifted(const mpz_class& shift) const;
  bool is_zero() const { return m == 0; }
  /// Sign-aware comparison as rational numbers.
  static int cmp(const Dyadic& p, const Dyadic& q);

  bool operator==(const Dyadic& o) const { return m == o.m && e == o.e; }
};

/// Element of BS(1,2) as the semidirect product Z[1/2] x| Z:
/// (q,n)(q',n') = (q + 2^n q', n+n').
struct Bs12Payload {
  Dyadic q;
  mpz_class n;
  bool operator==(const Bs12Payload& o) const { return q == o.q && n == o.n; }
};

/// Freely reduced word over {x, y, x^-1, y^-1}, stored as a string over
/// {'x','y','X','Y'} with uppercase meaning inverse.
struct WordPayload {
  std::string letters;

  /// Validates the alphabet and freely reduces.
  static WordPayload make(const std::string& raw);
  bool operator==(const WordPayload& o) const { return letters == o.letters; }
};

bool is_word_letter(char c);
char invert_letter(char c);
/// Freely reduces a word over the alphabet above (assumes valid letters).
std::string reduce_word(const std::string& raw);

/// Canonical-form element of one of the five groups. Immutable value; all
/// arithmetic lives on Group so the descriptor context is always available.
class GroupElement {
public:
  using Payload =
      std::variant<IntPayload, LexPayload, HeisenbergPayload, Bs12Payload, WordPayload>;

  /// Defaults to the identity of (Z, +) so aggregates can hold elements.
  GroupElement() : kind_(GroupKind::integers), payload_(IntPayload{}) {}
  GroupElement(GroupKind kind, Payload payload)
      : kind_(kind), payload_(std::move(payload)) {}

  GroupKind kind() const { return kind_; }
  const Payload& payload() const { return payload_; }

  const IntPayload& as_int() const { return std::get<IntPayload>(payload_); }
  const LexPayload& as_lex() const { return std::get<LexPayload>(payload_); }
  const HeisenbergPayload& as_heisenberg() const {
    return std::get<HeisenbergPayload>(payload_);
  }
  const Bs12Payload& as_bs12() const { return std::get<Bs12Payload>(payload_); }
  const WordPayload& as_word() const { return std::get<WordPayload>(payload_); }

  bool operator==(const GroupElement& o) const {
    return kind_ == o.kind_ && payload_ == o.payload_;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

private:
  GroupKind kind_;
  Payload payload_;
};

}  // namespace doubling
