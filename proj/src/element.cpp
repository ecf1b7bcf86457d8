#include "doubling/element.hpp"

namespace doubling {

const char* kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::integers: return "integers";
    case GroupKind::zlex: return "zlex";
    case GroupKind::heisenberg: return "heisenberg";
    case GroupKind::bs12: return "bs12";
    case GroupKind::free2: return "free2";
  }
  return "?";
}

Dyadic Dyadic::make(mpz_class mantissa, mpz_class exponent) {
  if (mantissa == 0) return zero();
  // Strip factors of 2 from the mantissa into the exponent.
  unsigned long trailing = mpz_scan1(mantissa.get_mpz_t(), 0);
  if (trailing > 0) {
    mpz_fdiv_q_2exp(mantissa.get_mpz_t(), mantissa.get_mpz_t(), trailing);
    exponent += static_cast<long>(trailing);
  }
  return Dyadic{std::move(mantissa), std::move(exponent)};
}

namespace {

// Exponents stay desk-scale; shifts must fit a machine word for mpz_mul_2exp.
unsigned long shift_amount(const mpz_class& delta) {
  if (!delta.fits_ulong_p()) {
    throw ResourceCapError("dyadic exponent difference too large to represent");
  }
  return delta.get_ui();
}

}  // namespace

Dyadic Dyadic::add(const Dyadic& p, const Dyadic& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  // Align to the smaller exponent: m1*2^(e1-e) + m2*2^(e2-e) at e = min(e1,e2).
  const mpz_class e = p.e <= q.e ? p.e : q.e;
  mpz_class m1 = p.m, m2 = q.m;
  mpz_mul_2exp(m1.get_mpz_t(), m1.get_mpz_t(), shift_amount(p.e - e));
  mpz_mul_2exp(m2.get_mpz_t(), m2.get_mpz_t(), shift_amount(q.e - e));
  return make(m1 + m2, e);
}

Dyadic Dyadic::shifted(const mpz_class& shift) const {
  if (is_zero()) return zero();
  return Dyadic{m, e + shift};
}

int Dyadic::cmp(const Dyadic& p, const Dyadic& q) {
  const int sp = sgn(p.m), sq = sgn(q.m);
  if (sp != sq) return sp < sq ? -1 : 1;
  if (sp == 0) return 0;
  // Same nonzero sign: compare |m1|*2^e1 vs |m2|*2^e2 at a common exponent.
  const mpz_class e = p.e <= q.e ? p.e : q.e;
  mpz_class m1 = p.m, m2 = q.m;
  mpz_mul_2exp(m1.get_mpz_t(), m1.get_mpz_t(), shift_amount(p.e - e));
  mpz_mul_2exp(m2.get_mpz_t(), m2.get_mpz_t(), shift_amount(q.e - e));
  return ::cmp(m1, m2);
}

bool is_word_letter(char c) { return c == 'x' || c == 'y' || c == 'X' || c == 'Y'; }

char invert_letter(char c) {
  switch (c) {
    case 'x': return 'X';
    case 'X': return 'x';
    case 'y': return 'Y';
    case 'Y': return 'y';
  }
  return c;
}

std::string reduce_word(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (!out.empty() && out.back() == invert_letter(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

WordPayload WordPayload::make(const std::string& raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!is_word_letter(raw[i])) {
      throw ParseError(std::string("invalid word letter '") + raw[i] +
                           "', expected one of x, y, X, Y",
                       i);
    }
  }
  return WordPayload{reduce_word(raw)};
}

}  // namespace doubling
