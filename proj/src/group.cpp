#include "doubling/group.hpp"

#include <sstream>

namespace doubling {

GroupDescriptor GroupDescriptor::integers() { return GroupDescriptor{GroupKind::integers, 0, 0}; }

GroupDescriptor GroupDescriptor::zlex(int dim) {
  if (dim < 1) throw Error("zlex dimension must be a positive integer");
  return GroupDescriptor{GroupKind::zlex, dim, 0};
}

GroupDescriptor GroupDescriptor::heisenberg() {
  return GroupDescriptor{GroupKind::heisenberg, 0, 0};
}

GroupDescriptor GroupDescriptor::bs12() { return GroupDescriptor{GroupKind::bs12, 0, 0}; }

GroupDescriptor GroupDescriptor::free2(int magnus_degree_cap) {
  if (magnus_degree_cap < 2) throw Error("magnus degree cap must be at least 2");
  return GroupDescriptor{GroupKind::free2, 0, magnus_degree_cap};
}

Group::Group(GroupDescriptor descriptor) : descriptor_(descriptor) {
  switch (descriptor_.kind) {
    case GroupKind::zlex:
      if (descriptor_.dim < 1) throw Error("zlex dimension must be a positive integer");
      break;
    case GroupKind::free2:
      if (descriptor_.magnus_degree_cap < 2)
        throw Error("magnus degree cap must be at least 2");
      break;
    default:
      break;
  }
}

void Group::check_kind(const GroupElement& a) const {
  if (a.kind() != descriptor_.kind) {
    throw KindMismatchError(std::string("element of kind ") + kind_name(a.kind()) +
                            " used in group " + kind_name(descriptor_.kind));
  }
  if (descriptor_.kind == GroupKind::zlex &&
      a.as_lex().v.size() != static_cast<std::size_t>(descriptor_.dim)) {
    throw KindMismatchError("zlex element dimension does not match the group");
  }
}

GroupElement Group::identity() const {
  switch (descriptor_.kind) {
    case GroupKind::integers:
      return GroupElement(GroupKind::integers, IntPayload{0});
    case GroupKind::zlex:
      return GroupElement(GroupKind::zlex,
                          LexPayload{std::vector<mpz_class>(descriptor_.dim, mpz_class(0))});
    case GroupKind::heisenberg:
      return GroupElement(GroupKind::heisenberg, HeisenbergPayload{0, 0, 0});
    case GroupKind::bs12:
      return GroupElement(GroupKind::bs12, Bs12Payload{Dyadic::zero(), 0});
    case GroupKind::free2:
      return GroupElement(GroupKind::free2, WordPayload{std::string()});
  }
  throw Error("unreachable");
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
  check_kind(a);
  check_kind(b);
  switch (descriptor_.kind) {
    case GroupKind::integers:
      return GroupElement(GroupKind::integers, IntPayload{a.as_int().n + b.as_int().n});
    case GroupKind::zlex: {
      const auto& u = a.as_lex().v;
      const auto& w = b.as_lex().v;
      std::vector<mpz_class> out(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + w[i];
      return GroupElement(GroupKind::zlex, LexPayload{std::move(out)});
    }
    case GroupKind::heisenberg: {
      const auto& p = a.as_heisenberg();
      const auto& q = b.as_heisenberg();
      return GroupElement(GroupKind::heisenberg,
                          HeisenbergPayload{p.a + q.a, p.b + q.b, p.c + q.c + p.a * q.b});
    }
    case GroupKind::bs12: {
      const auto& p = a.as_bs12();
      const auto& q = b.as_bs12();
      return GroupElement(GroupKind::bs12,
                          Bs12Payload{Dyadic::add(p.q, q.q.shifted(p.n)), p.n + q.n});
    }
    case GroupKind::free2:
      return GroupElement(GroupKind::free2,
                          WordPayload{reduce_word(a.as_word().letters + b.as_word().letters)});
  }
  throw Error("unreachable");
}

GroupElement Group::inverse(const GroupElement& a) const {
  check_kind(a);
  switch (descriptor_.kind) {
    case GroupKind::integers:
      return GroupElement(GroupKind::integers, IntPayload{-a.as_int().n});
    case GroupKind::zlex: {
      std::vector<mpz_class> out;
      out.reserve(a.as_lex().v.size());
      for (const mpz_class& c : a.as_lex().v) out.push_back(-c);
      return GroupElement(GroupKind::zlex, LexPayload{std::move(out)});
    }
    case GroupKind::heisenberg: {
      const auto& p = a.as_heisenberg();
      return GroupElement(GroupKind::heisenberg,
                          HeisenbergPayload{-p.a, -p.b, p.a * p.b - p.c});
    }
    case GroupKind::bs12: {
      const auto& p = a.as_bs12();
      // (q,n)^-1 = (-q * 2^-n, -n).
      return GroupElement(GroupKind::bs12, Bs12Payload{p.q.negated().shifted(-p.n), -p.n});
    }
    case GroupKind::free2: {
      const std::string& w = a.as_word().letters;
      std::string out;
      out.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(invert_letter(*it));
      return GroupElement(GroupKind::free2, WordPayload{std::move(out)});
    }
  }
  throw Error("unreachable");
}

GroupElement Group::power(const GroupElement& a, const mpz_class& n) const {
  check_kind(a);
  if (n < 0) return inverse(power(a, mpz_class(-n)));
  GroupElement result = identity();
  GroupElement base = a;
  mpz_class e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

namespace {

Ordering from_cmp(int c) {
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

}  // namespace

Ordering Group::compare(const GroupElement& a, const GroupElement& b) const {
  check_kind(a);
  check_kind(b);
  switch (descriptor_.kind) {
    case GroupKind::integers:
      return from_cmp(cmp(a.as_int().n, b.as_int().n));
    case GroupKind::zlex: {
      const auto& u = a.as_lex().v;
      const auto& w = b.as_lex().v;
      for (std::size_t i = 0; i < u.size(); ++i) {
        const int c = cmp(u[i], w[i]);
        if (c != 0) return from_cmp(c);
      }
      return Ordering::Equal;
    }
    case GroupKind::heisenberg: {
      // Lex on the abelianization (a, b), then the central coordinate.
      const auto& p = a.as_heisenberg();
      const auto& q = b.as_heisenberg();
      int c = cmp(p.a, q.a);
      if (c == 0) c = cmp(p.b, q.b);
      if (c == 0) c = cmp(p.c, q.c);
      return from_cmp(c);
    }
    case GroupKind::bs12: {
      const auto& p = a.as_bs12();
      const auto& q = b.as_bs12();
      const int c = cmp(p.n, q.n);
      if (c != 0) return from_cmp(c);
      return from_cmp(Dyadic::cmp(p.q, q.q));
    }
    case GroupKind::free2: {
      const std::string& u = a.as_word().letters;
      const std::string& w = b.as_word().letters;
      if (u == w) return Ordering::Equal;
      const int cap = descriptor_.magnus_degree_cap;
      auto verdict = MagnusSeries::compare(magnus_expand(u, cap), magnus_expand(w, cap));
      if (!verdict) {
        throw OrderUndecidedError("expansions of distinct words \"" + u + "\" and \"" + w +
                                  "\" agree up to degree " + std::to_string(cap) +
                                  "; raise the magnus degree cap");
      }
      return *verdict;
    }
  }
  throw Error("unreachable");
}

bool Group::commutes(const GroupElement& a, const GroupElement& b) const {
  return multiply(a, b) == multiply(b, a);
}

GroupElement Group::integer(mpz_class n) const {
  if (descriptor_.kind != GroupKind::integers) throw KindMismatchError("not an integers group");
  return GroupElement(GroupKind::integers, IntPayload{std::move(n)});
}

GroupElement Group::lex_vector(std::vector<mpz_class> v) const {
  if (descriptor_.kind != GroupKind::zlex) throw KindMismatchError("not a zlex group");
  if (v.size() != static_cast<std::size_t>(descriptor_.dim)) {
    throw KindMismatchError("zlex element dimension does not match the group");
  }
  return GroupElement(GroupKind::zlex, LexPayload{std::move(v)});
}

GroupElement Group::heisenberg_element(mpz_class a, mpz_class b, mpz_class c) const {
  if (descriptor_.kind != GroupKind::heisenberg) {
    throw KindMismatchError("not a heisenberg group");
  }
  return GroupElement(GroupKind::heisenberg,
                      HeisenbergPayload{std::move(a), std::move(b), std::move(c)});
}

GroupElement Group::bs12_element(mpz_class mantissa, mpz_class exponent, mpz_class n) const {
  if (descriptor_.kind != GroupKind::bs12) throw KindMismatchError("not a bs12 group");
  return GroupElement(GroupKind::bs12,
                      Bs12Payload{Dyadic::make(std::move(mantissa), std::move(exponent)),
                                  std::move(n)});
}

GroupElement Group::word(const std::string& letters) const {
  if (descriptor_.kind != GroupKind::free2) throw KindMismatchError("not a free2 group");
  return GroupElement(GroupKind::free2, WordPayload::make(letters));
}

std::string describe_element(const GroupElement& a) {
  std::ostringstream os;
  switch (a.kind()) {
    case GroupKind::integers:
      os << a.as_int().n;
      break;
    case GroupKind::zlex: {
      os << '(';
      const auto& v = a.as_lex().v;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
      }
      os << ')';
      break;
    }
    case GroupKind::heisenberg: {
      const auto& p = a.as_heisenberg();
      os << '(' << p.a << ',' << p.b << ',' << p.c << ')';
      break;
    }
    case GroupKind::bs12: {
      const auto& p = a.as_bs12();
      os << "(q=" << p.q.m;
      if (p.q.e != 0) os << "*2^" << p.q.e;
      os << ",n=" << p.n << ')';
      break;
    }
    case GroupKind::free2: {
      const std::string& w = a.as_word().letters;
      os << (w.empty() ? "1" : w);
      break;
    }
  }
  return os.str();
}

}  // namespace doubling
