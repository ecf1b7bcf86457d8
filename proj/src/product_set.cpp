#include "doubling/product_set.hpp"

#include <algorithm>

namespace doubling {

OrderedSet make_ordered_set(const Group& group, std::vector<GroupElement> raw) {
  if (raw.empty()) throw Error("an ordered set needs at least one element");
  for (const GroupElement& e : raw) {
    if (e.kind() != group.kind()) {
      throw KindMismatchError("set element kind does not match the group");
    }
  }
  std::sort(raw.begin(), raw.end(),
            [&](const GroupElement& a, const GroupElement& b) { return group.less(a, b); });
  std::vector<GroupElement> elements;
  elements.reserve(raw.size());
  int dropped = 0;
  for (GroupElement& e : raw) {
    if (!elements.empty() && elements.back() == e) {
      ++dropped;
    } else {
      elements.push_back(std::move(e));
    }
  }
  return OrderedSet{group, std::move(elements), dropped};
}

OrderedSet ordered_set_from_sorted(const Group& group, std::vector<GroupElement> sorted) {
  if (sorted.empty()) throw Error("an ordered set needs at least one element");
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (!group.less(sorted[i], sorted[i + 1])) {
      throw Error("ordered_set_from_sorted: elements not strictly ascending");
    }
  }
  return OrderedSet{group, std::move(sorted), 0};
}

OrderedSet prefix_set(const OrderedSet& s, std::size_t m) {
  if (m < 1 || m > s.size()) throw Error("prefix size out of range");
  return OrderedSet{s.group,
                    std::vector<GroupElement>(s.elements.begin(), s.elements.begin() + m), 0};
}

std::size_t ProductSet::find(const Group& group, const GroupElement& p) const {
  auto it = std::lower_bound(
      elements.begin(), elements.end(), p,
      [&](const GroupElement& a, const GroupElement& b) { return group.less(a, b); });
  if (it != elements.end() && *it == p) {
    return static_cast<std::size_t>(it - elements.begin());
  }
  return npos;
}

ProductSet product_set(const OrderedSet& s) {
  const Group& g = s.group;
  const int k = static_cast<int>(s.size());
  struct Entry {
    GroupElement value;
    int i, j;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      entries.push_back(Entry{g.multiply(s[i], s[j]), i, j});
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    return g.less(a.value, b.value);
  });

  ProductSet out;
  for (Entry& e : entries) {
    if (out.elements.empty() || !(out.elements.back() == e.value)) {
      out.elements.push_back(std::move(e.value));
      out.factorizations.emplace_back();
    }
    out.factorizations.back().emplace_back(e.i, e.j);
  }

  if (out.elements.size() < 2 * static_cast<std::size_t>(k) - 1) {
    throw InternalOrderViolation("|S^2| fell below 2k-1; the order is inconsistent");
  }
  return out;
}

const char* doubling_class_name(DoublingClass c) {
  switch (c) {
    case DoublingClass::MinimalGP: return "minimal_gp";
    case DoublingClass::AtLeast2k: return "at_least_2k";
    case DoublingClass::WithinFreimanBound: return "within_freiman_bound";
    case DoublingClass::WithinAbelianBound: return "within_abelian_bound";
    case DoublingClass::Above: return "above";
  }
  return "?";
}

DoublingClass classify_doubling(std::size_t k, std::size_t doubling) {
  const long long n = static_cast<long long>(doubling);
  const long long kk = static_cast<long long>(k);
  if (n == 2 * kk - 1) return DoublingClass::MinimalGP;
  if (kk >= 3 && n <= 3 * kk - 4) return DoublingClass::WithinFreimanBound;
  if (n == 3 * kk - 3) return DoublingClass::WithinAbelianBound;
  if (n >= 3 * kk - 2) return DoublingClass::Above;
  return DoublingClass::AtLeast2k;
}

DoublingReport doubling_report(const OrderedSet& s) {
  if (s.size() < 1) throw Error("doubling report needs a nonempty set");
  const std::size_t k = s.size();
  const std::size_t doubling = product_set(s).size();
  DoublingReport r;
  r.k = k;
  r.doubling = doubling;
  r.slack = doubling - (2 * k - 1);
  r.doubling_class = classify_doubling(k, doubling);
  return r;
}

std::vector<GroupElement> boundary_chain(const OrderedSet& s) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  std::vector<GroupElement> chain;
  chain.reserve(2 * k - 1);
  for (std::size_t j = 0; j < k; ++j) chain.push_back(g.multiply(s[0], s[j]));
  for (std::size_t i = 1; i < k; ++i) chain.push_back(g.multiply(s[i], s[k - 1]));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!g.less(chain[i], chain[i + 1])) {
      throw InternalOrderViolation(
          "boundary chain not strictly ascending between positions " + std::to_string(i) +
          " and " + std::to_string(i + 1) + "; bi-invariance is broken");
    }
  }
  return chain;
}

}  // namespace doubling
