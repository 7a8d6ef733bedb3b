#include "nochka/subset.hpp"

#include <algorithm>

namespace nochka {

std::vector<int> indices_of(Subset s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  for (int k = 0; s != 0; ++k, s >>= 1) {
    if (s & 1U) out.push_back(k + 1);
  }
  return out;
}

Subset subset_of(const std::vector<int>& indices) {
  Subset s = 0;
  for (int i : indices) s |= singleton(i);
  return s;
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : indices_of(s)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool index_list_less(Subset a, Subset b) {
  const auto ia = indices_of(a);
  const auto ib = indices_of(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace nochka
