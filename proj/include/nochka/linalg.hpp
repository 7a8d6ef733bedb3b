#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "nochka/rational.hpp"

namespace nochka {

/// Incrementally built row-echelon basis over an exact field (Rational or
/// GaussRational). insert() reports whether a vector enlarges the span.
template <typename Field>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduced copy of v against the current rows; zero iff v is in the span.
  std::vector<Field> reduce(std::vector<Field> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (is_zero(v[p])) continue;
      const Field factor = v[p] / rows_[r][p];
      for (std::size_t k = p; k < dim_; ++k) v[k] -= factor * rows_[r][k];
    }
    return v;
  }

  bool contains(const std::vector<Field>& v) const {
    const auto red = reduce(v);
    return std::all_of(red.begin(), red.end(), [](const Field& x) { return is_zero(x); });
  }

  bool insert(std::vector<Field> v) {
    v = reduce(std::move(v));
    const auto it = std::find_if(v.begin(), v.end(), [](const Field& x) { return !is_zero(x); });
    if (it == v.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    // Rows stay sorted by pivot; each row is zero left of its pivot, so a single
    // ordered sweep in reduce() clears every pivot column.
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Field>> rows_;
};

}  // namespace nochka
