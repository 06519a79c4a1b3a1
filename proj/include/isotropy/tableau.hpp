#pragma once

#include <cstddef>
#include <vector>

#include "isotropy/exact.hpp"
#include "isotropy/partition.hpp"

namespace isotropy {

/// Content-count vector of a tableau: counts[i] is the number of boxes
/// labelled i + 1.
struct WeightVector {
  std::vector<int> counts;

  int total() const noexcept;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase. rows[r][c] is the label of box (r + 1, c + 1).
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  WeightVector weight(int alphabet) const;
  bool is_semistandard() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct EnumerationLimits {
  std::size_t max_tableaux = 1'000'000;
};

/// All SSYT of the shape with labels in {1..alphabet}, ordered
/// lexicographically by their row-major reading. Throws SizeGuard when the
/// count exceeds limits.max_tableaux.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int alphabet,
                                    const EnumerationLimits& limits = {});

/// Exact number of SSYT; a column-by-column transfer count with no cap.
ExactInt count_ssyt(const Partition& shape, int alphabet);

/// Number of SSYT with labels in {1..alphabet} that use the label alphabet.
ExactInt count_ssyt_using_max(const Partition& shape, int alphabet);

/// Weight vectors of every SSYT, with multiplicity, in enumeration order.
std::vector<WeightVector> weight_vectors(const Partition& shape, int alphabet,
                                         const EnumerationLimits& limits = {});

}  // namespace isotropy
