#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace isotropy {

/// An integer partition: weakly decreasing positive parts, trailing zeros
/// stripped. The empty partition is a valid value with length and size zero.
class Partition {
 public:
  Partition() = default;

  /// Accepts zeros only as a trailing run; throws NonPositivePart on a
  /// negative or interior zero part and NotWeaklyDecreasing on an increase.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  static Partition row(int d);
  static Partition column(int d);
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 0-based part access; indices past the last part read as 0.
  int part(int index) const noexcept {
    return index >= 0 && index < length() ? parts_[static_cast<std::size_t>(index)] : 0;
  }

  bool is_rectangle() const noexcept;
  bool is_row() const noexcept { return length() == 1; }
  bool is_column() const noexcept { return !empty() && first() == 1; }
  int distinct_part_count() const noexcept;

  Partition conjugate() const;

  /// True when every part of *this is <= the matching part of other.
  bool contained_in(const Partition& other) const noexcept;

  /// Canonical "a,b,c" text; the empty partition renders as "".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// A cell of a Young diagram, 1-based row and column.
struct Box {
  int row = 1;
  int col = 1;
  friend bool operator==(const Box&, const Box&) = default;
};

Partition parse_partition(std::string_view text);

int hook_length(const Partition& shape, Box box);
int content(const Partition& shape, Box box);

/// All boxes of the diagram in row-major order.
std::vector<Box> boxes_of(const Partition& shape);

/// Every mu with shape/mu a horizontal strip, i.e. shape[i+1] <= mu[i] <=
/// shape[i]. Includes shape itself; lexicographically decreasing.
std::vector<Partition> horizontal_strip_predecessors(const Partition& shape);

/// Removes the last box of the last row.
Partition remove_corner_box(const Partition& shape);

/// Subtracts the last part from every row (drops all columns of full
/// height). A rectangle strips to the empty partition.
Partition strip_full_height_columns(const Partition& shape);

/// Single-box Pieri rule: every shape obtained by adding one box to mu and
/// having at most max_length rows, in lexicographically decreasing order.
std::vector<Partition> pieri_add_one_box(const Partition& mu, int max_length);

/// Partitions of exactly n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);

/// Nonempty partitions with size 1..max_size, grouped by size.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace isotropy

template <>
struct std::hash<isotropy::Partition> {
  std::size_t operator()(const isotropy::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int part : p.parts()) {
      h ^= static_cast<std::size_t>(part);
      h *= 1099511628211ull;
    }
    return h;
  }
};
