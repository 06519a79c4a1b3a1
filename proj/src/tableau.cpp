#include "isotropy/tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "isotropy/errors.hpp"

namespace isotropy {

int WeightVector::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

WeightVector Tableau::weight(int alphabet) const {
  WeightVector w{std::vector<int>(static_cast<std::size_t>(alphabet), 0)};
  for (const auto& row : rows) {
    for (int label : row) ++w.counts[static_cast<std::size_t>(label - 1)];
  }
  return w;
}

bool Tableau::is_semistandard() const {
  if (static_cast<int>(rows.size()) != shape.length()) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape.part(static_cast<int>(r))) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c > 0 && rows[r][c - 1] > rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  }
  return true;
}

namespace {

using Column = std::vector<int>;

// Strictly increasing sequences of the given height drawn from {1..alphabet}.
std::vector<Column> columns_of_height(int height, int alphabet) {
  std::vector<Column> out;
  Column current(static_cast<std::size_t>(height));
  auto fill = [&](auto&& self, int index, int next) -> void {
    if (index == height) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= alphabet - (height - index - 1); ++v) {
      current[static_cast<std::size_t>(index)] = v;
      self(self, index + 1, v + 1);
    }
  };
  fill(fill, 0, 1);
  return out;
}

// Row-weakness between adjacent columns; right may be shorter than left.
bool columns_compatible(const Column& left, const Column& right) {
  for (std::size_t i = 0; i < right.size(); ++i) {
    if (left[i] > right[i]) return false;
  }
  return true;
}

class TableauFiller {
 public:
  TableauFiller(const Partition& shape, int alphabet)
      : shape_(shape), heights_(shape.conjugate()), alphabet_(alphabet) {
    current_.shape = shape;
    for (int p : shape.parts()) current_.rows.emplace_back(static_cast<std::size_t>(p), 0);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    fill(0, 0, visit);
  }

 private:
  template <typename Visit>
  void fill(int r, int c, Visit& visit) {
    if (r == shape_.length()) {
      visit(current_);
      return;
    }
    if (c == shape_.part(r)) {
      fill(r + 1, 0, visit);
      return;
    }
    auto& row = current_.rows[static_cast<std::size_t>(r)];
    int lo = 1;
    if (c > 0) lo = row[static_cast<std::size_t>(c - 1)];
    if (r > 0) {
      lo = std::max(lo, current_.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    }
    // Leave room for the strictly larger labels further down this column.
    const int hi = alphabet_ - (heights_.part(c) - r - 1);
    for (int v = lo; v <= hi; ++v) {
      row[static_cast<std::size_t>(c)] = v;
      fill(r, c + 1, visit);
    }
  }

  const Partition& shape_;
  Partition heights_;
  int alphabet_;
  Tableau current_;
};

void check_alphabet(int alphabet) {
  if (alphabet < 0) {
    throw Error(ErrorCode::kInvalidRange, "alphabet size must be >= 0, got " +
                                              std::to_string(alphabet));
  }
}

void guard_enumeration(const Partition& shape, int alphabet, const EnumerationLimits& limits) {
  const ExactInt predicted = count_ssyt(shape, alphabet);
  if (predicted > ExactInt(std::to_string(limits.max_tableaux))) {
    throw Error(ErrorCode::kSizeGuard,
                "shape " + shape.to_string() + " with alphabet " + std::to_string(alphabet) +
                    " has " + to_decimal(predicted) + " tableaux, over the cap of " +
                    std::to_string(limits.max_tableaux));
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int alphabet,
                                    const EnumerationLimits& limits) {
  check_alphabet(alphabet);
  std::vector<Tableau> out;
  if (shape.length() > alphabet) return out;
  guard_enumeration(shape, alphabet, limits);
  TableauFiller(shape, alphabet).run([&](const Tableau& t) { out.push_back(t); });
  return out;
}

ExactInt count_ssyt(const Partition& shape, int alphabet) {
  check_alphabet(alphabet);
  if (shape.empty()) return 1;
  if (shape.length() > alphabet) return 0;

  const Partition heights = shape.conjugate();
  std::map<Column, ExactInt> ways;
  for (const auto& col : columns_of_height(heights.part(0), alphabet)) ways.emplace(col, 1);

  for (int c = 1; c < heights.length(); ++c) {
    const auto candidates = columns_of_height(heights.part(c), alphabet);
    std::map<Column, ExactInt> next;
    for (const auto& right : candidates) {
      ExactInt total = 0;
      for (const auto& [left, count] : ways) {
        if (columns_compatible(left, right)) total += count;
      }
      if (total != 0) next.emplace(right, std::move(total));
    }
    ways = std::move(next);
  }

  ExactInt result = 0;
  for (const auto& [col, count] : ways) result += count;
  return result;
}

ExactInt count_ssyt_using_max(const Partition& shape, int alphabet) {
  if (alphabet < 1) {
    throw Error(ErrorCode::kInvalidRange, "alphabet size must be >= 1, got " +
                                              std::to_string(alphabet));
  }
  return count_ssyt(shape, alphabet) - count_ssyt(shape, alphabet - 1);
}

std::vector<WeightVector> weight_vectors(const Partition& shape, int alphabet,
                                         const EnumerationLimits& limits) {
  check_alphabet(alphabet);
  std::vector<WeightVector> out;
  if (shape.length() > alphabet) return out;
  guard_enumeration(shape, alphabet, limits);
  TableauFiller(shape, alphabet).run(
      [&](const Tableau& t) { out.push_back(t.weight(alphabet)); });
  return out;
}

}  // namespace isotropy
