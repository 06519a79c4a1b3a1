#include "isotropy/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "isotropy/errors.hpp"

namespace isotropy {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      throw Error(ErrorCode::kNonPositivePart,
                  "part " + std::to_string(i + 1) + " is " + std::to_string(parts[i]));
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw Error(ErrorCode::kNotWeaklyDecreasing,
                  "part " + std::to_string(i + 1) + " (" + std::to_string(parts[i]) +
                      ") exceeds the previous part (" + std::to_string(parts[i - 1]) + ")");
    }
  }
  parts_ = std::move(parts);
}

Partition Partition::row(int d) { return Partition(std::vector<int>(d > 0 ? 1 : 0, d)); }

Partition Partition::column(int d) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(d, 0)), 1));
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_rectangle() const noexcept {
  return !parts_.empty() && parts_.front() == parts_.back();
}

int Partition::distinct_part_count() const noexcept {
  int count = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i == 0 || parts_[i] != parts_[i - 1]) ++count;
  }
  return count;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(first()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

bool Partition::contained_in(const Partition& other) const noexcept {
  if (length() > other.length()) return false;
  for (int i = 0; i < length(); ++i) {
    if (part(i) > other.part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.to_string() << ')';
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

void require_box(const Partition& shape, Box box) {
  if (box.row < 1 || box.row > shape.length() || box.col < 1 ||
      box.col > shape.part(box.row - 1)) {
    throw Error(ErrorCode::kBoxOutOfShape,
                "box (" + std::to_string(box.row) + "," + std::to_string(box.col) +
                    ") is not in " + shape.to_string());
  }
}

void strips_from(const Partition& shape, std::size_t row, std::vector<int>& current,
                 std::vector<Partition>& out) {
  if (row == static_cast<std::size_t>(shape.length())) {
    out.emplace_back(current);
    return;
  }
  const int hi = shape.part(static_cast<int>(row));
  const int lo = shape.part(static_cast<int>(row) + 1);
  for (int v = hi; v >= lo; --v) {
    current[row] = v;
    strips_from(shape, row + 1, current, out);
  }
}

void partitions_from(int remaining, int max_part, std::vector<int>& current,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_from(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  text = trim(text);
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token =
        trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                : comma - start));
    if (token.empty()) {
      throw Error(ErrorCode::kMalformedInput, "empty entry in \"" + std::string(text) + "\"");
    }
    if (token.front() == '+') token.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kMalformedInput, "not an integer: \"" + std::string(token) + "\"");
    }
    if (value <= 0) {
      throw Error(ErrorCode::kNonPositivePart,
                  "part " + std::to_string(parts.size() + 1) + " is " + std::to_string(value));
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int hook_length(const Partition& shape, Box box) {
  require_box(shape, box);
  const Partition conj = shape.conjugate();
  const int arm = shape.part(box.row - 1) - box.col;
  const int leg = conj.part(box.col - 1) - box.row;
  return arm + leg + 1;
}

int content(const Partition& shape, Box box) {
  require_box(shape, box);
  return box.col - box.row;
}

std::vector<Box> boxes_of(const Partition& shape) {
  std::vector<Box> boxes;
  boxes.reserve(static_cast<std::size_t>(shape.size()));
  for (int r = 1; r <= shape.length(); ++r) {
    for (int c = 1; c <= shape.part(r - 1); ++c) boxes.push_back({r, c});
  }
  return boxes;
}

std::vector<Partition> horizontal_strip_predecessors(const Partition& shape) {
  std::vector<Partition> out;
  std::vector<int> current(static_cast<std::size_t>(shape.length()), 0);
  strips_from(shape, 0, current, out);
  return out;
}

Partition remove_corner_box(const Partition& shape) {
  if (shape.empty()) {
    throw Error(ErrorCode::kEmptyPartition, "the empty partition has no corner box");
  }
  std::vector<int> parts = shape.parts();
  --parts.back();
  return Partition(std::move(parts));
}

Partition strip_full_height_columns(const Partition& shape) {
  if (shape.empty()) return shape;
  const int last = shape.parts().back();
  std::vector<int> parts;
  for (int p : shape.parts()) parts.push_back(p - last);
  return Partition(std::move(parts));
}

std::vector<Partition> pieri_add_one_box(const Partition& mu, int max_length) {
  std::vector<Partition> out;
  const int rows = std::min(mu.length() + 1, max_length);
  for (int i = 0; i < rows; ++i) {
    if (i > 0 && mu.part(i - 1) == mu.part(i)) continue;
    std::vector<int> parts = mu.parts();
    if (i == mu.length()) {
      parts.push_back(1);
    } else {
      ++parts[static_cast<std::size_t>(i)];
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  partitions_from(n, n, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_size; ++n) {
    auto batch = partitions_of(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace isotropy
