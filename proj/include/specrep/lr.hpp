#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specrep/partitions.hpp"

namespace specrep {

/// Semistandard filling of a skew shape whose reverse row reading word is a
/// lattice word. `labels` runs parallel to `shape.cells()`.
struct LRTableau {
  SkewShape shape;
  std::vector<int> labels;
  Partition content;

  int at(int r, int c) const {
    const auto& cells = shape.cells();
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k].first == r && cells[k].second == c) return labels[k];
    return 0;
  }

  /// Right to left in each row, rows top to bottom.
  std::vector<int> reverse_reading_word() const {
    std::vector<int> word;
    for (int r = 1; r <= shape.outer().length(); ++r)
      for (int c = shape.outer().row(r); c > shape.inner().row(r); --c) word.push_back(at(r, c));
    return word;
  }

  /// Matrix layout; cells of the inner shape print as '.'.
  std::string pretty() const {
    std::string out;
    for (int r = 1; r <= shape.outer().length(); ++r) {
      for (int c = 1; c <= shape.outer().row(r); ++c) {
        if (c > 1) out += ' ';
        out += shape.contains_cell(r, c) ? std::to_string(at(r, c)) : ".";
      }
      out += '\n';
    }
    return out;
  }
};

namespace detail {

/// Backtracking over cells in reverse reading order. With a content bound
/// the search only yields tableaux of that content; without one it yields all
/// LR tableaux of the shape. `emit` receives labels (in reading order) and the
/// running label counts.
template <class Emit>
void enumerate_lr_fillings(const SkewShape& shape, const std::optional<Partition>& content, Emit&& emit) {
  std::vector<std::pair<int, int>> order;
  for (int r = 1; r <= shape.outer().length(); ++r)
    for (int c = shape.outer().row(r); c > shape.inner().row(r); --c) order.emplace_back(r, c);

  const int rows = shape.outer().length();
  const int cols = shape.outer().row(1);
  std::vector<int> grid(static_cast<std::size_t>((rows + 2) * (cols + 2)), 0);
  auto cell = [&](int r, int c) -> int& { return grid[static_cast<std::size_t>(r * (cols + 2) + c)]; };

  const int size = static_cast<int>(order.size());
  const int max_label = content ? content->length() : size;
  std::vector<int> counts(static_cast<std::size_t>(max_label + 2), 0);
  std::vector<int> word(order.size(), 0);

  auto rec = [&](auto&& self, int k) -> void {
    if (k == size) {
      emit(word, counts);
      return;
    }
    const auto [r, c] = order[static_cast<std::size_t>(k)];
    // Row weakly increasing: the cell to the right is already filled.
    int hi = max_label;
    if (shape.contains_cell(r, c + 1)) hi = std::min(hi, cell(r, c + 1));
    // Column strictly increasing: the cell above (if skew) is already filled.
    int lo = 1;
    if (shape.contains_cell(r - 1, c)) lo = cell(r - 1, c) + 1;
    for (int label = lo; label <= hi; ++label) {
      auto& cnt = counts[static_cast<std::size_t>(label)];
      if (label > 1 && cnt + 1 > counts[static_cast<std::size_t>(label - 1)]) continue;
      if (content && cnt + 1 > content->row(label)) continue;
      ++cnt;
      cell(r, c) = label;
      word[static_cast<std::size_t>(k)] = label;
      self(self, k + 1);
      cell(r, c) = 0;
      --cnt;
    }
  };
  rec(rec, 0);
}

inline Partition content_of(const std::vector<int>& counts) {
  std::vector<int> parts;
  for (std::size_t i = 1; i < counts.size() && counts[i] > 0; ++i) parts.push_back(counts[i]);
  return Partition(std::move(parts));
}

} // namespace detail

inline std::vector<LRTableau> lr_tableaux(const SkewShape& shape, const Partition& content) {
  if (content.size() != shape.size())
    throw std::invalid_argument("lr_tableaux: content size " + std::to_string(content.size()) +
                                " does not match shape size " + std::to_string(shape.size()));
  std::vector<LRTableau> out;
  const auto& cells = shape.cells();
  detail::enumerate_lr_fillings(shape, content, [&](const std::vector<int>& word, const std::vector<int>&) {
    // Map the reading-order word back onto row-major cells.
    std::vector<int> labels(cells.size());
    std::size_t k = 0;
    for (int r = 1; r <= shape.outer().length(); ++r) {
      const int lo = shape.inner().row(r), hi = shape.outer().row(r);
      const std::size_t row_start = k;
      for (int c = hi; c > lo; --c) {
        const std::size_t idx = row_start + static_cast<std::size_t>(c - lo - 1);
        labels[idx] = word[k++];
      }
    }
    out.push_back(LRTableau{shape, std::move(labels), content});
  });
  return out;
}

/// c^lambda_{mu,nu}: number of LR tableaux of shape lambda/mu and content nu.
inline std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!contains(mu, lambda) || !contains(nu, lambda)) return 0;
  std::int64_t count = 0;
  detail::enumerate_lr_fillings(SkewShape(lambda, mu), nu,
                                [&](const std::vector<int>&, const std::vector<int>&) { ++count; });
  return count;
}

/// Every nu with c^outer_{inner,nu} != 0, together with the coefficient.
inline std::map<Partition, std::int64_t> lr_expansion(const SkewShape& shape) {
  std::map<Partition, std::int64_t> out;
  detail::enumerate_lr_fillings(shape, std::nullopt, [&](const std::vector<int>&, const std::vector<int>& counts) {
    ++out[detail::content_of(counts)];
  });
  return out;
}

inline std::set<Partition> lr_set(const SkewShape& shape) {
  std::set<Partition> out;
  for (const auto& [nu, c] : lr_expansion(shape)) out.insert(nu);
  return out;
}

enum class Orientation { upright, rotated };

namespace detail {

/// Reads a normalized cell set (min row and col equal to 1) as a Young
/// diagram, if it is one.
inline std::optional<Partition> as_young_diagram(const std::set<std::pair<int, int>>& cells) {
  if (cells.empty()) return Partition{};
  std::map<int, std::vector<int>> rows;
  for (const auto& [r, c] : cells) rows[r].push_back(c);
  std::vector<int> parts;
  int expected_row = 1;
  for (auto& [r, cs] : rows) {
    if (r != expected_row++) return std::nullopt;
    std::sort(cs.begin(), cs.end());
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (cs[k] != static_cast<int>(k) + 1) return std::nullopt;
    const int len = static_cast<int>(cs.size());
    if (!parts.empty() && len > parts.back()) return std::nullopt;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

} // namespace detail

/// Recognizes skew shapes that are a translate of [alpha] or of [alpha]
/// rotated by 180 degrees.
inline std::optional<std::pair<Partition, Orientation>> shape_classify(const SkewShape& shape) {
  const auto& cells = shape.cells();
  if (cells.empty()) return std::make_pair(Partition{}, Orientation::upright);
  int min_r = cells.front().first, min_c = cells.front().second, max_r = min_r, max_c = min_c;
  for (const auto& [r, c] : cells) {
    min_r = std::min(min_r, r);
    min_c = std::min(min_c, c);
    max_r = std::max(max_r, r);
    max_c = std::max(max_c, c);
  }
  std::set<std::pair<int, int>> normalized, rotated;
  const int R = max_r - min_r + 1, C = max_c - min_c + 1;
  for (const auto& [r, c] : cells) {
    const int nr = r - min_r + 1, nc = c - min_c + 1;
    normalized.emplace(nr, nc);
    rotated.emplace(R + 1 - nr, C + 1 - nc);
  }
  if (auto alpha = detail::as_young_diagram(normalized)) return std::make_pair(*alpha, Orientation::upright);
  if (auto alpha = detail::as_young_diagram(rotated)) return std::make_pair(*alpha, Orientation::rotated);
  return std::nullopt;
}

} // namespace specrep
