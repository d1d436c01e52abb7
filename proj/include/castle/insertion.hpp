#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "castle/bigint.hpp"
#include "castle/kcode.hpp"

namespace castle {

// Cell in column i (a residue) and row j >= 1 of a k-code diagram.
struct Cell {
  int column = 0;
  int row = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class MoveKind { Inclusion, Bump, Braid };

const char* move_kind_name(MoveKind m);

struct InsertionStep {
  int row = 1;
  MoveKind kind = MoveKind::Inclusion;
  // Residue being inserted into this row.
  int residue = 0;
  // Residue passed on to the next row (bump and braid only).
  int carried = 0;
};

struct InsertionTrace {
  std::vector<InsertionStep> steps;
};

// Step labels keyed by cell; a bump relocates a label within its row.
class RecordingTableau {
 public:
  explicit RecordingTableau(Rank rank) : rank_(rank) {}
  // Labels must be 1..n, each used once, on a bottom-justified diagram with
  // an empty column.
  RecordingTableau(Rank rank, std::map<Cell, int> labels);

  Rank rank() const noexcept { return rank_; }
  const std::map<Cell, int>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }

  // The k-code whose diagram is the labelled cell set.
  KCode code() const;
  // Labels of row j (1-based) in column order 0..k; 0 marks an empty cell.
  std::vector<int> row(int j) const;
  int height() const noexcept;

  friend bool operator==(const RecordingTableau&,
                         const RecordingTableau&) = default;
  friend auto operator<=>(const RecordingTableau&,
                          const RecordingTableau&) = default;

 private:
  Rank rank_;
  std::map<Cell, int> labels_;
};

struct InsertResult {
  KCode code;
  InsertionTrace trace;
};

// The code of x s_p for x = code_to_permutation(code).
InsertResult insert(const KCode& code, int p);

struct InsertWordResult {
  KCode code;
  RecordingTableau tableau;
};

InsertWordResult insert_word(Rank rank, const Word& w);

// Inverse of insert_word.
Word reverse_insert(const KCode& code, const RecordingTableau& q);

std::vector<Word> enumerate_reduced_words(const AffinePermutation& x,
                                          std::size_t length_bound);
BigInt count_reduced_words(const AffinePermutation& x,
                           std::size_t length_bound);

}  // namespace castle
