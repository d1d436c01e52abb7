#include "castle/insertion.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

namespace castle {

namespace {

ResidueSet row_set(Rank rank, const std::vector<int>& alpha, int j) {
  ResidueSet s(rank);
  for (int i = 0; i < rank.size(); ++i) {
    if (alpha[static_cast<std::size_t>(i)] >= j) s = s.with(i - j + 1);
  }
  return s;
}

int& at(std::vector<int>& alpha, Rank rank, int i) {
  return alpha[static_cast<std::size_t>(rank.residue(i))];
}

// Runs one insertion on raw column heights; labels (if given) follow bumps
// and the new cell receives `step`.  Returns false if the product is zero.
bool insert_raw(Rank rank, std::vector<int>& alpha, int p,
                std::map<Cell, int>* labels, int step,
                InsertionTrace* trace) {
  const int c = rank.residue(p);
  // Moves are decided on the rows of the original filling.
  const std::vector<int> before = alpha;
  for (int j = 1;; ++j) {
    const ResidueSet a = row_set(rank, before, j);
    const bool has_p = a.contains(p);
    const bool has_below = a.contains(p - 1);
    if (!has_p && !has_below) {
      ++at(alpha, rank, c);
      if (labels) (*labels)[Cell{c, j}] = step;
      if (trace) trace->steps.push_back({j, MoveKind::Inclusion, p, p});
      return true;
    }
    if (has_p && !has_below) return false;
    if (!has_p) {
      --at(alpha, rank, c - 1);
      ++at(alpha, rank, c);
      if (labels) {
        auto it = labels->find(Cell{rank.residue(c - 1), j});
        const int moved = it->second;
        labels->erase(it);
        (*labels)[Cell{c, j}] = moved;
      }
      if (trace) trace->steps.push_back({j, MoveKind::Bump, p, rank.residue(p - 1)});
    } else if (trace) {
      trace->steps.push_back({j, MoveKind::Braid, p, rank.residue(p - 1)});
    }
    p = rank.residue(p - 1);
  }
}

std::vector<int> heights_of(const KCode& code) { return code.entries(); }

}  // namespace

const char* move_kind_name(MoveKind m) {
  switch (m) {
    case MoveKind::Inclusion: return "include";
    case MoveKind::Bump: return "bump";
    case MoveKind::Braid: return "braid";
  }
  return "?";
}

RecordingTableau::RecordingTableau(Rank rank, std::map<Cell, int> labels)
    : rank_(rank), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  std::vector<bool> used(n + 1, false);
  for (const auto& [cell, label] : labels_) {
    if (cell.column < 0 || cell.column > rank_.k() || cell.row < 1) {
      throw Error(Errc::InvalidCode, "cell outside the diagram");
    }
    if (label < 1 || static_cast<std::size_t>(label) > n ||
        used[static_cast<std::size_t>(label)]) {
      throw Error(Errc::NotStandard,
                  "labels must be 1.." + std::to_string(n) + ", each once");
    }
    used[static_cast<std::size_t>(label)] = true;
  }
  (void)code();
}

KCode RecordingTableau::code() const {
  std::vector<int> alpha(static_cast<std::size_t>(rank_.size()), 0);
  for (const auto& [cell, label] : labels_) {
    ++alpha[static_cast<std::size_t>(cell.column)];
  }
  for (const auto& [cell, label] : labels_) {
    if (cell.row > alpha[static_cast<std::size_t>(cell.column)]) {
      throw Error(Errc::InvalidCode, "labelled cells are not bottom-justified");
    }
  }
  return KCode(rank_, std::move(alpha));
}

std::vector<int> RecordingTableau::row(int j) const {
  std::vector<int> out(static_cast<std::size_t>(rank_.size()), 0);
  for (const auto& [cell, label] : labels_) {
    if (cell.row == j) out[static_cast<std::size_t>(cell.column)] = label;
  }
  return out;
}

int RecordingTableau::height() const noexcept {
  int h = 0;
  for (const auto& [cell, label] : labels_) h = std::max(h, cell.row);
  return h;
}

InsertResult insert(const KCode& code, int p) {
  const Rank rank = code.rank();
  if (p < 0 || p > rank.k()) {
    throw Error(Errc::BadResidue, "residue " + std::to_string(p) + " out of range");
  }
  if (code_descents(code).contains(p)) {
    throw Error(Errc::DescentViolation,
                std::to_string(p) + " is a descent; the product is zero");
  }
  std::vector<int> alpha = heights_of(code);
  InsertionTrace trace;
  if (!insert_raw(rank, alpha, p, nullptr, 0, &trace)) {
    throw Error(Errc::DescentViolation, "insertion reached a zero move");
  }
  return {KCode(rank, std::move(alpha)), std::move(trace)};
}

InsertWordResult insert_word(Rank rank, const Word& w) {
  if (w.rank() != rank) throw Error(Errc::RankMismatch, "word rank differs");
  std::vector<int> alpha(static_cast<std::size_t>(rank.size()), 0);
  std::map<Cell, int> labels;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (code_descents(KCode(rank, alpha)).contains(w[t]) ||
        !insert_raw(rank, alpha, w[t], &labels, static_cast<int>(t) + 1,
                    nullptr)) {
      throw Error(Errc::NotReduced,
                  "word is not reduced at letter " + std::to_string(t), t);
    }
  }
  return {KCode(rank, std::move(alpha)),
          RecordingTableau(rank, std::move(labels))};
}

Word reverse_insert(const KCode& code, const RecordingTableau& q) {
  const Rank rank = code.rank();
  if (q.rank() != rank) throw Error(Errc::RankMismatch, "tableau rank differs");
  if (q.code() != code) {
    throw Error(Errc::NotStandard, "tableau does not label the code's diagram");
  }
  auto not_standard = [](const std::string& why) {
    return Error(Errc::NotStandard, "no reduced word records this tableau: " + why);
  };
  std::vector<int> alpha = heights_of(code);
  std::map<Cell, int> labels = q.labels();
  std::map<int, Cell> where;
  for (const auto& [cell, label] : labels) where.emplace(label, cell);

  std::vector<int> letters;
  for (int step = static_cast<int>(labels.size()); step >= 1; --step) {
    Cell cell = where.at(step);
    const int c = cell.column;
    if (at(alpha, rank, c) != cell.row) throw not_standard("label not on top");
    const std::vector<int> after = alpha;
    --at(alpha, rank, c);
    labels.erase(cell);
    int value = rank.residue(c - cell.row + 1);
    for (int j = cell.row - 1; j >= 1; --j) {
      // Row j received value+1 on the way up.
      const ResidueSet a = row_set(rank, after, j);
      const int received = rank.residue(value + 1);
      if (!a.contains(received)) throw not_standard("missing residue");
      if (!a.contains(value)) {
        // Undo a bump: the cell (c, j) returns to (c-1, j).
        auto it = labels.find(Cell{c, j});
        if (it == labels.end() || at(alpha, rank, c) < 1) {
          throw not_standard("bump cannot be undone");
        }
        --at(alpha, rank, c);
        ++at(alpha, rank, c - 1);
        const int moved = it->second;
        labels.erase(it);
        const Cell back{rank.residue(c - 1), j};
        labels[back] = moved;
        where[moved] = back;
      }
      value = received;
    }
    letters.push_back(value);
  }
  std::reverse(letters.begin(), letters.end());
  Word w(rank, std::move(letters));
  std::optional<InsertWordResult> check;
  try {
    check = insert_word(rank, w);
  } catch (const Error&) {
    throw not_standard("recovered word is not reduced");
  }
  if (check->code != code || check->tableau != q) {
    throw not_standard("recovered word records a different tableau");
  }
  return w;
}

namespace {

void collect_words(const AffinePermutation& x, std::vector<int>& suffix,
                   std::vector<Word>& out) {
  if (x.is_identity()) {
    std::vector<int> w(suffix.rbegin(), suffix.rend());
    out.emplace_back(x.rank(), std::move(w));
    return;
  }
  for (int i : x.right_descents().members()) {
    suffix.push_back(i);
    collect_words(x.times_right(i), suffix, out);
    suffix.pop_back();
  }
}

void check_bound(const AffinePermutation& x, std::size_t bound) {
  if (x.length() > bound) {
    throw Error(Errc::BoundExceeded, "length " + std::to_string(x.length()) +
                                         " exceeds the bound " +
                                         std::to_string(bound));
  }
}

}  // namespace

std::vector<Word> enumerate_reduced_words(const AffinePermutation& x,
                                          std::size_t length_bound) {
  check_bound(x, length_bound);
  std::vector<Word> out;
  std::vector<int> suffix;
  collect_words(x, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_reduced_words(const AffinePermutation& x,
                           std::size_t length_bound) {
  check_bound(x, length_bound);
  std::unordered_map<AffinePermutation, BigInt, AffinePermutationHash> memo;
  auto count = [&](auto&& self, const AffinePermutation& y) -> BigInt {
    if (y.is_identity()) return 1;
    if (auto it = memo.find(y); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int i : y.right_descents().members()) total += self(self, y.times_right(i));
    memo.emplace(y, total);
    return total;
  };
  return count(count, x);
}

}  // namespace castle
