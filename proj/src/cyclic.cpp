#include "castle/cyclic.hpp"

#include <algorithm>
#include <string>

namespace castle {

namespace {

void require_proper(const ResidueSet& a) {
  if (!a.is_proper()) {
    throw Error(Errc::ImproperSet, "the full residue set has no cyclic element");
  }
}

bool interval_contains(Rank rank, Interval iv, int r) {
  return rank.residue(r - iv.lo) <= rank.residue(iv.hi - iv.lo);
}

}  // namespace

std::vector<Interval> connected_components(const ResidueSet& a) {
  require_proper(a);
  const Rank rank = a.rank();
  const int n = rank.size();
  std::vector<Interval> out;
  if (a.empty()) return out;
  int gap = 0;
  while (a.contains(gap)) ++gap;
  std::optional<int> start;
  for (int t = 1; t <= n; ++t) {
    int r = rank.residue(gap + t);
    if (a.contains(r)) {
      if (!start) start = r;
    } else if (start) {
      out.push_back({*start, rank.residue(r - 1)});
      start.reset();
    }
  }
  auto min_member = [&](const Interval& iv) {
    return iv.lo <= iv.hi ? iv.lo : 0;
  };
  std::sort(out.begin(), out.end(), [&](const Interval& x, const Interval& y) {
    return min_member(x) < min_member(y);
  });
  return out;
}

bool is_connected(const ResidueSet& a) {
  if (!a.is_proper()) return false;
  return connected_components(a).size() <= 1;
}

Interval as_interval(const ResidueSet& a) {
  if (a.empty() || !is_connected(a)) {
    throw Error(Errc::NotConnected, "expected a nonempty cyclic interval");
  }
  return connected_components(a).front();
}

ResidueSet interval_set(Rank rank, Interval iv) {
  ResidueSet s(rank);
  for (int r = iv.lo;; r = rank.residue(r + 1)) {
    s = s.with(r);
    if (r == rank.residue(iv.hi)) break;
  }
  return s;
}

Word d_word(const ResidueSet& a) {
  const Rank rank = a.rank();
  Word w(rank);
  for (const Interval& iv : connected_components(a)) {
    for (int r = iv.hi;; r = rank.residue(r - 1)) {
      w.push_back(r);
      if (r == iv.lo) break;
    }
  }
  return w;
}

Word u_word(const ResidueSet& a) { return d_word(a).reversed(); }

AffinePermutation d_element(const ResidueSet& a) {
  return AffinePermutation::from_word(d_word(a));
}

AffinePermutation u_element(const ResidueSet& a) {
  return AffinePermutation::from_word(u_word(a));
}

ResidueSet interval_adjust(const ResidueSet& b, IntervalAdjust which) {
  Interval iv = as_interval(b);
  ResidueSet out = b;
  switch (which) {
    case IntervalAdjust::PlusHi: out = b.with(iv.hi + 1); break;
    case IntervalAdjust::PlusLo: out = b.with(iv.lo - 1); break;
    case IntervalAdjust::MinusHi: out = b.without(iv.hi); break;
    case IntervalAdjust::MinusLo: out = b.without(iv.lo); break;
  }
  if (!out.is_proper()) {
    throw Error(Errc::WouldBeImproper, "adjustment would produce all of I");
  }
  if (out.empty()) {
    throw Error(Errc::WouldBeEmpty, "adjustment would produce the empty set");
  }
  return out;
}

const char* ud_case_name(UdCase c) {
  switch (c) {
    case UdCase::Zero: return "ZERO";
    case UdCase::BInA: return "B_IN_A";
    case UdCase::AInB: return "A_IN_B";
    case UdCase::DisjointLeft: return "DISJOINT_LEFT";
    case UdCase::DisjointRight: return "DISJOINT_RIGHT";
    case UdCase::DisjointBoth: return "DISJOINT_BOTH";
    case UdCase::Commute: return "COMMUTE";
    case UdCase::Overlap: return "OVERLAP";
  }
  return "?";
}

UdNormalForm normalize_ud(const ResidueSet& b, const ResidueSet& a) {
  if (a.rank() != b.rank()) throw Error(Errc::RankMismatch, "set ranks differ");
  if (!is_connected(a) || !is_connected(b)) {
    throw Error(Errc::NotConnected, "normalize_ud needs connected sets");
  }
  UdNormalForm out{a, b, false, UdCase::Commute};
  if (a.empty() || b.empty()) return out;

  const Interval bi = as_interval(b);
  const Interval ai = as_interval(a);
  const int i = bi.lo, j = bi.hi, p = ai.lo, q = ai.hi;
  const Rank rank = a.rank();
  // Raw adjustments; the admissible results always stay proper.
  auto up = [](const ResidueSet& s, int hi) { return s.with(hi + 1); };
  auto up_drop = [](const ResidueSet& s, int lo, int hi) {
    return s.with(hi + 1).without(lo);
  };
  auto drop_lo = [](const ResidueSet& s, int lo) { return s.without(lo); };

  if (j == q) {
    out.is_zero = true;
    out.case_tag = UdCase::Zero;
    return out;
  }
  if (b.subset_of(a)) {
    out.b_prime = up_drop(b, i, j);
    out.case_tag = UdCase::BInA;
    return out;
  }
  if (a.subset_of(b)) {
    out.a_prime = up_drop(a, p, q);
    out.case_tag = UdCase::AInB;
    return out;
  }
  if (a.intersected(b).empty()) {
    const bool left = rank.residue(j + 1) == p;
    const bool right = rank.residue(q + 1) == i;
    if (left && right) {
      out.a_prime = up_drop(a, p, q);
      out.b_prime = up_drop(b, i, j);
      out.case_tag = UdCase::DisjointBoth;
    } else if (left) {
      out.a_prime = drop_lo(a, p);
      out.b_prime = up(b, j);
      out.case_tag = UdCase::DisjointLeft;
    } else if (right) {
      out.a_prime = up(a, q);
      out.b_prime = drop_lo(b, i);
      out.case_tag = UdCase::DisjointRight;
    }
    return out;
  }
  out.case_tag = UdCase::Overlap;
  if (!a.united(b).is_proper()) {
    out.a_prime = up_drop(a, p, q);
    out.b_prime = up_drop(b, i, j);
  } else if (interval_contains(rank, ai, j)) {
    out.a_prime = drop_lo(a, p);
    out.b_prime = up(b, j);
  } else {
    out.a_prime = up(a, q);
    out.b_prime = drop_lo(b, i);
  }
  return out;
}

bool is_i_dominant_ud(const ResidueSet& b, const ResidueSet& a, int i) {
  const Rank rank = a.rank();
  if (a.size() + b.size() < rank.size()) {
    throw Error(Errc::SizeTooSmall,
                "|A|+|B| must be at least k+1 = " + std::to_string(rank.size()));
  }
  if (a.empty() || b.empty() || !is_connected(a) || !is_connected(b)) {
    return false;
  }
  return as_interval(a).lo == rank.residue(i) &&
         as_interval(b).hi == rank.residue(i - 1);
}

}  // namespace castle
