#pragma once

#include <optional>
#include <vector>

#include "castle/affine.hpp"

namespace castle {

// Cyclic interval [lo, hi] = {lo, lo+1, ..., hi} taken mod k+1.
struct Interval {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Maximal cyclic intervals whose union is A, ordered by smallest member.
std::vector<Interval> connected_components(const ResidueSet& a);

// True for the empty set and for a single cyclic interval.
bool is_connected(const ResidueSet& a);

// The interval form of a nonempty connected set.
Interval as_interval(const ResidueSet& a);

ResidueSet interval_set(Rank rank, Interval iv);

// Each component [p,q] contributes q, q-1, ..., p.
Word d_word(const ResidueSet& a);
// Reverse of d_word: each component contributes p, p+1, ..., q.
Word u_word(const ResidueSet& a);

AffinePermutation d_element(const ResidueSet& a);
AffinePermutation u_element(const ResidueSet& a);

enum class IntervalAdjust { PlusHi, MinusHi, PlusLo, MinusLo };

// For B = [i,j]: PlusHi adds j+1, MinusHi drops j, PlusLo adds i-1,
// MinusLo drops i.
ResidueSet interval_adjust(const ResidueSet& b, IntervalAdjust which);

enum class UdCase {
  Zero,
  BInA,
  AInB,
  DisjointLeft,
  DisjointRight,
  DisjointBoth,
  Commute,
  Overlap,
};

const char* ud_case_name(UdCase c);

struct UdNormalForm {
  // Meaningful only when !is_zero.
  ResidueSet a_prime;
  ResidueSet b_prime;
  bool is_zero = false;
  UdCase case_tag = UdCase::Commute;
};

// Rewrites u_B d_A as d_{A'} u_{B'} for connected A, B.
UdNormalForm normalize_ud(const ResidueSet& b, const ResidueSet& a);

// Whether u_B d_A is i-dominant; requires |A| + |B| >= k+1.
bool is_i_dominant_ud(const ResidueSet& b, const ResidueSet& a, int i);

}  // namespace castle
