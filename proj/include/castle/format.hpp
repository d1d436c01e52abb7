#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "castle/insertion.hpp"
#include "castle/kcode.hpp"
#include "castle/nilcox.hpp"
#include "castle/shapes.hpp"

namespace castle {

// Parsing.  Every failure is an Error with code Parse, except residues out of
// range (BadResidue) and windows violating the group invariants.

// Space separated residues, e.g. "2 1 0 3"; commas are accepted too.
Word parse_word(Rank rank, std::string_view text);
// "[1,-6,0,15]"; brackets optional.
AffinePermutation parse_window(Rank rank, std::string_view text);
// "3,2,2,1,1,1" or "(3,2,2,1,1,1)".
Partition parse_partition(std::string_view text);
// "(3,8,4,0)"; parentheses optional.
KCode parse_code(Rank rank, std::string_view text);

// Printing.
std::string to_string(const Word& w);
std::string to_string(const AffinePermutation& x);
// Sorted brace list "{0,2,4,5}".
std::string to_string(const ResidueSet& a);
// Brace list read cyclically from the start of its first component,
// e.g. "{6,7,0,1,2,3,4}".
std::string to_cyclic_string(const ResidueSet& a);
std::string to_string(const Interval& iv);
std::string to_string(const KCode& c);
std::string to_string(const Partition& p);
std::string to_string(const BoundedPartition& p);
std::string to_string(const CorePartition& p);
// Factors rightmost first: "d{6,7,0,1,2,3,4} | d{7,0,1,2} | ...".
std::string to_string(const CyclicDecomposition& dec);
// One move per line: "row=2 bump p=1 -> carries 0".
std::string to_string(const InsertionTrace& trace);
// Rows bottom-up in flattened column order; '.' for empty cells.
std::string to_string(const RecordingTableau& q);
// One "[window] coeff" line per term, sorted by window.
std::string to_string(const NilCoxSum& f);

NilCoxSum parse_sum_text(Rank rank, std::string_view text);

// JSON.
nlohmann::json to_json(const AffinePermutation& x);
nlohmann::json to_json(const KCode& c);
nlohmann::json to_json(const CyclicDecomposition& dec);
nlohmann::json to_json(const RecordingTableau& q);
// [{"window":[...],"coeff":n}, ...]; coefficients beyond 64 bits are strings.
nlohmann::json to_json(const NilCoxSum& f);
NilCoxSum sum_from_json(Rank rank, const nlohmann::json& j);

const char* mode_name(Direction d, Side s);

}  // namespace castle
