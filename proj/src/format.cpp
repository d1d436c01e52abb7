#include "castle/format.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace castle {

namespace {

// Optional sign followed by at least one digit.
bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string_view strip_brackets(std::string_view s, char open, char close) {
  s = trim(s);
  if (!s.empty() && s.front() == open) {
    if (s.back() != close) {
      throw Error(Errc::Parse, std::string("missing closing '") + close + "'");
    }
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::int64_t> parse_integers(std::string_view s) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < s.size()) {
    if (is_sep(s[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !is_sep(s[j])) ++j;
    std::string_view tok = s.substr(i, j - i);
    std::int64_t v = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(Errc::Parse, "not an integer: '" + std::string(tok) + "'",
                  out.size());
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += close;
  return s;
}

nlohmann::json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

}  // namespace

Word parse_word(Rank rank, std::string_view text) {
  std::vector<int> letters;
  for (std::int64_t v : parse_integers(text)) {
    if (v < 0 || v > rank.k()) {
      throw Error(Errc::BadResidue, "letter " + std::to_string(v) +
                                        " is not in {0,...," +
                                        std::to_string(rank.k()) + "}",
                  letters.size());
    }
    letters.push_back(static_cast<int>(v));
  }
  return Word(rank, std::move(letters));
}

AffinePermutation parse_window(Rank rank, std::string_view text) {
  auto values = parse_integers(strip_brackets(text, '[', ']'));
  return AffinePermutation::from_window(rank, values);
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  for (std::int64_t v : parse_integers(strip_brackets(text, '(', ')'))) {
    if (v <= 0 || v > std::numeric_limits<int>::max()) {
      throw Error(Errc::Parse, "parts must be positive", parts.size());
    }
    parts.push_back(static_cast<int>(v));
  }
  return Partition(std::move(parts));
}

KCode parse_code(Rank rank, std::string_view text) {
  std::vector<int> entries;
  for (std::int64_t v : parse_integers(strip_brackets(text, '(', ')'))) {
    if (v < 0 || v > std::numeric_limits<int>::max()) {
      throw Error(Errc::InvalidCode, "code entries must be non-negative",
                  entries.size());
    }
    entries.push_back(static_cast<int>(v));
  }
  return KCode(rank, std::move(entries));
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string to_string(const AffinePermutation& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.window().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.window()[i]);
  }
  return s + "]";
}

std::string to_string(const ResidueSet& a) {
  return join_ints(a.members(), '{', '}');
}

std::string to_cyclic_string(const ResidueSet& a) {
  if (a.empty() || !a.is_proper()) return to_string(a);
  const auto comps = connected_components(a);
  std::vector<int> out;
  const Rank rank = a.rank();
  for (int t = 0; t < rank.size(); ++t) {
    const int r = rank.residue(comps.front().lo + t);
    if (a.contains(r)) out.push_back(r);
  }
  return join_ints(out, '{', '}');
}

std::string to_string(const Interval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

std::string to_string(const KCode& c) { return join_ints(c.entries(), '(', ')'); }

std::string to_string(const Partition& p) { return join_ints(p.parts(), '(', ')'); }

std::string to_string(const BoundedPartition& p) { return to_string(p.partition()); }

std::string to_string(const CorePartition& p) { return to_string(p.partition()); }

std::string to_string(const CyclicDecomposition& dec) {
  const char letter = dec.direction == Direction::Decreasing ? 'd' : 'u';
  std::string s;
  for (std::size_t j = 0; j < dec.rows.size(); ++j) {
    if (j) s += " | ";
    s += letter;
    s += to_cyclic_string(dec.rows[j]);
  }
  return s;
}

std::string to_string(const InsertionTrace& trace) {
  std::ostringstream os;
  for (const auto& st : trace.steps) {
    os << "row=" << st.row << ' ' << move_kind_name(st.kind) << " p=" << st.residue;
    if (st.kind != MoveKind::Inclusion) {
      os << " -> carries " << st.carried;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_string(const RecordingTableau& q) {
  const Rank rank = q.rank();
  const int z = q.code().first_zero();
  std::ostringstream os;
  for (int j = 1; j <= q.height(); ++j) {
    const std::vector<int> row = q.row(j);
    for (int t = 1; t <= rank.k(); ++t) {
      const int label = row[static_cast<std::size_t>(rank.residue(z + t))];
      if (t > 1) os << ' ';
      if (label == 0) {
        os << '.';
      } else {
        os << label;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string to_string(const NilCoxSum& f) {
  std::ostringstream os;
  for (const auto& [x, c] : f.terms()) os << to_string(x) << ' ' << c << '\n';
  return os.str();
}

NilCoxSum parse_sum_text(Rank rank, std::string_view text) {
  NilCoxSum f(rank);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) {
      ++line_no;
      continue;
    }
    const auto close = line.find(']');
    if (line.front() != '[' || close == std::string_view::npos) {
      throw Error(Errc::Parse, "expected '[window] coeff'", line_no);
    }
    AffinePermutation x = parse_window(rank, line.substr(0, close + 1));
    std::string coeff(trim(line.substr(close + 1)));
    if (!is_integer_token(coeff)) {
      throw Error(Errc::Parse, "bad coefficient '" + coeff + "'", line_no);
    }
    f.add_term(x, BigInt(coeff));
    ++line_no;
  }
  return f;
}

nlohmann::json to_json(const AffinePermutation& x) { return x.window(); }

nlohmann::json to_json(const KCode& c) { return c.entries(); }

nlohmann::json to_json(const CyclicDecomposition& dec) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : dec.rows) rows.push_back(r.members());
  return {{"mode", mode_name(dec.direction, dec.side)},
          {"rows", rows},
          {"word", dec.word().letters()}};
}

nlohmann::json to_json(const RecordingTableau& q) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [cell, label] : q.labels()) {
    cells.push_back({{"column", cell.column}, {"row", cell.row}, {"label", label}});
  }
  return cells;
}

nlohmann::json to_json(const NilCoxSum& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [x, c] : f.terms()) {
    out.push_back({{"window", x.window()}, {"coeff", coeff_json(c)}});
  }
  return out;
}

NilCoxSum sum_from_json(Rank rank, const nlohmann::json& j) {
  if (!j.is_array()) throw Error(Errc::Parse, "expected a JSON array of terms");
  NilCoxSum f(rank);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& term = j[i];
    if (!term.is_object() || !term.contains("window") || !term.contains("coeff")) {
      throw Error(Errc::Parse, "term needs 'window' and 'coeff'", i);
    }
    std::vector<std::int64_t> window;
    try {
      window = term.at("window").get<std::vector<std::int64_t>>();
    } catch (const nlohmann::json::exception&) {
      throw Error(Errc::Parse, "window must be an integer array", i);
    }
    const auto& c = term.at("coeff");
    BigInt coeff;
    if (c.is_number_integer()) {
      coeff = c.get<std::int64_t>();
    } else if (c.is_string()) {
      const auto& text = c.get_ref<const std::string&>();
      if (!is_integer_token(text)) throw Error(Errc::Parse, "bad coefficient string", i);
      coeff = BigInt(text);
    } else {
      throw Error(Errc::Parse, "coefficient must be an integer or string", i);
    }
    f.add_term(AffinePermutation::from_window(rank, window), coeff);
  }
  return f;
}

const char* mode_name(Direction d, Side s) {
  if (d == Direction::Decreasing) return s == Side::Right ? "rd" : "ld";
  return s == Side::Right ? "ri" : "li";
}

}  // namespace castle
