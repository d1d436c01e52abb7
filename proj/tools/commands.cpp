#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "acceptance.hpp"
#include "castle/cyclic.hpp"
#include "castle/format.hpp"
#include "castle/insertion.hpp"
#include "castle/kcode.hpp"
#include "castle/nilcox.hpp"
#include "castle/shapes.hpp"

namespace castle::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json };

struct Options {
  int k = 0;
  Format format = Format::Text;
  std::string word;
  std::vector<std::string> words;
  std::string window;
  std::string partition;
  std::string code;
  std::string mode = "rd";
  std::string action;
  int length_bound = 8;
  bool from_core = false;
  bool inject_fault = false;
};

Result ok(std::string out) { return {kOk, std::move(out), {}}; }

Result zero() { return {kZero, "zero\n", {}}; }

std::string dump(const json& j) { return j.dump() + "\n"; }

std::pair<Direction, Side> parse_mode(const std::string& mode) {
  if (mode == "rd") return {Direction::Decreasing, Side::Right};
  if (mode == "ri") return {Direction::Increasing, Side::Right};
  if (mode == "ld") return {Direction::Decreasing, Side::Left};
  if (mode == "li") return {Direction::Increasing, Side::Left};
  throw Error(Errc::Parse, "mode must be rd, ri, ld or li");
}

// The element named by --word or --window; nullopt when the word is not
// reduced.
std::optional<AffinePermutation> element_from(const Options& o, Rank rank) {
  if (!o.window.empty()) return parse_window(rank, o.window);
  const Word w = parse_word(rank, o.word);
  if (!is_reduced(w)) return std::nullopt;
  return AffinePermutation::from_word(w);
}

Result decompose(const Options& o) {
  const Rank rank(o.k);
  const auto [dir, side] = parse_mode(o.mode);
  const auto x = element_from(o, rank);
  if (!x) return zero();
  const auto dec = canonical_decomposition(*x, dir, side);
  const KCode code = code_of(dec);
  if (o.format == Format::Json) {
    json j = to_json(dec);
    j["k"] = o.k;
    j["code"] = to_json(code);
    j["window"] = to_json(*x);
    j["length"] = x->length();
    return ok(dump(j));
  }
  std::ostringstream os;
  os << "mode: " << o.mode << '\n'
     << "factors: " << to_string(dec) << '\n'
     << "code: " << to_string(code) << '\n'
     << "window: " << to_string(*x) << '\n'
     << "length: " << x->length() << '\n';
  return ok(os.str());
}

Result equal(const Options& o) {
  const Rank rank(o.k);
  if (o.words.size() != 2) throw Error(Errc::Parse, "equal needs exactly two --word");
  std::optional<KCode> codes[2];
  for (int t = 0; t < 2; ++t) {
    const Word w = parse_word(rank, o.words[static_cast<std::size_t>(t)]);
    if (is_reduced(w)) codes[t] = rd(AffinePermutation::from_word(w));
  }
  const bool same = codes[0] == codes[1];
  if (o.format == Format::Json) return ok(dump(json{{"equal", same}}));
  return ok(same ? "equal\n" : "not-equal\n");
}

Result kschur(const Options& o) {
  const Rank rank(o.k);
  const BoundedPartition lambda(rank, parse_partition(o.partition));
  KSchurTable table(rank);
  if (o.action == "expand") {
    const NilCoxSum& f = table.get(lambda);
    return ok(o.format == Format::Json ? dump(to_json(f)) : to_string(f));
  }
  const SplitReport rep = verify_split_product(lambda, table);
  std::vector<std::string> comps;
  for (const auto& c : rep.components) comps.push_back(to_string(c));
  const char* status = rep.status == SplitReport::Status::Trivial ? "trivial"
                       : rep.status == SplitReport::Status::Equal ? "PASS"
                                                                  : "FAIL";
  const int code = rep.status == SplitReport::Status::Mismatch ? kUsage : kOk;
  if (o.format == Format::Json) {
    json j{{"status", status}, {"components", comps},
           {"groupings_checked", rep.groupings_checked}};
    if (rep.mismatch) {
      j["mismatch"] = {{"window", to_json(rep.mismatch->term)},
                       {"lhs", rep.mismatch->lhs.str()},
                       {"rhs", rep.mismatch->rhs.str()}};
    }
    return {code, dump(j), {}};
  }
  std::ostringstream os;
  if (rep.status == SplitReport::Status::Trivial) {
    os << "trivial (does not split)\n";
  } else {
    os << status << " components";
    for (const auto& c : comps) os << ' ' << c;
    os << "; groupings checked " << rep.groupings_checked << '\n';
    if (rep.mismatch) {
      os << "first difference at " << to_string(rep.mismatch->term) << ": "
         << rep.mismatch->lhs << " vs " << rep.mismatch->rhs << '\n';
    }
  }
  return {code, os.str(), {}};
}

Result selftest(const Options& o) {
  auto lim = acceptance::capped_limits(o.k, o.length_bound);
  lim.inject_fault = o.inject_fault;
  const auto outcomes = acceptance::run_all(lim);
  bool all = true;
  std::ostringstream os;
  json j = json::array();
  for (const auto& oc : outcomes) {
    all = all && oc.passed;
    os << acceptance::summary_line(oc) << '\n';
    j.push_back({{"id", oc.id}, {"name", oc.name}, {"passed", oc.passed},
                 {"detail", oc.detail}});
  }
  os << (all ? "PASS" : "FAIL") << '\n';
  const int code = all ? kOk : kUsage;
  if (o.format == Format::Json) return {code, dump(json{{"passed", all}, {"criteria", j}}), {}};
  return {code, os.str(), {}};
}

Result code_cmd(const Options& o) {
  const Rank rank(o.k);
  if (!o.code.empty()) {
    const KCode c = parse_code(rank, o.code);
    const AffinePermutation x = code_to_permutation(c);
    if (o.format == Format::Json) {
      return ok(dump(json{{"code", to_json(c)}, {"window", to_json(x)},
                          {"reading_word", reading_word(c).letters()}}));
    }
    return ok("window: " + to_string(x) + "\nreading word: " +
              to_string(reading_word(c)) + "\n");
  }
  const auto x = element_from(o, rank);
  if (!x) return zero();
  const std::pair<const char*, KCode> codes[] = {
      {"rd", rd(*x)},
      {"ri", ri(*x)},
      {"ld", ld(*x)},
      {"li", li(*x)},
      {"crd", affine_code(*x, AffineCodeVariant::CRD)},
      {"cri", affine_code(*x, AffineCodeVariant::CRI)},
      {"cld", affine_code(*x, AffineCodeVariant::CLD)},
      {"cli", affine_code(*x, AffineCodeVariant::CLI)},
  };
  if (o.format == Format::Json) {
    json j{{"window", to_json(*x)}, {"length", x->length()},
           {"right_descents", x->right_descents().members()},
           {"left_descents", x->left_descents().members()}};
    for (const auto& [name, c] : codes) j[name] = to_json(c);
    return ok(dump(j));
  }
  std::ostringstream os;
  os << "window: " << to_string(*x) << '\n'
     << "length: " << x->length() << '\n'
     << "right descents: " << to_string(x->right_descents()) << '\n'
     << "left descents: " << to_string(x->left_descents()) << '\n';
  for (const auto& [name, c] : codes) os << name << ": " << to_string(c) << '\n';
  return ok(os.str());
}

Result insert_cmd(const Options& o) {
  const Rank rank(o.k);
  const Word w = parse_word(rank, o.word);
  if (!is_reduced(w)) return zero();
  KCode code = KCode::zero(rank);
  std::ostringstream os;
  json steps = json::array();
  for (int p : w.letters()) {
    const InsertResult r = insert(code, p);
    os << "insert " << p << '\n' << to_string(r.trace);
    json moves = json::array();
    for (const auto& st : r.trace.steps) {
      moves.push_back({{"row", st.row}, {"move", move_kind_name(st.kind)},
                       {"p", st.residue}, {"carries", st.carried}});
    }
    steps.push_back({{"letter", p}, {"moves", moves}, {"code", to_json(r.code)}});
    code = r.code;
  }
  const auto res = insert_word(rank, w);
  if (o.format == Format::Json) {
    return ok(dump(json{{"steps", steps}, {"code", to_json(res.code)},
                        {"tableau", to_json(res.tableau)}}));
  }
  os << "code: " << to_string(res.code) << '\n'
     << "recording tableau:\n" << to_string(res.tableau);
  return ok(os.str());
}

Result core_cmd(const Options& o) {
  const Rank rank(o.k);
  const Partition p = parse_partition(o.partition);
  const CorePartition core = o.from_core ? CorePartition(rank, p)
                                         : to_core(BoundedPartition(rank, p));
  const BoundedPartition bounded = from_core(core);
  std::vector<std::string> comps;
  for (const auto& c : split_bounded_components(core)) comps.push_back(to_string(c));
  const BoundedPartition conj = k_conjugate_partition(bounded);
  if (o.format == Format::Json) {
    return ok(dump(json{{"bounded", bounded.parts()}, {"core", core.parts()},
                        {"components", comps}, {"k_conjugate", conj.parts()}}));
  }
  std::ostringstream os;
  os << "bounded: " << to_string(bounded) << '\n'
     << "core: " << to_string(core) << '\n'
     << "components:";
  for (const auto& c : comps) os << ' ' << c;
  os << "\nk-conjugate: " << to_string(conj) << '\n';
  return ok(os.str());
}

Result reduced_words_cmd(const Options& o) {
  const Rank rank(o.k);
  const auto x = element_from(o, rank);
  if (!x) return zero();
  const auto bound = static_cast<std::size_t>(o.length_bound);
  const BigInt count = count_reduced_words(*x, bound);
  const auto words = enumerate_reduced_words(*x, bound);
  if (o.format == Format::Json) {
    json list = json::array();
    for (const auto& w : words) list.push_back(w.letters());
    return ok(dump(json{{"count", count.str()}, {"words", list}}));
  }
  std::ostringstream os;
  os << "count: " << count << '\n';
  for (const auto& w : words) os << to_string(w) << '\n';
  return ok(os.str());
}

Result conjugate_cmd(const Options& o) {
  const Rank rank(o.k);
  if (!o.partition.empty()) {
    const BoundedPartition conj =
        k_conjugate_partition(BoundedPartition(rank, parse_partition(o.partition)));
    if (o.format == Format::Json) return ok(dump(json{{"k_conjugate", conj.parts()}}));
    return ok(to_string(conj) + "\n");
  }
  const auto x = element_from(o, rank);
  if (!x) return zero();
  const AffinePermutation y = k_conjugate_perm(*x);
  if (o.format == Format::Json) {
    return ok(dump(json{{"window", to_json(y)}, {"rd", to_json(rd(y))}}));
  }
  return ok("window: " + to_string(y) + "\nrd: " + to_string(rd(y)) + "\n");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--k", o.k, "rank k (window size k+1)")->required()
      ->check(CLI::Range(1, Rank::kMax));
  sub->add_option("--format", o.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}));
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"castle: canonical forms of affine permutations"};
  app.require_subcommand(1);
  Options o;

  auto* dec = app.add_subcommand("decompose", "canonical cyclic decomposition and k-code");
  add_common(dec, o);
  dec->add_option("--word", o.word, "space-separated residues");
  dec->add_option("--window", o.window, "window, e.g. [1,-6,0,15]");
  dec->add_option("--mode", o.mode, "rd, ri, ld or li");

  auto* eq = app.add_subcommand("equal", "compare two words in the nil-Coxeter monoid");
  add_common(eq, o);
  eq->add_option("--word", o.words, "word (give twice)")->required();

  auto* ks = app.add_subcommand("kschur", "expand a k-Schur function or check a split");
  add_common(ks, o);
  ks->add_option("--partition", o.partition, "k-bounded partition")->required();
  ks->add_option("action", o.action, "expand or verify-split")->required()
      ->check(CLI::IsMember({"expand", "verify-split"}));

  auto* st = app.add_subcommand("selftest", "run the verification suites");
  st->add_option("--k", o.k, "largest rank")->check(CLI::Range(1, Rank::kMax));
  st->add_option("--length-bound", o.length_bound, "largest length")
      ->check(CLI::NonNegativeNumber);
  st->add_option("--format", o.format)
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}));
  st->add_flag("--inject-fault", o.inject_fault)->group("");

  auto* cd = app.add_subcommand("code", "the k-codes of an element, or the element of a code");
  add_common(cd, o);
  cd->add_option("--word", o.word);
  cd->add_option("--window", o.window);
  cd->add_option("--code", o.code, "k-code, e.g. (3,8,4,0)");

  auto* in = app.add_subcommand("insert", "insertion traces and recording tableau");
  add_common(in, o);
  in->add_option("--word", o.word)->required();

  auto* co = app.add_subcommand("core", "bounded partition, core, boundary components");
  add_common(co, o);
  co->add_option("--partition", o.partition)->required();
  co->add_flag("--from-core", o.from_core, "read the partition as a (k+1)-core");

  auto* rw = app.add_subcommand("reduced-words", "enumerate reduced words");
  add_common(rw, o);
  rw->add_option("--word", o.word);
  rw->add_option("--window", o.window);
  rw->add_option("--length-bound", o.length_bound)->check(CLI::NonNegativeNumber);

  auto* cj = app.add_subcommand("conjugate", "k-conjugate of an element or a partition");
  add_common(cj, o);
  cj->add_option("--word", o.word);
  cj->add_option("--window", o.window);
  cj->add_option("--partition", o.partition);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kUsage, out.str(), err.str()};
  }

  try {
    if (*st) {
      if (o.k == 0) o.k = 3;
      return selftest(o);
    }
    if (*dec) return decompose(o);
    if (*eq) return equal(o);
    if (*ks) return kschur(o);
    if (*cd) return code_cmd(o);
    if (*in) return insert_cmd(o);
    if (*co) return core_cmd(o);
    if (*rw) {
      if (o.length_bound == 8 && rw->count("--length-bound") == 0) o.length_bound = 12;
      return reduced_words_cmd(o);
    }
    if (*cj) return conjugate_cmd(o);
  } catch (const Error& e) {
    return {kUsage, {}, std::string("error: ") + e.what() + "\n"};
  }
  return {kUsage, {}, "no subcommand\n"};
}

}  // namespace castle::cli
