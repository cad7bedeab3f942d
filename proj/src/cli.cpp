#include "braids/cli.hpp"

#include <optional>
#include <sstream>

#include <json.hpp>

#include "braids/errors.hpp"
#include "braids/garside.hpp"
#include "braids/pure_braid.hpp"
#include "braids/singular_braid.hpp"
#include "braids/trace_monoid.hpp"
#include "braids/verify.hpp"
#include "braids/words_parse.hpp"

namespace braids::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kVerifyFailed = 3;

struct Options {
  std::optional<int> n;
  bool plain = false;
  std::optional<double> budget;
  std::optional<int> max_len;
  std::optional<unsigned long long> seed;
  std::string edges;
  std::vector<std::string> positional;
};

const char* kUsageText = R"(usage: braids <command> [flags] [words...]

commands:
  nf <word>             Garside left normal form of a braid word
  eq <w1> <w2>          equality in B_n
  theta <word>          image in the symmetric group
  abel <word>           abelianization of a pure braid (linking numbers)
  eta <word>            desingularization into Z[B_n]
  sbnf <word>           canonical form (trace, braid) of a singular word
  sbeq <w1> <w2>        equality in SB_n
  tracenf <word>        trace-monoid normal form (--edges "a:b,b:c")
  verify <suite>        run a verification suite ("all" runs every suite)

flags:
  --n <int>       strand count (default: inferred as max index + 1)
  --plain         plain text output instead of JSON
  --budget <sec>  soft time budget for verify suites
  --max-len <int> length bound for randomized/enumeration suites
  --seed <int>    seed for randomized suites (default fixed)
  --edges <list>  commutation edges for tracenf, comma-separated "a:b" pairs

word grammar: whitespace-separated tokens s<i>, S<i> (= s<i>^-1), t<i>, d<i>,
each optionally followed by ^<exp>; exponents on t/d must be >= 1.
)";

Options parse_options(const std::vector<std::string>& args, size_t first, std::ostream& err,
                      bool& ok) {
  Options o;
  ok = true;
  auto need_value = [&](size_t& at, const std::string& flag) -> std::optional<std::string> {
    if (at + 1 >= args.size()) {
      err << "flag " << flag << " needs a value\n";
      ok = false;
      return std::nullopt;
    }
    return args[++at];
  };
  for (size_t at = first; at < args.size(); ++at) {
    const std::string& a = args[at];
    try {
      if (a == "--n") {
        if (auto v = need_value(at, a)) o.n = std::stoi(*v);
      } else if (a == "--plain") {
        o.plain = true;
      } else if (a == "--budget") {
        if (auto v = need_value(at, a)) o.budget = std::stod(*v);
      } else if (a == "--max-len") {
        if (auto v = need_value(at, a)) o.max_len = std::stoi(*v);
      } else if (a == "--seed") {
        if (auto v = need_value(at, a)) o.seed = std::stoull(*v);
      } else if (a == "--edges") {
        if (auto v = need_value(at, a)) o.edges = *v;
      } else if (a.rfind("--", 0) == 0) {
        err << "unknown flag: " << a << "\n";
        ok = false;
      } else {
        o.positional.push_back(a);
      }
    } catch (const std::exception&) {
      err << "bad value for flag " << a << "\n";
      ok = false;
    }
  }
  return o;
}

void emit(std::ostream& out, const Options& o, const nlohmann::json& json,
          const std::string& plain) {
  if (o.plain)
    out << plain << "\n";
  else
    out << json.dump() << "\n";
}

int cmd_nf(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 1) {
    err << "nf expects one word\n";
    return kUsage;
  }
  CanonicalBraid c = normal_form(parse_braid_word(o.positional[0], o.n));
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : c.factors) factors.push_back(f.images1());
  emit(out, o,
       {{"key", canonical_key(c)}, {"n", c.n}, {"inf", c.inf}, {"factors", factors}},
       canonical_key(c));
  return kOk;
}

int cmd_eq(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 2) {
    err << "eq expects two words\n";
    return kUsage;
  }
  int n = o.n.value_or(0);
  if (!o.n) {
    // infer a common strand count across both words
    for (const auto& text : o.positional) {
      BraidWord w = parse_braid_word(text, std::nullopt);
      n = std::max(n, w.n);
    }
  }
  bool equal = braid_equals(parse_braid_word(o.positional[0], n),
                            parse_braid_word(o.positional[1], n));
  emit(out, o, {{"equal", equal}}, equal ? "true" : "false");
  return kOk;
}

int cmd_theta(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 1) {
    err << "theta expects one word\n";
    return kUsage;
  }
  Permutation p = theta(parse_braid_word(o.positional[0], o.n));
  std::string plain;
  for (int v : p.images1()) plain += (plain.empty() ? "" : " ") + std::to_string(v);
  emit(out, o, {{"images", p.images1()}}, plain);
  return kOk;
}

int cmd_abel(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 1) {
    err << "abel expects one word\n";
    return kUsage;
  }
  AbelianVector v = abelianize(parse_braid_word(o.positional[0], o.n));
  emit(out, o, nlohmann::json::parse(abelian_to_json(v)), abelian_to_json(v));
  return kOk;
}

int cmd_eta(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 1) {
    err << "eta expects one word\n";
    return kUsage;
  }
  RingElement p = desingularize(parse_singular_word(o.positional[0], o.n));
  emit(out, o, nlohmann::json::parse(ring_to_json(p)), ring_to_string(p));
  return kOk;
}

int cmd_sbnf(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 1) {
    err << "sbnf expects one word\n";
    return kUsage;
  }
  SingularWord w = parse_singular_word(o.positional[0], o.n);
  SingularContext ctx(w.n);
  SBElement e = decompose(ctx, w);
  emit(out, o, nlohmann::json::parse(sb_to_json(e)), sb_to_json(e));
  return kOk;
}

int cmd_sbeq(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 2) {
    err << "sbeq expects two words\n";
    return kUsage;
  }
  int n = o.n.value_or(0);
  if (!o.n) {
    for (const auto& text : o.positional) {
      SingularWord w = parse_singular_word(text, std::nullopt);
      n = std::max(n, w.n);
    }
  }
  SingularContext ctx(n);
  bool equal = sb_equals(ctx, parse_singular_word(o.positional[0], n),
                         parse_singular_word(o.positional[1], n));
  emit(out, o, {{"equal", equal}}, equal ? "true" : "false");
  return kOk;
}

int cmd_tracenf(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 1) {
    err << "tracenf expects one word\n";
    return kUsage;
  }
  EdgeSetOracle oracle;
  std::stringstream edges(o.edges);
  std::string pair;
  while (std::getline(edges, pair, ',')) {
    if (pair.empty()) continue;
    size_t colon = pair.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= pair.size()) {
      err << "bad edge \"" << pair << "\": expected a:b\n";
      return kUsage;
    }
    oracle.add_edge(pair.substr(0, colon), pair.substr(colon + 1));
  }
  TraceWord w;
  std::istringstream in(o.positional[0]);
  std::string letter;
  while (in >> letter) w.letters.push_back(letter);
  TraceWord nf = trace_normal_form(w, oracle);
  std::string plain;
  for (const auto& l : nf.letters) plain += (plain.empty() ? "" : " ") + l;
  emit(out, o, {{"letters", nf.letters}}, plain);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 1) {
    err << "verify expects one suite name; known suites:";
    for (const auto& s : suite_names()) err << " " << s;
    err << " all\n";
    return kUsage;
  }
  VerifyOptions vo;
  vo.n = o.n;
  vo.budget_seconds = o.budget;
  vo.max_len = o.max_len;
  if (o.seed) vo.seed = *o.seed;
  std::vector<std::string> selected;
  if (o.positional[0] == "all") {
    selected = suite_names();
  } else {
    selected.push_back(o.positional[0]);
  }
  bool all_pass = true;
  for (const auto& name : selected) {
    VerifyReport report;
    try {
      report = run_suite(name, vo);
    } catch (const DomainError& e) {
      err << e.what() << "; known suites:";
      for (const auto& s : suite_names()) err << " " << s;
      err << " all\n";
      return kUsage;
    }
    all_pass = all_pass && report.pass();
    if (o.plain)
      out << report_to_text(report) << "\n";
    else
      out << report_to_json(report) << "\n";
  }
  return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsageText;
    return kUsage;
  }
  const std::string& command = args[0];
  if (command == "help" || command == "--help" || command == "-h") {
    out << kUsageText;
    return kOk;
  }
  bool flags_ok = false;
  Options o = parse_options(args, 1, err, flags_ok);
  if (!flags_ok) return kUsage;
  try {
    if (command == "nf") return cmd_nf(o, out, err);
    if (command == "eq") return cmd_eq(o, out, err);
    if (command == "theta") return cmd_theta(o, out, err);
    if (command == "abel") return cmd_abel(o, out, err);
    if (command == "eta") return cmd_eta(o, out, err);
    if (command == "sbnf") return cmd_sbnf(o, out, err);
    if (command == "sbeq") return cmd_sbeq(o, out, err);
    if (command == "tracenf") return cmd_tracenf(o, out, err);
    if (command == "verify") return cmd_verify(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "unknown command: " << command << "\n" << kUsageText;
  return kUsage;
}

}  // namespace braids::cli
