#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "combi/asymptotics.hpp"
#include "combi/binomials.hpp"
#include "combi/errors.hpp"
#include "combi/expand.hpp"
#include "combi/inclexcl.hpp"
#include "combi/mapscount.hpp"
#include "combi/oracle.hpp"

namespace combi::cli {
namespace {

using json = nlohmann::json;

std::uint64_t parse_index(const std::string& text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || text.front() == '+')
    throw UsageError(std::string(what) + " must be a nonnegative decimal integer, got '" + text + "'");
  return value;
}

std::int64_t parse_signed(const std::string& text, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw UsageError(std::string(what) + " must be a decimal integer, got '" + text + "'");
  return value;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open family file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json nat_rows(const std::vector<std::vector<Nat>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    out.push_back(std::move(r));
  }
  return out;
}

json binet_json(const BinetReport& r) {
  return json{{"n", r.n},
              {"lambda_n", r.lambda_n},
              {"lambda_refined", r.lambda_refined},
              {"lower", r.lower},
              {"upper", r.upper},
              {"log_factorial", r.log_factorial},
              {"upper_margin", r.upper_margin},
              {"lower_margin", r.lower_margin},
              {"margin_budget", r.margin_budget},
              {"direct_budget", r.direct_budget},
              {"strict", r.strict},
              {"direct_consistent", r.direct_consistent}};
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

// Writes either the plain rendering or {"command": ..., <payload>}.
class Output {
 public:
  Output(std::ostream& out, bool json_mode, std::string command)
      : out_(out), json_(json_mode), command_(std::move(command)) {}

  void value(const std::string& v) {
    if (json_)
      emit({{"value", v}});
    else
      out_ << v << '\n';
  }

  void plain_or_json(const std::string& plain, json payload) {
    if (json_)
      emit(std::move(payload));
    else
      out_ << plain;
  }

 private:
  void emit(json payload) {
    json doc = {{"command", command_}};
    doc.update(payload);
    out_ << doc.dump() << '\n';
  }

  std::ostream& out_;
  bool json_;
  std::string command_;
};

struct Args {
  std::vector<std::string> pos;
  std::string family_path;
  std::string p;
  std::string max;
  std::string vars;
  std::string power;
  std::string eval;
  bool ratio = false;
  bool list = false;
  bool grouped = false;
};

std::string require(const std::string& value, std::string_view flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
  return value;
}

void expect_positionals(const Args& a, std::size_t count, std::string_view usage) {
  if (a.pos.size() != count) throw UsageError("usage: " + std::string(usage));
}

}  // namespace

FamilyInput parse_family_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("family file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("family file must hold a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "universe" && key != "sets" && key != "weights")
      throw UsageError("family file has unknown key '" + key + "'");
  }
  if (!doc.contains("universe") || !doc["universe"].is_number_unsigned())
    throw UsageError("family 'universe' must be a nonnegative integer");
  const auto universe = doc["universe"].get<std::size_t>();

  if (!doc.contains("sets") || !doc["sets"].is_array()) throw UsageError("family 'sets' must be an array");
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& s : doc["sets"]) {
    if (!s.is_array()) throw UsageError("each entry of 'sets' must be an array of indices");
    std::vector<std::size_t> members;
    for (const auto& idx : s) {
      if (!idx.is_number_unsigned()) throw UsageError("set members must be nonnegative integers");
      const auto i = idx.get<std::size_t>();
      if (i >= universe)
        throw UsageError("set member " + std::to_string(i) + " is outside universe of size " +
                         std::to_string(universe));
      members.push_back(i);
    }
    sets.push_back(std::move(members));
  }

  std::vector<Rat> weights(universe, Rat(1));
  if (doc.contains("weights")) {
    const auto& w = doc["weights"];
    if (!w.is_array() || w.size() != universe)
      throw UsageError("family 'weights' must be an array of " + std::to_string(universe) + " entries");
    for (std::size_t i = 0; i < universe; ++i) {
      if (w[i].is_string()) {
        try {
          weights[i] = Rat::parse(w[i].get<std::string>());
        } catch (const InputError& e) {
          throw UsageError(std::string("weight ") + std::to_string(i) + ": " + e.what());
        }
      } else if (w[i].is_number_unsigned()) {
        weights[i] = Rat(w[i].get<std::uint64_t>());
      } else {
        throw UsageError("weight " + std::to_string(i) + " must be a string like \"1/2\"");
      }
      if (weights[i].sign() < 0) throw UsageError("weight " + std::to_string(i) + " is negative");
    }
  }
  return FamilyInput{SetFamily::from_indices(universe, sets), Measure(std::move(weights))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumerative combinatorics: counts, expansions and inclusion-exclusion."};
  app.name("combi");
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Emit JSON instead of plain text");

  Args a;
  auto positional = [&](CLI::App* sub, std::string_view help) {
    sub->add_option("args", a.pos, std::string(help));
    return sub;
  };
  auto family_opt = [&](CLI::App* sub) { sub->add_option("--family", a.family_path, "Family JSON file"); };

  std::map<std::string, CLI::App*> subs;
  subs["fact"] = positional(app.add_subcommand("fact", "n!"), "n");
  subs["binom"] = positional(app.add_subcommand("binom", "Binomial coefficient C(n,k)"), "n k");
  subs["pascal"] = positional(app.add_subcommand("pascal", "Rows 0..max of Pascal's triangle"), "[max]");
  subs["pascal"]->add_option("--max", a.max, "Last row");
  subs["multinom"] = positional(app.add_subcommand("multinom", "Multinomial coefficient"), "n k1,k2,...");
  subs["multiset"] = positional(app.add_subcommand("multiset", "Multisets of size n over m symbols"), "m n");
  subs["multiset"]->add_flag("--list", a.list, "List the compositions of n into m parts");
  subs["func"] = positional(app.add_subcommand("func", "Functions from an m-set to an n-set"), "m n");
  subs["inj"] = positional(app.add_subcommand("inj", "Injections from an m-set to an n-set"), "m n");
  subs["perm"] = positional(app.add_subcommand("perm", "Permutations of an n-set"), "n");
  subs["surj"] = positional(app.add_subcommand("surj", "Surjections from an n-set onto a p-set"), "n p");
  subs["stirling2"] = positional(app.add_subcommand("stirling2", "Stirling numbers of the second kind"), "n p");
  subs["derange"] = positional(app.add_subcommand("derange", "Derangements of an n-set"), "n");
  subs["derange"]->add_flag("--ratio", a.ratio, "Print p_n/n! and its distance to 1/e instead");
  subs["expand"] = app.add_subcommand("expand", "(a1 + ... + am)^n");
  subs["expand"]->add_option("--vars", a.vars, "Number of variables m (default 2)");
  subs["expand"]->add_option("--power", a.power, "Exponent n")->required();
  subs["expand"]->add_option("--eval", a.eval, "Evaluate at v1,v2,...");

  auto* ie = app.add_subcommand("ie", "Inclusion-exclusion over a set family");
  ie->require_subcommand(1, 1);
  subs["ie union"] = ie->add_subcommand("union", "Measure of the union");
  subs["ie sylvester"] = ie->add_subcommand("sylvester", "Measure of elements in no set");
  subs["ie sylvester"]->add_flag("--grouped", a.grouped, "Group terms by |I|");
  subs["ie sieve"] = ie->add_subcommand("sieve", "Measure of elements in exactly p sets");
  subs["ie sieve"]->add_option("--p", a.p, "Multiplicity p");
  for (auto name : {"ie union", "ie sylvester", "ie sieve"}) family_opt(subs[name]);

  auto* approx = app.add_subcommand("approx", "Floating-point asymptotics");
  approx->require_subcommand(1, 1);
  subs["approx stirling"] = positional(approx->add_subcommand("stirling", "ln n! against Stirling"), "n");

  auto* check = app.add_subcommand("check", "Verify bounds");
  check->require_subcommand(1, 1);
  subs["check binet"] = positional(check->add_subcommand("binet", "Binet bounds on lambda_n"), "[n]");
  subs["check binet"]->add_option("--max", a.max, "Check every n in 1..max");

  auto* orc = app.add_subcommand("oracle", "Brute-force enumerators");
  orc->require_subcommand(1, 1);
  subs["oracle subsets"] = positional(orc->add_subcommand("subsets", "Size-k subsets of [n]"), "n k");
  subs["oracle maps"] = positional(orc->add_subcommand("maps", "Maps [m]->[n] of a kind"), "m n kind");
  subs["oracle partitions"] = positional(orc->add_subcommand("partitions", "Partitions of [n] into p blocks"), "n p");
  subs["oracle union"] = orc->add_subcommand("union", "Literal union measure");
  subs["oracle exactly"] = orc->add_subcommand("exactly", "Measure of elements in exactly p sets");
  subs["oracle exactly"]->add_option("--p", a.p, "Multiplicity p");
  for (auto name : {"oracle union", "oracle exactly"}) family_opt(subs[name]);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "combi: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  Output o(out, json_mode, command);
  try {
    const auto idx = [&](std::size_t i, std::string_view what) { return parse_index(a.pos.at(i), what); };
    const auto family = [&] { return parse_family_json(read_file(require(a.family_path, "--family"))); };

    if (command == "fact") {
      expect_positionals(a, 1, "fact n");
      o.value(factorial(idx(0, "n")).str());
    } else if (command == "binom") {
      expect_positionals(a, 2, "binom n k");
      const auto n = idx(0, "n");
      o.value(binomial(n, parse_signed(a.pos[1], "k")).str());
    } else if (command == "pascal") {
      if (a.pos.size() > 1 || (a.pos.size() == 1 && !a.max.empty())) throw UsageError("usage: pascal [--max] n");
      const auto n_max = parse_index(a.pos.empty() ? require(a.max, "--max") : a.pos[0], "max");
      const auto rows = pascal_triangle(n_max);
      std::string text;
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) text += (k ? " " : "") + row[k].str();
        text += '\n';
      }
      o.plain_or_json(text, {{"rows", nat_rows(rows)}});
    } else if (command == "multinom") {
      expect_positionals(a, 2, "multinom n k1,k2,...");
      const auto n = idx(0, "n");
      std::vector<std::int64_t> ks;
      for (const auto& part : split_commas(a.pos[1])) ks.push_back(parse_signed(part, "k_i"));
      o.value(multinomial(n, ks).str());
    } else if (command == "multiset") {
      expect_positionals(a, 2, "multiset m n [--list]");
      const auto m = idx(0, "m");
      const auto n = idx(1, "n");
      if (!a.list) {
        o.value(multiset_count(m, n).str());
      } else {
        std::string text;
        json list = json::array();
        CompositionStream stream(m, n);
        while (auto c = stream.next()) {
          for (std::size_t i = 0; i < c->parts.size(); ++i) text += (i ? "," : "") + std::to_string(c->parts[i]);
          text += '\n';
          list.push_back(c->parts);
        }
        o.plain_or_json(text, {{"compositions", list}});
      }
    } else if (command == "func") {
      expect_positionals(a, 2, "func m n");
      o.value(count_functions(idx(0, "m"), idx(1, "n")).str());
    } else if (command == "inj") {
      expect_positionals(a, 2, "inj m n");
      o.value(count_injections(idx(0, "m"), idx(1, "n")).str());
    } else if (command == "perm") {
      expect_positionals(a, 1, "perm n");
      o.value(count_permutations(idx(0, "n")).str());
    } else if (command == "surj") {
      expect_positionals(a, 2, "surj n p");
      o.value(count_surjections(idx(0, "n"), idx(1, "p")).str());
    } else if (command == "stirling2") {
      expect_positionals(a, 2, "stirling2 n p");
      o.value(stirling2(idx(0, "n"), idx(1, "p")).str());
    } else if (command == "derange") {
      expect_positionals(a, 1, "derange n [--ratio]");
      const auto n = idx(0, "n");
      if (!a.ratio) {
        o.value(count_derangements(n).str());
      } else {
        const double ratio = derangement_ratio(n);
        const bool within = derangement_ratio_within_bound(n);
        o.plain_or_json(fmt(ratio) + (within ? "" : "  (remainder bound violated)") + "\n",
                        {{"ratio", ratio}, {"within_bound", within}});
        if (!within) return kExitDomain;
      }
    } else if (command == "expand") {
      const auto m = a.vars.empty() ? 2 : parse_index(a.vars, "--vars");
      const auto n = parse_index(a.power, "--power");
      std::vector<Nat> point;
      if (!a.eval.empty()) {
        for (const auto& v : split_commas(a.eval)) {
          try {
            point.push_back(Nat::parse(v));
          } catch (const InputError&) {
            throw UsageError("--eval entries must be nonnegative integers, got '" + v + "'");
          }
        }
        if (point.size() != m)
          throw UsageError("--eval needs " + std::to_string(m) + " values, got " + std::to_string(point.size()));
      }
      const Poly poly = m == 2 ? binomial_expand(n) : multinomial_expand(m, n);
      if (!a.eval.empty()) {
        o.value(evaluate(poly, point).str());
      } else {
        json terms = json::array();
        for (const auto& [mono, coeff] : poly.terms())
          terms.push_back({{"exponents", mono}, {"coefficient", coeff.str()}});
        o.plain_or_json(render(poly) + "\n", {{"vars", m}, {"power", n}, {"terms", terms}, {"text", render(poly)}});
      }
    } else if (command == "ie union" || command == "ie sylvester" || command == "ie sieve" ||
               command == "oracle union" || command == "oracle exactly") {
      if (!a.pos.empty()) throw UsageError("unexpected positional arguments");
      const bool needs_p = command == "ie sieve" || command == "oracle exactly";
      if (!needs_p && !a.p.empty()) throw UsageError("--p only applies to sieve and exactly");
      const auto p = needs_p ? parse_index(require(a.p, "--p"), "--p") : 0;
      const auto input = family();
      Rat result;
      if (command == "ie union")
        result = ie_union(input.family, input.measure);
      else if (command == "ie sylvester")
        result = a.grouped ? sylvester_grouped(input.family, input.measure) : sylvester(input.family, input.measure);
      else if (command == "ie sieve")
        result = sieve(input.family, input.measure, p);
      else if (command == "oracle union")
        result = oracle::direct_union_measure(input.family, input.measure);
      else
        result = oracle::direct_exactly_p_measure(input.family, input.measure, p);
      o.value(result.str());
    } else if (command == "approx stirling") {
      expect_positionals(a, 1, "approx stirling n");
      const auto n = idx(0, "n");
      const double lf = log_factorial(n);
      const double st = stirling_approx_log(n);
      const double ratio = std::exp(lf - st);
      o.plain_or_json("log_factorial " + fmt(lf) + "\nstirling_log " + fmt(st) + "\nratio " + fmt(ratio) + "\n",
                      {{"n", n}, {"log_factorial", lf}, {"stirling_log", st}, {"ratio", ratio}});
    } else if (command == "check binet") {
      if (a.pos.size() + (a.max.empty() ? 0 : 1) != 1) throw UsageError("usage: check binet n | --max n");
      if (a.pos.size() == 1) {
        const auto r = binet_report(idx(0, "n"));
        std::ostringstream text;
        text << "n " << r.n << "\nlambda_n " << fmt(r.lambda_n) << "\nlambda_refined " << fmt(r.lambda_refined)
             << "\nlower " << fmt(r.lower) << "\nupper " << fmt(r.upper) << "\nlower_margin " << fmt(r.lower_margin)
             << "\nupper_margin " << fmt(r.upper_margin) << "\nmargin_budget " << fmt(r.margin_budget)
             << "\nstrict " << (r.strict ? "yes" : "no") << "\n";
        o.plain_or_json(text.str(), {{"report", binet_json(r)}});
        if (!r.strict) return kExitDomain;
      } else {
        const auto n_max = parse_index(a.max, "--max");
        std::uint64_t failures = 0;
        double min_ratio = std::numeric_limits<double>::infinity();
        for (std::uint64_t n = 1; n <= n_max; ++n) {
          const auto r = binet_report(n);
          if (!r.strict || !r.direct_consistent) ++failures;
          min_ratio = std::min(min_ratio, std::min(r.upper_margin, r.lower_margin) / r.margin_budget);
        }
        o.plain_or_json("checked 1.." + std::to_string(n_max) + ": " + std::to_string(failures) +
                            " failures, smallest margin/budget " + fmt(min_ratio) + "\n",
                        {{"max", n_max}, {"failures", failures}, {"min_margin_over_budget", min_ratio}});
        if (failures != 0) return kExitDomain;
      }
    } else if (command == "oracle subsets") {
      expect_positionals(a, 2, "oracle subsets n k");
      const auto n = idx(0, "n");
      o.value(oracle::enum_subsets_k(n, parse_signed(a.pos[1], "k")).str());
    } else if (command == "oracle maps") {
      expect_positionals(a, 3, "oracle maps m n all|injective|surjective|bijective|derangement");
      const auto m = idx(0, "m");
      const auto n = idx(1, "n");
      oracle::MapKind kind;
      try {
        kind = oracle::parse_map_kind(a.pos[2]);
      } catch (const InputError& e) {
        throw UsageError(e.what());
      }
      o.value(oracle::enum_maps(m, n, kind).str());
    } else if (command == "oracle partitions") {
      expect_positionals(a, 2, "oracle partitions n p");
      o.value(oracle::enum_partitions(idx(0, "n"), idx(1, "p")).str());
    } else {
      throw UsageError("missing subcommand");
    }
  } catch (const UsageError& e) {
    err << "combi: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range&) {
    err << "combi: missing positional argument\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // InputError, CapacityError, ConsistencyError
    err << "combi: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace combi::cli
