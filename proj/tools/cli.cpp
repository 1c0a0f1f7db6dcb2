#include "colonlab/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "colonlab/errors.hpp"
#include "colonlab/hilbert.hpp"
#include "colonlab/ideal_ops.hpp"
#include "colonlab/parser.hpp"
#include "colonlab/theorems.hpp"

namespace colonlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Session {
  std::string command;
  std::string field = "F32003";
  std::string vars;
  std::string order = "degrevlex";
  std::string gens;
  std::string ideal2;
  std::string poly;
  std::string in_path;
  char gens_separator = ',';
  char ideal2_separator = ',';
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 0;
  std::size_t count = 100;
};

struct Outcome {
  Json ring;
  Json result;
  int exit_code = kExitOk;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// `key = value` per line; '#' starts a comment. Keys only fill options not
// given on the command line.
void apply_input_file(Session& s, const CLI::App& app) {
  std::ifstream in(s.in_path);
  if (!in) throw UsageError("cannot open input file '" + s.in_path + "'");
  std::string line;
  std::size_t line_no = 0;
  auto given = [&](const char* flag) { return app.count(flag) > 0; };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(s.in_path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "field") {
      if (!given("--field")) s.field = value;
    } else if (key == "vars") {
      if (!given("--vars")) s.vars = value;
    } else if (key == "order") {
      if (!given("--order")) s.order = value;
    } else if (key == "gens") {
      if (!given("--gens")) {
        s.gens = value;
        s.gens_separator = ';';
      }
    } else if (key == "ideal2") {
      if (!given("--ideal2")) {
        s.ideal2 = value;
        s.ideal2_separator = ';';
      }
    } else if (key == "poly") {
      if (!given("--poly")) s.poly = value;
    } else if (key == "seed") {
      if (!given("--seed")) s.seed = std::stoull(value);
    } else if (key == "count") {
      if (!given("--count")) s.count = std::stoull(value);
    } else {
      throw UsageError(s.in_path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
}

Json strings(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json ring_json(const Ring& ring) {
  Json vars = Json::array();
  for (const auto& v : ring.variables()) vars.push_back(v);
  return Json{{"field", ring.field().name()}, {"vars", vars}, {"order", ring.order().name()}};
}

Json table_json(const HilbertTable& t) { return Json(t.values); }

Json ladder_json(const LadderReport& r) {
  Json rungs = Json::array();
  for (const auto& rung : r.per_i) {
    rungs.push_back({{"i", rung.i},
                     {"lhs_gb_size", rung.lhs_gb_size},
                     {"rhs_gb_size", rung.rhs_gb_size},
                     {"equal", rung.equal}});
  }
  return rungs;
}

Json equivalence_json(const EquivalenceReport& r) {
  return Json{{"delta", r.delta},
              {"length", r.length},
              {"hilbert", table_json(r.table)},
              {"symmetric", r.symmetric},
              {"ladder_holds", r.ladder_holds},
              {"consistent", r.consistent},
              {"rungs", ladder_json(r.ladder)}};
}

class Context {
 public:
  explicit Context(const Session& s) : session_(s) {}

  const RingPtr& ring() {
    if (!ring_) {
      if (session_.vars.empty()) throw UsageError("--vars is required for '" + session_.command + "'");
      ring_ = Ring::make(split(session_.vars, ','), Field::parse(session_.field),
                         MonomialOrder::parse(session_.order));
    }
    return ring_;
  }

  std::vector<Polynomial> generators() {
    if (session_.gens.empty()) throw UsageError("--gens is required for '" + session_.command + "'");
    return parse_polynomial_list(session_.gens, ring(), session_.gens_separator);
  }

  Ideal ideal() { return Ideal(ring(), generators()); }

  bool has_second() const { return !session_.ideal2.empty(); }

  Ideal second_ideal() {
    if (!has_second()) throw UsageError("--ideal2 is required for '" + session_.command + "'");
    return Ideal(ring(), parse_polynomial_list(session_.ideal2, ring(), session_.ideal2_separator));
  }

  // --ideal2 if given, else the irrelevant ideal.
  Ideal second_or_maximal() { return has_second() ? second_ideal() : irrelevant_power(ring(), 1); }

 private:
  const Session& session_;
  RingPtr ring_;
};

Outcome run_command(const Session& s) {
  Context ctx(s);
  Outcome o;
  const std::string& cmd = s.command;
  if (cmd == "storch") {
    const auto report = storch_counterexample();
    const auto cmp = compare_with_published(report);
    o.ring = ring_json(*storch_ring());
    o.result = equivalence_json(report);
    o.result["gorenstein"] = cmp.gorenstein;
    o.result["published_hilbert"] = kStorchPublishedSeries;
    o.result["published_length"] = kStorchPublishedLength;
    o.result["qualitative_counterexample"] = cmp.qualitative();
    o.result["matches_published"] = cmp.matches_published();
    o.exit_code = cmp.matches_published() ? kExitOk : kExitVerdictFailed;
    return o;
  }
  if (cmd == "random-ci") {
    const Field field = Field::parse(s.field);
    o.ring = Json{{"field", field.name()}, {"vars", Json::array()}, {"order", "degrevlex"}};
    std::mt19937_64 rng(s.seed);
    Json instances = Json::array();
    bool all = true;
    for (std::size_t k = 0; k < s.count; ++k) {
      const RandomInstance inst = random_ci_instance(field, rng);
      const LadderReport ladder = verify_macaulay_ladder(inst.generators);
      const bool delta_ok = check_delta_identity(inst.generators);
      all = all && ladder.holds && delta_ok;
      instances.push_back({{"vars", inst.ring->variables()},
                           {"degrees", inst.degrees},
                           {"generators", strings(inst.generators)},
                           {"delta", ladder.delta},
                           {"ladder_holds", ladder.holds},
                           {"delta_identity", delta_ok}});
    }
    o.result = Json{{"seed", s.seed}, {"count", s.count}, {"all_hold", all}, {"instances", instances}};
    o.exit_code = all ? kExitOk : kExitVerdictFailed;
    return o;
  }

  o.ring = ring_json(*ctx.ring());
  if (cmd == "gb") {
    const Ideal ideal = ctx.ideal();
    o.result = Json{{"generators", strings(ideal.generators())},
                    {"groebner_basis", strings(ideal.groebner_basis())}};
  } else if (cmd == "nf") {
    if (s.poly.empty()) throw UsageError("--poly is required for 'nf'");
    const Ideal ideal = ctx.ideal();
    const Polynomial f = parse_polynomial(s.poly, ctx.ring());
    const Polynomial r = ideal.reduce(f);
    o.result = Json{{"poly", f.to_string()},
                    {"normal_form", r.to_string()},
                    {"member", r.is_zero()},
                    {"groebner_basis", strings(ideal.groebner_basis())}};
  } else if (cmd == "colon") {
    const Ideal result = colon(ctx.ideal(), ctx.second_or_maximal());
    o.result = Json{{"colon", strings(result.groebner_basis())}};
  } else if (cmd == "intersect") {
    const Ideal result = ideal_intersect(ctx.ideal(), ctx.second_ideal());
    o.result = Json{{"intersection", strings(result.groebner_basis())}};
  } else if (cmd == "hilbert") {
    const QuotientRing a = make_quotient(ctx.ideal());
    Json monomials = Json::array();
    for (const auto& m : a.standard_monomials()) monomials.push_back(monomial_to_string(*a.ring(), m));
    o.result = Json{{"length", a.length()}, {"standard_monomials", monomials}};
    o.result["graded"] = a.defining().is_homogeneous() && a.length() > 0
                             ? table_json(graded_hilbert(a))
                             : Json(nullptr);
    const HilbertTable filtration = filtration_hilbert(a, ctx.second_or_maximal());
    o.result["filtration"] = table_json(filtration);
    o.result["delta"] = filtration.delta;
    o.result["symmetric"] = is_symmetric(filtration);
  } else if (cmd == "socle") {
    const QuotientRing a = make_quotient(ctx.ideal());
    o.result = Json{{"socle", strings(socle(a).groebner_basis())},
                    {"socle_dimension", socle_dimension(a)},
                    {"gorenstein", is_gorenstein(a)}};
  } else if (cmd == "ladder") {
    const auto gens = ctx.generators();
    const LadderReport r = verify_macaulay_ladder(gens);
    Json degrees = Json::array();
    for (const auto& g : gens) degrees.push_back(g.total_degree());
    o.result = Json{{"delta", r.delta}, {"degrees", degrees}, {"holds", r.holds}, {"rungs", ladder_json(r)}};
    o.exit_code = r.holds ? kExitOk : kExitVerdictFailed;
  } else if (cmd == "symmetry") {
    const SymmetryReport r = verify_symmetry(ctx.ideal());
    o.result = Json{{"hilbert", table_json(r.table)}, {"delta", r.table.delta}, {"symmetric", r.symmetric}};
    o.exit_code = r.symmetric ? kExitOk : kExitVerdictFailed;
  } else if (cmd == "equiv") {
    const QuotientRing a = make_quotient(ctx.ideal());
    const EquivalenceReport r = verify_main_equivalence(a, ctx.second_or_maximal());
    o.result = equivalence_json(r);
    o.exit_code = r.consistent ? kExitOk : kExitVerdictFailed;
  } else if (cmd == "corollary") {
    const LadderReport r = verify_corollary(ctx.ideal());
    o.result = Json{{"delta", r.delta}, {"holds", r.holds}, {"rungs", ladder_json(r)}};
    o.exit_code = r.holds ? kExitOk : kExitVerdictFailed;
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
  return o;
}

void print_text(const Json& doc, std::ostream& out) {
  out << "command: " << doc["command"].get<std::string>() << "\n";
  const Json& ring = doc["ring"];
  out << "ring: " << ring["field"].get<std::string>() << "[";
  bool first = true;
  for (const auto& v : ring["vars"]) {
    out << (first ? "" : ",") << v.get<std::string>();
    first = false;
  }
  out << "] " << ring["order"].get<std::string>() << "\n";
  for (const auto& [key, value] : doc["result"].items()) {
    if (key == "rungs" || key == "instances") {
      for (const auto& row : value) out << "  " << key << ": " << row.dump() << "\n";
      continue;
    }
    out << key << ": ";
    if (value.is_array() && !value.empty() && value.front().is_string()) {
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << value[i].get<std::string>();
      out << "\n";
    } else {
      out << value.dump() << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  CLI::App app{"Colon ideals, Hilbert functions and the colon ladder", "colonlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", s.field, "Coefficient field: Q or F<p> (default F32003)");
  app.add_option("--vars", s.vars, "Comma-separated variables, greatest first");
  app.add_option("--order", s.order, "Monomial order: degrevlex or lex");
  app.add_option("--gens", s.gens, "Comma-separated generators");
  app.add_option("--ideal2", s.ideal2, "Second ideal (colon, intersect, equiv, hilbert)");
  app.add_option("--poly", s.poly, "Polynomial to reduce (nf)");
  app.add_flag("--json", s.json, "Emit a JSON report");
  app.add_flag("--timing", s.timing, "Report wall-clock time in timing_ms");
  app.add_option("--seed", s.seed, "Seed for random-ci");
  app.add_option("--count", s.count, "Number of random-ci instances");
  app.add_option("--in", s.in_path, "Read 'key = value' options from a file");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"gb", "Reduced Groebner basis"},
      {"nf", "Normal form of --poly modulo the ideal"},
      {"colon", "Ideal quotient I : J (J = --ideal2, default m)"},
      {"intersect", "Intersection with --ideal2"},
      {"hilbert", "Length and Hilbert functions of R/I"},
      {"socle", "Socle and Gorenstein test of R/I"},
      {"ladder", "colon ladder I : m^i = I + m^(delta+1-i)"},
      {"symmetry", "Symmetry of the graded Hilbert function (Gorenstein R/I)"},
      {"equiv", "Colon ladder versus Hilbert symmetry for I = --ideal2 in R/J"},
      {"corollary", "0 : m^i = m^(delta+1-i) in a graded Gorenstein quotient"},
      {"storch", "Storch's characteristic-2 counterexample"},
      {"random-ci", "Ladder on random complete intersections"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&s, cmd = std::string(name)] { s.command = cmd; });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!s.in_path.empty()) apply_input_file(s, app);
    const auto start = std::chrono::steady_clock::now();
    Outcome o = run_command(s);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    Json doc;
    doc["command"] = s.command;
    doc["ring"] = std::move(o.ring);
    doc["result"] = std::move(o.result);
    doc["timing_ms"] =
        s.timing ? std::chrono::duration<double, std::milli>(elapsed).count() : 0.0;
    if (s.json) {
      out << doc.dump(2) << "\n";
    } else {
      print_text(doc, out);
    }
    return o.exit_code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArithmeticError& e) {
    err << "arithmetic error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace colonlab::cli
