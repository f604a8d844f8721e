#include "skewbrace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewbrace/enumerate.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/ideals.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/perm_brace.hpp"
#include "skewbrace/presentations.hpp"

namespace skewbrace {

namespace {

using nlohmann::json;

// Collects the text report, the JSON mirror and the exit status for one
// subcommand run.
struct Report {
  bool json_mode = false;
  int status = 0;
  std::ostringstream text;
  json j = {{"witnesses", json::array()}, {"counts", json::object()}};

  void witness(const std::string& w) {
    text << w << "\n";
    j["witnesses"].push_back(w);
  }

  CommandResult finish() {
    j["status"] = status;
    return {status, json_mode ? j.dump(2) + "\n" : text.str()};
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write file '" + path + "'");
  out << content;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int_arg(const std::string& tok, const std::string& what) {
  try {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw FormatError("expected an integer for " + what + ", got '" + tok + "'");
  }
}

std::string format_elements(const std::vector<int>& elems) {
  std::string out = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(elems[i]);
  }
  return out + "}";
}

std::string format_subset(const ElementSubset& s) { return format_elements(s.elements()); }

std::string format_series(const AscendingSeries& series) {
  std::string out;
  for (size_t i = 0; i < series.terms.size(); ++i) {
    if (i) out += " < ";
    out += format_subset(series.terms[i]);
  }
  return out;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

// Loads and verifies a brace. On verification failure fills the report with
// the violations and sets status 1, returning false.
bool load_verified_brace(const std::string& path, Report& rep, FiniteSkewBrace& out) {
  out = parse_brace(read_file(path));
  const VerifyReport v = verify(out);
  rep.j["counts"]["n"] = out.n;
  if (v.pass()) return true;
  rep.status = 1;
  rep.text << "skew brace: no\n";
  rep.j["pass"] = false;
  for (const auto& viol : v.violations) {
    std::string line = "violation: " + viol.detail;
    if (viol.occurrences > 1) line += " (+" + std::to_string(viol.occurrences - 1) + " more)";
    rep.witness(line);
  }
  rep.j["counts"]["violations"] = v.violations.size();
  return false;
}

void cmd_verify_solution(const std::string& file, Report& rep) {
  const SolutionTable sol = parse_solution(read_file(file));
  rep.j["counts"]["n"] = sol.n;
  if (const auto w = bijectivity_witness(sol)) {
    rep.status = 1;
    rep.text << "bijective: no\n";
    rep.j["bijective"] = false;
    rep.witness("witness: (" + std::to_string((*w)[0]) + ", " + std::to_string((*w)[1]) + ") and (" +
                std::to_string((*w)[2]) + ", " + std::to_string((*w)[3]) + ") both map to (" +
                std::to_string((*w)[4]) + ", " + std::to_string((*w)[5]) + ")");
    return;
  }
  const auto ybe = ybe_witness(sol);
  const auto nd = nondegeneracy_witness(sol);
  const auto inv = involutivity_witness(sol);
  rep.j["bijective"] = true;
  rep.j["ybe"] = !ybe;
  rep.j["nondegenerate"] = !nd;
  rep.j["involutive"] = !inv;
  rep.text << "YBE: " << yes_no(!ybe) << "; non-degenerate: " << yes_no(!nd)
           << "; involutive: " << yes_no(!inv) << "\n";
  if (ybe)
    rep.witness("YBE witness: (" + std::to_string((*ybe)[0]) + ", " + std::to_string((*ybe)[1]) +
                ", " + std::to_string((*ybe)[2]) + ")");
  if (nd)
    rep.witness(std::string("non-degeneracy witness: ") + ((*nd)[0] == 0 ? "sigma[" : "tau[") +
                std::to_string((*nd)[1]) + "] is not a permutation");
  if (inv)
    rep.witness("involutivity witness: (" + std::to_string((*inv)[0]) + ", " +
                std::to_string((*inv)[1]) + ")");
  rep.status = ybe ? 1 : 0;
}

void cmd_verify_brace(const std::string& file, Report& rep) {
  FiniteSkewBrace b;
  if (!load_verified_brace(file, rep, b)) return;
  rep.text << "skew brace: yes\n";
  rep.j["pass"] = true;
}

void cmd_brace_to_solution(const std::string& file, Report& rep) {
  FiniteSkewBrace b;
  if (!load_verified_brace(file, rep, b)) return;
  const std::string text = serialize_solution(solution_from_brace(b));
  rep.text << text;
  rep.j["solution"] = text;
}

void cmd_solution_diagonal(const std::string& file, Report& rep) {
  const SolutionTable sol = parse_solution(read_file(file));
  const DiagonalMaps d = extract_diagonal(sol);
  rep.j["counts"]["n"] = sol.n;
  rep.j["sigma"] = d.sigma;
  rep.j["tau"] = d.tau;
  for (int x = 0; x < sol.n; ++x) {
    rep.text << "sigma[" << x << "]:";
    for (int v : d.sigma[x]) rep.text << " " << v;
    rep.text << "\n";
  }
  for (int y = 0; y < sol.n; ++y) {
    rep.text << "tau[" << y << "]:";
    for (int v : d.tau[y]) rep.text << " " << v;
    rep.text << "\n";
  }
}

// Shared gate for the commands that need a non-degenerate braid table.
bool require_nondegenerate_solution(const SolutionTable& sol, Report& rep) {
  if (const auto w = bijectivity_witness(sol)) {
    rep.status = 1;
    rep.witness("not a solution: table is not bijective, (" + std::to_string((*w)[0]) + ", " +
                std::to_string((*w)[1]) + ") and (" + std::to_string((*w)[2]) + ", " +
                std::to_string((*w)[3]) + ") collide");
    return false;
  }
  if (const auto w = ybe_witness(sol)) {
    rep.status = 1;
    rep.witness("not a solution: braid relation fails at (" + std::to_string((*w)[0]) + ", " +
                std::to_string((*w)[1]) + ", " + std::to_string((*w)[2]) + ")");
    return false;
  }
  if (const auto w = nondegeneracy_witness(sol)) {
    rep.status = 1;
    rep.witness(std::string("degenerate solution: ") + ((*w)[0] == 0 ? "sigma[" : "tau[") +
                std::to_string((*w)[1]) + "] is not a permutation");
    return false;
  }
  return true;
}

void emit_artifact(Report& rep, const std::string& text, const std::string& out_path,
                   const std::string& json_key, const std::string& summary) {
  rep.j[json_key] = text;
  if (out_path.empty()) {
    rep.text << text;
  } else {
    write_file(out_path, text);
    rep.j["path"] = out_path;
    rep.text << summary << "wrote " << out_path << "\n";
  }
}

void cmd_perm_brace(const std::string& file, const std::string& out_path, Report& rep) {
  const SolutionTable sol = parse_solution(read_file(file));
  rep.j["counts"]["n"] = sol.n;
  if (!require_nondegenerate_solution(sol, rep)) return;
  const PermBraceResult pb = permutation_brace(sol);
  rep.j["counts"]["carrier"] = pb.brace.n;
  emit_artifact(rep, serialize_perm_brace(pb), out_path, "output",
                "permutation brace carrier: " + std::to_string(pb.brace.n) + "\n");
}

void cmd_present_structure(const std::string& file, bool mul, const std::string& out_path,
                           Report& rep) {
  const SolutionTable sol = parse_solution(read_file(file));
  rep.j["counts"]["n"] = sol.n;
  if (!require_nondegenerate_solution(sol, rep)) return;
  const SkewBracePresentation p = mul ? emit_mul_presentation(sol) : emit_add_presentation(sol);
  rep.j["counts"]["generators"] = p.generators.size();
  rep.j["counts"]["relators"] = p.relators.size();
  emit_artifact(rep, serialize_presentation(p), out_path, "presentation",
                std::string(mul ? "multiplicative" : "additive") + " presentation: " +
                    std::to_string(p.generators.size()) + " generators, " +
                    std::to_string(p.relators.size()) + " relators\n");
}

void cmd_present_table(const std::string& file, Report& rep) {
  FiniteSkewBrace b;
  if (!load_verified_brace(file, rep, b)) return;
  const PresentationWithAssignment pa = table_presentation(b);
  rep.j["counts"]["generators"] = pa.pres.generators.size();
  rep.j["counts"]["relators"] = pa.pres.relators.size();
  rep.j["assignment"] = pa.assign;
  const std::string text = serialize_presentation(pa.pres);
  rep.text << text;
  rep.j["presentation"] = text;
}

void cmd_present_trivial(const std::string& orders_arg, Report& rep) {
  std::vector<int> orders;
  for (const std::string& tok : split_list(orders_arg)) {
    const int k = parse_int_arg(tok, "--orders");
    if (k < 0) throw FormatError("cyclic orders must be non-negative");
    orders.push_back(k);
  }
  const SkewBracePresentation p = trivial_brace_presentation(orders);
  rep.j["counts"]["generators"] = p.generators.size();
  rep.j["counts"]["relators"] = p.relators.size();
  const std::string text = serialize_presentation(p);
  rep.text << text;
  rep.j["presentation"] = text;
}

void cmd_extend_presentation(const std::string& file, const std::string& ideal_arg,
                             const std::string& out_path, Report& rep) {
  FiniteSkewBrace b;
  if (!load_verified_brace(file, rep, b)) return;
  ElementSubset subset = ElementSubset::zero_only(b.n);
  for (const std::string& tok : split_list(ideal_arg)) {
    const int e = parse_int_arg(tok, "--ideal");
    if (e < 0 || e >= b.n) throw FormatError("ideal element " + tok + " out of range");
    subset.insert(e);
  }
  if (!is_ideal(b, subset)) {
    rep.status = 1;
    rep.witness("not an ideal: " + format_subset(subset));
    return;
  }
  ExtendFamilySizes sizes;
  const PresentationWithAssignment pa = extend_presentation(b, subset, &sizes);
  rep.j["counts"]["generators"] = pa.pres.generators.size();
  rep.j["counts"]["relators"] = pa.pres.relators.size();
  rep.j["counts"]["transversal_generators"] = sizes.m;
  rep.j["counts"]["ideal_generators"] = sizes.n;
  rep.j["counts"]["ideal_relators"] = sizes.ell;
  rep.j["counts"]["quotient_relators"] = sizes.s;
  rep.j["counts"]["quotient_additive_relators"] = sizes.r;
  rep.j["assignment"] = pa.assign;
  emit_artifact(rep, serialize_presentation(pa.pres), out_path, "presentation",
                "extension presentation: " + std::to_string(pa.pres.generators.size()) +
                    " generators, " + std::to_string(pa.pres.relators.size()) + " relators\n");
}

void cmd_check_presentation(const std::string& pres_file, const std::string& brace_file,
                            const std::string& assign_arg, Report& rep) {
  const SkewBracePresentation p = parse_presentation(read_file(pres_file));
  FiniteSkewBrace b;
  if (!load_verified_brace(brace_file, rep, b)) return;

  Assignment assign;
  for (const std::string& tok : split_list(assign_arg)) {
    const size_t eq = tok.find('=');
    if (eq == std::string::npos) throw FormatError("expected 'name=element' in --assign");
    const std::string name = tok.substr(0, eq);
    const int value = parse_int_arg(tok.substr(eq + 1), "--assign");
    if (std::find(p.generators.begin(), p.generators.end(), name) == p.generators.end())
      throw FormatError("assignment names unknown generator '" + name + "'");
    if (value < 0 || value >= b.n)
      throw FormatError("assignment of '" + name + "' out of range");
    assign[name] = value;
  }
  for (const std::string& g : p.generators)
    if (!assign.count(g)) throw FormatError("generator '" + g + "' is not assigned");

  rep.j["counts"]["relators"] = p.relators.size();
  const std::vector<int> failing = failing_relators(p, b, assign);
  rep.j["counts"]["failing"] = failing.size();
  if (failing.empty()) {
    rep.text << "all " << p.relators.size() << " relators evaluate to 0\n";
    return;
  }
  rep.status = 1;
  for (int idx : failing)
    rep.witness("relator " + std::to_string(idx + 1) + " evaluates to " +
                std::to_string(eval_bword(p.relators[idx], b, assign)) + ": " +
                print_bword(p.relators[idx]));
}

void cmd_invariants(const std::string& file, Report& rep) {
  FiniteSkewBrace b;
  if (!load_verified_brace(file, rep, b)) return;

  const ElementSubset soc = socle(b);
  const ElementSubset ann = annihilator(b);
  const ElementSubset der = derived_ideal(b);
  const AscendingSeries ann_series = upper_annihilator_series(b);
  const AscendingSeries soc_series = upper_socle_series(b);
  const bool nilpotent = ann_series.terms.back() == ElementSubset::full(b.n);
  const bool simple = is_simple(b);

  rep.text << "order: " << b.n << "\n";
  rep.text << "socle: " << format_subset(soc) << "\n";
  rep.text << "annihilator: " << format_subset(ann) << "\n";
  rep.text << "derived-ideal: " << format_subset(der) << "\n";
  rep.text << "annihilator-series: " << format_series(ann_series) << "\n";
  rep.text << "socle-series: " << format_series(soc_series) << "\n";
  rep.text << "annihilator-nilpotent: " << yes_no(nilpotent) << "\n";
  rep.text << "simple: " << yes_no(simple) << "\n";

  rep.j["socle"] = soc.elements();
  rep.j["annihilator"] = ann.elements();
  rep.j["derived_ideal"] = der.elements();
  auto series_json = [](const AscendingSeries& s) {
    json arr = json::array();
    for (const auto& t : s.terms) arr.push_back(t.elements());
    return arr;
  };
  rep.j["annihilator_series"] = series_json(ann_series);
  rep.j["socle_series"] = series_json(soc_series);
  rep.j["annihilator_nilpotent"] = nilpotent;
  rep.j["simple"] = simple;

  if (b.n <= 12) {
    const std::vector<ElementSubset> ideals = all_ideals(b);
    rep.text << "ideals:";
    json arr = json::array();
    for (size_t i = 0; i < ideals.size(); ++i) {
      rep.text << (i ? "; " : " ") << format_subset(ideals[i]);
      arr.push_back(ideals[i].elements());
    }
    rep.text << "\n";
    rep.j["ideals"] = arr;
    rep.j["counts"]["ideals"] = ideals.size();
  }
}

void cmd_conjugates(const std::string& file, int element, Report& rep) {
  FiniteSkewBrace b;
  if (!load_verified_brace(file, rep, b)) return;
  if (element < 0 || element >= b.n) throw FormatError("--element out of range");
  const ElementSubset c = conjugates(b, element);
  rep.text << "conjugates of " << element << ": " << format_subset(c) << " (size " << c.count()
           << ")\n";
  rep.j["conjugates"] = c.elements();
  rep.j["counts"]["size"] = c.count();
}

void cmd_enumerate_braces(int order, const std::string& method_arg, Report& rep) {
  BraceEnumMethod method = BraceEnumMethod::holomorph;
  if (method_arg == "naive")
    method = BraceEnumMethod::naive;
  else if (method_arg != "holomorph")
    throw FormatError("unknown method '" + method_arg + "' (naive or holomorph)");
  const BraceCatalog cat = enumerate_skew_braces(order, method);
  rep.j["counts"]["order"] = order;
  rep.j["counts"]["count"] = cat.members.size();
  const std::string text = serialize_catalog(cat);
  rep.text << text;
  rep.j["catalog"] = text;
}

void cmd_enumerate_solutions(int size, bool nondeg, bool involutive, Report& rep) {
  const std::vector<SolutionTable> sols = enumerate_solutions(size, nondeg, involutive);
  rep.j["counts"]["size"] = size;
  rep.j["counts"]["count"] = sols.size();
  rep.text << "count: " << sols.size() << "\n";
  json arr = json::array();
  for (const SolutionTable& s : sols) {
    const std::string text = serialize_solution(s);
    rep.text << "\n" << text;
    arr.push_back(text);
  }
  rep.j["solutions"] = arr;
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"finite skew braces and set-theoretic Yang-Baxter solutions"};
  app.require_subcommand(1);

  struct {
    std::string file, second_file, out, assign, ideal, orders, method = "holomorph";
    int element = 0, order = 0, size = 0;
    bool mul = false, add = false, nondeg = false, involutive = false;
  } opt;
  bool json_mode = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json_mode, "machine-readable report"); };

  auto* verify_solution = app.add_subcommand("verify-solution", "check the braid relation and report solution properties");
  verify_solution->add_option("file", opt.file, "solution file")->required();
  auto* verify_brace = app.add_subcommand("verify-brace", "check the skew brace axioms");
  verify_brace->add_option("file", opt.file, "brace file")->required();
  auto* brace_to_solution = app.add_subcommand("brace-to-solution", "emit the solution attached to a brace");
  brace_to_solution->add_option("file", opt.file, "brace file")->required();
  auto* solution_diagonal = app.add_subcommand("solution-diagonal", "print the sigma and tau component maps");
  solution_diagonal->add_option("file", opt.file, "solution file")->required();
  auto* perm_brace = app.add_subcommand("perm-brace", "build the permutation brace of a solution");
  perm_brace->add_option("file", opt.file, "solution file")->required();
  perm_brace->add_option("--out", opt.out, "write the brace + labels file here");
  auto* present_structure = app.add_subcommand("present-structure", "group presentation of the structure brace");
  present_structure->add_option("file", opt.file, "solution file")->required();
  present_structure->add_flag("--mul", opt.mul, "multiplicative presentation");
  present_structure->add_flag("--add", opt.add, "additive presentation");
  present_structure->add_option("--out", opt.out, "write the presentation here");
  auto* present_table = app.add_subcommand("present-table", "table presentation of a finite brace");
  present_table->add_option("file", opt.file, "brace file")->required();
  auto* present_trivial = app.add_subcommand("present-trivial", "presentation of a trivial brace on cyclic factors");
  present_trivial->add_option("--orders", opt.orders, "comma-separated cyclic orders, 0 = infinite")->required();
  auto* extend_pres = app.add_subcommand("extend-presentation", "presentation of a brace from an ideal and its quotient");
  extend_pres->add_option("file", opt.file, "brace file")->required();
  extend_pres->add_option("--ideal", opt.ideal, "comma-separated ideal elements")->required();
  extend_pres->add_option("--out", opt.out, "write the presentation here");
  auto* check_pres = app.add_subcommand("check-presentation", "evaluate all relators under an assignment");
  check_pres->add_option("file", opt.file, "presentation file")->required();
  check_pres->add_option("--in", opt.second_file, "brace file")->required();
  check_pres->add_option("--assign", opt.assign, "comma-separated name=element pairs")->required();
  auto* invariants = app.add_subcommand("invariants", "socle, annihilator, series and ideal structure");
  invariants->add_option("file", opt.file, "brace file")->required();
  auto* conjugates_cmd = app.add_subcommand("conjugates", "conjugate set of an element");
  conjugates_cmd->add_option("file", opt.file, "brace file")->required();
  conjugates_cmd->add_option("--element", opt.element, "element index")->required();
  auto* enum_braces = app.add_subcommand("enumerate-braces", "all skew braces of one order up to isomorphism");
  enum_braces->add_option("--order", opt.order, "carrier size")->required();
  enum_braces->add_option("--method", opt.method, "naive or holomorph");
  auto* enum_solutions = app.add_subcommand("enumerate-solutions", "all braid-relation tables of one size");
  enum_solutions->add_option("--size", opt.size, "carrier size")->required();
  enum_solutions->add_flag("--nondegenerate", opt.nondeg, "keep non-degenerate tables only");
  enum_solutions->add_flag("--involutive", opt.involutive, "keep involutive tables only");

  for (CLI::App* sub : app.get_subcommands({})) add_json(sub);

  std::vector<const char*> argv;
  argv.push_back("skewbrace");
  for (const auto& a : args) argv.push_back(a.c_str());

  auto error_result = [&](const std::string& kind, const std::string& what) -> CommandResult {
    if (json_mode) {
      const json j{{"status", 2}, {"error", kind + ": " + what}, {"witnesses", json::array()},
                   {"counts", json::object()}};
      return {2, j.dump(2) + "\n"};
    }
    return {2, kind + ": " + what + "\n"};
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    for (CLI::App* sub : app.get_subcommands()) return {0, sub->help()};
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return error_result("usage error", e.what());
  }

  Report rep;
  rep.json_mode = json_mode;
  try {
    if (verify_solution->parsed()) {
      cmd_verify_solution(opt.file, rep);
    } else if (verify_brace->parsed()) {
      cmd_verify_brace(opt.file, rep);
    } else if (brace_to_solution->parsed()) {
      cmd_brace_to_solution(opt.file, rep);
    } else if (solution_diagonal->parsed()) {
      cmd_solution_diagonal(opt.file, rep);
    } else if (perm_brace->parsed()) {
      cmd_perm_brace(opt.file, opt.out, rep);
    } else if (present_structure->parsed()) {
      if (opt.mul == opt.add)
        return error_result("usage error", "exactly one of --mul or --add is required");
      cmd_present_structure(opt.file, opt.mul, opt.out, rep);
    } else if (present_table->parsed()) {
      cmd_present_table(opt.file, rep);
    } else if (present_trivial->parsed()) {
      cmd_present_trivial(opt.orders, rep);
    } else if (extend_pres->parsed()) {
      cmd_extend_presentation(opt.file, opt.ideal, opt.out, rep);
    } else if (check_pres->parsed()) {
      cmd_check_presentation(opt.file, opt.second_file, opt.assign, rep);
    } else if (invariants->parsed()) {
      cmd_invariants(opt.file, rep);
    } else if (conjugates_cmd->parsed()) {
      cmd_conjugates(opt.file, opt.element, rep);
    } else if (enum_braces->parsed()) {
      cmd_enumerate_braces(opt.order, opt.method, rep);
    } else if (enum_solutions->parsed()) {
      cmd_enumerate_solutions(opt.size, opt.nondeg, opt.involutive, rep);
    }
  } catch (const FormatError& e) {
    return error_result("format error", e.what());
  } catch (const PreconditionError& e) {
    return error_result("error", e.what());
  }
  return rep.finish();
}

}  // namespace skewbrace
