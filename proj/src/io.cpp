#include "skewbrace/io.hpp"

#include <charconv>
#include <sstream>

#include "skewbrace/errors.hpp"

namespace skewbrace {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw FormatError("expected an integer, got '" + tok + "'", line);
  return value;
}

int parse_index(const std::string& tok, int bound, int line) {
  const int v = parse_int(tok, line);
  if (v < 0 || v >= bound)
    throw FormatError("index " + tok + " out of range [0, " + std::to_string(bound) + ")", line);
  return v;
}

// Hands out lines one at a time with 1-based numbering.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++lineno_;
    return true;
  }

  std::string require(const std::string& what) {
    std::string line;
    if (!next(line)) throw FormatError("unexpected end of input, expected " + what, lineno_ + 1);
    return line;
  }

  void expect_end() {
    std::string line;
    if (next(line)) throw FormatError("unexpected trailing content", lineno_);
  }

  int lineno() const { return lineno_; }

 private:
  std::istringstream in_;
  int lineno_ = 0;
};

int parse_sized_header(LineReader& rd, const std::string& keyword) {
  const std::string line = rd.require("'" + keyword + " <n>'");
  const auto toks = split_ws(line);
  if (toks.size() != 2 || toks[0] != keyword)
    throw FormatError("expected '" + keyword + " <n>'", rd.lineno());
  const int n = parse_int(toks[1], rd.lineno());
  if (n <= 0) throw FormatError("size must be positive", rd.lineno());
  return n;
}

std::vector<int> parse_row(LineReader& rd, int n, const char* what) {
  const std::string line = rd.require(what);
  const auto toks = split_ws(line);
  if (static_cast<int>(toks.size()) != n)
    throw FormatError("expected " + std::to_string(n) + " entries, got " +
                          std::to_string(toks.size()),
                      rd.lineno());
  std::vector<int> row(n);
  for (int i = 0; i < n; ++i) row[i] = parse_index(toks[i], n, rd.lineno());
  return row;
}

void serialize_brace_into(const FiniteSkewBrace& b, std::ostringstream& out) {
  out << "brace " << b.n << "\n";
  for (int part = 0; part < 2; ++part) {
    out << (part == 0 ? "add" : "mul") << "\n";
    const auto& t = part == 0 ? b.add : b.mul;
    for (int a = 0; a < b.n; ++a) {
      for (int c = 0; c < b.n; ++c) out << (c ? " " : "") << t[a * b.n + c];
      out << "\n";
    }
  }
}

FiniteSkewBrace parse_brace_body(LineReader& rd) {
  const int n = parse_sized_header(rd, "brace");
  std::vector<int> add, mul;
  for (int part = 0; part < 2; ++part) {
    const char* name = part == 0 ? "add" : "mul";
    const std::string line = rd.require(std::string("'") + name + "' section");
    if (split_ws(line) != std::vector<std::string>{name})
      throw FormatError(std::string("expected '") + name + "' section", rd.lineno());
    auto& table = part == 0 ? add : mul;
    table.reserve(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      const std::vector<int> row = parse_row(rd, n, "table row");
      table.insert(table.end(), row.begin(), row.end());
    }
  }
  return make_skew_brace(n, std::move(add), std::move(mul));
}

}  // namespace

std::string serialize_solution(const SolutionTable& sol) {
  std::ostringstream out;
  out << "solution " << sol.n << "\n";
  for (int i = 0; i < sol.n; ++i)
    for (int j = 0; j < sol.n; ++j) {
      const auto [k, l] = sol.apply(i, j);
      out << i << " " << j << " -> " << k << " " << l << "\n";
    }
  return out.str();
}

SolutionTable parse_solution(const std::string& text) {
  LineReader rd(text);
  const int n = parse_sized_header(rd, "solution");
  SolutionTable sol;
  sol.n = n;
  sol.map.assign(static_cast<size_t>(n) * n, {-1, -1});
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  for (int count = 0; count < n * n; ++count) {
    const std::string line = rd.require("a pair line 'i j -> k l'");
    const auto toks = split_ws(line);
    if (toks.size() != 5 || toks[2] != "->")
      throw FormatError("expected 'i j -> k l'", rd.lineno());
    const int i = parse_index(toks[0], n, rd.lineno());
    const int j = parse_index(toks[1], n, rd.lineno());
    const int k = parse_index(toks[3], n, rd.lineno());
    const int l = parse_index(toks[4], n, rd.lineno());
    if (seen[i * n + j])
      throw FormatError("duplicate pair (" + std::to_string(i) + ", " + std::to_string(j) + ")",
                        rd.lineno());
    seen[i * n + j] = 1;
    sol.map[i * n + j] = {k, l};
  }
  rd.expect_end();
  return sol;
}

std::string serialize_brace(const FiniteSkewBrace& b) {
  std::ostringstream out;
  serialize_brace_into(b, out);
  return out.str();
}

FiniteSkewBrace parse_brace(const std::string& text) {
  LineReader rd(text);
  FiniteSkewBrace b = parse_brace_body(rd);
  rd.expect_end();
  return b;
}

std::string serialize_presentation(const SkewBracePresentation& p) {
  std::ostringstream out;
  out << "presentation\ngens";
  for (const auto& g : p.generators) out << " " << g;
  out << "\n";
  for (const auto& w : p.relators) out << print_bword(w) << "\n";
  return out.str();
}

SkewBracePresentation parse_presentation(const std::string& text) {
  LineReader rd(text);
  const std::string head = rd.require("'presentation'");
  if (split_ws(head) != std::vector<std::string>{"presentation"})
    throw FormatError("expected 'presentation'", rd.lineno());

  const std::string gens_line = rd.require("'gens ...'");
  const auto toks = split_ws(gens_line);
  if (toks.empty() || toks[0] != "gens") throw FormatError("expected 'gens ...'", rd.lineno());

  SkewBracePresentation p;
  p.generators.assign(toks.begin() + 1, toks.end());

  std::set<std::string> declared(p.generators.begin(), p.generators.end());
  if (declared.size() != p.generators.size())
    throw FormatError("duplicate generator name", rd.lineno());

  std::string line;
  while (rd.next(line)) {
    BWordRef w;
    try {
      w = parse_bword(line);
    } catch (const FormatError& e) {
      throw FormatError(e.what(), rd.lineno());
    }
    std::set<std::string> used;
    collect_generators(w, used);
    for (const auto& name : used)
      if (!declared.count(name))
        throw FormatError("undeclared generator '" + name + "'", rd.lineno());
    p.relators.push_back(std::move(w));
  }
  validate_presentation(p);
  return p;
}

std::string serialize_catalog(const BraceCatalog& c) {
  std::ostringstream out;
  out << "catalog " << c.order << " " << c.members.size() << " " << method_name(c.method) << "\n";
  for (size_t i = 0; i < c.members.size(); ++i) {
    if (i) out << "\n";
    serialize_brace_into(c.members[i], out);
  }
  return out.str();
}

BraceCatalog parse_catalog(const std::string& text) {
  LineReader rd(text);
  const std::string head = rd.require("'catalog <n> <count> <method>'");
  const auto toks = split_ws(head);
  if (toks.size() != 4 || toks[0] != "catalog")
    throw FormatError("expected 'catalog <n> <count> <method>'", rd.lineno());

  BraceCatalog cat;
  cat.order = parse_int(toks[1], rd.lineno());
  const int count = parse_int(toks[2], rd.lineno());
  if (cat.order <= 0 || count < 0) throw FormatError("bad catalog header sizes", rd.lineno());
  if (toks[3] == "naive")
    cat.method = BraceEnumMethod::naive;
  else if (toks[3] == "holomorph")
    cat.method = BraceEnumMethod::holomorph;
  else
    throw FormatError("unknown method '" + toks[3] + "'", rd.lineno());

  for (int i = 0; i < count; ++i) {
    if (i) {
      const std::string sep = rd.require("blank separator line");
      if (!split_ws(sep).empty()) throw FormatError("expected a blank separator line", rd.lineno());
    }
    FiniteSkewBrace b = parse_brace_body(rd);
    if (b.n != cat.order)
      throw FormatError("catalog member order " + std::to_string(b.n) + " does not match header",
                        rd.lineno());
    cat.members.push_back(std::move(b));
  }
  rd.expect_end();
  return cat;
}

std::string serialize_perm_brace(const PermBraceResult& r) {
  std::ostringstream out;
  serialize_brace_into(r.brace, out);
  const int xsize = static_cast<int>(r.generator_map.size());
  out << "labels " << xsize << "\n";
  for (size_t e = 0; e < r.labels.size(); ++e) {
    out << e << " :";
    for (int v : r.labels[e].first) out << " " << v;
    out << " |";
    for (int v : r.labels[e].second) out << " " << v;
    out << "\n";
  }
  out << "gens";
  for (int g : r.generator_map) out << " " << g;
  out << "\n";
  return out.str();
}

PermBraceResult parse_perm_brace(const std::string& text) {
  LineReader rd(text);
  PermBraceResult res;
  res.brace = parse_brace_body(rd);
  const int m = res.brace.n;

  const int xsize = parse_sized_header(rd, "labels");
  res.labels.resize(m);
  std::vector<char> filled(m, 0);
  for (int row = 0; row < m; ++row) {
    const std::string line = rd.require("a label line 'e : p1 | p2'");
    const auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != 2 * xsize + 3 || toks[1] != ":" ||
        toks[2 + xsize] != "|")
      throw FormatError("expected 'e : <" + std::to_string(xsize) + " images> | <" +
                            std::to_string(xsize) + " images>'",
                        rd.lineno());
    const int e = parse_index(toks[0], m, rd.lineno());
    if (filled[e]) throw FormatError("duplicate label for element " + toks[0], rd.lineno());
    filled[e] = 1;
    PermPair pair;
    pair.first.resize(xsize);
    pair.second.resize(xsize);
    for (int k = 0; k < xsize; ++k) {
      pair.first[k] = parse_index(toks[2 + k], xsize, rd.lineno());
      pair.second[k] = parse_index(toks[3 + xsize + k], xsize, rd.lineno());
    }
    if (!is_permutation(pair.first) || !is_permutation(pair.second))
      throw FormatError("label components must be permutations", rd.lineno());
    res.labels[e] = std::move(pair);
  }

  const std::string gens_line = rd.require("'gens ...'");
  const auto gtoks = split_ws(gens_line);
  if (gtoks.empty() || gtoks[0] != "gens") throw FormatError("expected 'gens ...'", rd.lineno());
  if (static_cast<int>(gtoks.size()) != xsize + 1)
    throw FormatError("expected " + std::to_string(xsize) + " generator indices", rd.lineno());
  const int gens_lineno = rd.lineno();
  res.generator_map.resize(xsize);
  for (int k = 0; k < xsize; ++k)
    res.generator_map[k] = parse_index(gtoks[1 + k], m, gens_lineno);
  rd.expect_end();

  // Semantic consistency: identity label at 0, injectivity, and the
  // multiplication table must be componentwise composition of labels.
  if (res.labels[0] != PermPair{identity_perm(xsize), identity_perm(xsize)})
    throw FormatError("label of element 0 must be the identity pair");
  for (int a = 0; a < m; ++a)
    for (int c = a + 1; c < m; ++c)
      if (res.labels[a] == res.labels[c])
        throw FormatError("labels must be injective (elements " + std::to_string(a) + " and " +
                          std::to_string(c) + " coincide)");
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      const PermPair prod{compose(res.labels[a].first, res.labels[c].first),
                          compose(res.labels[a].second, res.labels[c].second)};
      if (!(res.labels[res.brace.mul_at(a, c)] == prod))
        throw FormatError("multiplication table disagrees with label composition at (" +
                          std::to_string(a) + ", " + std::to_string(c) + ")");
    }

  // Regrow the additive certificates from a + g_y = a o g_{f_a^-1(y)}.
  res.additive_certificates.assign(m, {});
  std::vector<char> reached(m, 0);
  reached[0] = 1;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int a = queue[qi];
    for (int y = 0; y < xsize; ++y) {
      const int z = inverse_perm(res.labels[a].first)[y];
      const int t = res.brace.mul_at(a, res.generator_map[z]);
      if (!reached[t]) {
        reached[t] = 1;
        res.additive_certificates[t] = res.additive_certificates[a];
        res.additive_certificates[t].push_back(y);
        queue.push_back(t);
      }
    }
  }
  for (int a = 0; a < m; ++a)
    if (!reached[a])
      throw FormatError("generators do not additively generate element " + std::to_string(a));
  return res;
}

}  // namespace skewbrace
