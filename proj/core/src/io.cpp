#include "topomon/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace topomon {

namespace {

using OrderedJson = nlohmann::ordered_json;

struct Token {
  std::string text;
  std::size_t line;
};

/// Whitespace-split tokens with their 1-based line numbers, comments removed.
std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) tokens.push_back(Token{word, line_no});
  }
  return tokens;
}

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) throw ParseError(last_line(), "", "unexpected end of input");
    return tokens_[pos_];
  }
  Token take() {
    Token t = peek();
    ++pos_;
    return t;
  }
  Token expect(const std::string& word) {
    Token t = take();
    if (t.text != word) throw ParseError(t.line, t.text, "expected '" + word + "'");
    return t;
  }
  std::size_t last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::size_t parse_number(const Token& t, const std::string& what) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(t.line, t.text, "expected " + what);
  return std::stoul(t.text);
}

/// Value of a `key=value` token; the value may be empty.
std::string parse_keyed(TokenCursor& cur, const std::string& key) {
  Token t = cur.take();
  const std::string prefix = key + "=";
  if (t.text.compare(0, prefix.size(), prefix) != 0)
    throw ParseError(t.line, t.text, "expected '" + prefix + "...'");
  return t.text.substr(prefix.size());
}

std::string parse_bits(TokenCursor& cur, const std::string& key) {
  Token probe = cur.peek();
  std::string bits = parse_keyed(cur, key);
  if (!std::all_of(bits.begin(), bits.end(), [](char c) { return c == '0' || c == '1'; }))
    throw ParseError(probe.line, probe.text, "bits must be 0/1");
  return bits;
}

EpWord parse_word(TokenCursor& cur) {
  Token probe = cur.peek();
  std::string pre = parse_bits(cur, "pre");
  std::string per = parse_bits(cur, "per");
  if (per.empty()) throw ParseError(probe.line, probe.text, "period must be non-empty");
  return EpWord(std::move(pre), std::move(per));
}

Sequence parse_sequence(const Token& t) {
  if (t.text == "eps") return {};
  Sequence out;
  std::size_t start = 0;
  while (start <= t.text.size()) {
    std::size_t dot = t.text.find('.', start);
    if (dot == std::string::npos) dot = t.text.size();
    const std::string part = t.text.substr(start, dot - start);
    if (part.empty() || !std::all_of(part.begin(), part.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError(t.line, t.text, "expected a dot-separated sequence or 'eps'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    start = dot + 1;
  }
  return out;
}

}  // namespace

FiniteSpace parse_space(std::istream& in) {
  TokenCursor cur(tokenize(in));
  cur.expect("space");
  Token n_tok = cur.take();
  const std::size_t n = parse_number(n_tok, "the point count");

  std::vector<PointSet> mo(n, PointSet(n));
  std::vector<bool> defined(n, false);
  std::vector<std::size_t> source_line(n, n_tok.line);
  for (std::size_t i = 0; i < n; ++i) {
    cur.expect("minopen");
    Token x_tok = cur.take();
    std::string x_text = x_tok.text;
    if (x_text.empty() || x_text.back() != ':')
      throw ParseError(x_tok.line, x_tok.text, "expected '<point>:'");
    x_text.pop_back();
    const std::size_t x = parse_number(Token{x_text, x_tok.line}, "a point index");
    if (x >= n) throw ParseError(x_tok.line, x_tok.text, "point index out of range");
    if (defined[x]) throw ParseError(x_tok.line, x_tok.text, "duplicate minopen line");
    defined[x] = true;
    source_line[x] = x_tok.line;
    while (!cur.done() && cur.peek().text != "minopen") {
      Token y_tok = cur.take();
      const std::size_t y = parse_number(y_tok, "a point index");
      if (y >= n) throw ParseError(y_tok.line, y_tok.text, "point index out of range");
      mo[x].set(y);
    }
  }
  if (!cur.done()) {
    Token extra = cur.take();
    throw ParseError(extra.line, extra.text, "trailing input after the minopen lines");
  }

  FiniteSpace space(std::move(mo));
  if (auto violation = space.validate())
    throw ParseError(source_line[violation->x], std::to_string(violation->x),
                     "invalid space: " + violation->describe());
  return space;
}

FiniteSpace parse_space(const std::string& text) {
  std::istringstream in(text);
  return parse_space(in);
}

std::string print_space(const FiniteSpace& s) {
  std::string out = "space " + std::to_string(s.size()) + "\n";
  for (std::size_t x = 0; x < s.size(); ++x) {
    out += "minopen " + std::to_string(x) + ":";
    for (auto y = s.minopen(x).find_first(); y != PointSet::npos; y = s.minopen(x).find_next(y))
      out += " " + std::to_string(y);
    out += "\n";
  }
  return out;
}

PointSet parse_point_list(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  TokenCursor cur(tokenize(in));
  PointSet out(n);
  bool first = true;
  while (!cur.done()) {
    Token t = cur.take();
    if (first && (t.text == "set:" || t.text == "set")) {
      first = false;
      continue;
    }
    first = false;
    std::string digits = t.text;
    if (digits.rfind("set:", 0) == 0) digits.erase(0, 4);
    const std::size_t x = parse_number(Token{digits, t.line}, "a point index");
    if (x >= n) throw ParseError(t.line, t.text, "point index out of range (space has " +
                                                     std::to_string(n) + " points)");
    out.set(x);
  }
  return out;
}

TransitionSystem parse_lts(std::istream& in) {
  TokenCursor cur(tokenize(in));
  cur.expect("lts");
  const std::size_t n = parse_number(cur.take(), "the state count");
  Token alpha_tok = cur.take();

  std::vector<std::string> alphabet;
  std::size_t start = 0;
  while (start <= alpha_tok.text.size()) {
    std::size_t comma = alpha_tok.text.find(',', start);
    if (comma == std::string::npos) comma = alpha_tok.text.size();
    const std::string event = alpha_tok.text.substr(start, comma - start);
    if (event.empty())
      throw ParseError(alpha_tok.line, alpha_tok.text, "empty event name in the alphabet");
    if (std::find(alphabet.begin(), alphabet.end(), event) != alphabet.end())
      throw ParseError(alpha_tok.line, alpha_tok.text, "duplicate event name '" + event + "'");
    alphabet.push_back(event);
    start = comma + 1;
  }

  std::vector<Triple> triples;
  while (!cur.done()) {
    Token src = cur.take();
    Token event = cur.take();
    Token dst = cur.take();
    const std::size_t q = parse_number(src, "a state");
    const std::size_t r = parse_number(dst, "a state");
    if (q >= n || r >= n) throw ParseError(src.line, src.text, "state out of range");
    auto it = std::find(alphabet.begin(), alphabet.end(), event.text);
    if (it == alphabet.end())
      throw ParseError(event.line, event.text, "event not in the alphabet");
    triples.push_back(Triple{static_cast<std::uint32_t>(q),
                             static_cast<std::uint32_t>(it - alphabet.begin()),
                             static_cast<std::uint32_t>(r)});
  }
  return TransitionSystem(n, std::move(alphabet), std::move(triples));
}

TransitionSystem parse_lts(const std::string& text) {
  std::istringstream in(text);
  return parse_lts(in);
}

SymbolicSet parse_symbolic(std::istream& in) {
  TokenCursor cur(tokenize(in));
  Token kind = cur.take();

  if (kind.text == "cofinite") {
    CofiniteSet set{parse_word(cur)};
    if (!cur.done()) throw ParseError(cur.peek().line, cur.peek().text, "trailing input");
    return set;
  }

  if (kind.text == "grid") {
    cur.expect("default");
    GridSet set;
    set.default_column = parse_word(cur);
    while (!cur.done()) {
      cur.expect("col");
      Token m_tok = cur.take();
      const std::size_t m = parse_number(m_tok, "a column index");
      if (set.exceptional_columns.count(static_cast<std::uint32_t>(m)))
        throw ParseError(m_tok.line, m_tok.text, "duplicate column");
      set.exceptional_columns.emplace(static_cast<std::uint32_t>(m), parse_word(cur));
    }
    return set;
  }

  if (kind.text == "scott") {
    ScottSet set;
    if (!cur.done() && cur.peek().text == "inf") {
      cur.take();
      set.infinity_member = true;
    }
    while (!cur.done()) {
      Token part = cur.take();
      if (part.text == "node") {
        set.explicit_nodes.insert(parse_sequence(cur.take()));
      } else if (part.text == "cone") {
        set.cone_roots.insert(parse_sequence(cur.take()));
      } else if (part.text == "spine") {
        Sequence base = parse_sequence(cur.take());
        const std::size_t k = parse_number(cur.take(), "a branch label");
        set.spines.emplace(std::move(base), static_cast<std::uint32_t>(k));
      } else {
        throw ParseError(part.line, part.text, "expected node, cone or spine");
      }
    }
    return set;
  }

  if (kind.text == "sum") {
    SumSet set;
    Token y_probe = cur.peek();
    set.y_size = parse_number(Token{parse_keyed(cur, "y"), y_probe.line}, "the discrete size");
    Token bits_probe = cur.peek();
    const std::string bits = parse_keyed(cur, "bits");
    if (bits.size() != 2 || !std::all_of(bits.begin(), bits.end(),
                                         [](char c) { return c == '0' || c == '1'; }))
      throw ParseError(bits_probe.line, bits_probe.text, "bits must be two 0/1 characters");
    set.z1 = bits[0] == '1';
    set.z2 = bits[1] == '1';
    Token part_probe = cur.peek();
    const std::string part = parse_keyed(cur, "part");
    std::size_t start = 0;
    while (start < part.size()) {
      std::size_t comma = part.find(',', start);
      if (comma == std::string::npos) comma = part.size();
      const std::string digits = part.substr(start, comma - start);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(part_probe.line, part_probe.text,
                         "part must be comma-separated indices");
      const std::size_t idx = std::stoul(digits);
      if (idx >= set.y_size)
        throw ParseError(part_probe.line, part_probe.text, "discrete index out of range");
      set.discrete_part.insert(idx);
      start = comma + 1;
    }
    if (!cur.done()) throw ParseError(cur.peek().line, cur.peek().text, "trailing input");
    return set;
  }

  throw ParseError(kind.line, kind.text, "expected cofinite, grid, scott or sum");
}

SymbolicSet parse_symbolic(const std::string& text) {
  std::istringstream in(text);
  return parse_symbolic(in);
}

TreePresentation parse_tree(std::istream& in) {
  TokenCursor cur(tokenize(in));
  cur.expect("tree");
  TreePresentation t;
  while (!cur.done()) {
    Token part = cur.take();
    if (part.text == "node") {
      t.explicit_nodes.insert(parse_sequence(cur.take()));
    } else if (part.text == "spine") {
      if (t.spine) throw ParseError(part.line, part.text, "at most one spine is allowed");
      Sequence base = parse_sequence(cur.take());
      const std::size_t k = parse_number(cur.take(), "a branch label");
      t.spine = std::make_pair(std::move(base), static_cast<std::uint32_t>(k));
    } else {
      throw ParseError(part.line, part.text, "expected node or spine");
    }
  }
  try {
    validate_tree(t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(cur.last_line(), "", e.what());
  }
  return t;
}

TreePresentation parse_tree(const std::string& text) {
  std::istringstream in(text);
  return parse_tree(in);
}

std::string induced_space_text(const TransitionSystem& t) {
  const SubbasisFamily family = subbasis(t);
  std::string out = "# induced by a " + std::to_string(t.n_states()) +
                    "-state transition system, subbasis:\n";
  for (const SubbasisEntry& e : family.entries) {
    out += "#   " + event_string_to_string(t, e.witness) + " -> {";
    bool first = true;
    for (auto q = e.set.find_first(); q != PointSet::npos; q = e.set.find_next(q)) {
      if (!first) out += ' ';
      out += std::to_string(q);
      first = false;
    }
    out += "}\n";
  }
  return out + print_space(induced_space(t));
}

namespace {

OrderedJson set_to_json(const PointSet& s) {
  OrderedJson arr = OrderedJson::array();
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x)) arr.push_back(x);
  return arr;
}

}  // namespace

std::string monitor_verdict_json(const MonitorVerdict& verdict,
                                 const std::optional<Decomposition>& decomposition) {
  OrderedJson j;
  j["monitorable"] = verdict.monitorable;
  j["witness"] = verdict.witness ? set_to_json(*verdict.witness) : OrderedJson(nullptr);
  if (decomposition) {
    OrderedJson d;
    d["O"] = set_to_json(decomposition->regular_part);
    d["N"] = set_to_json(decomposition->nowhere_dense_part);
    j["decomposition"] = std::move(d);
  } else {
    j["decomposition"] = nullptr;
  }
  return j.dump();
}

std::string symbolic_verdict_json(const std::string& kind, bool monitorable,
                                  const std::optional<std::uint32_t>& witness_column) {
  OrderedJson j;
  j["kind"] = kind;
  j["monitorable"] = monitorable;
  if (kind == "grid")
    j["witness_column"] = witness_column ? OrderedJson(*witness_column) : OrderedJson(nullptr);
  return j.dump();
}

std::string classify_json(const ComplexityVerdict& v) {
  OrderedJson j;
  j["tag"] = to_string(v.tag);
  j["refinement"] = v.refinement ? OrderedJson(to_string(*v.refinement)) : OrderedJson(nullptr);

  OrderedJson evidence;
  evidence["isolated_points_dense"] = v.evidence.isolated_points_dense;
  evidence["minimal_opens"] = v.evidence.minimal_opens;
  if (v.evidence.disjoint_bound.has_value() || !v.evidence.disjoint_witnesses.empty() ||
      v.evidence.unbounded_family_certified) {
    OrderedJson d;
    if (v.evidence.disjoint_bound) d["bound"] = *v.evidence.disjoint_bound;
    d["witnesses"] = v.evidence.disjoint_witnesses;
    if (!v.evidence.disjoint_bound) d["certified_unbounded"] = v.evidence.unbounded_family_certified;
    evidence["disjoint_opens"] = std::move(d);
  } else {
    evidence["disjoint_opens"] = nullptr;
  }
  evidence["note"] = v.evidence.note;
  j["evidence"] = std::move(evidence);
  j["budget_used"] = v.budget_used;
  return j.dump();
}

std::string genericity_json(const GenericityReport& r) {
  OrderedJson j;
  j["p"] = r.p;
  j["samples"] = r.samples;
  j["hyperconnected_fraction"] = r.hyperconnected_fraction;
  j["sigma02_fraction"] = r.sigma02_fraction;
  j["seed"] = r.seed;
  j["note"] =
      "statistical probe of finite truncations; fractions under an i.i.d. triple draw, not a "
      "category-theoretic genericity claim";
  return j.dump();
}

std::string certification_json(const CertificationReport& r) {
  OrderedJson j;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  return j.dump();
}

std::string hyperconnected_json(bool hyperconnected) {
  OrderedJson j;
  j["hyperconnected"] = hyperconnected;
  return j.dump();
}

}  // namespace topomon
