#include "bacomp/hoa_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "bacomp/error.hpp"

namespace bacomp {

namespace {

// ------------------------------------------------------------------ lexer

enum class Tok { Header, Ident, Int, String, Punct, Body, End, Abort, Alias, Eof };

struct Token {
  Tok kind;
  std::string text;
  unsigned line;
  unsigned col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blank();
    Token t{Tok::Eof, "", line_, col_};
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (c == '"') {
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
        t.text += src_[pos_];
        advance();
      }
      if (pos_ >= src_.size()) fail(t.line, t.col, "unterminated string");
      advance();
      t.kind = Tok::String;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text += src_[pos_];
        advance();
      }
      t.kind = Tok::Int;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      t.kind = c == '@' ? Tok::Alias : Tok::Ident;
      if (c == '@') advance();
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                                    src_[pos_] == '-' || src_[pos_] == '.')) {
        t.text += src_[pos_];
        advance();
      }
      if (t.kind == Tok::Ident && pos_ < src_.size() && src_[pos_] == ':') {
        advance();
        t.kind = Tok::Header;
      }
      return t;
    }
    if (c == '-' && src_.substr(pos_, 2) == "--") {
      for (auto [word, kind] : {std::pair{"--BODY--", Tok::Body}, std::pair{"--END--", Tok::End},
                                std::pair{"--ABORT--", Tok::Abort}}) {
        std::string_view w(word);
        if (src_.substr(pos_, w.size()) == w) {
          for (std::size_t i = 0; i < w.size(); ++i) advance();
          t.kind = kind;
          t.text = w;
          return t;
        }
      }
    }
    if (std::string_view("[]{}()!&|").find(c) != std::string_view::npos) {
      advance();
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      return t;
    }
    fail(t.line, t.col, std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] static void fail(unsigned line, unsigned col, const std::string& what) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
      if (src_.substr(pos_, 2) != "/*") return;
      const unsigned line = line_;
      const unsigned col = col_;
      advance();
      advance();
      while (pos_ < src_.size() && src_.substr(pos_, 2) != "*/") advance();
      if (pos_ >= src_.size()) fail(line, col, "unterminated comment");
      advance();
      advance();
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
  unsigned col_ = 1;
};

// ------------------------------------------------------- boolean formulas

struct Formula {
  enum class Op { True, False, Atom, Not, And, Or } op;
  unsigned atom = 0;  // AP index, or acceptance set index
  bool fin = false;   // acceptance atoms only
  bool negated_set = false;
  std::vector<std::unique_ptr<Formula>> kids;

  bool eval(LetterId v) const {
    switch (op) {
      case Op::True: return true;
      case Op::False: return false;
      case Op::Atom: return (v >> atom) & 1U;
      case Op::Not: return !kids[0]->eval(v);
      case Op::And:
        for (const auto& k : kids)
          if (!k->eval(v)) return false;
        return true;
      case Op::Or:
        for (const auto& k : kids)
          if (k->eval(v)) return true;
        return false;
    }
    return false;
  }
};

using FormulaPtr = std::unique_ptr<Formula>;

FormulaPtr make(Formula::Op op) {
  auto f = std::make_unique<Formula>();
  f->op = op;
  return f;
}

// ----------------------------------------------------------------- parser

class HoaParser {
 public:
  HoaParser(std::string_view text, std::size_t max_aps) : lex_(text), max_aps_(max_aps) { shift(); }

  Sgra parse() {
    expect_header("HOA");
    Token v = take(Tok::Ident, "a version");
    if (v.text != "v1") fail(v, "unsupported HOA version '" + v.text + "'");
    while (cur_.kind == Tok::Header) header_item();
    if (cur_.kind == Tok::Abort) fail(cur_, "--ABORT-- is not supported");
    take(Tok::Body, "--BODY--");
    if (!acceptance_seen_) fail(cur_, "missing Acceptance header");
    body();
    if (cur_.kind == Tok::Abort) fail(cur_, "--ABORT-- is not supported");
    take(Tok::End, "--END--");
    if (cur_.kind != Tok::Eof) fail(cur_, "trailing input after --END--");
    return build();
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& what) const { Lexer::fail(t.line, t.col, what); }

  void shift() { cur_ = lex_.next(); }

  Token take(Tok kind, const std::string& what) {
    if (cur_.kind != kind) fail(cur_, "expected " + what);
    Token t = cur_;
    shift();
    return t;
  }

  bool at_punct(char c) const { return cur_.kind == Tok::Punct && cur_.text[0] == c; }

  void take_punct(char c) {
    if (!at_punct(c)) fail(cur_, std::string("expected '") + c + "'");
    shift();
  }

  unsigned take_int(const std::string& what) {
    Token t = take(Tok::Int, what);
    if (t.text.size() > 9) fail(t, "number too large");
    return static_cast<unsigned>(std::stoul(t.text));
  }

  void expect_header(const std::string& name) {
    if (cur_.kind != Tok::Header || cur_.text != name) fail(cur_, "expected '" + name + ":'");
    shift();
  }

  void header_item() {
    Token h = cur_;
    shift();
    if (h.text == "States") {
      states_ = take_int("a state count");
    } else if (h.text == "Start") {
      start_.push_back(take_int("a start state"));
      if (at_punct('&')) fail(cur_, "alternating start states are not supported");
    } else if (h.text == "AP") {
      const unsigned n = take_int("an AP count");
      for (unsigned i = 0; i < n; ++i) aps_.push_back(take(Tok::String, "an AP name").text);
      if (n > max_aps_)
        throw Error(ErrorKind::Capacity,
                    std::to_string(n) + " atomic propositions exceed the limit of " + std::to_string(max_aps_));
    } else if (h.text == "Acceptance") {
      num_sets_ = take_int("an acceptance set count");
      Token at = cur_;
      acceptance(acc_formula(), at);
      acceptance_seen_ = true;
    } else if (h.text == "Alias") {
      fail(h, "aliases are not supported");
    } else {
      while (cur_.kind != Tok::Header && cur_.kind != Tok::Body && cur_.kind != Tok::Eof &&
             cur_.kind != Tok::Abort)
        shift();
    }
  }

  // Acceptance: or := and ('|' and)*, and := atom ('&' atom)*.
  FormulaPtr acc_formula() {
    FormulaPtr f = acc_conj();
    if (!at_punct('|')) return f;
    FormulaPtr o = make(Formula::Op::Or);
    o->kids.push_back(std::move(f));
    while (at_punct('|')) {
      shift();
      o->kids.push_back(acc_conj());
    }
    return o;
  }

  FormulaPtr acc_conj() {
    FormulaPtr f = acc_atom();
    if (!at_punct('&')) return f;
    FormulaPtr a = make(Formula::Op::And);
    a->kids.push_back(std::move(f));
    while (at_punct('&')) {
      shift();
      a->kids.push_back(acc_atom());
    }
    return a;
  }

  FormulaPtr acc_atom() {
    if (at_punct('(')) {
      shift();
      FormulaPtr f = acc_formula();
      take_punct(')');
      return f;
    }
    Token t = take(Tok::Ident, "an acceptance atom");
    if (t.text == "t") return make(Formula::Op::True);
    if (t.text == "f") return make(Formula::Op::False);
    if (t.text != "Inf" && t.text != "Fin") fail(t, "unknown acceptance atom '" + t.text + "'");
    FormulaPtr f = make(Formula::Op::Atom);
    f->fin = t.text == "Fin";
    take_punct('(');
    if (at_punct('!')) {
      shift();
      f->negated_set = true;
    }
    Token it = cur_;
    f->atom = take_int("an acceptance set index");
    if (f->atom >= num_sets_) fail(it, "acceptance set " + std::to_string(f->atom) + " not declared");
    take_punct(')');
    return f;
  }

  // Collects the atoms of a conjunction; false if the shape is anything else.
  static bool conjunction_atoms(const Formula& f, std::vector<const Formula*>& out) {
    switch (f.op) {
      case Formula::Op::True: return true;
      case Formula::Op::Atom:
        if (f.negated_set) return false;
        out.push_back(&f);
        return true;
      case Formula::Op::And:
        for (const auto& k : f.kids)
          if (!conjunction_atoms(*k, out)) return false;
        return true;
      default: return false;
    }
  }

  void acceptance(const FormulaPtr& f, const Token& at) {
    std::vector<const Formula*> atoms;
    if (!conjunction_atoms(*f, atoms))
      throw Error(ErrorKind::UnsupportedAcceptance,
                  "line " + std::to_string(at.line) + ": only t, Inf conjunctions and a single Fin with Inf "
                  "conjunctions are supported");
    set_color_.assign(num_sets_, -1);
    std::set<unsigned> fin_sets;
    std::set<unsigned> inf_sets;
    for (const Formula* a : atoms) (a->fin ? fin_sets : inf_sets).insert(a->atom);
    if (fin_sets.size() > 1)
      throw Error(ErrorKind::UnsupportedAcceptance,
                  "line " + std::to_string(at.line) + ": more than one Fin atom");
    for (unsigned s : fin_sets)
      if (inf_sets.count(s) != 0)
        throw Error(ErrorKind::UnsupportedAcceptance,
                    "line " + std::to_string(at.line) + ": set " + std::to_string(s) + " used by Fin and Inf");
    fin_used_ = !fin_sets.empty();
    if (fin_used_) set_color_[*fin_sets.begin()] = 0;
    num_colors_ = 1;
    for (const Formula* a : atoms) {
      if (a->fin || set_color_[a->atom] >= 0) continue;
      set_color_[a->atom] = static_cast<int>(num_colors_++);
    }
  }

  // Label: or := and ('|' and)*, and := unary ('&' unary)*, unary := '!' unary | atom.
  FormulaPtr label_formula() {
    FormulaPtr f = label_conj();
    if (!at_punct('|')) return f;
    FormulaPtr o = make(Formula::Op::Or);
    o->kids.push_back(std::move(f));
    while (at_punct('|')) {
      shift();
      o->kids.push_back(label_conj());
    }
    return o;
  }

  FormulaPtr label_conj() {
    FormulaPtr f = label_unary();
    if (!at_punct('&')) return f;
    FormulaPtr a = make(Formula::Op::And);
    a->kids.push_back(std::move(f));
    while (at_punct('&')) {
      shift();
      a->kids.push_back(label_unary());
    }
    return a;
  }

  FormulaPtr label_unary() {
    if (at_punct('!')) {
      shift();
      FormulaPtr n = make(Formula::Op::Not);
      n->kids.push_back(label_unary());
      return n;
    }
    if (at_punct('(')) {
      shift();
      FormulaPtr f = label_formula();
      take_punct(')');
      return f;
    }
    if (cur_.kind == Tok::Alias) fail(cur_, "aliases are not supported");
    if (cur_.kind == Tok::Ident && (cur_.text == "t" || cur_.text == "f")) {
      FormulaPtr f = make(cur_.text == "t" ? Formula::Op::True : Formula::Op::False);
      shift();
      return f;
    }
    Token it = cur_;
    FormulaPtr f = make(Formula::Op::Atom);
    f->atom = take_int("a label atom");
    if (f->atom >= aps_.size()) fail(it, "AP index " + std::to_string(f->atom) + " not declared");
    return f;
  }

  ColorSet acc_signature() {
    ColorSet c;
    if (!at_punct('{')) return c;
    shift();
    while (cur_.kind == Tok::Int) {
      Token it = cur_;
      unsigned s = take_int("an acceptance set");
      if (s >= num_sets_) fail(it, "acceptance set " + std::to_string(s) + " not declared");
      if (set_color_[s] >= 0) c.insert(static_cast<unsigned>(set_color_[s]));
    }
    take_punct('}');
    return c;
  }

  void body() {
    const LetterId letters = LetterId{1} << aps_.size();
    while (cur_.kind == Tok::Header) {
      if (cur_.text != "State") fail(cur_, "expected 'State:'");
      shift();
      if (at_punct('[')) fail(cur_, "state labels are not supported");
      Token st = cur_;
      const StateId q = take_int("a state number");
      if (seen_states_.count(q) != 0) fail(st, "state " + std::to_string(q) + " defined twice");
      seen_states_.insert(q);
      if (cur_.kind == Tok::String) shift();
      const ColorSet mark = acc_signature();
      if (!mark.empty()) state_marks_.emplace_back(q, mark);
      max_state_ = std::max<std::size_t>(max_state_, q + 1);
      while (cur_.kind != Tok::Header && cur_.kind != Tok::End && cur_.kind != Tok::Abort) {
        if (!at_punct('[')) fail(cur_, "implicit labels are not supported; expected '['");
        shift();
        FormulaPtr label = label_formula();
        take_punct(']');
        const StateId dst = take_int("a target state");
        if (at_punct('&')) fail(cur_, "alternating transitions are not supported");
        max_state_ = std::max<std::size_t>(max_state_, dst + 1);
        const ColorSet colors = acc_signature();
        for (LetterId v = 0; v < letters; ++v)
          if (label->eval(v)) transitions_.push_back({q, v, dst, colors});
      }
    }
  }

  Sgra build() {
    std::size_t n = states_.value_or(max_state_);
    if (!states_)
      for (StateId s : start_) n = std::max<std::size_t>(n, s + 1);
    if (states_ && max_state_ > *states_)
      Lexer::fail(1, 1, "state index " + std::to_string(max_state_ - 1) + " exceeds States: " +
                            std::to_string(*states_));
    for (StateId s : start_)
      if (s >= n) Lexer::fail(1, 1, "start state " + std::to_string(s) + " exceeds the state count");
    StateMarkedAutomaton m;
    m.alphabet = Alphabet::from_aps(aps_);
    m.num_states = n;
    m.initial = start_;
    normalize_set(m.initial);
    m.transitions = std::move(transitions_);
    m.state_marks.assign(n, ColorSet{});
    for (auto [q, c] : state_marks_) m.state_marks[q] = c;
    m.num_colors = num_colors_;
    m.fin_used = fin_used_;
    return push_state_acceptance(m);
  }

  Lexer lex_;
  Token cur_{Tok::Eof, "", 1, 1};
  std::size_t max_aps_;
  std::optional<std::size_t> states_;
  std::vector<StateId> start_;
  std::vector<std::string> aps_;
  unsigned num_sets_ = 0;
  bool acceptance_seen_ = false;
  std::vector<int> set_color_;
  unsigned num_colors_ = 1;
  bool fin_used_ = false;
  std::set<StateId> seen_states_;
  std::vector<std::pair<StateId, ColorSet>> state_marks_;
  std::vector<Transition> transitions_;
  std::size_t max_state_ = 0;
};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string minterm(LetterId v, std::size_t bits) {
  if (bits == 0) return "t";
  std::string out;
  for (std::size_t i = 0; i < bits; ++i) {
    if (i > 0) out += "&";
    if (((v >> i) & 1U) == 0) out += "!";
    out += std::to_string(i);
  }
  return out;
}

}  // namespace

Sgra parse_hoa(std::string_view text, std::size_t max_aps) { return HoaParser(text, max_aps).parse(); }

std::string print_hoa(const Sgra& a, const std::string& name) {
  std::vector<std::string> aps;
  if (a.alphabet().has_aps()) {
    aps = *a.alphabet().ap_names();
  } else {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < a.num_letters()) ++bits;
    for (std::size_t i = 0; i < bits; ++i) aps.push_back("p" + std::to_string(i));
  }
  const std::size_t valuations = std::size_t{1} << aps.size();

  // Compact the used colors to set indices 0, 1, ...
  std::vector<int> index(a.num_colors(), -1);
  unsigned sets = 0;
  if (a.fin_used()) index[0] = static_cast<int>(sets++);
  for (unsigned c = 1; c < a.num_colors(); ++c) index[c] = static_cast<int>(sets++);
  std::string acc;
  if (a.fin_used()) acc = "Fin(0)";
  for (unsigned c = 1; c < a.num_colors(); ++c) {
    if (!acc.empty()) acc += " & ";
    acc += "Inf(" + std::to_string(index[c]) + ")";
  }
  if (acc.empty()) acc = "t";

  std::ostringstream out;
  out << "HOA: v1\n";
  if (!name.empty()) out << "name: " << quoted(name) << "\n";
  out << "States: " << a.num_states() << "\n";
  for (StateId q : a.initial()) out << "Start: " << q << "\n";
  out << "AP: " << aps.size();
  for (const auto& p : aps) out << " " << quoted(p);
  out << "\n";
  if (a.is_buchi()) out << "acc-name: Buchi\n";
  else if (!a.fin_used() && a.num_colors() == 1) out << "acc-name: all\n";
  else if (!a.fin_used()) out << "acc-name: generalized-Buchi " << sets << "\n";
  out << "Acceptance: " << sets << " " << acc << "\n";
  out << "properties: trans-labels explicit-labels trans-acc\n";
  out << "--BODY--\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    out << "State: " << q << "\n";
    // Group letters by (target, colors), ordered by their first letter.
    std::vector<std::pair<std::pair<StateId, ColorSet>, std::vector<LetterId>>> groups;
    std::map<std::pair<StateId, std::uint64_t>, std::size_t> where;
    for (LetterId l = 0; l < a.num_letters(); ++l) {
      for (const Transition& t : a.outgoing(q, l)) {
        auto key = std::make_pair(t.dst, t.colors.bits());
        auto it = where.find(key);
        if (it == where.end()) {
          it = where.emplace(key, groups.size()).first;
          groups.push_back({{t.dst, t.colors}, {}});
        }
        groups[it->second].second.push_back(l);
      }
    }
    for (const auto& [target, letters] : groups) {
      std::string label;
      if (letters.size() == valuations) {
        label = "t";
      } else {
        for (LetterId l : letters) {
          if (!label.empty()) label += " | ";
          label += minterm(l, aps.size());
        }
      }
      out << "[" << label << "] " << target.first;
      if (!target.second.empty()) {
        out << " {";
        bool first = true;
        for (unsigned c : target.second.members()) {
          out << (first ? "" : " ") << index[c];
          first = false;
        }
        out << "}";
      }
      out << "\n";
    }
  }
  out << "--END--\n";
  return out.str();
}

// -------------------------------------------------------------------- .ba

namespace {

[[noreturn]] void ba_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string trim_ws(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<std::string> bracketed(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  std::string inner = s.substr(1, s.size() - 2);
  if (inner.empty() || inner.find_first_of("[]") != std::string::npos) return std::nullopt;
  return inner;
}

}  // namespace

Sgra parse_ba(std::string_view text) {
  std::map<std::string, StateId> ids;
  auto id_of = [&ids](const std::string& name) {
    return ids.emplace(name, static_cast<StateId>(ids.size())).first->second;
  };
  struct Edge {
    std::string label;
    StateId src;
    StateId dst;
  };
  std::vector<Edge> edges;
  std::optional<StateId> init;
  std::vector<StateId> accepting;
  bool seen_edge = false;
  bool first = true;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string line = trim_ws(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      auto name = bracketed(line);
      if (!name) ba_fail(line_no, "expected '[state]' or 'label,[src]->[dst]'");
      if (first) {
        init = id_of(*name);
      } else if (!seen_edge) {
        ba_fail(line_no, "state line between the initial state and the transitions");
      } else {
        accepting.push_back(id_of(*name));
      }
      first = false;
      continue;
    }
    if (!accepting.empty()) ba_fail(line_no, "transition after the accepting states");
    const std::string label = trim_ws(line.substr(0, comma));
    const std::string rest = trim_ws(line.substr(comma + 1));
    const std::size_t arrow = rest.find("->");
    if (label.empty()) ba_fail(line_no, "empty label");
    if (arrow == std::string::npos) ba_fail(line_no, "expected '->'");
    auto src = bracketed(trim_ws(rest.substr(0, arrow)));
    auto dst = bracketed(trim_ws(rest.substr(arrow + 2)));
    if (!src || !dst) ba_fail(line_no, "states must be written as [name]");
    const StateId s = id_of(*src);
    const StateId d = id_of(*dst);
    edges.push_back({label, s, d});
    seen_edge = true;
    first = false;
  }

  std::vector<std::string> labels;
  for (const Edge& e : edges) labels.push_back(e.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) labels.push_back("t");
  Alphabet sigma = Alphabet::from_labels(labels);

  std::vector<bool> acc(ids.size(), false);
  for (StateId q : accepting) acc[q] = true;
  std::vector<Transition> ts;
  for (const Edge& e : edges)
    ts.push_back({e.src, *sigma.find(e.label), e.dst, acc[e.src] ? ColorSet::single(1) : ColorSet{}});
  StateSet initial;
  if (init) initial.push_back(*init);
  else if (!edges.empty()) initial.push_back(edges.front().src);
  return Sgra::buchi(std::move(sigma), ids.size(), std::move(initial), std::move(ts));
}

std::string print_ba(const Sgra& input) {
  const Sgra a = as_buchi(input);
  bool uniform = true;
  for (StateId q = 0; q < a.num_states() && uniform; ++q) {
    auto out = a.outgoing(q);
    for (const Transition& t : out) uniform = uniform && t.colors == out.front().colors;
  }

  // State-based view: `edges` over `n` states, `acc` marks, `init`.
  struct Edge {
    StateId src;
    LetterId letter;
    StateId dst;
  };
  std::vector<Edge> edges;
  std::vector<bool> acc;
  StateSet init;
  std::size_t n = 0;
  if (uniform) {
    n = a.num_states();
    acc.assign(n, false);
    for (const Transition& t : a.transitions()) {
      edges.push_back({t.src, t.letter, t.dst});
      if (t.colors.contains(1)) acc[t.src] = true;
    }
    init = a.initial();
  } else {
    // (q, b): b records whether the transition entering q was accepting.
    n = 2 * a.num_states();
    acc.assign(n, false);
    for (StateId q = 0; q < a.num_states(); ++q) acc[2 * q + 1] = true;
    for (const Transition& t : a.transitions()) {
      const StateId to = 2 * t.dst + (t.colors.contains(1) ? 1 : 0);
      edges.push_back({2 * t.src, t.letter, to});
      edges.push_back({2 * t.src + 1, t.letter, to});
    }
    for (StateId q : a.initial()) init.push_back(2 * q);
  }
  if (init.size() > 1) {
    const auto fresh = static_cast<StateId>(n++);
    acc.push_back(false);
    std::vector<Edge> extra;
    for (const Edge& e : edges)
      if (set_contains(init, e.src)) extra.push_back({fresh, e.letter, e.dst});
    edges.insert(edges.end(), extra.begin(), extra.end());
    init = {fresh};
  }

  std::ostringstream out;
  if (!init.empty()) out << "[" << init.front() << "]\n";
  for (const Edge& e : edges) out << a.alphabet().label(e.letter) << ",[" << e.src << "]->[" << e.dst << "]\n";
  if (!edges.empty())
    for (StateId q = 0; q < n; ++q)
      if (acc[q]) out << "[" << q << "]\n";
  return out.str();
}

}  // namespace bacomp
