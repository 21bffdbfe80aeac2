#include "opn/io.hpp"

#include <cctype>
#include <cstring>
#include <optional>
#include <set>
#include <sstream>

namespace opn {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

const OpenPetriNet& NetDocument::net(const std::string& name) const {
  auto it = nets.find(name);
  if (it == nets.end()) throw InvalidNet("no net named '" + name + "' in the document");
  return it->second;
}

namespace {

bool is_ident_char(unsigned char c) {
  return std::isalnum(c) || c >= 0x80 || std::strchr("_.'@$!?~^/|", c) != nullptr;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (!is_ident_char(c)) return false;
  return true;
}

enum class Tok { ident, lbracket, rbracket, lbrace, rbrace, colon, comma, equals, arrow, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::colon: return "':'";
    case Tok::comma: return "','";
    case Tok::equals: return "'='";
    case Tok::arrow: return "'->'";
    case Tok::newline: return "end of line";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, std::size_t c) { out.push_back({k, std::move(s), line, c}); };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      push(Tok::newline, "", col);
      ++line;
      col = 1;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Tok::arrow, "->", col);
      i += 2;
      col += 2;
    } else if (is_ident_char(c)) {
      const std::size_t start = i, start_col = col;
      while (i < text.size() && is_ident_char(static_cast<unsigned char>(text[i]))) {
        // count code points, not bytes, for columns
        if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++col;
        ++i;
      }
      push(Tok::ident, std::string(text.substr(start, i - start)), start_col);
    } else {
      Tok k;
      switch (c) {
        case '[': k = Tok::lbracket; break;
        case ']': k = Tok::rbracket; break;
        case '{': k = Tok::lbrace; break;
        case '}': k = Tok::rbrace; break;
        case ':': k = Tok::colon; break;
        case ',': k = Tok::comma; break;
        case '=': k = Tok::equals; break;
        default:
          throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
      }
      push(k, std::string(1, static_cast<char>(c)), col);
      ++i;
      ++col;
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

struct Ref {
  std::string name;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  NetDocument document() {
    NetDocument doc;
    skip_newlines();
    if (peek().kind == Tok::ident && peek().text == "opn") {
      next();
      const Token& v = expect(Tok::ident, "format version");
      if (v.text != std::to_string(kFormatVersion))
        throw ParseError(v.line, v.column, "unsupported format version '" + v.text + "'");
      end_of_statement();
    }
    while (true) {
      skip_newlines();
      const Token& t = peek();
      if (t.kind == Tok::end) break;
      if (t.kind != Tok::ident) throw ParseError(t.line, t.column, "expected 'net' or 'marking'");
      if (t.text == "net") {
        next();
        const Token& name = expect(Tok::ident, "net name");
        if (doc.nets.count(name.text))
          throw ParseError(name.line, name.column, "duplicate net '" + name.text + "'");
        doc.nets.emplace(name.text, net_block());
      } else if (t.text == "marking") {
        next();
        const Token& name = expect(Tok::ident, "marking name");
        if (doc.markings.count(name.text))
          throw ParseError(name.line, name.column, "duplicate marking '" + name.text + "'");
        std::vector<std::pair<Ref, Count>> entries = multiset();
        AtomCounts counts;
        for (const auto& [ref, n] : entries) counts[ref.name] += n;
        std::erase_if(counts, [](const auto& kv) { return kv.second == 0; });
        doc.markings.emplace(name.text, std::move(counts));
        end_of_statement();
      } else {
        throw ParseError(t.line, t.column, "expected 'net' or 'marking', found '" + t.text + "'");
      }
    }
    return doc;
  }

  std::vector<std::pair<Ref, Count>> bare_multiset() {
    std::vector<std::pair<Ref, Count>> out;
    if (peek().kind == Tok::end) return out;
    if (peek().kind == Tok::ident && peek().text == "0" && toks_[pos_ + 1].kind == Tok::end) return out;
    while (true) {
      out.push_back(entry());
      if (peek().kind == Tok::end) return out;
      expect(Tok::comma, "','");
    }
  }

  void expect_end() {
    if (peek().kind != Tok::end) throw ParseError(peek().line, peek().column, "unexpected trailing input");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind)
      throw ParseError(t.line, t.column,
                       std::string("expected ") + what + ", found " +
                           (t.kind == Tok::ident ? "'" + t.text + "'" : describe(t.kind)));
    return next();
  }

  void skip_newlines() {
    while (peek().kind == Tok::newline) next();
  }

  void end_of_statement() {
    if (peek().kind == Tok::end) return;
    expect(Tok::newline, "end of line");
  }

  std::pair<Ref, Count> entry() {
    const Token& atom = expect(Tok::ident, "atom");
    Ref ref{atom.text, atom.line, atom.column};
    Count n = 1;
    if (peek().kind == Tok::colon) {
      next();
      const Token& c = expect(Tok::ident, "count");
      try {
        std::size_t used = 0;
        if (c.text.empty() || !std::isdigit(static_cast<unsigned char>(c.text[0]))) throw std::invalid_argument("");
        n = std::stoull(c.text, &used);
        if (used != c.text.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(c.line, c.column, "invalid count '" + c.text + "'");
      }
    }
    return {std::move(ref), n};
  }

  std::vector<std::pair<Ref, Count>> multiset() {
    expect(Tok::lbracket, "'['");
    std::vector<std::pair<Ref, Count>> out;
    if (peek().kind == Tok::rbracket) {
      next();
      return out;
    }
    while (true) {
      out.push_back(entry());
      if (peek().kind == Tok::rbracket) {
        next();
        return out;
      }
      expect(Tok::comma, "',' or ']'");
    }
  }

  OpenPetriNet net_block() {
    expect(Tok::lbrace, "'{'");
    end_of_statement();

    std::vector<Ref> places;
    struct Transition {
      Ref name;
      std::vector<std::pair<Ref, Count>> source, target;
    };
    std::vector<Transition> transitions;
    std::vector<std::pair<Ref, Ref>> inputs, outputs;

    while (true) {
      skip_newlines();
      const Token& t = peek();
      if (t.kind == Tok::rbrace) {
        next();
        end_of_statement();
        break;
      }
      const Token& kw = expect(Tok::ident, "'places', 'transition', 'inputs', 'outputs' or '}'");
      if (kw.text == "places") {
        while (peek().kind == Tok::ident) {
          const Token& p = next();
          places.push_back({p.text, p.line, p.column});
        }
      } else if (kw.text == "transition") {
        const Token& name = expect(Tok::ident, "transition name");
        Transition tr{{name.text, name.line, name.column}, multiset(), {}};
        expect(Tok::arrow, "'->'");
        tr.target = multiset();
        transitions.push_back(std::move(tr));
      } else if (kw.text == "inputs" || kw.text == "outputs") {
        auto& list = kw.text == "inputs" ? inputs : outputs;
        while (peek().kind == Tok::ident) {
          const Token& point = next();
          expect(Tok::equals, "'='");
          const Token& place = expect(Tok::ident, "place");
          list.push_back({{point.text, point.line, point.column}, {place.text, place.line, place.column}});
        }
      } else {
        throw ParseError(kw.line, kw.column, "unknown net statement '" + kw.text + "'");
      }
      end_of_statement();
    }

    std::set<std::string> place_set;
    for (const auto& p : places)
      if (!place_set.insert(p.name).second)
        throw ParseError(p.line, p.column, "duplicate place '" + p.name + "'");
    auto check_place = [&](const Ref& r) {
      if (!place_set.count(r.name)) throw ParseError(r.line, r.column, "undeclared place '" + r.name + "'");
    };

    std::set<std::string> tnames;
    std::vector<Atom> tlist;
    std::map<Atom, AtomCounts> src, tgt;
    for (const auto& tr : transitions) {
      if (!tnames.insert(tr.name.name).second)
        throw ParseError(tr.name.line, tr.name.column, "duplicate transition '" + tr.name.name + "'");
      tlist.push_back(tr.name.name);
      auto& s = src[tr.name.name];
      auto& d = tgt[tr.name.name];
      for (const auto& [r, n] : tr.source) {
        check_place(r);
        s[r.name] += n;
      }
      for (const auto& [r, n] : tr.target) {
        check_place(r);
        d[r.name] += n;
      }
    }

    auto boundary = [&](const std::vector<std::pair<Ref, Ref>>& list) {
      std::map<Atom, Atom> table;
      for (const auto& [point, place] : list) {
        check_place(place);
        if (!table.emplace(point.name, place.name).second)
          throw ParseError(point.line, point.column, "duplicate boundary point '" + point.name + "'");
      }
      return table;
    };
    auto in = boundary(inputs);
    auto out = boundary(outputs);

    std::vector<Atom> plist;
    for (const auto& p : places) plist.push_back(p.name);
    return OpenPetriNet::make(PetriNet::make(std::move(tlist), std::move(plist), src, tgt), in, out);
  }
};

void require_identifier(const std::string& s) {
  if (!is_identifier(s)) throw Error("identifier '" + s + "' cannot be written in the text format");
}

std::string write_multiset(const Multiset& m) {
  std::string out = "[";
  bool first = true;
  for (std::size_t i = 0; i < m.counts().size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += ", ";
    first = false;
    require_identifier((*m.carrier())[i]);
    out += (*m.carrier())[i];
    if (m[i] != 1) out += ":" + std::to_string(m[i]);
  }
  return out + "]";
}

std::string write_counts(const AtomCounts& counts) {
  std::string out = "[";
  bool first = true;
  for (const auto& [atom, n] : counts) {
    if (n == 0) continue;
    if (!first) out += ", ";
    first = false;
    require_identifier(atom);
    out += atom;
    if (n != 1) out += ":" + std::to_string(n);
  }
  return out + "]";
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

NetDocument parse(std::string_view text) { return Parser(lex(text)).document(); }

AtomCounts parse_marking(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "0") return {};
  Parser parser(lex(text));
  AtomCounts counts;
  for (const auto& [ref, n] : parser.bare_multiset()) counts[ref.name] += n;
  parser.expect_end();
  std::erase_if(counts, [](const auto& kv) { return kv.second == 0; });
  return counts;
}

std::string serialize(const NetDocument& doc) {
  std::ostringstream out;
  out << "opn " << doc.version << "\n";
  for (const auto& [name, open] : doc.nets) {
    require_identifier(name);
    const PetriNet& net = open.net();
    out << "\nnet " << name << " {\n  places";
    for (const auto& p : *net.places()) {
      require_identifier(p);
      out << ' ' << p;
    }
    out << '\n';
    for (std::size_t t = 0; t < net.num_transitions(); ++t) {
      require_identifier((*net.transitions())[t]);
      out << "  transition " << (*net.transitions())[t] << ' ' << write_multiset(net.source(t)) << " -> "
          << write_multiset(net.target(t)) << '\n';
    }
    auto boundary = [&](const char* kw, const FinFunction& f) {
      out << "  " << kw;
      for (std::size_t x = 0; x < f.domain()->size(); ++x) {
        require_identifier((*f.domain())[x]);
        out << ' ' << (*f.domain())[x] << '=' << (*f.codomain())[f(x)];
      }
      out << '\n';
    };
    boundary("inputs", open.input_map());
    boundary("outputs", open.output_map());
    out << "}\n";
  }
  if (!doc.markings.empty()) out << '\n';
  for (const auto& [name, counts] : doc.markings) {
    require_identifier(name);
    out << "marking " << name << ' ' << write_counts(counts) << '\n';
  }
  return out.str();
}

std::string export_dot(const OpenPetriNet& open, const std::string& name) {
  const PetriNet& net = open.net();
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n  rankdir=LR;\n";
  auto boundary_cluster = [&](const char* id, const char* label, const char* prefix, const FinFunction& f) {
    out << "  subgraph cluster_" << id << " {\n    label=" << dot_quote(label) << ";\n";
    for (const auto& x : *f.domain())
      out << "    " << dot_quote(std::string(prefix) + x) << " [shape=point, xlabel=" << dot_quote(x) << "];\n";
    out << "  }\n";
  };
  boundary_cluster("inputs", "inputs", "in:", open.input_map());
  boundary_cluster("outputs", "outputs", "out:", open.output_map());
  for (const auto& p : *net.places())
    out << "  " << dot_quote("p:" + p) << " [shape=ellipse, style=filled, fillcolor=yellow, label="
        << dot_quote(p) << "];\n";
  for (const auto& t : *net.transitions())
    out << "  " << dot_quote("t:" + t) << " [shape=box, style=filled, fillcolor=lightblue, label="
        << dot_quote(t) << "];\n";
  for (std::size_t t = 0; t < net.num_transitions(); ++t) {
    const std::string tid = dot_quote("t:" + (*net.transitions())[t]);
    for (std::size_t p = 0; p < net.num_places(); ++p) {
      const std::string pid = dot_quote("p:" + (*net.places())[p]);
      if (auto w = net.source(t)[p])
        out << "  " << pid << " -> " << tid << " [class=arc, label=\"" << w << "\"];\n";
      if (auto w = net.target(t)[p])
        out << "  " << tid << " -> " << pid << " [class=arc, label=\"" << w << "\"];\n";
    }
  }
  auto boundary_edges = [&](const char* prefix, const FinFunction& f) {
    for (std::size_t x = 0; x < f.domain()->size(); ++x)
      out << "  " << dot_quote(std::string(prefix) + (*f.domain())[x]) << " -> "
          << dot_quote("p:" + (*f.codomain())[f(x)]) << " [style=dashed, arrowhead=none];\n";
  };
  boundary_edges("in:", open.input_map());
  boundary_edges("out:", open.output_map());
  out << "}\n";
  return out.str();
}

}  // namespace opn
