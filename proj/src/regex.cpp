#include "reglang/regex.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "reglang/error.hpp"

namespace reglang {
namespace {

constexpr std::string_view kReserved = "|*(){}~#\\";

bool is_reserved(char c) { return kReserved.find(c) != std::string_view::npos; }
bool is_printable(char c) { return std::isprint(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const std::optional<Alphabet>& alphabet)
      : text_(text), alphabet_(alphabet) {}

  RegexAst parse() {
    if (text_.empty()) throw SyntaxError("empty expression", 0);
    RegexAst result = parse_alt();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw SyntaxError("unbalanced ')'", pos_);
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  RegexAst parse_alt() {
    std::vector<RegexAst> options;
    options.push_back(parse_cat());
    while (!at_end() && peek() == '|') {
      ++pos_;
      options.push_back(parse_cat());
    }
    if (options.size() == 1) return std::move(options.front());
    return RegexAst::alt(std::move(options));
  }

  RegexAst parse_cat() {
    std::vector<RegexAst> parts;
    while (!at_end() && peek() != '|' && peek() != ')') parts.push_back(parse_rep());
    if (parts.empty()) throw SyntaxError("expected an expression", pos_);
    if (parts.size() == 1) return std::move(parts.front());
    return RegexAst::concat(std::move(parts));
  }

  RegexAst parse_rep() {
    RegexAst node = parse_atom();
    while (!at_end()) {
      if (peek() == '*') {
        ++pos_;
        node = RegexAst::star(std::move(node));
      } else if (peek() == '{') {
        const std::size_t open = pos_++;
        std::size_t digits = 0;
        std::size_t count = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          count = count * 10 + static_cast<std::size_t>(peek() - '0');
          if (count > kMaxRepeatCount)
            throw SyntaxError("repeat count exceeds " + std::to_string(kMaxRepeatCount), open);
          ++digits;
          ++pos_;
        }
        if (digits == 0) throw SyntaxError("expected digits after '{'", pos_);
        if (at_end() || peek() != '}') throw SyntaxError("expected '}'", pos_);
        ++pos_;
        node = RegexAst::repeat(std::move(node), count);
      } else {
        break;
      }
    }
    return node;
  }

  RegexAst parse_atom() {
    const std::size_t here = pos_;
    const char c = peek();
    switch (c) {
      case '(': {
        ++pos_;
        if (!at_end() && peek() == ')') throw SyntaxError("empty group", pos_);
        RegexAst inner = parse_alt();
        if (at_end() || peek() != ')') throw SyntaxError("expected ')'", pos_);
        ++pos_;
        return inner;
      }
      case '~':
        ++pos_;
        return RegexAst::epsilon();
      case '#':
        ++pos_;
        return RegexAst::empty();
      case '\\': {
        ++pos_;
        if (at_end()) throw SyntaxError("dangling escape", here);
        const char escaped = peek();
        if (!is_printable(escaped)) throw SyntaxError("non-printable character", pos_);
        ++pos_;
        return make_literal(escaped, here);
      }
      case '*':
      case '{':
        throw SyntaxError(std::string("nothing to repeat before '") + c + "'", here);
      case '}':
        throw SyntaxError("unexpected '}'", here);
      default:
        if (!is_printable(c)) throw SyntaxError("non-printable character", here);
        ++pos_;
        return make_literal(c, here);
    }
  }

  RegexAst make_literal(char c, std::size_t at) const {
    if (alphabet_ && !alphabet_->contains(c))
      throw AlphabetError(std::string("symbol '") + c + "' at position " + std::to_string(at) +
                          " is not in the alphabet {" + alphabet_->symbols() + "}");
    return RegexAst::literal(c);
  }

  std::string_view text_;
  const std::optional<Alphabet>& alphabet_;
  std::size_t pos_ = 0;
};

void collect_literals(const RegexAst& ast, std::string& out) {
  if (ast.kind == RegexAst::Kind::Literal) out.push_back(ast.symbol);
  for (const auto& child : ast.children) collect_literals(child, out);
}

bool is_atom(const RegexAst& ast) {
  using K = RegexAst::Kind;
  return ast.kind == K::Literal || ast.kind == K::Epsilon || ast.kind == K::Empty;
}

void render(const RegexAst& ast, std::string& out) {
  using K = RegexAst::Kind;
  auto grouped = [&out](const RegexAst& child, bool wrap) {
    if (wrap) out.push_back('(');
    render(child, out);
    if (wrap) out.push_back(')');
  };
  switch (ast.kind) {
    case K::Empty: out.push_back('#'); break;
    case K::Epsilon: out.push_back('~'); break;
    case K::Literal:
      if (is_reserved(ast.symbol)) out.push_back('\\');
      out.push_back(ast.symbol);
      break;
    case K::Concat:
      for (const auto& child : ast.children)
        grouped(child, child.kind == K::Alt || child.kind == K::Concat);
      break;
    case K::Alt:
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i > 0) out.push_back('|');
        grouped(ast.children[i], ast.children[i].kind == K::Alt);
      }
      break;
    case K::Star:
      grouped(ast.children.front(), !is_atom(ast.children.front()));
      out.push_back('*');
      break;
    case K::Repeat:
      grouped(ast.children.front(), !is_atom(ast.children.front()));
      out += '{' + std::to_string(ast.count) + '}';
      break;
  }
}

// Thompson fragments: every fragment has one entry and one exit state.
class ThompsonBuilder {
 public:
  explicit ThompsonBuilder(const Alphabet& alphabet) { nfa_.alphabet = alphabet; }

  Nfa finish(const RegexAst& ast) && {
    auto [entry, exit] = build(ast);
    nfa_.start = entry;
    nfa_.accept = exit;
    return std::move(nfa_);
  }

 private:
  using State = Nfa::State;
  struct Fragment {
    State entry;
    State exit;
  };

  State add_state() {
    nfa_.edges.emplace_back();
    nfa_.epsilon.emplace_back();
    return static_cast<State>(nfa_.edges.size() - 1);
  }
  void link(State from, State to) { nfa_.epsilon[from].push_back(to); }

  Fragment build(const RegexAst& ast) {
    using K = RegexAst::Kind;
    switch (ast.kind) {
      case K::Empty:
        return {add_state(), add_state()};
      case K::Epsilon: {
        Fragment f{add_state(), add_state()};
        link(f.entry, f.exit);
        return f;
      }
      case K::Literal: {
        auto index = nfa_.alphabet.index_of(ast.symbol);
        if (!index)
          throw AlphabetError(std::string("symbol '") + ast.symbol + "' is not in the alphabet {" +
                              nfa_.alphabet.symbols() + "}");
        Fragment f{add_state(), add_state()};
        nfa_.edges[f.entry].push_back({*index, f.exit});
        return f;
      }
      case K::Concat:
        return chain(ast.children.begin(), ast.children.end(), 1);
      case K::Alt: {
        Fragment f{add_state(), add_state()};
        for (const auto& option : ast.children) {
          Fragment inner = build(option);
          link(f.entry, inner.entry);
          link(inner.exit, f.exit);
        }
        return f;
      }
      case K::Star: {
        Fragment f{add_state(), add_state()};
        Fragment inner = build(ast.children.front());
        link(f.entry, inner.entry);
        link(f.entry, f.exit);
        link(inner.exit, inner.entry);
        link(inner.exit, f.exit);
        return f;
      }
      case K::Repeat:
        if (ast.count == 0) return build(RegexAst::epsilon());
        return chain(ast.children.begin(), ast.children.begin() + 1, ast.count);
    }
    return {add_state(), add_state()};
  }

  // Concatenates [first, last) `times` times over.
  template <typename It>
  Fragment chain(It first, It last, std::size_t times) {
    std::optional<Fragment> whole;
    for (std::size_t t = 0; t < times; ++t) {
      for (It it = first; it != last; ++it) {
        Fragment next = build(*it);
        if (whole) {
          link(whole->exit, next.entry);
          whole->exit = next.exit;
        } else {
          whole = next;
        }
      }
    }
    return *whole;
  }

  Nfa nfa_;
};

}  // namespace

RegexAst parse_regex(std::string_view text, const std::optional<Alphabet>& alphabet) {
  return Parser(text, alphabet).parse();
}

Alphabet literals_of(const RegexAst& ast) {
  std::string symbols;
  collect_literals(ast, symbols);
  return Alphabet(symbols);
}

std::string to_string(const RegexAst& ast) {
  std::string out;
  render(ast, out);
  return out;
}

std::vector<Nfa::State> Nfa::closure(std::vector<State> seeds) const {
  std::vector<bool> seen(state_count(), false);
  std::vector<State> stack;
  std::vector<State> out;
  for (State s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    out.push_back(s);
    for (State t : epsilon[s]) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Nfa::accepts(std::string_view word) const {
  std::vector<State> current = closure({start});
  for (char c : word) {
    auto index = alphabet.index_of(c);
    if (!index) return false;
    std::vector<State> moved;
    for (State s : current)
      for (const Edge& e : edges[s])
        if (e.symbol == *index) moved.push_back(e.target);
    current = closure(std::move(moved));
    if (current.empty()) return false;
  }
  return std::binary_search(current.begin(), current.end(), accept);
}

Nfa compile_to_nfa(const RegexAst& ast, const Alphabet& alphabet) {
  return ThompsonBuilder(alphabet).finish(ast);
}

}  // namespace reglang
