#include "losemilat/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <vector>

#include "losemilat/error.hpp"

namespace losemilat {
namespace {

enum class Relator { equal, less_equal };

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }

  bool starts_variable() {
    skip_space();
    return !at_end() && peek() == 'x';
  }

  int variable() {
    skip_space();
    const std::size_t start = pos_;
    if (at_end() || peek() != 'x') throw ParseError("expected variable 'x<index>'", start);
    ++pos_;
    const std::size_t digits_start = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("variable index too large", digits_start);
      ++pos_;
    }
    if (pos_ == digits_start) throw ParseError("malformed variable: 'x' must be followed by digits", start);
    if (text_[digits_start] == '0') {
      throw ParseError(value == 0 ? "variable index must be >= 1" : "variable index has a leading zero",
                       digits_start);
    }
    return static_cast<int>(value);
  }

  std::vector<int> term() {
    skip_space();
    if (at_end() || (peek() != 'x' && peek() != '*')) throw ParseError("empty term", pos_);
    std::vector<int> vars{variable()};
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        vars.push_back(variable());
      } else if (peek() == 'x') {
        vars.push_back(variable());
      } else {
        break;
      }
    }
    return vars;
  }

  std::optional<Relator> relator() {
    skip_space();
    if (at_end()) return std::nullopt;
    if (peek() == '=') {
      ++pos_;
      return Relator::equal;
    }
    if (peek() == '<' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      pos_ += 2;
      return Relator::less_equal;
    }
    return std::nullopt;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool at_relator(std::string_view text, std::size_t pos) {
  return pos < text.size() && (text[pos] == '=' || (text[pos] == '<' && pos + 1 < text.size() && text[pos + 1] == '='));
}

}  // namespace

Term parse_term(std::string_view text) {
  Cursor cur(text);
  auto vars = cur.term();
  cur.skip_space();
  if (!cur.at_end()) throw ParseError(std::string("unexpected character '") + cur.peek() + "'", cur.pos());
  return Term(std::move(vars));
}

Equation parse_constraint(std::string_view text) {
  Cursor cur(text);
  cur.skip_space();
  if (cur.at_end() || at_relator(text, cur.pos())) throw ParseError("empty left-hand side", cur.pos());
  Term lhs(cur.term());
  const std::size_t relator_pos = cur.pos();
  auto rel = cur.relator();
  if (!rel) {
    if (cur.at_end()) throw ParseError("missing relator '=' or '<='", relator_pos);
    throw ParseError(std::string("unexpected character '") + cur.peek() + "'", cur.pos());
  }
  cur.skip_space();
  if (cur.at_end() || at_relator(text, cur.pos())) throw ParseError("empty right-hand side", cur.pos());
  Term rhs(cur.term());
  cur.skip_space();
  if (!cur.at_end()) {
    if (at_relator(text, cur.pos())) {
      throw ParseError("a constraint takes exactly one relator; write chains as separate constraints", cur.pos());
    }
    throw ParseError(std::string("unexpected character '") + cur.peek() + "'", cur.pos());
  }
  if (*rel == Relator::less_equal) return Equation(lhs * rhs, lhs);
  return Equation(std::move(lhs), std::move(rhs));
}

std::string render(const Term& t) {
  std::string out;
  for (int v : t.vars()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v);
  }
  return out;
}

std::string render(const Equation& eq) { return render(eq.lhs()) + " = " + render(eq.rhs()); }

}  // namespace losemilat
