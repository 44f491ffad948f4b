//
// birest - computing in free F-birestriction monoids
// Copyright (C) 2026 The birest developers
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#include "birest/term.hpp"

#include <cctype>
#include <stdexcept>

#include "birest/errors.hpp"

namespace birest {

using Kind = BiTerm::Kind;

TermPtr t_one() {
  static const TermPtr one = std::make_shared<const BiTerm>();
  return one;
}

TermPtr t_gen(const Label& g) {
  auto t = std::make_shared<BiTerm>();
  t->kind = Kind::Gen;
  t->gen = g;
  return t;
}

TermPtr t_gen(LetterId x) { return t_gen(Label::plain(x)); }

TermPtr t_mul(TermPtr a, TermPtr b) {
  auto t = std::make_shared<BiTerm>();
  t->kind = Kind::Mul;
  t->child = std::move(a);
  t->right = std::move(b);
  return t;
}

namespace {

TermPtr unary(Kind k, TermPtr a) {
  auto t = std::make_shared<BiTerm>();
  t->kind = k;
  t->child = std::move(a);
  return t;
}

}  // namespace

TermPtr t_star(TermPtr a) { return unary(Kind::Star, std::move(a)); }
TermPtr t_plus(TermPtr a) { return unary(Kind::Plus, std::move(a)); }
TermPtr t_max(TermPtr a) { return unary(Kind::Max, std::move(a)); }

TermPtr t_word(const std::vector<LetterId>& u) {
  if (u.empty()) {
    return t_one();
  }
  TermPtr t = t_gen(u[0]);
  for (size_t i = 1; i < u.size(); ++i) {
    t = t_mul(t, t_gen(u[i]));
  }
  return t;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) {
    return true;
  }
  if (a->kind != b->kind) {
    return false;
  }
  switch (a->kind) {
    case Kind::One:
      return true;
    case Kind::Gen:
      return a->gen == b->gen;
    case Kind::Mul:
      return term_eq(a->child, b->child) && term_eq(a->right, b->right);
    default:
      return term_eq(a->child, b->child);
  }
}

size_t term_size(const TermPtr& t) {
  switch (t->kind) {
    case Kind::One:
    case Kind::Gen:
      return 1;
    case Kind::Mul:
      return 1 + term_size(t->child) + term_size(t->right);
    default:
      return 1 + term_size(t->child);
  }
}

namespace {

// Prints t as a factor (atom with optional postfix chain), adding
// parentheses when t is a product.
void print_factor(const TermPtr& t, const Alphabet& a, std::string& out);

void print_product(const TermPtr& t, const Alphabet& a, std::string& out) {
  if (t->kind == Kind::Mul) {
    print_product(t->child, a, out);
    out += ' ';
    print_factor(t->right, a, out);
  } else {
    print_factor(t, a, out);
  }
}

void print_factor(const TermPtr& t, const Alphabet& a, std::string& out) {
  switch (t->kind) {
    case Kind::One:
      out += '1';
      break;
    case Kind::Gen:
      out += label_name(t->gen, a);
      break;
    case Kind::Mul:
      out += '(';
      print_product(t, a, out);
      out += ')';
      break;
    case Kind::Star:
      print_factor(t->child, a, out);
      out += "^*";
      break;
    case Kind::Plus:
      print_factor(t->child, a, out);
      out += "^+";
      break;
    case Kind::Max:
      out += "M(";
      print_product(t->child, a, out);
      out += ')';
      break;
  }
}

struct TermParser {
  std::string_view text;
  size_t pos = 0;
  const Alphabet& alphabet;

  void skip_ws() {
    while (pos < text.size()
           && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_atom_start() {
    skip_ws();
    if (pos >= text.size()) {
      return false;
    }
    char c = text[pos];
    return c == '1' || c == '[' || c == '('
           || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  TermPtr parse_term() {
    TermPtr t = parse_factor();
    while (at_atom_start()) {
      t = t_mul(t, parse_factor());
    }
    return t;
  }

  TermPtr parse_factor() {
    TermPtr t = parse_atom();
    for (;;) {
      skip_ws();
      if (pos + 1 < text.size() && text[pos] == '^') {
        if (text[pos + 1] == '*') {
          t = t_star(t);
          pos += 2;
        } else if (text[pos + 1] == '+') {
          t = t_plus(t);
          pos += 2;
        } else {
          throw ParseError("expected  \"^*\" or \"^+\"", pos);
        }
      } else {
        break;
      }
    }
    return t;
  }

  std::string_view identifier() {
    size_t b = pos;
    while (pos < text.size()
           && (std::isalnum(static_cast<unsigned char>(text[pos]))
               || text[pos] == '_')) {
      ++pos;
    }
    if (pos == b) {
      throw ParseError("expected a generator", b);
    }
    return text.substr(b, pos - b);
  }

  TermPtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) {
      throw ParseError("unexpected end of input", pos);
    }
    size_t atom_pos = pos;
    char c = text[pos];
    if (c == '1') {
      ++pos;
      return t_one();
    }
    if (c == '(') {
      ++pos;
      TermPtr t = parse_term();
      expect(')', atom_pos);
      return t;
    }
    if (c == '[') {
      ++pos;
      std::vector<LetterId> letters;
      for (;;) {
        skip_ws();
        if (pos >= text.size()) {
          throw ParseError("unterminated barred atom", atom_pos);
        }
        if (text[pos] == ']') {
          ++pos;
          break;
        }
        auto run = identifier();
        auto part = split_letter_run(run, alphabet, atom_pos);
        letters.insert(letters.end(), part.begin(), part.end());
      }
      if (letters.empty()) {
        throw ParseError("empty barred atom", atom_pos);
      }
      return t_gen(Label::barred_word(std::move(letters)));
    }
    // "M(" term ")" or a plain generator
    if (c == 'M' && pos + 1 < text.size() && text[pos + 1] == '('
        && !alphabet.find("M")) {
      pos += 2;
      TermPtr t = parse_term();
      expect(')', atom_pos);
      return t_max(t);
    }
    auto run = identifier();
    auto id = alphabet.find(run);
    if (!id) {
      throw ParseError("unknown generator \"" + std::string(run) + "\"",
                       atom_pos);
    }
    return t_gen(*id);
  }

  void expect(char c, size_t where) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected \"") + c + "\"",
                       pos < text.size() ? pos : where);
    }
    ++pos;
  }
};

}  // namespace

std::string print_term(const TermPtr& t, const Alphabet& a) {
  std::string out;
  print_product(t, a, out);
  return out;
}

TermPtr parse_term(std::string_view text, const Alphabet& a) {
  TermParser p{text, 0, a};
  p.skip_ws();
  if (p.pos >= text.size()) {
    throw ParseError("empty term", 0);
  }
  TermPtr t = p.parse_term();
  p.skip_ws();
  if (p.pos < text.size()) {
    throw ParseError("trailing input", p.pos);
  }
  return t;
}

namespace {

void sigma_into(const TermPtr& t, std::vector<LetterId>& out) {
  switch (t->kind) {
    case Kind::One:
    case Kind::Star:
    case Kind::Plus:
      break;  // projections map to 1
    case Kind::Gen:
      out.insert(out.end(), t->gen.letters.begin(), t->gen.letters.end());
      break;
    case Kind::Mul:
      sigma_into(t->child, out);
      sigma_into(t->right, out);
      break;
    case Kind::Max:
      sigma_into(t->child, out);
      break;
  }
}

}  // namespace

std::vector<LetterId> sigma_image(const TermPtr& t) {
  std::vector<LetterId> out;
  sigma_into(t, out);
  return out;
}

}  // namespace birest
