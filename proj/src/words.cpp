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

#include "birest/words.hpp"

#include <cctype>
#include <stdexcept>

#include "birest/errors.hpp"

namespace birest {

Label Label::barred_word(std::vector<LetterId> w) {
  if (w.empty()) {
    throw std::invalid_argument("barred label requires a nonempty word");
  }
  return Label{true, std::move(w)};
}

SignedWord involutive_inverse(const SignedWord& w) {
  SignedWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(SignedLetter{it->base, !it->inverse});
  }
  return out;
}

namespace {

void push_reduced(GroupWord& w, GLetter g) {
  if (!w.empty() && w.back().letter == g.letter
      && w.back().inverse != g.inverse) {
    w.pop_back();
  } else {
    w.push_back(g);
  }
}

}  // namespace

GroupWord group_value(const SignedWord& w) {
  GroupWord out;
  for (const auto& sl : w) {
    if (!sl.inverse) {
      for (LetterId x : sl.base.letters) {
        push_reduced(out, GLetter{x, false});
      }
    } else {
      for (auto it = sl.base.letters.rbegin(); it != sl.base.letters.rend();
           ++it) {
        push_reduced(out, GLetter{*it, true});
      }
    }
  }
  return out;
}

SignedWord expand_barred(const SignedWord& w) {
  SignedWord out;
  for (const auto& sl : w) {
    if (!sl.base.barred || sl.base.letters.size() == 1) {
      out.push_back(sl);
    } else if (!sl.inverse) {
      for (LetterId x : sl.base.letters) {
        out.push_back(SignedLetter{Label::barred_word({x}), false});
      }
    } else {
      for (auto it = sl.base.letters.rbegin(); it != sl.base.letters.rend();
           ++it) {
        out.push_back(SignedLetter{Label::barred_word({*it}), true});
      }
    }
  }
  return out;
}

GroupWord gw_reduce(const GroupWord& w) {
  GroupWord out;
  for (GLetter g : w) {
    push_reduced(out, g);
  }
  return out;
}

GroupWord gw_concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (GLetter g : b) {
    push_reduced(out, g);
  }
  return out;
}

GroupWord gw_inverse(const GroupWord& a) {
  GroupWord out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    out.push_back(GLetter{it->letter, !it->inverse});
  }
  return out;
}

GroupWord gw_of_positive(const std::vector<LetterId>& u) {
  GroupWord out;
  out.reserve(u.size());
  for (LetterId x : u) {
    out.push_back(GLetter{x, false});
  }
  return out;
}

bool gw_is_reduced(const GroupWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].letter == w[i + 1].letter && w[i].inverse != w[i + 1].inverse) {
      return false;
    }
  }
  return true;
}

std::string label_name(const Label& l, const Alphabet& a) {
  if (!l.barred) {
    return a.name(l.letters[0]);
  }
  std::string out = "[";
  for (LetterId x : l.letters) {
    out += a.name(x);
  }
  out += "]";
  return out;
}

std::string label_code(const Label& l, const Alphabet& a) {
  std::string out = l.barred ? "B:" : "P:";
  for (LetterId x : l.letters) {
    out += a.name(x);
  }
  return out;
}

std::string print_signed_word(const SignedWord& w, const Alphabet& a) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& sl : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += label_name(sl.base, a);
    if (sl.inverse) {
      out += '\'';
    }
  }
  return out;
}

std::string gw_name(const GroupWord& w, const Alphabet& a) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (GLetter g : w) {
    out += a.name(g.letter);
    if (g.inverse) {
      out += '\'';
    }
  }
  return out;
}

namespace {

struct WordLexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size()
           && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
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
};

}  // namespace

std::vector<LetterId> split_letter_run(std::string_view run, const Alphabet& a,
                                       size_t err_pos) {
  std::vector<std::pair<size_t, LetterId>> stack;  // (consumed, letter)
  size_t consumed = 0;
  size_t try_len = run.size();
  while (consumed < run.size()) {
    bool advanced = false;
    for (size_t len = std::min(try_len, run.size() - consumed); len >= 1;
         --len) {
      if (auto id = a.find(run.substr(consumed, len))) {
        stack.emplace_back(len, *id);
        consumed += len;
        try_len = run.size();
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (stack.empty()) {
        throw ParseError("unknown generator \"" + std::string(run) + "\"",
                         err_pos);
      }
      consumed -= stack.back().first;
      try_len = stack.back().first - 1;
      stack.pop_back();
    }
  }
  std::vector<LetterId> out;
  out.reserve(stack.size());
  for (auto& [len, id] : stack) {
    out.push_back(id);
  }
  return out;
}

SignedWord parse_signed_word(std::string_view text, const Alphabet& a) {
  WordLexer lex{text};
  SignedWord out;
  bool saw_one = false;
  while (!lex.done()) {
    Label base;
    size_t atom_pos = lex.pos;
    if (lex.text[lex.pos] == '1') {
      ++lex.pos;
      saw_one = true;
      continue;
    }
    if (lex.text[lex.pos] == '[') {
      ++lex.pos;
      lex.skip_ws();
      std::vector<LetterId> letters;
      while (lex.pos < lex.text.size() && lex.text[lex.pos] != ']') {
        auto run = lex.identifier();
        auto part = split_letter_run(run, a, atom_pos);
        letters.insert(letters.end(), part.begin(), part.end());
        lex.skip_ws();
      }
      if (lex.pos >= lex.text.size()) {
        throw ParseError("unterminated barred atom", atom_pos);
      }
      ++lex.pos;  // ']'
      if (letters.empty()) {
        throw ParseError("empty barred atom", atom_pos);
      }
      base = Label::barred_word(std::move(letters));
    } else {
      auto run = lex.identifier();
      auto id = a.find(run);
      if (!id) {
        throw ParseError("unknown generator \"" + std::string(run) + "\"",
                         atom_pos);
      }
      base = Label::plain(*id);
    }
    bool inv = false;
    if (lex.pos < lex.text.size() && lex.text[lex.pos] == '\'') {
      inv = true;
      ++lex.pos;
    }
    out.push_back(SignedLetter{std::move(base), inv});
  }
  if (saw_one && !out.empty()) {
    throw ParseError("\"1\" must stand alone", 0);
  }
  return out;
}

}  // namespace birest
