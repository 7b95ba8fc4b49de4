// Copyright 2026 The Semrex Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semrex/syntax.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "semrex/typesys.hpp"

namespace semrex {

namespace {

const char *kEmptyTok = "\xE2\x88\x85";  // U+2205

bool is_meta(char c) {
  switch (c) {
    case '(':
    case ')':
    case '{':
    case '}':
    case '[':
    case ']':
    case '|':
    case '&':
    case '~':
    case '?':
    case '*':
    case '+':
    case '.':
    case '\\':
      return true;
    default:
      return false;
  }
}

bool is_word(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

struct KeywordHit {
  CharClassKind cc;
  size_t len;
};

// Whole-word ANY/LET/NUM/CAP at position i (caller guarantees word-start).
bool keyword_at(const std::string &s, size_t i, KeywordHit *hit) {
  static const struct {
    const char *name;
    CharClassKind cc;
  } kws[] = {{"ANY", CharClassKind::Any},
             {"LET", CharClassKind::Let},
             {"NUM", CharClassKind::Num},
             {"CAP", CharClassKind::Cap}};
  for (auto &kw : kws) {
    size_t n = 3;
    if (s.compare(i, n, kw.name) == 0 && (i + n >= s.size() || !is_word(s[i + n]))) {
      *hit = {kw.cc, n};
      return true;
    }
  }
  return false;
}

std::string trim(const std::string &s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) a++;
  while (b > a && std::isspace((unsigned char)s[b - 1])) b--;
  return s.substr(a, b - a);
}

const char *kLibPreds[] = {"NumMatch", "isYear",    "isMonth",     "isDate",
                           "btwHour",  "btwMin",    "btwSec",      "isMorning",
                           "isAfternoon", "isEvening", "inRegion", "inCountry",
                           "inState"};

bool is_lib_pred(const std::string &name) {
  for (auto *p : kLibPreds)
    if (name == p) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Predicate parser (runs over the substring between "->" and "}").

struct PredParser {
  const std::string &s;
  size_t i = 0;
  size_t base;  // Offset of s within the enclosing regex text, for errors.

  PredParser(const std::string &text, size_t base_off) : s(text), base(base_off) {}

  [[noreturn]] void fail(const std::string &exp) { throw SyntaxError(base + i, exp); }

  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      i++;
      return true;
    }
    return false;
  }
  char peek() {
    ws();
    return i < s.size() ? s[i] : '\0';
  }

  std::string ident() {
    ws();
    size_t start = i;
    while (i < s.size() && is_word(s[i])) i++;
    return s.substr(start, i - start);
  }

  PredPtr parse() {
    PredPtr p = parse_or();
    ws();
    if (i != s.size()) fail("end of predicate");
    return p;
  }

  PredPtr parse_or() {
    PredPtr p = parse_and();
    while (eat('|')) p = Pred::disj(p, parse_and());
    return p;
  }

  PredPtr parse_and() {
    PredPtr p = parse_unary();
    while (eat('&')) p = Pred::conj(p, parse_unary());
    return p;
  }

  PredPtr parse_unary() {
    if (eat('~')) return Pred::negate(parse_unary());
    if (eat('(')) {
      PredPtr p = parse_or();
      if (!eat(')')) fail(")");
      return p;
    }
    return parse_atom();
  }

  PredPtr parse_atom() {
    ws();
    if (i >= s.size()) fail("predicate");
    char c = s[i];
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t save = i;
      std::string name = ident();
      if (name == "True") return Pred::truth();
      ws();
      if (i < s.size() && s[i] == '(' && is_lib_pred(name)) return parse_call(name);
      if (is_lib_pred(name) && (name == "isMorning" || name == "isAfternoon" ||
                                name == "isEvening"))
        return Pred::library(name, {});
      i = save;  // Plain comparison.
    }
    Term t1 = parse_term();
    CmpOp op = parse_op();
    Term t2 = parse_term();
    return Pred::cmp(t1, op, t2);
  }

  PredPtr parse_call(const std::string &name) {
    if (!eat('(')) fail("(");
    std::vector<std::string> args;
    ws();
    if (peek() != ')') {
      for (;;) {
        size_t start = i;
        int depth = 0;
        while (i < s.size() && (depth > 0 || (s[i] != ',' && s[i] != ')'))) {
          if (s[i] == '(') depth++;
          if (s[i] == ')') depth--;
          i++;
        }
        args.push_back(trim(s.substr(start, i - start)));
        if (!eat(',')) break;
      }
    }
    if (!eat(')')) fail(")");
    if (name == "NumMatch") return desugar_nummatch(args);
    return Pred::library(name, args);
  }

  // NumMatch(v, op, n, =) means v op n; NumMatch(n1, op1, n2, op2) means the
  // range n1 op1 v and v op2 n2.
  PredPtr desugar_nummatch(const std::vector<std::string> &args) {
    if (args.size() != 4) fail("NumMatch(t, sym, t, sym)");
    Term t1 = term_from_text(args[0]);
    CmpOp s1 = op_from_text(args[1]);
    Term t2 = term_from_text(args[2]);
    CmpOp s2 = op_from_text(args[3]);
    if (t1.kind == Term::Kind::Var || t1.kind == Term::Kind::Attr)
      return Pred::cmp(t1, s1, t2);
    if (t2.kind == Term::Kind::Var || t2.kind == Term::Kind::Attr)
      return Pred::cmp(t1, s1, t2);
    return Pred::conj(Pred::cmp(t1, s1, Term::var()),
                      Pred::cmp(Term::var(), s2, t2));
  }

  Term term_from_text(const std::string &t) {
    if (t == "v") return Term::var();
    if (t.rfind("v.", 0) == 0) return Term::attr(t.substr(2));
    char *end = nullptr;
    double n = std::strtod(t.c_str(), &end);
    if (end && *end == '\0' && !t.empty()) return Term::number(n);
    return Term::str(t);
  }

  CmpOp op_from_text(const std::string &t) {
    if (t == "<") return CmpOp::Lt;
    if (t == "<=") return CmpOp::Le;
    if (t == ">") return CmpOp::Gt;
    if (t == ">=") return CmpOp::Ge;
    if (t == "=") return CmpOp::Eq;
    if (t == "in") return CmpOp::In;
    fail("comparison symbol");
  }

  Term parse_term() {
    ws();
    if (i >= s.size()) fail("term");
    char c = s[i];
    if (c == 'v' && (i + 1 >= s.size() || !is_word(s[i + 1]))) {
      i++;
      if (i < s.size() && s[i] == '.') {
        i++;
        std::string a = ident();
        if (a.empty()) fail("attribute name");
        return Term::attr(a);
      }
      return Term::var();
    }
    if (std::isdigit((unsigned char)c) || c == '-') {
      size_t start = i;
      if (c == '-') i++;
      while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '.')) i++;
      return Term::number(std::strtod(s.substr(start, i - start).c_str(), nullptr));
    }
    if (c == '"') {
      i++;
      size_t start = i;
      while (i < s.size() && s[i] != '"') i++;
      if (i >= s.size()) fail("closing quote");
      std::string v = s.substr(start, i - start);
      i++;
      return Term::str(v);
    }
    std::string w = ident();
    if (w.empty()) fail("term");
    return Term::str(w);
  }

  CmpOp parse_op() {
    ws();
    if (i + 1 < s.size() && s[i] == '<' && s[i + 1] == '=') {
      i += 2;
      return CmpOp::Le;
    }
    if (i + 1 < s.size() && s[i] == '>' && s[i + 1] == '=') {
      i += 2;
      return CmpOp::Ge;
    }
    if (i < s.size() && s[i] == '<') {
      i++;
      return CmpOp::Lt;
    }
    if (i < s.size() && s[i] == '>') {
      i++;
      return CmpOp::Gt;
    }
    if (i < s.size() && s[i] == '=') {
      i++;
      return CmpOp::Eq;
    }
    if (s.compare(i, 2, "in") == 0 && (i + 2 >= s.size() || !is_word(s[i + 2]))) {
      i += 2;
      return CmpOp::In;
    }
    if (s.compare(i, 3, "\xE2\x88\x88") == 0) {  // U+2208
      i += 3;
      return CmpOp::In;
    }
    fail("comparison operator");
  }
};

// ---------------------------------------------------------------------------
// Regex / sketch parser.

struct Parser {
  const std::string &s;
  size_t i = 0;
  bool allow_holes;
  int next_hole = 0;

  Parser(const std::string &text, bool holes) : s(text), allow_holes(holes) {}

  [[noreturn]] void fail(const std::string &exp) { throw SyntaxError(i, exp); }

  RegexPtr parse() {
    RegexPtr r = parse_union();
    if (i != s.size()) fail("end of input");
    return r;
  }

  RegexPtr parse_union() {
    RegexPtr r = parse_inter();
    while (i < s.size() && s[i] == '|') {
      i++;
      r = Regex::union_(r, parse_inter());
    }
    return r;
  }

  RegexPtr parse_inter() {
    RegexPtr r = parse_concat();
    while (i < s.size() && s[i] == '&') {
      i++;
      r = Regex::inter(r, parse_concat());
    }
    return r;
  }

  bool at_concat_end() {
    if (i >= s.size()) return true;
    char c = s[i];
    return c == '|' || c == '&' || c == ')';
  }

  RegexPtr parse_concat() {
    std::vector<RegexPtr> items;
    while (!at_concat_end()) items.push_back(parse_repeat());
    // Merge adjacent literal constants so "abc" is one Const node.
    std::vector<RegexPtr> merged;
    for (auto &it : items) {
      if (!merged.empty() && merged.back()->kind == Regex::Kind::Const &&
          it->kind == Regex::Kind::Const) {
        merged.back() = Regex::constant(merged.back()->text + it->text);
      } else {
        merged.push_back(it);
      }
    }
    if (merged.empty()) fail("regex");
    RegexPtr r = merged[0];
    for (size_t k = 1; k < merged.size(); k++) r = Regex::concat(r, merged[k]);
    return r;
  }

  RegexPtr parse_repeat() {
    RegexPtr r = parse_atom();
    for (;;) {
      if (i >= s.size()) break;
      char c = s[i];
      if (c == '?') {
        i++;
        r = Regex::opt(r);
      } else if (c == '*') {
        i++;
        r = Regex::star(r);
      } else if (c == '+') {
        i++;
        r = Regex::plus(r);
      } else if (c == '{' && i + 1 < s.size() && std::isdigit((unsigned char)s[i + 1])) {
        i++;
        int k1 = parse_int();
        if (i < s.size() && s[i] == ',') {
          i++;
          int k2 = parse_int();
          if (k1 > k2) fail("k1 <= k2 in repetition");
          if (k2 > 64) fail("repetition bound <= 64");
          expect('}');
          r = Regex::repeat_range(r, k1, k2);
        } else {
          expect('}');
          if (k1 < 1) fail("repetition count >= 1");
          if (k1 > 64) fail("repetition bound <= 64");
          r = Regex::repeat(r, k1);
        }
      } else {
        break;
      }
    }
    return r;
  }

  int parse_int() {
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) i++;
    if (i == start) fail("integer");
    return std::atoi(s.substr(start, i - start).c_str());
  }

  void expect(char c) {
    if (i >= s.size() || s[i] != c) fail(std::string(1, c));
    i++;
  }

  RegexPtr parse_atom() {
    if (i >= s.size()) fail("atom");
    char c = s[i];
    if (c == '(') {
      i++;
      RegexPtr r = parse_union();
      expect(')');
      return r;
    }
    if (c == '~') {
      i++;
      return Regex::negate(parse_atom());
    }
    if (s.compare(i, 3, kEmptyTok) == 0) {
      i += 3;
      return Regex::empty();
    }
    if (c == '.') {
      i++;
      return Regex::char_class(CharClassKind::Any);
    }
    if (c == '[') return parse_char_set();
    if (c == '{') return parse_braced();
    if (c == '\\') {
      i++;
      if (i >= s.size()) fail("escaped character");
      char e = s[i++];
      if (e == 'd') return Regex::char_class(CharClassKind::Num);
      if (e == 'l') return Regex::char_class(CharClassKind::Let);
      if (e == 'u') return Regex::char_class(CharClassKind::Cap);
      return Regex::constant(std::string(1, e));
    }
    KeywordHit hit;
    if (std::isupper((unsigned char)c) && keyword_at(s, i, &hit)) {
      i += hit.len;
      return Regex::char_class(hit.cc);
    }
    if (c == ')' || c == '}' || c == ']' || c == '|' || c == '&' || c == '?' ||
        c == '*' || c == '+')
      fail("atom");
    i++;
    return Regex::constant(std::string(1, c));
  }

  // [abc] is sugar for a|b|c (single characters; \x escapes allowed).
  RegexPtr parse_char_set() {
    expect('[');
    std::vector<char> chars;
    while (i < s.size() && s[i] != ']') {
      char c = s[i];
      if (c == '\\') {
        i++;
        if (i >= s.size()) fail("escaped character");
        c = s[i];
      }
      chars.push_back(c);
      i++;
    }
    expect(']');
    if (chars.empty()) fail("non-empty character set");
    RegexPtr r = Regex::constant(std::string(1, chars[0]));
    for (size_t k = 1; k < chars.size(); k++)
      r = Regex::union_(r, Regex::constant(std::string(1, chars[k])));
    return r;
  }

  RegexPtr parse_braced() {
    expect('{');
    if (s.compare(i, 2, "??") == 0) {
      i += 2;
      while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
      if (i < s.size() && s[i] == ':') {
        i++;
        size_t start = i;
        while (i < s.size() && s[i] != '}') i++;
        if (i >= s.size()) fail("}");
        std::string ty_text = trim(s.substr(start, i - start));
        i++;
        if (!allow_holes) fail("no holes in a concrete regex");
        return Regex::hole(parse_ty(ty_text), next_hole++);
      }
      expect('}');
      if (!allow_holes) fail("no holes in a concrete regex");
      return Regex::meta_hole(next_hole++);
    }
    expect('<');
    size_t start = i;
    while (i < s.size() && s[i] != '>') i++;
    if (i >= s.size()) fail(">");
    std::string inner = trim(s.substr(start, i - start));
    i++;  // '>'
    Func f;
    std::string type_name = parse_func_and_type(inner, start);
    while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
    if (i < s.size() && s[i] == '}') {
      i++;
      return Regex::sem_q(type_name, func_buf);
    }
    if (s.compare(i, 2, "->") != 0) fail("-> or }");
    i += 2;
    size_t pstart = i;
    while (i < s.size() && s[i] != '}') i++;
    if (i >= s.size()) fail("}");
    std::string pred_text = s.substr(pstart, i - pstart);
    i++;
    if (!is_builtin_type_name(type_name)) throw UnknownBuiltinType(type_name);
    PredParser pp(pred_text, pstart);
    return Regex::sem_b(type_name, func_buf, pp.parse());
  }

  Func func_buf;  // Set by parse_func_and_type.

  std::string parse_func_and_type(const std::string &inner, size_t off) {
    func_buf = Func::id();
    auto call = [&](const std::string &prefix) -> std::string {
      // prefix already includes the opening '('; returns inner type or "".
      if (inner.rfind(prefix, 0) != 0) return "";
      if (inner.back() != ')') throw SyntaxError(off + inner.size(), ")");
      return trim(inner.substr(prefix.size(), inner.size() - prefix.size() - 1));
    };
    std::string t;
    if (!(t = call("toUpper(")).empty()) {
      func_buf = Func::to_upper();
      return t;
    }
    if (!(t = call("toLower(")).empty()) {
      func_buf = Func::to_lower();
      return t;
    }
    if (!(t = call("id(")).empty()) return t;
    if (inner.rfind("substring[", 0) == 0) {
      size_t close = inner.find(']');
      size_t comma = inner.find(',');
      if (close == std::string::npos || comma == std::string::npos || comma > close)
        throw SyntaxError(off, "substring[k1,k2]");
      int k1 = std::atoi(inner.substr(10, comma - 10).c_str());
      int k2 = std::atoi(inner.substr(comma + 1, close - comma - 1).c_str());
      if (k1 > k2 || k1 < 0) throw SyntaxError(off, "substring bounds k1 <= k2");
      func_buf = Func::substring(k1, k2);
      std::string rest = trim(inner.substr(close + 1));
      if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
        throw SyntaxError(off, "(type)");
      return trim(rest.substr(1, rest.size() - 2));
    }
    if (inner.rfind("abbreviate[", 0) == 0) {
      size_t close = inner.find(']');
      if (close == std::string::npos || close != 12)
        throw SyntaxError(off, "abbreviate[c] with a single character");
      func_buf = Func::abbreviate(inner[11]);
      std::string rest = trim(inner.substr(close + 1));
      if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
        throw SyntaxError(off, "(type)");
      return trim(rest.substr(1, rest.size() - 2));
    }
    return inner;
  }
};

// ---------------------------------------------------------------------------
// Printer.

struct Printer {
  std::string out;

  void escape_const(const std::string &text) {
    for (size_t i = 0; i < text.size(); i++) {
      char c = text[i];
      bool esc = is_meta(c);
      if (!esc && std::isupper((unsigned char)c)) {
        // A whole-word ANY/LET/NUM/CAP would re-lex as a character class.
        KeywordHit hit;
        bool word_start = (i == 0) || !is_word(text[i - 1]);
        if (word_start && keyword_at(text, i, &hit)) esc = true;
      }
      if (!esc && text.compare(i, 3, kEmptyTok) == 0) esc = true;
      if (esc) out += '\\';
      out += c;
    }
  }

  // Levels: 0 union, 1 inter, 2 concat, 3 postfix operand, 4 atom.
  int level_of(const RegexPtr &r) {
    switch (r->kind) {
      case Regex::Kind::Union:
        return 0;
      case Regex::Kind::Inter:
        return 1;
      case Regex::Kind::Concat:
        return 2;
      case Regex::Kind::Const:
        // A multi-char literal is safe as a concat child (adjacent-merge is
        // idempotent) but not as a postfix operand ("ab*" binds to 'b').
        return r->text.size() == 1 ? 4 : 3;
      case Regex::Kind::Opt:
      case Regex::Kind::Star:
      case Regex::Kind::Plus:
      case Regex::Kind::Repeat:
      case Regex::Kind::RepeatRange:
        return 3;
      default:
        return 4;
    }
  }

  void print(const RegexPtr &r, int min_level) {
    bool paren = level_of(r) < min_level;
    if (paren) out += '(';
    switch (r->kind) {
      case Regex::Kind::Const:
        escape_const(r->text);
        break;
      case Regex::Kind::CharClass:
        switch (r->cc) {
          case CharClassKind::Any:
            out += '.';
            break;
          case CharClassKind::Let:
            out += "\\l";
            break;
          case CharClassKind::Num:
            out += "\\d";
            break;
          case CharClassKind::Cap:
            out += "\\u";
            break;
        }
        break;
      case Regex::Kind::Empty:
        out += kEmptyTok;
        break;
      case Regex::Kind::SemMatchQ:
      case Regex::Kind::SemMatchB:
        out += "{<";
        print_func_type(r);
        out += '>';
        if (r->kind == Regex::Kind::SemMatchB) {
          out += " -> ";
          print_pred(r->pred, 0);
        }
        out += '}';
        break;
      case Regex::Kind::Not:
        out += '~';
        print(r->a, 4);
        break;
      case Regex::Kind::Opt:
        print(r->a, 4);
        out += '?';
        break;
      case Regex::Kind::Star:
        print(r->a, 4);
        out += '*';
        break;
      case Regex::Kind::Plus:
        print(r->a, 4);
        out += '+';
        break;
      case Regex::Kind::Repeat:
        print(r->a, 4);
        out += '{' + std::to_string(r->k1) + '}';
        break;
      case Regex::Kind::RepeatRange:
        print(r->a, 4);
        out += '{' + std::to_string(r->k1) + ',' + std::to_string(r->k2) + '}';
        break;
      case Regex::Kind::Concat:
        // Concatenation is associative, so a concat child needs no parens on
        // either side; only lower-binding operators (union, intersection) do.
        print(r->a, 2);
        print(r->b, 2);
        break;
      case Regex::Kind::Union:
        print(r->a, 0);
        out += '|';
        print(r->b, 1);
        break;
      case Regex::Kind::Inter:
        print(r->a, 1);
        out += '&';
        print(r->b, 2);
        break;
      case Regex::Kind::Hole:
        out += "{??: " + print_ty(r->hole_ty) + "}";
        break;
      case Regex::Kind::MetaHole:
        out += "{??}";
        break;
    }
    if (paren) out += ')';
  }

  void print_func_type(const RegexPtr &r) {
    switch (r->func.kind) {
      case FuncKind::Id:
        out += r->text;
        return;
      case FuncKind::ToUpper:
        out += "toUpper(" + r->text + ")";
        return;
      case FuncKind::ToLower:
        out += "toLower(" + r->text + ")";
        return;
      case FuncKind::Substring:
        out += "substring[" + std::to_string(r->func.k1) + "," +
               std::to_string(r->func.k2) + "](" + r->text + ")";
        return;
      case FuncKind::Abbreviate:
        out += "abbreviate[" + std::string(1, r->func.sep) + "](" + r->text + ")";
        return;
    }
  }

  void print_term(const Term &t) {
    switch (t.kind) {
      case Term::Kind::Var:
        out += 'v';
        return;
      case Term::Kind::Attr:
        out += "v." + t.text;
        return;
      case Term::Kind::Num: {
        if (t.num == (long long)t.num) {
          out += std::to_string((long long)t.num);
        } else {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%g", t.num);
          out += buf;
        }
        return;
      }
      case Term::Kind::Str: {
        bool bare = !t.text.empty();
        for (char c : t.text)
          if (!is_word(c)) bare = false;
        if (bare)
          out += t.text;
        else
          out += '"' + t.text + '"';
        return;
      }
    }
  }

  // Levels: 0 or, 1 and, 2 unary/atom.
  void print_pred(const PredPtr &p, int min_level) {
    int lvl;
    switch (p->kind) {
      case Pred::Kind::Or:
        lvl = 0;
        break;
      case Pred::Kind::And:
        lvl = 1;
        break;
      default:
        lvl = 2;
        break;
    }
    bool paren = lvl < min_level;
    if (paren) out += '(';
    switch (p->kind) {
      case Pred::Kind::True:
        out += "True";
        break;
      case Pred::Kind::Not:
        out += '~';
        print_pred(p->a, 2);
        break;
      case Pred::Kind::And:
        print_pred(p->a, 1);
        out += '&';
        print_pred(p->b, 2);
        break;
      case Pred::Kind::Or:
        print_pred(p->a, 0);
        out += '|';
        print_pred(p->b, 1);
        break;
      case Pred::Kind::Cmp:
        print_term(p->t1);
        switch (p->op) {
          case CmpOp::Lt:
            out += '<';
            break;
          case CmpOp::Le:
            out += "<=";
            break;
          case CmpOp::Gt:
            out += '>';
            break;
          case CmpOp::Ge:
            out += ">=";
            break;
          case CmpOp::Eq:
            out += '=';
            break;
          case CmpOp::In:
            out += " in ";
            break;
        }
        print_term(p->t2);
        break;
      case Pred::Kind::Lib:
        out += p->lib;
        if (!p->args.empty()) {
          out += '(';
          for (size_t k = 0; k < p->args.size(); k++) {
            if (k) out += ',';
            out += p->args[k];
          }
          out += ')';
        }
        break;
    }
    if (paren) out += ')';
  }
};

}  // namespace

RegexPtr parse_regex(const std::string &text) {
  Parser p(text, /*holes=*/false);
  return p.parse();
}

RegexPtr parse_sketch(const std::string &text) {
  Parser p(text, /*holes=*/true);
  return p.parse();
}

std::string print_regex(const RegexPtr &r) {
  Printer pr;
  pr.print(r, 0);
  return pr.out;
}

Ty parse_ty(const std::string &text) {
  std::string t = trim(text);
  if (t == "Any" || t.empty()) return Ty::any();
  if (t == "CharSeq") return Ty::char_seq();
  if (t == "NoType") return Ty::no_type();
  if (t.rfind("Optional(", 0) == 0 && t.back() == ')')
    return parse_ty(t.substr(9, t.size() - 10)).wrapped();
  return Ty::semantic(t);
}

std::string print_ty(const Ty &t) {
  std::string base;
  switch (t.kind) {
    case Ty::Kind::Any:
      return "Any";
    case Ty::Kind::NoType:
      return "NoType";
    case Ty::Kind::CharSeq:
      base = "CharSeq";
      break;
    case Ty::Kind::Semantic:
      base = t.name;
      break;
  }
  return t.optional ? "Optional(" + base + ")" : base;
}

}  // namespace semrex
