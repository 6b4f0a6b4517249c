#include "qha/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qha {

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Rational parse_rational(std::size_t line, std::size_t col, const std::string& s) {
  std::size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto integral = [&](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t k = allow_sign && (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  if (!integral(num, true) || !integral(den, false) || den == "0" ||
      (den.size() > 1 && den[0] == '0'))
    throw ParseError(line, col, "malformed rational '" + s + "'");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

RelationTerm parse_term(const Quiver& q, std::size_t line, const Token& tok) {
  Rational coeff(1);
  std::string body = tok.text;
  std::size_t star = body.find('*');
  if (star != std::string::npos) {
    coeff = parse_rational(line, tok.col, body.substr(0, star));
    body = body.substr(star + 1);
  }
  if (coeff == 0) throw ParseError(line, tok.col, "zero coefficient");

  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = body.find('.', start);
    std::string name = body.substr(start, dot - start);
    if (name.empty()) throw ParseError(line, tok.col, "empty arrow name in term");
    names.push_back(name);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (names.size() < 2) throw ParseError(line, tok.col, "relation term of length < 2");

  const Arrow* first = q.find_arrow(names.front());
  if (!first) throw ParseError(line, tok.col, "unknown arrow '" + names.front() + "'");
  Path p{first->source, names};
  std::string at = first->source;
  for (const auto& name : names) {
    const Arrow* a = q.find_arrow(name);
    if (!a) throw ParseError(line, tok.col, "unknown arrow '" + name + "'");
    if (a->source != at)
      throw ParseError(line, tok.col, "non-composable path at arrow '" + name + "'");
    at = a->target;
  }
  return RelationTerm{coeff, p};
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
  PresentationFile f;
  Quiver& q = f.presentation.quiver;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "vertex") {
      if (toks.size() != 2) throw ParseError(lineno, toks[0].col, "expected: vertex NAME");
      if (!valid_name(toks[1].text))
        throw ParseError(lineno, toks[1].col, "bad vertex name '" + toks[1].text + "'");
      if (q.has_vertex(toks[1].text))
        throw ParseError(lineno, toks[1].col, "duplicate name '" + toks[1].text + "'");
      q.vertices.push_back({toks[1].text});
    } else if (head == "arrow") {
      if (toks.size() != 4 && !(toks.size() == 5 && toks[4].text == "new"))
        throw ParseError(lineno, toks[0].col, "expected: arrow NAME SRC TGT [new]");
      if (!valid_name(toks[1].text))
        throw ParseError(lineno, toks[1].col, "bad arrow name '" + toks[1].text + "'");
      if (q.find_arrow(toks[1].text))
        throw ParseError(lineno, toks[1].col, "duplicate name '" + toks[1].text + "'");
      for (int k : {2, 3})
        if (!q.has_vertex(toks[k].text))
          throw ParseError(lineno, toks[k].col, "unknown vertex '" + toks[k].text + "'");
      q.arrows.push_back({toks[1].text, toks[2].text, toks[3].text});
      if (toks.size() == 5) f.new_arrows.insert(toks[1].text);
    } else if (head == "rel") {
      if (toks.size() < 2) throw ParseError(lineno, toks[0].col, "expected: rel TERM ...");
      Relation rel;
      rel.terms.push_back(parse_term(q, lineno, toks[1]));
      std::size_t i = 2;
      while (i < toks.size()) {
        if (toks[i].text != "+" && toks[i].text != "-")
          throw ParseError(lineno, toks[i].col, "expected '+' or '-' between terms");
        if (i + 1 >= toks.size())
          throw ParseError(lineno, toks[i].col, "dangling sign at end of relation");
        RelationTerm t = parse_term(q, lineno, toks[i + 1]);
        if (toks[i].text == "-") t.coeff = -t.coeff;
        rel.terms.push_back(std::move(t));
        i += 2;
      }
      const Path& first = rel.terms.front().path;
      for (const auto& t : rel.terms) {
        if (t.path.source != first.source ||
            path_target(q, t.path) != path_target(q, first))
          throw ParseError(lineno, toks[0].col, "terms not parallel");
        for (const auto& other : rel.terms)
          if (&other != &t && other.path == t.path)
            throw ParseError(lineno, toks[0].col, "duplicate term path in relation");
      }
      f.presentation.relations.push_back(std::move(rel));
    } else if (head == "corresponds") {
      if (toks.size() != 3)
        throw ParseError(lineno, toks[0].col, "expected: corresponds NEWARROW INT");
      if (!f.new_arrows.count(toks[1].text))
        throw ParseError(lineno, toks[1].col,
                         "'" + toks[1].text + "' is not a new-tagged arrow");
      if (f.correspondences.count(toks[1].text))
        throw ParseError(lineno, toks[1].col, "duplicate correspondence for '" +
                                                  toks[1].text + "'");
      const std::string& n = toks[2].text;
      if (n.empty() ||
          !std::all_of(n.begin(), n.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(lineno, toks[2].col, "expected a nonnegative integer");
      f.correspondences[toks[1].text] = std::stoul(n);
    } else {
      throw ParseError(lineno, toks[0].col, "unknown directive '" + head + "'");
    }
  }
  return f;
}

std::string emit_presentation(const PresentationFile& f) {
  std::ostringstream out;
  const Quiver& q = f.presentation.quiver;
  for (const auto& v : q.vertices) out << "vertex " << v.name << "\n";
  for (const auto& a : q.arrows) {
    out << "arrow " << a.name << " " << a.source << " " << a.target;
    if (f.new_arrows.count(a.name)) out << " new";
    out << "\n";
  }
  for (const auto& rel : f.presentation.relations) {
    out << "rel";
    bool first = true;
    for (const auto& t : rel.terms) {
      Rational c = t.coeff;
      if (first) {
        out << " ";
      } else if (c < 0) {
        out << " - ";
        c = -c;
      } else {
        out << " + ";
      }
      first = false;
      if (c != 1) out << c.get_str() << "*";
      for (std::size_t i = 0; i < t.path.arrows.size(); ++i)
        out << (i ? "." : "") << t.path.arrows[i];
    }
    out << "\n";
  }
  for (const auto& [name, idx] : f.correspondences)
    out << "corresponds " << name << " " << idx << "\n";
  return out.str();
}

}  // namespace qha
