#include "gmon/instance_io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace gmon {

namespace {

struct Token {
  std::string text;
  int line, col;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<Token> row;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      row.push_back({line.substr(i, j - i), lineno, static_cast<int>(i) + 1});
      i = j;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

int parse_int(const Token& t) {
  try {
    size_t used = 0;
    int v = std::stoi(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.col);
  }
}

int resolve_elem(const Token& t, const std::vector<std::string>& names) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == t.text) return static_cast<int>(i);
  try {
    size_t used = 0;
    int v = std::stoi(t.text, &used);
    if (used == t.text.size() && v >= 0 &&
        v < static_cast<int>(names.size()))
      return v;
  } catch (...) {
  }
  throw ParseError("unknown element '" + t.text + "'", t.line, t.col);
}

}  // namespace

GammaStructure parse_instance(const std::string& text) {
  auto rows = tokenize(text);
  size_t at = 0;
  auto need_row = [&]() -> const std::vector<Token>& {
    if (at >= rows.size()) throw ParseError("unexpected end of file", 0, 0);
    return rows[at];
  };

  const auto& head = need_row();
  if (head[0].text != "monoid")
    throw ParseError("expected 'monoid <n>'", head[0].line, head[0].col);
  if (head.size() != 2)
    throw ParseError("expected 'monoid <n>'", head[0].line, head[0].col);
  int n = parse_int(head[1]);
  if (n < 1 || n > kMaxElements)
    throw ParseError("monoid size out of range", head[1].line, head[1].col);
  ++at;

  std::vector<std::string> names;
  if (at < rows.size() && rows[at][0].text == "names") {
    const auto& nr = rows[at];
    if (static_cast<int>(nr.size()) != n + 1)
      throw ParseError("expected " + std::to_string(n) + " names", nr[0].line,
                       nr[0].col);
    for (int i = 1; i <= n; ++i) names.push_back(nr[i].text);
    ++at;
  } else {
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }

  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i) {
    const auto& r = need_row();
    if (static_cast<int>(r.size()) != n)
      throw ParseError("expected a table row of " + std::to_string(n) +
                           " entries",
                       r[0].line, r[0].col);
    for (int j = 0; j < n; ++j) table[i * n + j] = resolve_elem(r[j], names);
    ++at;
  }

  int m = 1;
  std::vector<int> gtable{0};
  std::vector<int> action;
  if (at < rows.size() && rows[at][0].text == "group") {
    const auto& gr = rows[at];
    if (gr.size() != 2)
      throw ParseError("expected 'group <m>'", gr[0].line, gr[0].col);
    m = parse_int(gr[1]);
    if (m < 1) throw ParseError("group size out of range", gr[1].line, gr[1].col);
    ++at;
    gtable.assign(m * m, 0);
    for (int i = 0; i < m; ++i) {
      const auto& r = need_row();
      if (static_cast<int>(r.size()) != m)
        throw ParseError("expected a group row of " + std::to_string(m) +
                             " entries",
                         r[0].line, r[0].col);
      for (int j = 0; j < m; ++j) {
        int v = parse_int(r[j]);
        if (v < 0 || v >= m)
          throw ParseError("group entry out of range", r[j].line, r[j].col);
        gtable[i * m + j] = v;
      }
      ++at;
    }
  }
  if (at < rows.size() && rows[at][0].text == "action") {
    ++at;
    action.assign(m * n, 0);
    for (int i = 0; i < m; ++i) {
      const auto& r = need_row();
      if (static_cast<int>(r.size()) != n)
        throw ParseError("expected an action row of " + std::to_string(n) +
                             " entries",
                         r[0].line, r[0].col);
      for (int j = 0; j < n; ++j) action[i * n + j] = resolve_elem(r[j], names);
      ++at;
    }
  } else {
    if (m != 1)
      throw ParseError("a group section requires an action section",
                       rows[at - 1][0].line, 1);
    action.resize(n);
    std::iota(action.begin(), action.end(), 0);
  }
  if (at != rows.size())
    throw ParseError("trailing content", rows[at][0].line, rows[at][0].col);

  // Relocate the identity to index 0 if declared elsewhere.
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (table[e * n + a] != a || table[a * n + e] != a) ok = false;
    if (ok) id = e;
  }
  if (id > 0) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[id]);  // involution
    std::vector<int> t2(n * n), a2(m * n);
    std::vector<std::string> n2(n);
    for (int i = 0; i < n; ++i) {
      n2[perm[i]] = names[i];
      for (int j = 0; j < n; ++j)
        t2[perm[i] * n + perm[j]] = perm[table[i * n + j]];
    }
    for (int al = 0; al < m; ++al)
      for (int i = 0; i < n; ++i)
        a2[al * n + perm[i]] = perm[action[al * n + i]];
    table = t2;
    action = a2;
    names = n2;
  }

  return make_gamma(make_monoid(table, n, names),
                    make_group(gtable, m, /*require_abelian=*/false),
                    std::move(action));
}

std::string print_instance(const GammaStructure& gs) {
  const Monoid& mo = gs.monoid;
  std::ostringstream os;
  os << "monoid " << mo.n << "\n";
  os << "names";
  for (const auto& nm : mo.names) os << " " << nm;
  os << "\n";
  for (int i = 0; i < mo.n; ++i) {
    for (int j = 0; j < mo.n; ++j)
      os << (j ? " " : "") << mo.name(mo.add(i, j));
    os << "\n";
  }
  if (gs.m() > 1) {
    os << "group " << gs.m() << "\n";
    for (int i = 0; i < gs.m(); ++i) {
      for (int j = 0; j < gs.m(); ++j)
        os << (j ? " " : "") << gs.group.mul(i, j);
      os << "\n";
    }
    os << "action\n";
    for (int al = 0; al < gs.m(); ++al) {
      for (int a = 0; a < mo.n; ++a)
        os << (a ? " " : "") << mo.name(gs.act(al, a));
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace gmon
