#include "mlat/text_format.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "mlat/error.hpp"

namespace mlat {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

struct MultEntry {
  std::size_t line;
  std::string a, b, c;
};

}  // namespace

std::vector<std::string> split_labels(std::string_view text) {
  std::string spaced(text);
  for (char& ch : spaced) {
    if (ch == ',') ch = ' ';
  }
  return tokens(spaced);
}

LatticeFile parse_lattice_file(std::string_view text) {
  enum class Section { None, Covers, Mult };
  Section section = Section::None;
  std::string name;
  std::optional<std::vector<std::string>> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<MultEntry> mult;
  bool meet_default = false;
  std::vector<std::string> s_labels;

  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (starts_with(line, "lattice ") || line == "lattice") {
      name = std::string(trim(line.substr(7)));
      section = Section::None;
    } else if (starts_with(line, "elements:")) {
      labels = tokens(line.substr(9));
      section = Section::None;
    } else if (line == "covers:") {
      section = Section::Covers;
    } else if (line == "mult:") {
      section = Section::Mult;
    } else if (starts_with(line, "mult-default:")) {
      if (trim(line.substr(13)) != "meet") fail(lineno, "only 'mult-default: meet' is supported");
      meet_default = true;
    } else if (starts_with(line, "s:")) {
      s_labels = split_labels(line.substr(2));
      section = Section::None;
    } else if (section == Section::Covers) {
      auto t = tokens(line);
      if (t.size() != 3 || t[1] != "<") fail(lineno, "expected 'a < b'");
      covers.emplace_back(t[0], t[2]);
    } else if (section == Section::Mult) {
      auto t = tokens(line);
      if (t.size() != 5 || t[1] != "*" || t[3] != "=") fail(lineno, "expected 'a * b = c'");
      mult.push_back({lineno, t[0], t[2], t[4]});
    } else {
      fail(lineno, "unexpected '" + std::string(line) + "'");
    }
  }
  if (!labels) throw Error(ErrorCode::ParseError, "missing 'elements:' line");

  LatticeFile file{build_lattice(name, *labels, covers), std::nullopt, std::move(s_labels)};
  const FiniteLattice& l = file.lattice;
  if (mult.empty() && !meet_default) return file;

  const std::size_t n = l.size();
  std::vector<int> cells(n * n, -1);
  for (const auto& e : mult) {
    Element a = 0, b = 0, c = 0;
    try {
      a = l.at(e.a);
      b = l.at(e.b);
      c = l.at(e.c);
    } catch (const Error& err) {
      fail(e.line, err.what());
    }
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      int& cell = cells[x * n + y];
      if (cell != -1 && cell != static_cast<int>(c)) fail(e.line, "conflicting product for " + e.a + " * " + e.b);
      cell = static_cast<int>(c);
    }
  }
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const int v = cells[a * n + b];
      if (v == -1 && !meet_default) {
        throw Error(ErrorCode::ParseError, "no product given for " + l.label(a) + " * " + l.label(b));
      }
      table[a * n + b] = v == -1 ? l.meet(a, b) : static_cast<Element>(v);
    }
  }
  file.table = MultTable(n, std::move(table));
  return file;
}

LatticeFile read_lattice_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_lattice_file(buffer.str());
}

MultLattice load_mult_lattice(const LatticeFile& file) {
  if (!file.table) throw Error(ErrorCode::ParseError, "file has no multiplication");
  return classify_multiplication(file.lattice, *file.table);
}

std::string write_lattice_file(const FiniteLattice& l, const std::optional<MultTable>& table,
                               const std::vector<std::string>& s_labels) {
  std::ostringstream out;
  out << "lattice " << l.name() << "\n";
  out << "elements:";
  for (const auto& label : l.labels()) out << ' ' << label;
  out << "\ncovers:\n";
  for (auto [lo, hi] : l.covers()) out << l.label(lo) << " < " << l.label(hi) << "\n";
  if (table) {
    out << "mult-default: meet\nmult:\n";
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = a; b < l.size(); ++b) {
        if (table->at(a, b) != l.meet(a, b)) {
          out << l.label(a) << " * " << l.label(b) << " = " << l.label(table->at(a, b)) << "\n";
        }
      }
    }
  }
  if (!s_labels.empty()) {
    out << "s:";
    for (const auto& s : s_labels) out << ' ' << s;
    out << "\n";
  }
  return out.str();
}

std::string write_lattice_file(const MultLattice& m, const std::vector<std::string>& s_labels) {
  return write_lattice_file(m.lattice(), m.table(), s_labels);
}

}  // namespace mlat
