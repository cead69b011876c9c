#include "alignrepair/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "alignrepair/error.hpp"

namespace alignrepair {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    auto j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::syntax, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Ontology parse_ontology_file(std::string_view text, Side side) {
  std::vector<Statement> statements;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto number = i + 1;
    auto line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    const auto& keyword = tok[0];
    auto expect = [&](std::size_t n) {
      if (tok.size() != n + 1) {
        syntax_error(number, std::string(keyword) + " expects " + std::to_string(n) + " argument(s)");
      }
    };
    if (keyword == "CLASS") {
      expect(1);
      statements.push_back(Statement::declare(std::string(tok[1]), number));
    } else if (keyword == "SUBCLASS") {
      expect(2);
      statements.push_back(Statement::subclass(std::string(tok[1]), std::string(tok[2]), number));
    } else if (keyword == "DISJOINT") {
      expect(2);
      statements.push_back(Statement::disjoint(std::string(tok[1]), std::string(tok[2]), number));
    } else {
      syntax_error(number, "unknown statement '" + std::string(keyword) + "'");
    }
  }
  return build_ontology(side, statements);
}

std::string write_ontology_file(const Ontology& ontology) {
  std::string out;
  for (const auto& name : ontology.names()) out += "CLASS " + name + "\n";
  for (Ontology::Index i = 0; i < ontology.size(); ++i) {
    for (auto p : ontology.parents(i)) {
      out += "SUBCLASS " + ontology.name(i) + " " + ontology.name(p) + "\n";
    }
  }
  for (auto [a, b] : ontology.disjoint_pairs()) {
    out += "DISJOINT " + ontology.name(a) + " " + ontology.name(b) + "\n";
  }
  return out;
}

Alignment parse_alignment_tsv(std::string_view text) {
  std::vector<Mapping> mappings;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto number = i + 1;
    auto line = lines[i];
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos
                                                                        : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 3 || fields.size() > 4) {
      syntax_error(number, "expected source, target, relation and optional confidence");
    }
    if (fields[0].empty() || fields[1].empty()) syntax_error(number, "empty class id");
    auto relation = relation_from_symbol(fields[2]);
    if (!relation) syntax_error(number, "unknown relation '" + std::string(fields[2]) + "'");
    double confidence = 1.0;
    if (fields.size() == 4) {
      auto f = fields[3];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), confidence);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        syntax_error(number, "malformed confidence '" + std::string(f) + "'");
      }
      if (!(confidence >= 0.0 && confidence <= 1.0)) {
        throw Error(ErrorKind::invalid_confidence,
                    "line " + std::to_string(number) + ": confidence outside [0, 1]");
      }
    }
    mappings.push_back({std::string(fields[0]), std::string(fields[1]), *relation, confidence});
  }
  return Alignment(std::move(mappings));
}

std::string format_confidence(double confidence) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", confidence);
  std::string s(buf);
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

std::string write_alignment_tsv(const Alignment& alignment) {
  std::string out;
  for (const auto& m : alignment) {
    out += m.source + '\t' + m.target + '\t' + relation_symbol(m.relation) + '\t' +
           format_confidence(m.confidence) + '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::io, "failed writing '" + path.string() + "'");
}

}  // namespace alignrepair
