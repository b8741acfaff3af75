#include "corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cibound {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<std::string> split_forms(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(';', start);
    std::string part = trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (part.empty()) throw Error(Errc::InvalidInput, "empty form in a ';'-separated list");
    out.push_back(std::move(part));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

FormTuple CorpusEntry::tuple() const {
  const Field f = parse_field(field);
  std::vector<HomogeneousForm> parsed;
  for (const auto& text : forms) parsed.push_back(parse_form(text, n, f));
  return FormTuple(std::move(parsed));
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      const auto bar = t.find('|', start);
      if (bar == std::string::npos) throw Error(Errc::InvalidInput, "corpus line " + std::to_string(lineno) + ": expected name|field|n|forms");
      fields.push_back(trim(std::string_view(t).substr(start, bar - start)));
      start = bar + 1;
    }
    fields.push_back(trim(std::string_view(t).substr(start)));
    CorpusEntry e;
    e.name = fields[0];
    e.field = fields[1];
    try {
      e.n = std::stoi(fields[2]);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "corpus line " + std::to_string(lineno) + ": bad n '" + fields[2] + "'");
    }
    if (e.name.empty()) throw Error(Errc::InvalidInput, "corpus line " + std::to_string(lineno) + ": empty name");
    if (!names.insert(e.name).second) throw Error(Errc::InvalidInput, "corpus line " + std::to_string(lineno) + ": duplicate name " + e.name);
    e.forms = split_forms(fields[3]);
    e.tuple();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read corpus " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& corpus, std::string_view name) {
  for (const auto& e : corpus)
    if (e.name == name) return e;
  throw Error(Errc::InvalidInput, "no corpus entry named '" + std::string(name) + "'");
}

}  // namespace cibound
