#pragma once

// Named inputs, one per line: name|fieldspec|n|form[;form...]
// Blank lines and lines starting with '#' are ignored.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "forms.hpp"

namespace cibound {

struct CorpusEntry {
  std::string name;
  std::string field;
  int n = 0;
  std::vector<std::string> forms;

  // Parses the forms; InvalidInput/SyntaxError/InhomogeneousError on bad text.
  FormTuple tuple() const;
};

std::vector<std::string> split_forms(std::string_view text);

std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
const CorpusEntry& find_entry(const std::vector<CorpusEntry>& corpus, std::string_view name);

}  // namespace cibound
