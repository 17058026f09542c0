#include "medlink/lexicon.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "medlink/io_util.hpp"

namespace medlink {

const ConceptEntry* Lexicon::find(const std::string& id) const {
  auto it = entries.find(id);
  return it == entries.end() ? nullptr : &it->second;
}

const std::vector<std::string>* Lexicon::synonyms_of(const std::string& id) const {
  const ConceptEntry* e = find(id);
  return e ? &e->synonyms : nullptr;
}

Lexicon load_medic(std::istream& in) {
  Lexicon lex;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() < 8) {
      throw std::runtime_error("medic line " + std::to_string(line_no) + ": expected >= 8 columns, got " +
                               std::to_string(cols.size()));
    }

    ConceptEntry entry;
    entry.preferred_name = trim(cols[0]);
    entry.id = trim(cols[1]);
    if (entry.id.empty())
      throw std::runtime_error("medic line " + std::to_string(line_no) + ": empty DiseaseID");
    if (entry.preferred_name.empty())
      throw std::runtime_error("medic line " + std::to_string(line_no) + ": empty DiseaseName");
    if (lex.entries.count(entry.id))
      throw std::runtime_error("duplicate DiseaseID " + entry.id);

    std::unordered_set<std::string> seen;
    auto add_synonym = [&](const std::string& raw) {
      std::string s = trim(raw);
      if (s.empty()) return;
      std::string key = to_lower_ascii(s);
      if (seen.insert(key).second) entry.synonyms.push_back(s);
    };
    add_synonym(entry.preferred_name);
    for (const std::string& s : split(cols[7], '|')) add_synonym(s);

    lex.entries.emplace(entry.id, std::move(entry));
  }

  for (const auto& [id, entry] : lex.entries)
    for (const std::string& s : entry.synonyms) lex.synonym_index.emplace_back(s, id);
  return lex;
}

Lexicon load_medic_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return load_medic(in);
}

void save_medic(const Lexicon& lex, std::ostream& out) {
  for (const auto& [id, entry] : lex.entries) {
    out << entry.preferred_name << '\t' << id << "\t\t\t\t\t\t";
    for (size_t i = 1; i < entry.synonyms.size(); ++i) {
      if (i > 1) out << '|';
      out << entry.synonyms[i];
    }
    out << '\n';
  }
}

}  // namespace medlink
