#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace medlink {

// One reference-ontology concept. synonyms[0] is always the preferred name;
// alternates follow, deduplicated case-insensitively with first-seen casing.
struct ConceptEntry {
  std::string id;
  std::string preferred_name;
  std::vector<std::string> synonyms;
};

struct Lexicon {
  std::map<std::string, ConceptEntry> entries;  // keyed and iterated by id
  std::vector<std::pair<std::string, std::string>> synonym_index;  // (synonym, owning id)

  const ConceptEntry* find(const std::string& id) const;

  // Distinguishes "unknown id" (nullptr) from an entry with few synonyms.
  const std::vector<std::string>* synonyms_of(const std::string& id) const;

  size_t size() const { return entries.size(); }
};

// MEDIC tab-separated export. Columns: DiseaseName, DiseaseID, AltDiseaseIDs,
// Definition, ParentIDs, TreeNumbers, ParentTreeNumbers, Synonyms
// (pipe-delimited). Lines starting with '#' are comments.
Lexicon load_medic(std::istream& in);
Lexicon load_medic_file(const std::string& path);  // ".gz" accepted

// Writes the parsed entries back out in the same column layout.
void save_medic(const Lexicon& lex, std::ostream& out);

}  // namespace medlink
