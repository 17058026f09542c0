#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "medlink/lexicon.hpp"

namespace medlink {

enum class NerTag { SpecificDisease, DiseaseClass, Modifier, CompositeMention };
const char* to_string(NerTag tag);
std::optional<NerTag> ner_tag_from(const std::string& s);

struct Mention {
  size_t start = 0;  // offsets into title + " " + abstract
  size_t end = 0;
  std::string text;           // document slice [start, end)
  std::string expanded_text;  // abbreviation-expanded form used downstream
  NerTag ner_tag = NerTag::SpecificDisease;
  std::string concept_field;          // raw annotation, e.g. "D003110+D016399"
  std::vector<std::string> gold_ids;  // concept_field split on '|' and '+'
};

struct Document {
  std::string pmid;
  std::string title;
  std::string abstract_text;
  std::vector<Mention> mentions;  // sorted by start offset

  std::string full_text() const;  // title + " " + abstract
};

struct Corpus {
  std::vector<Document> documents;
  std::string split_name;

  size_t mention_count() const;
};

// PubTator layout: "PMID|t|Title", "PMID|a|Abstract", then one tab-separated
// line per mention (PMID, start, end, text, type, conceptID and, optionally,
// an expanded-text column written by `prepare`), blank line between documents.
Corpus load_pubtator(std::istream& in, const std::string& split_name = "");
Corpus load_pubtator_file(const std::string& path, const std::string& split_name = "");
void save_pubtator(const Corpus& corpus, std::ostream& out);

// Rewrites mention texts document-wide: a mention whose text is entirely
// uppercase letters (length >= 2) is an abbreviation; every whole-token
// occurrence of it in any mention text is replaced by the text of the mention
// immediately preceding the abbreviation. Offsets and raw texts are kept.
Document expand_abbreviations(const Document& doc);
Corpus expand_abbreviations(const Corpus& corpus);

// Resolves a corpus concept fragment against lexicon ids: verbatim, then
// "MESH:" + raw, then "OMIM:" + raw. nullopt when nothing matches.
std::optional<std::string> normalize_gold_id(const std::string& raw, const Lexicon& lex);

}  // namespace medlink
