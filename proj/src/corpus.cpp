#include "medlink/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "medlink/io_util.hpp"

namespace medlink {

const char* to_string(NerTag tag) {
  switch (tag) {
    case NerTag::SpecificDisease: return "SpecificDisease";
    case NerTag::DiseaseClass: return "DiseaseClass";
    case NerTag::Modifier: return "Modifier";
    case NerTag::CompositeMention: return "CompositeMention";
  }
  return "?";
}

std::optional<NerTag> ner_tag_from(const std::string& s) {
  if (s == "SpecificDisease") return NerTag::SpecificDisease;
  if (s == "DiseaseClass") return NerTag::DiseaseClass;
  if (s == "Modifier") return NerTag::Modifier;
  if (s == "CompositeMention") return NerTag::CompositeMention;
  return std::nullopt;
}

std::string Document::full_text() const { return title + " " + abstract_text; }

size_t Corpus::mention_count() const {
  size_t n = 0;
  for (const Document& d : documents) n += d.mentions.size();
  return n;
}

namespace {

std::vector<std::string> split_concept_field(const std::string& field) {
  std::vector<std::string> ids;
  std::string cur;
  for (char c : field) {
    if (c == '|' || c == '+') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) ids.push_back(cur);
  return ids;
}

void finish_document(Document& doc, Corpus& corpus, bool& open) {
  if (!open) return;
  std::stable_sort(doc.mentions.begin(), doc.mentions.end(),
                   [](const Mention& a, const Mention& b) { return a.start < b.start; });
  corpus.documents.push_back(std::move(doc));
  doc = Document{};
  open = false;
}

}  // namespace

Corpus load_pubtator(std::istream& in, const std::string& split_name) {
  Corpus corpus;
  corpus.split_name = split_name;

  Document doc;
  bool open = false;
  std::string line;
  size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_document(doc, corpus, open);
      continue;
    }

    auto ctx = [&] { return " (line " + std::to_string(line_no) + ")"; };

    // Title / abstract lines: PMID|t|... and PMID|a|...
    size_t p1 = line.find('|');
    size_t p2 = p1 == std::string::npos ? std::string::npos : line.find('|', p1 + 1);
    if (p2 != std::string::npos && p2 == p1 + 2 &&
        (line[p1 + 1] == 't' || line[p1 + 1] == 'a') && line.find('\t') == std::string::npos) {
      std::string pmid = line.substr(0, p1);
      char kind = line[p1 + 1];
      std::string body = line.substr(p2 + 1);
      if (!open) {
        doc.pmid = pmid;
        open = true;
      } else if (doc.pmid != pmid) {
        throw std::runtime_error("pmid changed mid-document from " + doc.pmid + " to " + pmid + ctx());
      }
      if (kind == 't') {
        doc.title = body;
      } else {
        doc.abstract_text = body;
      }
      continue;
    }

    // Mention line.
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() < 6)
      throw std::runtime_error("mention line has " + std::to_string(cols.size()) + " columns" + ctx());
    if (!open || doc.title.empty())
      throw std::runtime_error("mention before title line for pmid " + cols[0] + ctx());
    if (cols[0] != doc.pmid)
      throw std::runtime_error("mention pmid " + cols[0] + " does not match document " + doc.pmid + ctx());

    Mention m;
    try {
      m.start = std::stoul(cols[1]);
      m.end = std::stoul(cols[2]);
    } catch (const std::exception&) {
      throw std::runtime_error("bad mention offsets in pmid " + doc.pmid + ctx());
    }
    m.text = cols[3];
    auto tag = ner_tag_from(cols[4]);
    if (!tag)
      throw std::runtime_error("unknown mention type '" + cols[4] + "' in pmid " + doc.pmid + ctx());
    m.ner_tag = *tag;
    m.concept_field = cols[5];
    m.gold_ids = split_concept_field(m.concept_field);
    if (m.gold_ids.empty())
      throw std::runtime_error("empty concept field in pmid " + doc.pmid + ctx());
    m.expanded_text = cols.size() >= 7 ? cols[6] : m.text;

    doc.mentions.push_back(std::move(m));
    continue;
  }
  finish_document(doc, corpus, open);

  // Offset verification against title + " " + abstract.
  for (const Document& d : corpus.documents) {
    if (d.title.empty()) throw std::runtime_error("pmid " + d.pmid + ": missing title line");
    if (d.abstract_text.empty()) throw std::runtime_error("pmid " + d.pmid + ": missing abstract line");
    std::string text = d.full_text();
    for (const Mention& m : d.mentions) {
      if (m.start >= m.end || m.end > text.size())
        throw std::runtime_error("pmid " + d.pmid + ": mention offsets " + std::to_string(m.start) + "-" +
                                 std::to_string(m.end) + " out of bounds");
      if (text.compare(m.start, m.end - m.start, m.text) != 0)
        throw std::runtime_error("pmid " + d.pmid + ": mention text mismatch at " + std::to_string(m.start) +
                                 "-" + std::to_string(m.end) + " ('" + m.text + "')");
    }
  }

  for (size_t i = 0; i < corpus.documents.size(); ++i)
    for (size_t j = i + 1; j < corpus.documents.size(); ++j)
      if (corpus.documents[i].pmid == corpus.documents[j].pmid)
        throw std::runtime_error("duplicate pmid " + corpus.documents[i].pmid + " in split");

  return corpus;
}

Corpus load_pubtator_file(const std::string& path, const std::string& split_name) {
  std::istringstream in(read_text_file(path));
  return load_pubtator(in, split_name);
}

void save_pubtator(const Corpus& corpus, std::ostream& out) {
  for (const Document& d : corpus.documents) {
    out << d.pmid << "|t|" << d.title << '\n';
    out << d.pmid << "|a|" << d.abstract_text << '\n';
    for (const Mention& m : d.mentions) {
      out << d.pmid << '\t' << m.start << '\t' << m.end << '\t' << m.text << '\t' << to_string(m.ner_tag)
          << '\t' << m.concept_field;
      if (m.expanded_text != m.text) out << '\t' << m.expanded_text;
      out << '\n';
    }
    out << '\n';
  }
}

namespace {

bool is_abbreviation_text(const std::string& s) {
  if (s.size() < 2) return false;
  for (char c : s)
    if (c < 'A' || c > 'Z') return false;
  return true;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

// Whole-token replacement of `abbr` inside `text`.
std::string replace_token(const std::string& text, const std::string& abbr, const std::string& repl) {
  std::string out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t hit = text.find(abbr, pos);
    if (hit == std::string::npos) {
      out.append(text, pos, std::string::npos);
      break;
    }
    bool left_ok = hit == 0 || !is_word_char(text[hit - 1]);
    size_t after = hit + abbr.size();
    bool right_ok = after >= text.size() || !is_word_char(text[after]);
    out.append(text, pos, hit - pos);
    if (left_ok && right_ok) {
      out.append(repl);
    } else {
      out.append(abbr);
    }
    pos = after;
  }
  return out;
}

}  // namespace

Document expand_abbreviations(const Document& doc) {
  Document out = doc;  // mentions already sorted by start
  for (size_t i = 0; i < out.mentions.size(); ++i) {
    const std::string abbr = out.mentions[i].expanded_text;
    if (!is_abbreviation_text(abbr)) continue;
    // Preceding mention = greatest start strictly below this one.
    size_t j = i;
    while (j > 0 && out.mentions[j - 1].start == out.mentions[i].start) --j;
    if (j == 0) continue;  // no preceding mention: left unchanged
    const std::string& replacement = out.mentions[j - 1].expanded_text;
    if (replacement == abbr) continue;
    for (Mention& m : out.mentions) m.expanded_text = replace_token(m.expanded_text, abbr, replacement);
  }
  return out;
}

Corpus expand_abbreviations(const Corpus& corpus) {
  Corpus out;
  out.split_name = corpus.split_name;
  out.documents.reserve(corpus.documents.size());
  for (const Document& d : corpus.documents) out.documents.push_back(expand_abbreviations(d));
  return out;
}

std::optional<std::string> normalize_gold_id(const std::string& raw, const Lexicon& lex) {
  std::string id = trim(raw);
  if (id.empty()) return std::nullopt;
  if (lex.find(id)) return id;
  std::string mesh = "MESH:" + id;
  if (lex.find(mesh)) return mesh;
  std::string omim = "OMIM:" + id;
  if (lex.find(omim)) return omim;
  return std::nullopt;
}

}  // namespace medlink
