#include "medlink/embed.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "medlink/io_util.hpp"

namespace medlink {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      size_t b = i, e = j;
      while (b < e && std::ispunct(static_cast<unsigned char>(text[b]))) ++b;
      while (e > b && std::ispunct(static_cast<unsigned char>(text[e - 1]))) --e;
      if (e > b) {
        std::string tok(text.substr(b, e - b));
        for (char& c : tok) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        tokens.push_back(std::move(tok));
      }
    }
    i = j;
  }
  return tokens;
}

EmbeddingTable load_word_vectors(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("word vectors: empty stream");
  std::istringstream hs(header);
  long long vocab_size = -1, dim = -1;
  if (!(hs >> vocab_size >> dim) || vocab_size < 0 || dim <= 0)
    throw std::runtime_error("word vectors: bad header '" + header + "'");

  EmbeddingTable table;
  table.dim = static_cast<size_t>(dim);

  std::string line;
  size_t line_no = 1;
  long long rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++rows;

    std::istringstream ls(line);
    std::string token;
    ls >> token;
    std::vector<float> vec;
    vec.reserve(table.dim);
    float v;
    while (ls >> v) vec.push_back(v);
    if (vec.size() != table.dim)
      throw std::runtime_error("word vectors line " + std::to_string(line_no) + ": expected " +
                               std::to_string(table.dim) + " values, got " + std::to_string(vec.size()));
    auto [it, inserted] = table.vectors.emplace(std::move(token), std::move(vec));
    (void)it;
    if (!inserted) ++table.duplicate_count;
  }
  if (rows != vocab_size)
    throw std::runtime_error("word vectors: header declares " + std::to_string(vocab_size) +
                             " rows, stream has " + std::to_string(rows));
  return table;
}

EmbeddingTable load_word_vectors_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return load_word_vectors(in);
}

uint32_t fnv1a32(std::string_view bytes) {
  uint32_t h = 2166136261u;
  for (char c : bytes) {
    h ^= static_cast<uint32_t>(static_cast<unsigned char>(c));
    h *= 16777619u;
  }
  return h;
}

std::vector<std::string> char_ngrams(const std::string& token, int min_n, int max_n) {
  std::string marked = "<" + token + ">";
  std::vector<std::string> grams;
  const int len = static_cast<int>(marked.size());
  for (int start = 0; start < len; ++start)
    for (int n = min_n; n <= max_n && start + n <= len; ++n) grams.push_back(marked.substr(start, n));
  return grams;
}

SubwordTable load_subword(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string_view(magic, 4) != "SUBW")
    throw std::runtime_error("subword sidecar: bad magic");
  uint32_t version = get_u32(in);
  if (version != 1) throw std::runtime_error("subword sidecar: unsupported version " + std::to_string(version));

  SubwordTable t;
  t.dim = get_u32(in);
  t.bucket_count = get_u32(in);
  t.min_n = get_u8(in);
  t.max_n = get_u8(in);
  if (t.dim == 0 || t.bucket_count == 0 || t.min_n <= 0 || t.min_n > t.max_n)
    throw std::runtime_error("subword sidecar: invalid header parameters");

  uint32_t n_words = get_u32(in);
  t.word_vectors.reserve(n_words);
  for (uint32_t i = 0; i < n_words; ++i) {
    std::string word = get_string(in);
    std::vector<float> vec(t.dim);
    for (float& v : vec) v = get_f32(in);
    t.word_vectors.emplace(std::move(word), std::move(vec));
  }
  t.bucket_vectors.resize(t.bucket_count * t.dim);
  for (float& v : t.bucket_vectors) v = get_f32(in);
  return t;
}

SubwordTable load_subword_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return load_subword(in);
}

void save_subword(const SubwordTable& table, std::ostream& out) {
  out.write("SUBW", 4);
  put_u32(out, 1);
  put_u32(out, static_cast<uint32_t>(table.dim));
  put_u32(out, static_cast<uint32_t>(table.bucket_count));
  put_u8(out, static_cast<uint8_t>(table.min_n));
  put_u8(out, static_cast<uint8_t>(table.max_n));

  // Deterministic word order for byte-stable files.
  std::vector<const std::string*> words;
  words.reserve(table.word_vectors.size());
  for (const auto& [w, v] : table.word_vectors) words.push_back(&w);
  std::sort(words.begin(), words.end(), [](const std::string* a, const std::string* b) { return *a < *b; });

  put_u32(out, static_cast<uint32_t>(words.size()));
  for (const std::string* w : words) {
    put_string(out, *w);
    for (float v : table.word_vectors.at(*w)) put_f32(out, v);
  }
  for (float v : table.bucket_vectors) put_f32(out, v);
}

size_t EmbedTables::dim() const {
  if (use_subword && subword) return subword->dim;
  return words ? words->dim : 0;
}

Phrase make_phrase(std::string_view raw) { return Phrase{std::string(raw), tokenize(raw)}; }

std::vector<double> embed_token(const EmbedTables& tables, const std::string& token) {
  std::vector<double> out(tables.dim(), 0.0);
  if (tables.use_subword && tables.subword) {
    const SubwordTable& sw = *tables.subword;
    auto it = sw.word_vectors.find(token);
    if (it != sw.word_vectors.end()) {
      for (size_t d = 0; d < sw.dim; ++d) out[d] = it->second[d];
      return out;
    }
    for (const std::string& gram : char_ngrams(token, sw.min_n, sw.max_n)) {
      size_t bucket = fnv1a32(gram) % sw.bucket_count;
      const float* row = sw.bucket_vectors.data() + bucket * sw.dim;
      for (size_t d = 0; d < sw.dim; ++d) out[d] += row[d];
    }
    return out;
  }
  if (tables.words) {
    auto it = tables.words->vectors.find(token);
    if (it != tables.words->vectors.end())
      for (size_t d = 0; d < tables.words->dim; ++d) out[d] = it->second[d];
  }
  return out;
}

std::vector<double> embed_phrase(const EmbedTables& tables, const Phrase& phrase) {
  std::vector<double> out(tables.dim(), 0.0);
  for (const std::string& tok : phrase.tokens) {
    std::vector<double> v = embed_token(tables, tok);
    for (size_t d = 0; d < out.size(); ++d) out[d] += v[d];
  }
  return out;
}

}  // namespace medlink
