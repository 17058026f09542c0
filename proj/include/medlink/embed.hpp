#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace medlink {

// Lowercases, splits on whitespace, strips leading/trailing punctuation per
// token (internal hyphens survive), drops empty tokens.
std::vector<std::string> tokenize(std::string_view text);

struct EmbeddingTable {
  size_t dim = 0;
  std::unordered_map<std::string, std::vector<float>> vectors;
  size_t duplicate_count = 0;  // duplicate tokens dropped on load (first kept)
};

// Plain-text word-vector format: header "vocab_size dim", then one
// "token v1 ... vdim" line per word. Values are parsed as 32-bit floats.
EmbeddingTable load_word_vectors(std::istream& in);
EmbeddingTable load_word_vectors_file(const std::string& path);

struct SubwordTable {
  size_t dim = 0;
  size_t bucket_count = 0;
  int min_n = 3;
  int max_n = 6;
  std::unordered_map<std::string, std::vector<float>> word_vectors;
  std::vector<float> bucket_vectors;  // bucket_count * dim, row-major
};

uint32_t fnv1a32(std::string_view bytes);

// All substrings of "<token>" with min_n <= length <= max_n, in
// (start, length) order.
std::vector<std::string> char_ngrams(const std::string& token, int min_n, int max_n);

// Binary sidecar: magic "SUBW", version u32, dim u32, bucket_count u32,
// min_n u8, max_n u8, u32 word count, per word a length-prefixed UTF-8
// string + dim little-endian f32s, then bucket_count*dim f32s.
SubwordTable load_subword(std::istream& in);
SubwordTable load_subword_file(const std::string& path);
void save_subword(const SubwordTable& table, std::ostream& out);

// Which representation feeds the system: the flat word table, or the subword
// table with hashed n-gram fallback for out-of-vocabulary tokens.
struct EmbedTables {
  const EmbeddingTable* words = nullptr;
  const SubwordTable* subword = nullptr;
  bool use_subword = false;

  size_t dim() const;
};

struct Phrase {
  std::string raw;
  std::vector<std::string> tokens;
};
Phrase make_phrase(std::string_view raw);

std::vector<double> embed_token(const EmbedTables& tables, const std::string& token);

// Sum of token embeddings; the zero vector for an empty phrase.
std::vector<double> embed_phrase(const EmbedTables& tables, const Phrase& phrase);

}  // namespace medlink
