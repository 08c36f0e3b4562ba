#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gendist/corpus.hpp"

namespace gendist {

struct TokenSeq {
  std::vector<std::uint32_t> ids;
  bool framed = false;  // if true, ids[0] == BOS and ids.back() == EOS
};

// Byte-pair-encoding vocabulary over whitespace-pre-split words. Each word
// gets a trailing end-of-word marker symbol so decoding can restore spaces.
class BpeVocab {
 public:
  static constexpr std::uint32_t kPad = 0;
  static constexpr std::uint32_t kBos = 1;
  static constexpr std::uint32_t kEos = 2;
  static constexpr std::uint32_t kUnk = 3;

  // U+2581; sorts above ASCII, so frequency ties between an in-word pair and
  // a marker pair resolve to the in-word pair under smallest-pair tie-break.
  static const std::string& end_marker();

  std::size_t size() const { return id_to_token_.size(); }
  const std::vector<std::pair<std::string, std::string>>& merges() const { return merges_; }
  const std::string& token(std::uint32_t id) const { return id_to_token_.at(id); }

  // UINT32_MAX when absent
  std::uint32_t lookup(std::string_view token) const;

  friend BpeVocab learn_bpe(const Dataset& corpus, std::size_t target_vocab);
  friend BpeVocab load_bpe(const std::string& path);
  friend void save_bpe(const BpeVocab& v, const std::string& path);
  friend TokenSeq encode(const BpeVocab& v, std::string_view text, bool frame);
  friend std::string decode(const BpeVocab& v, const TokenSeq& seq);

 private:
  void add_token(const std::string& tok);

  std::vector<std::pair<std::string, std::string>> merges_;  // learned order
  std::vector<std::string> id_to_token_;                     // specials first
  std::unordered_map<std::string, std::uint32_t> token_to_id_;
  std::vector<std::string> base_tokens_;  // distinct chars + end marker
};

// Greedy highest-frequency pair merging until the vocabulary reaches
// target_vocab or no pair occurs at least twice. Frequency ties break to the
// lexicographically smallest pair. Deterministic.
BpeVocab learn_bpe(const Dataset& corpus, std::size_t target_vocab);

// Merges are applied in learned order; characters unseen at training time
// map to UNK. Total function.
TokenSeq encode(const BpeVocab& v, std::string_view text, bool frame);

// Inverse of encode on UNK-free input; special ids are dropped. Throws on
// out-of-range ids.
std::string decode(const BpeVocab& v, const TokenSeq& seq);

// Text file: JSON header line {vocab_size, specials, base_tokens}, then one
// merge per line. Reload is bit-exact.
void save_bpe(const BpeVocab& v, const std::string& path);
BpeVocab load_bpe(const std::string& path);

}  // namespace gendist
