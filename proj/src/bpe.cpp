#include "gendist/bpe.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "gendist/text.hpp"
#include "json.hpp"

namespace gendist {

namespace {

using Pair = std::pair<std::string, std::string>;

// one left-to-right non-overlapping pass
void apply_merge(std::vector<std::string>& syms, const Pair& pair, const std::string& joined) {
  std::size_t w = 0;
  for (std::size_t r = 0; r < syms.size();) {
    if (r + 1 < syms.size() && syms[r] == pair.first && syms[r + 1] == pair.second) {
      syms[w++] = joined;
      r += 2;
    } else {
      if (w != r) syms[w] = std::move(syms[r]);
      ++w;
      ++r;
    }
  }
  syms.resize(w);
}

std::vector<std::string> word_symbols(const std::string& word) {
  std::vector<std::string> syms;
  for (char32_t cp : utf8_decode(word)) {
    std::string s;
    utf8_append(s, cp);
    if (s == BpeVocab::end_marker()) continue;  // marker glyph in raw text is not representable
    syms.push_back(std::move(s));
  }
  syms.push_back(BpeVocab::end_marker());
  return syms;
}

}  // namespace

const std::string& BpeVocab::end_marker() {
  static const std::string marker = "\xE2\x96\x81";  // U+2581
  return marker;
}

std::uint32_t BpeVocab::lookup(std::string_view token) const {
  const auto it = token_to_id_.find(std::string(token));
  return it == token_to_id_.end() ? UINT32_MAX : it->second;
}

void BpeVocab::add_token(const std::string& tok) {
  if (token_to_id_.count(tok) != 0) {
    throw std::runtime_error("bpe: duplicate token \"" + tok + "\"");
  }
  token_to_id_[tok] = static_cast<std::uint32_t>(id_to_token_.size());
  id_to_token_.push_back(tok);
}

BpeVocab learn_bpe(const Dataset& corpus, std::size_t target_vocab) {
  if (corpus.examples.empty()) throw std::runtime_error("learn_bpe: empty corpus");

  // word frequencies in first-seen order
  std::vector<std::string> words;
  std::vector<std::uint64_t> freqs;
  std::unordered_map<std::string, std::size_t> word_index;
  for (const auto& ex : corpus.examples) {
    for (auto& w : split_words(ex.text)) {
      const auto it = word_index.find(w);
      if (it == word_index.end()) {
        word_index.emplace(w, words.size());
        words.push_back(w);
        freqs.push_back(1);
      } else {
        ++freqs[it->second];
      }
    }
  }
  if (words.empty()) throw std::runtime_error("learn_bpe: corpus has no words");

  std::set<std::string> base_set;
  std::vector<std::vector<std::string>> syms(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    syms[i] = word_symbols(words[i]);
    for (const auto& s : syms[i]) base_set.insert(s);
  }
  base_set.insert(BpeVocab::end_marker());

  BpeVocab v;
  v.id_to_token_.reserve(target_vocab);
  v.add_token("<pad>");
  v.add_token("<bos>");
  v.add_token("<eos>");
  v.add_token("<unk>");
  v.base_tokens_.assign(base_set.begin(), base_set.end());
  if (target_vocab < 4 + v.base_tokens_.size()) {
    throw std::runtime_error("learn_bpe: target_vocab " + std::to_string(target_vocab) +
                             " too small, need at least " +
                             std::to_string(4 + v.base_tokens_.size()));
  }
  for (const auto& t : v.base_tokens_) v.add_token(t);

  while (v.size() < target_vocab) {
    std::map<Pair, std::uint64_t> pair_counts;
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto& s = syms[i];
      for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        pair_counts[{s[k], s[k + 1]}] += freqs[i];
      }
    }
    const Pair* best = nullptr;
    std::uint64_t best_count = 1;  // require count >= 2
    for (const auto& [pair, count] : pair_counts) {
      if (count > best_count) {  // map iterates in ascending pair order, so the
        best = &pair;            // first max is the lexicographically smallest
        best_count = count;
      }
    }
    if (best == nullptr) break;

    const std::string joined = best->first + best->second;
    v.merges_.push_back(*best);
    v.add_token(joined);
    for (auto& s : syms) apply_merge(s, *best, joined);
  }
  return v;
}

TokenSeq encode(const BpeVocab& v, std::string_view text, bool frame) {
  TokenSeq seq;
  seq.framed = frame;
  if (frame) seq.ids.push_back(BpeVocab::kBos);
  for (const auto& word : split_words(text)) {
    auto syms = word_symbols(word);
    for (std::size_t m = 0; m < v.merges_.size(); ++m) {
      if (syms.size() < 2) break;
      apply_merge(syms, v.merges_[m], v.merges_[m].first + v.merges_[m].second);
    }
    for (const auto& s : syms) {
      const std::uint32_t id = v.lookup(s);
      seq.ids.push_back(id == UINT32_MAX ? BpeVocab::kUnk : id);
    }
  }
  if (frame) seq.ids.push_back(BpeVocab::kEos);
  return seq;
}

std::string decode(const BpeVocab& v, const TokenSeq& seq) {
  std::string joined;
  for (std::uint32_t id : seq.ids) {
    if (id >= v.size()) {
      throw std::runtime_error("decode: token id " + std::to_string(id) +
                               " out of range (vocab size " + std::to_string(v.size()) + ")");
    }
    if (id == BpeVocab::kPad || id == BpeVocab::kBos || id == BpeVocab::kEos ||
        id == BpeVocab::kUnk) {
      continue;
    }
    joined += v.token(id);
  }
  // markers end words; rebuild with single spaces
  std::string out;
  const std::string& marker = BpeVocab::end_marker();
  std::size_t pos = 0;
  bool first_word = true;
  while (pos < joined.size()) {
    const std::size_t next = joined.find(marker, pos);
    const std::string word =
        next == std::string::npos ? joined.substr(pos) : joined.substr(pos, next - pos);
    if (!word.empty()) {
      if (!first_word) out.push_back(' ');
      out += word;
      first_word = false;
    }
    if (next == std::string::npos) break;
    pos = next + marker.size();
  }
  return out;
}

void save_bpe(const BpeVocab& v, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  nlohmann::ordered_json header;
  header["vocab_size"] = v.size();
  header["specials"] = {{"pad", BpeVocab::kPad},
                        {"bos", BpeVocab::kBos},
                        {"eos", BpeVocab::kEos},
                        {"unk", BpeVocab::kUnk}};
  header["base_tokens"] = v.base_tokens_;
  out << header.dump() << '\n';
  for (const auto& [a, b] : v.merges_) out << a << ' ' << b << '\n';
}

BpeVocab load_bpe(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open vocabulary file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": missing header");
  const auto header = nlohmann::ordered_json::parse(line);

  BpeVocab v;
  v.add_token("<pad>");
  v.add_token("<bos>");
  v.add_token("<eos>");
  v.add_token("<unk>");
  v.base_tokens_ = header.at("base_tokens").get<std::vector<std::string>>();
  for (const auto& t : v.base_tokens_) v.add_token(t);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t sp = line.find(' ');
    if (sp == std::string::npos) throw std::runtime_error(path + ": malformed merge line");
    Pair pair{line.substr(0, sp), line.substr(sp + 1)};
    v.add_token(pair.first + pair.second);
    v.merges_.push_back(std::move(pair));
  }
  if (v.size() != header.at("vocab_size").get<std::size_t>()) {
    throw std::runtime_error(path + ": vocab_size does not match token count");
  }
  return v;
}

}  // namespace gendist
