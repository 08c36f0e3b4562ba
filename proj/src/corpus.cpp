#include "gendist/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "gendist/rng.hpp"
#include "gendist/text.hpp"
#include "json.hpp"

namespace gendist {

namespace {

using nlohmann::ordered_json;

struct RawRecord {
  std::string text;
  std::string label;
  bool has_id = false;
  std::uint64_t id = 0;
  std::size_t line_no = 0;
};

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

std::vector<RawRecord> read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const std::exception& e) {
      parse_fail(path, line_no, std::string("invalid JSON: ") + e.what());
    }
    RawRecord rec;
    rec.line_no = line_no;
    if (!j.contains("text") || !j["text"].is_string()) parse_fail(path, line_no, "missing \"text\" field");
    if (!j.contains("label") || !j["label"].is_string()) parse_fail(path, line_no, "missing \"label\" field");
    rec.text = j["text"].get<std::string>();
    rec.label = j["label"].get<std::string>();
    if (j.contains("id")) {
      if (!j["id"].is_number_unsigned()) parse_fail(path, line_no, "\"id\" must be an unsigned integer");
      rec.has_id = true;
      rec.id = j["id"].get<std::uint64_t>();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

// Minimal CSV: quoted fields with doubled quotes, header must be text,label.
std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_started = false;
  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_started = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_started = true;
        break;
      case '\r':
        break;
      case '\n':
        if (row_started || !field.empty() || !row.empty()) {
          row.push_back(std::move(field));
          field.clear();
          rows.push_back(std::move(row));
          row.clear();
          row_started = false;
        }
        break;
      default:
        field.push_back(c);
        row_started = true;
    }
  }
  if (row_started || !field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RawRecord> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  const auto rows = parse_csv(in);
  if (rows.empty()) return {};
  const auto& header = rows.front();
  if (header.size() < 2 || trim(header[0]) != "text" || trim(header[1]) != "label") {
    parse_fail(path, 1, "CSV header must be text,label");
  }
  std::vector<RawRecord> records;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() < 2) parse_fail(path, i + 1, "row has fewer than 2 fields");
    RawRecord rec;
    rec.line_no = i + 1;
    rec.text = r[0];
    rec.label = r[1];
    records.push_back(std::move(rec));
  }
  return records;
}

Dataset build_dataset(const std::string& path, std::vector<RawRecord> records,
                      const std::vector<std::string>* fixed_class_names) {
  if (records.empty()) throw std::runtime_error(path + ": no records");

  std::vector<std::string> class_names;
  if (fixed_class_names != nullptr) {
    class_names = *fixed_class_names;
  } else {
    std::set<std::string> distinct;
    for (const auto& r : records) {
      if (r.label != "unlabeled") distinct.insert(r.label);
    }
    class_names.assign(distinct.begin(), distinct.end());  // lexicographic
  }
  std::map<std::string, int> label_to_index;
  for (std::size_t i = 0; i < class_names.size(); ++i) {
    label_to_index[class_names[i]] = static_cast<int>(i);
  }

  Dataset d;
  d.class_names = class_names;
  std::unordered_set<std::uint64_t> seen_ids;
  bool any_synthetic = false;
  bool any_real = false;
  std::uint64_t next_id = 0;
  for (auto& r : records) {
    Example ex;
    ex.text = nfc(trim(r.text));
    if (ex.text.empty()) parse_fail(path, r.line_no, "empty text after whitespace trim");
    if (r.label == "unlabeled") {
      ex.label = kUnlabeled;
      ex.provenance = Provenance::synthetic;
      any_synthetic = true;
    } else {
      const auto it = label_to_index.find(r.label);
      if (it == label_to_index.end()) {
        parse_fail(path, r.line_no, "unknown class \"" + r.label + "\"");
      }
      ex.label = it->second;
      ex.provenance = Provenance::real;
      any_real = true;
    }
    ex.id = r.has_id ? r.id : next_id;
    if (!seen_ids.insert(ex.id).second) {
      parse_fail(path, r.line_no, "duplicate id " + std::to_string(ex.id));
    }
    ++next_id;
    d.examples.push_back(std::move(ex));
  }
  d.provenance = any_synthetic ? (any_real ? Provenance::mixed : Provenance::synthetic)
                               : Provenance::real;
  return d;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::real: return "real";
    case Provenance::synthetic: return "synthetic";
    default: return "mixed";
  }
}

}  // namespace

FileFormat parse_format(const std::string& name) {
  if (name == "jsonl") return FileFormat::jsonl;
  if (name == "csv") return FileFormat::csv;
  throw std::runtime_error("unknown dataset format: " + name);
}

Dataset load_dataset(const std::string& path, FileFormat format) {
  auto records = format == FileFormat::jsonl ? read_jsonl(path) : read_csv(path);
  return build_dataset(path, std::move(records), nullptr);
}

Dataset load_dataset(const std::string& path, FileFormat format,
                     const std::vector<std::string>& class_names) {
  auto records = format == FileFormat::jsonl ? read_jsonl(path) : read_csv(path);
  return build_dataset(path, std::move(records), &class_names);
}

Dataset subsample_low_resource(const Dataset& d, const SplitSpec& spec) {
  if (d.provenance != Provenance::real) {
    throw std::runtime_error("subsample_low_resource requires a real-provenance dataset");
  }
  if (spec.per_class_train < 1) throw std::runtime_error("per_class_train must be >= 1");

  const std::size_t n_classes = d.num_classes();
  std::vector<std::vector<std::size_t>> by_class(n_classes);
  for (std::size_t i = 0; i < d.examples.size(); ++i) {
    const int label = d.examples[i].label;
    if (label >= 0 && static_cast<std::size_t>(label) < n_classes) {
      by_class[static_cast<std::size_t>(label)].push_back(i);
    }
  }

  Rng rng(spec.seed);
  std::vector<std::vector<std::size_t>> chosen(n_classes);
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (by_class[c].size() < spec.per_class_train) {
      throw std::runtime_error("class \"" + d.class_names[c] + "\" has only " +
                               std::to_string(by_class[c].size()) + " examples, need " +
                               std::to_string(spec.per_class_train));
    }
    auto pool = by_class[c];
    Rng class_rng = rng.split(c);
    class_rng.shuffle(pool);
    chosen[c].assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(spec.per_class_train));
  }

  // class-interleave, then one more seeded shuffle of the output order
  std::vector<std::size_t> order;
  order.reserve(n_classes * spec.per_class_train);
  for (std::size_t k = 0; k < spec.per_class_train; ++k) {
    for (std::size_t c = 0; c < n_classes; ++c) order.push_back(chosen[c][k]);
  }
  Rng order_rng = rng.split(n_classes);
  order_rng.shuffle(order);

  Dataset out;
  out.class_names = d.class_names;
  out.provenance = Provenance::real;
  out.examples.reserve(order.size());
  for (std::size_t idx : order) out.examples.push_back(d.examples[idx]);
  return out;
}

Dataset concat(const Dataset& a, const Dataset& b) {
  Dataset out;
  if (a.class_names == b.class_names) {
    out.class_names = a.class_names;
  } else if (a.class_names.empty()) {
    out.class_names = b.class_names;
  } else if (b.class_names.empty()) {
    out.class_names = a.class_names;
  } else {
    throw std::runtime_error("concat: class_names mismatch");
  }
  out.examples.reserve(a.size() + b.size());
  out.examples.insert(out.examples.end(), a.examples.begin(), a.examples.end());
  out.examples.insert(out.examples.end(), b.examples.begin(), b.examples.end());

  std::unordered_set<std::uint64_t> ids;
  bool any_real = false;
  bool any_synth = false;
  for (const auto& ex : out.examples) {
    if (!ids.insert(ex.id).second) {
      throw std::runtime_error("concat: duplicate example id " + std::to_string(ex.id));
    }
    (ex.provenance == Provenance::synthetic ? any_synth : any_real) = true;
  }
  out.provenance = any_synth ? (any_real ? Provenance::mixed : Provenance::synthetic)
                             : Provenance::real;
  return out;
}

std::pair<Dataset, Dataset> split_train_test(const Dataset& d, double test_fraction,
                                             std::uint64_t seed) {
  if (test_fraction <= 0.0 || test_fraction >= 1.0) {
    throw std::runtime_error("test_fraction must be in (0, 1)");
  }
  std::vector<std::vector<std::size_t>> by_class(d.num_classes());
  for (std::size_t i = 0; i < d.examples.size(); ++i) {
    const int label = d.examples[i].label;
    if (label >= 0) by_class[static_cast<std::size_t>(label)].push_back(i);
  }
  Rng rng(seed);
  std::vector<bool> is_test(d.examples.size(), false);
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    auto pool = by_class[c];
    Rng class_rng = rng.split(c);
    class_rng.shuffle(pool);
    const auto n_test = static_cast<std::size_t>(
        static_cast<double>(pool.size()) * test_fraction);
    for (std::size_t k = 0; k < n_test; ++k) is_test[pool[k]] = true;
  }
  Dataset train;
  Dataset test;
  train.class_names = test.class_names = d.class_names;
  train.provenance = test.provenance = d.provenance;
  for (std::size_t i = 0; i < d.examples.size(); ++i) {
    (is_test[i] ? test : train).examples.push_back(d.examples[i]);
  }
  return {train, test};
}

void write_jsonl(const Dataset& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& ex : d.examples) {
    ordered_json j;
    j["text"] = ex.text;
    j["label"] = ex.label == kUnlabeled ? "unlabeled"
                                        : d.class_names.at(static_cast<std::size_t>(ex.label));
    j["id"] = ex.id;
    out << j.dump() << '\n';
  }
}

void write_split_manifest(const Dataset& train, const Dataset& test, const std::string& path) {
  ordered_json j;
  auto ids = [](const Dataset& d) {
    std::vector<std::uint64_t> out;
    out.reserve(d.size());
    for (const auto& ex : d.examples) out.push_back(ex.id);
    return out;
  };
  j["train_ids"] = ids(train);
  j["test_ids"] = ids(test);
  j["classes"] = train.class_names;
  j["train_provenance"] = provenance_name(train.provenance);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace gendist
