#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gendist {

enum class Provenance { real, synthetic, mixed };

// Label value for synthetic examples that have no gold class.
inline constexpr int kUnlabeled = -1;

struct Example {
  std::string text;
  int label = kUnlabeled;  // class index in [0, C) or kUnlabeled
  std::uint64_t id = 0;
  Provenance provenance = Provenance::real;
};

struct Dataset {
  std::vector<Example> examples;
  std::vector<std::string> class_names;  // sorted lexicographically at load
  Provenance provenance = Provenance::real;

  std::size_t num_classes() const { return class_names.size(); }
  std::size_t size() const { return examples.size(); }
};

// A text whose training target is a full class distribution.
struct SoftLabeledExample {
  std::string text;
  std::vector<double> probs;  // sums to 1, entries >= 0
  std::uint64_t id = 0;
  Provenance provenance = Provenance::real;
};

struct SplitSpec {
  std::size_t per_class_train = 100;
  double test_fraction = 0.0;  // used only when no explicit test file exists
  std::uint64_t seed = 0;
};

enum class FileFormat { jsonl, csv };

FileFormat parse_format(const std::string& name);

// Loads a labeled dataset. Class indices are assigned by lexicographic sort
// of the distinct label strings; the literal label "unlabeled" maps to
// kUnlabeled. Text is NFC-normalized and must be non-empty after trimming.
Dataset load_dataset(const std::string& path, FileFormat format);

// Same, but against a fixed label space (for test files); an unknown class
// name is an error.
Dataset load_dataset(const std::string& path, FileFormat format,
                     const std::vector<std::string>& class_names);

// Exactly spec.per_class_train examples per class, chosen by seeded shuffle
// within each class, emitted class-interleaved and then shuffled once more.
Dataset subsample_low_resource(const Dataset& d, const SplitSpec& spec);

// Examples of a followed by b; per-example provenance is preserved.
Dataset concat(const Dataset& a, const Dataset& b);

// Stratified seeded split used when no explicit test file is provided.
std::pair<Dataset, Dataset> split_train_test(const Dataset& d, double test_fraction,
                                             std::uint64_t seed);

void write_jsonl(const Dataset& d, const std::string& path);

void write_split_manifest(const Dataset& train, const Dataset& test, const std::string& path);

}  // namespace gendist
