#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vgph/closed_form.hpp"
#include "vgph/sample.hpp"

namespace vgph {

struct CorpusMeta {
    std::string label;
    bool has_targets = false;
};

/// An ordered collection of sample points plus optional split indices.
/// Sample order is always file order; nothing reorders silently.
struct Corpus {
    std::vector<SamplePoint> samples;
    CorpusMeta meta;
    std::vector<uint64_t> train_indices;
    std::vector<uint64_t> validation_indices;
    std::vector<uint64_t> test_indices;

    size_t size() const { return samples.size(); }
    bool has_targets() const;
};

enum class CorpusFormat { text, binary };

struct ReadOptions {
    bool drop_invalid = false;  // default: reject on the first bad sample
};

struct ReadReport {
    uint64_t dropped = 0;
};

/// Text: header row naming A11..A33[,P11..P33], one decimal row per sample.
/// Binary: magic "VGTH0001", u64-LE count, u8 flag (0 = gradients only,
/// 1 = gradients + Hessian), then 9 or 18 f64-LE per record.
Corpus read_corpus(const std::string& path, CorpusFormat format,
                   const ReadOptions& opts = {}, ReadReport* report = nullptr);
void write_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format);

/// Sniffs the binary magic, falls back to text.
CorpusFormat detect_format(const std::string& path);

enum class TargetModel { none, closed_form, rfdm };

struct SynthesisConfig {
    uint64_t count = 0;
    uint64_t seed = 0;
    TargetModel targets = TargetModel::none;
    double tau_k = 1.0;                          // rfdm targets
    const ClosedFormConstants* constants = nullptr;  // closed-form targets; null = shipped set
};

/// Gaussian velocity-gradient samples with the trace projected out
/// (incompressibility), optionally with targets generated by a chosen model
/// so that training has an exactly-known oracle. Entry second moments:
/// variance 2/3 on the diagonal, 1 off it.
Corpus synthesize_isotropic(const SynthesisConfig& cfg);

/// Seeded disjoint covering split; test indices take the remainder.
/// Counts are floor(fraction * n), leftovers from rounding go to train.
void split_corpus(Corpus& corpus, double train_fraction, double validation_fraction,
                  uint64_t seed);

}  // namespace vgph
