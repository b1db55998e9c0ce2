#include "vgph/dataset.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include "vgph/rfdm.hpp"
#include "vgph/rng.hpp"

namespace vgph {

namespace {

constexpr char kMagic[8] = {'V', 'G', 'T', 'H', '0', '0', '0', '1'};
constexpr const char* kHeaderA =
    "A11,A12,A13,A21,A22,A23,A31,A32,A33";
constexpr const char* kHeaderAP =
    "A11,A12,A13,A21,A22,A23,A31,A32,A33,"
    "P11,P12,P13,P21,P22,P23,P31,P32,P33";

void put_u64_le(std::string& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64_le(std::string& out, double d) {
    put_u64_le(out, std::bit_cast<uint64_t>(d));
}

uint64_t get_u64_le(const unsigned char* p) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

double get_f64_le(const unsigned char* p) {
    return std::bit_cast<double>(get_u64_le(p));
}

// SamplePoint invariants: finite A; if P is present, finite and symmetric
// to 1e-8 relative.
bool sample_valid(const SamplePoint& s) {
    if (!is_finite(s.a)) return false;
    if (s.p) {
        if (!is_finite(*s.p)) return false;
        const double fro = frobenius_norm(*s.p);
        if (frobenius_norm(*s.p - transpose(*s.p)) > 1e-8 * std::max(fro, 1e-300))
            return false;
    }
    return true;
}

void append_formatted(std::string& line, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    line += buf;
}

Corpus read_text(const std::string& path, const ReadOptions& opts, ReadReport* report) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file: " + path);
    std::string header;
    if (!std::getline(in, header))
        throw SchemaError("corpus file is empty (missing header row): " + path);
    if (!header.empty() && header.back() == '\r') header.pop_back();

    bool with_targets;
    if (header == kHeaderA)
        with_targets = false;
    else if (header == kHeaderAP)
        with_targets = true;
    else
        throw SchemaError("unrecognized corpus header row in " + path);

    Corpus corpus;
    corpus.meta.label = path;
    corpus.meta.has_targets = with_targets;
    const size_t ncols = with_targets ? 18 : 9;

    std::string line;
    uint64_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<double, 18> vals{};
        const char* p = line.c_str();
        for (size_t k = 0; k < ncols; ++k) {
            char* end = nullptr;
            vals[k] = std::strtod(p, &end);
            if (end == p)
                throw SchemaError("corpus row " + std::to_string(row) +
                                  ": expected a number in column " + std::to_string(k + 1));
            p = end;
            if (k + 1 < ncols) {
                while (*p == ' ') ++p;
                if (*p != ',')
                    throw SchemaError("corpus row " + std::to_string(row) +
                                      ": expected ',' after column " + std::to_string(k + 1));
                ++p;
            }
        }
        SamplePoint s;
        std::copy_n(vals.begin(), 9, s.a.m.begin());
        if (with_targets) {
            Tensor3 t;
            std::copy_n(vals.begin() + 9, 9, t.m.begin());
            s.p = t;
        }
        if (!sample_valid(s)) {
            if (opts.drop_invalid) {
                if (report) ++report->dropped;
                continue;
            }
            throw NumericError("corpus row " + std::to_string(row) +
                               ": non-finite entries or asymmetric Hessian (use drop-invalid to skip)");
        }
        corpus.samples.push_back(s);
    }
    return corpus;
}

Corpus read_binary(const std::string& path, const ReadOptions& opts, ReadReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (data.size() < 17) throw SchemaError("corpus file truncated (no header): " + path);
    if (std::memcmp(data.data(), kMagic, 8) != 0)
        throw SchemaError("corpus magic mismatch (expected VGTH0001): " + path);
    const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
    const uint64_t count = get_u64_le(bytes + 8);
    const unsigned char flag = bytes[16];
    if (flag != 0 && flag != 1)
        throw SchemaError("corpus header flag must be 0 or 1: " + path);
    const size_t ndoubles = flag ? 18 : 9;
    const size_t need = 17 + count * ndoubles * 8;
    if (data.size() < need)
        throw SchemaError("corpus file truncated: expected " + std::to_string(need) +
                          " bytes, found " + std::to_string(data.size()));

    Corpus corpus;
    corpus.meta.label = path;
    corpus.meta.has_targets = flag != 0;
    corpus.samples.reserve(count);
    const unsigned char* p = bytes + 17;
    for (uint64_t rec = 0; rec < count; ++rec) {
        SamplePoint s;
        for (int k = 0; k < 9; ++k) s.a.m[static_cast<size_t>(k)] = get_f64_le(p + 8 * k);
        if (flag) {
            Tensor3 t;
            for (int k = 0; k < 9; ++k) t.m[static_cast<size_t>(k)] = get_f64_le(p + 8 * (9 + k));
            s.p = t;
        }
        p += ndoubles * 8;
        if (!sample_valid(s)) {
            if (opts.drop_invalid) {
                if (report) ++report->dropped;
                continue;
            }
            throw NumericError("corpus record " + std::to_string(rec) +
                               ": non-finite entries or asymmetric Hessian (use drop-invalid to skip)");
        }
        corpus.samples.push_back(s);
    }
    return corpus;
}

}  // namespace

bool Corpus::has_targets() const {
    if (samples.empty()) return meta.has_targets;
    for (const SamplePoint& s : samples)
        if (!s.p) return false;
    return true;
}

Corpus read_corpus(const std::string& path, CorpusFormat format,
                   const ReadOptions& opts, ReadReport* report) {
    return format == CorpusFormat::text ? read_text(path, opts, report)
                                        : read_binary(path, opts, report);
}

void write_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format) {
    const bool with_targets = corpus.has_targets() && !corpus.samples.empty()
                                  ? true
                                  : corpus.meta.has_targets;
    for (const SamplePoint& s : corpus.samples)
        if (with_targets && !s.p)
            throw SchemaError("write_corpus: corpus mixes samples with and without targets");

    if (format == CorpusFormat::text) {
        std::ofstream out(path);
        if (!out) throw IoError("cannot open corpus file for writing: " + path);
        out << (with_targets ? kHeaderAP : kHeaderA) << "\n";
        std::string line;
        for (const SamplePoint& s : corpus.samples) {
            line.clear();
            for (int k = 0; k < 9; ++k) {
                if (k) line += ',';
                append_formatted(line, s.a.m[static_cast<size_t>(k)]);
            }
            if (with_targets)
                for (int k = 0; k < 9; ++k) {
                    line += ',';
                    append_formatted(line, s.p->m[static_cast<size_t>(k)]);
                }
            out << line << "\n";
        }
        if (!out) throw IoError("short write to corpus file: " + path);
        return;
    }

    std::string blob;
    blob.reserve(17 + corpus.samples.size() * (with_targets ? 18 : 9) * 8);
    blob.append(kMagic, 8);
    put_u64_le(blob, corpus.samples.size());
    blob.push_back(with_targets ? '\x01' : '\x00');
    for (const SamplePoint& s : corpus.samples) {
        for (double v : s.a.m) put_f64_le(blob, v);
        if (with_targets)
            for (double v : s.p->m) put_f64_le(blob, v);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open corpus file for writing: " + path);
    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    if (!out) throw IoError("short write to corpus file: " + path);
}

CorpusFormat detect_format(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    char head[8] = {};
    in.read(head, 8);
    if (in.gcount() == 8 && std::memcmp(head, kMagic, 8) == 0)
        return CorpusFormat::binary;
    return CorpusFormat::text;
}

Corpus synthesize_isotropic(const SynthesisConfig& cfg) {
    if (cfg.count < 1)
        throw std::invalid_argument("synthesize_isotropic: count must be >= 1");
    Rng rng(cfg.seed);

    Corpus corpus;
    corpus.meta.label = "synthetic-isotropic";
    corpus.samples.resize(cfg.count);
    for (SamplePoint& s : corpus.samples) {
        for (double& x : s.a.m) x = rng.normal();
        s.a = with_trace(s.a, 0.0);
    }

    if (cfg.targets == TargetModel::none) return corpus;

    // targets need the whole-sample scale first
    const NondimScale scale = compute_scale(corpus.samples);
    corpus.meta.has_targets = true;
    if (cfg.targets == TargetModel::closed_form) {
        const ClosedFormConstants& k = cfg.constants ? *cfg.constants : ship_defaults();
        for (SamplePoint& s : corpus.samples)
            s.p = predict_pressure_hessian(s.a, scale, k);
    } else {
        const RfdConfig rfd{cfg.tau_k, /*trace_correct=*/false};
        const double e2 = scale.epsilon * scale.epsilon;
        for (SamplePoint& s : corpus.samples)
            s.p = rfd_pressure_hessian(s.a * (1.0 / scale.epsilon), rfd) * e2;
    }
    return corpus;
}

void split_corpus(Corpus& corpus, double train_fraction, double validation_fraction,
                  uint64_t seed) {
    if (!(train_fraction > 0) || !(validation_fraction > 0) ||
        train_fraction + validation_fraction > 1.0 + 1e-12)
        throw std::invalid_argument(
            "split_corpus: fractions must be positive with sum <= 1");
    const size_t n = corpus.samples.size();
    std::vector<uint64_t> perm(n);
    std::iota(perm.begin(), perm.end(), uint64_t{0});
    Rng rng(seed);
    rng.shuffle(perm);

    size_t n_train = static_cast<size_t>(train_fraction * static_cast<double>(n));
    const size_t n_val = static_cast<size_t>(validation_fraction * static_cast<double>(n));
    // rounding leftover goes to train when the fractions cover everything
    if (train_fraction + validation_fraction > 1.0 - 1e-12)
        n_train = n - n_val;

    corpus.train_indices.assign(perm.begin(), perm.begin() + static_cast<ptrdiff_t>(n_train));
    corpus.validation_indices.assign(perm.begin() + static_cast<ptrdiff_t>(n_train),
                                     perm.begin() + static_cast<ptrdiff_t>(n_train + n_val));
    corpus.test_indices.assign(perm.begin() + static_cast<ptrdiff_t>(n_train + n_val), perm.end());
}

}  // namespace vgph
