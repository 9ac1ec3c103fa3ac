#ifndef MISOID_DATASET_HPP
#define MISOID_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "misoid/transfer_function.hpp"

namespace misoid {

/// MISO plant: the output is the plain sum of the channel responses.
struct MisoSystem {
    std::vector<TransferFunction> channels;

    std::size_t n_inputs() const { return channels.size(); }
};

/// Per-variable noise level, either a fixed variance or an SNR target
/// (variance derived as sample variance of the clean signal / snr).
struct NoiseEntry {
    enum class Kind { Variance, Snr };
    Kind kind = Kind::Variance;
    double value = 0.0;

    static NoiseEntry variance(double v) { return {Kind::Variance, v}; }
    static NoiseEntry snr(double s) { return {Kind::Snr, s}; }
};

/// Entries ordered as the variables: y, u1, ..., u_nU.
struct NoiseSpec {
    std::vector<NoiseEntry> entries;
};

struct DatasetMeta {
    std::uint64_t seed = 0;
    bool clean = true;
    std::vector<double> noise_variances;  // realized, ordered y, u1, ...
};

/// Aligned multichannel time series: one output, nU inputs.
class Dataset {
public:
    std::vector<double> y;
    std::vector<std::vector<double>> u;
    std::vector<std::string> labels;  // y, u1, u2, ...
    DatasetMeta meta;

    std::size_t n() const { return y.size(); }
    std::size_t n_inputs() const { return u.size(); }
    std::size_t n_vars() const { return u.size() + 1; }

    /// Variable m in stacking order: 0 -> y, m >= 1 -> u[m-1].
    const std::vector<double>& variable(std::size_t m) const {
        return m == 0 ? y : u[m - 1];
    }
    std::vector<double>& variable(std::size_t m) { return m == 0 ? y : u[m - 1]; }

    std::string label(std::size_t m) const {
        if (m < labels.size()) return labels[m];
        return m == 0 ? "y" : "u" + std::to_string(m);
    }

    static std::vector<std::string> default_labels(std::size_t n_inputs) {
        std::vector<std::string> l{"y"};
        for (std::size_t i = 1; i <= n_inputs; ++i) l.push_back("u" + std::to_string(i));
        return l;
    }

    void validate() const;
};

}  // namespace misoid

#endif
