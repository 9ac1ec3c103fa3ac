#ifndef MISOID_SIMULATE_HPP
#define MISOID_SIMULATE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "misoid/dataset.hpp"

namespace misoid {

enum class InputKind { GaussianWhite, Prbs };

InputKind parse_input_kind(const std::string& s);

/// Deterministic excitation signal: zero-mean unit-variance Gaussian white
/// noise, or a +/-1 PRBS.
std::vector<double> generate_input(InputKind kind, std::size_t n, std::uint64_t seed);

/// Noise-free response y* = sum_i filter(G_i, u_i*); the first burn_in
/// samples of every variable are discarded.
Dataset simulate_miso(const MisoSystem& sys,
                      const std::vector<std::vector<double>>& inputs,
                      std::size_t burn_in);

struct CorruptResult {
    Dataset noisy;
    std::vector<double> variances;  // actually used, ordered y, u1, ...
};

/// z = x + e with white Gaussian errors, independent across variables and
/// time; SNR entries are converted using the clean signal's sample variance.
CorruptResult corrupt(const Dataset& clean, const NoiseSpec& spec, std::uint64_t seed);

double sample_mean(std::span<const double> x);
double sample_variance(std::span<const double> x);  // divisor n

}  // namespace misoid

#endif
