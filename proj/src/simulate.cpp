#include "misoid/simulate.hpp"

#include <cmath>

#include "misoid/errors.hpp"
#include "misoid/rng.hpp"

namespace misoid {

void Dataset::validate() const {
    if (y.empty()) throw InputError("dataset: empty output");
    for (const auto& ui : u) {
        if (ui.size() != y.size()) throw InputError("dataset: length mismatch");
    }
    for (std::size_t m = 0; m < n_vars(); ++m) {
        for (double v : variable(m)) {
            if (!std::isfinite(v)) {
                throw InputError("dataset: non-finite value in " + label(m));
            }
        }
    }
}

InputKind parse_input_kind(const std::string& s) {
    if (s == "gaussian-white") return InputKind::GaussianWhite;
    if (s == "prbs") return InputKind::Prbs;
    throw InputError("unknown input kind: " + s);
}

std::vector<double> generate_input(InputKind kind, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InputError("generate_input: n must be >= 1");
    std::vector<double> x(n);
    switch (kind) {
        case InputKind::GaussianWhite: {
            rng::GaussianStream g(seed);
            for (double& v : x) v = g.next();
            break;
        }
        case InputKind::Prbs: {
            rng::PrbsStream p(seed);
            for (double& v : x) v = p.next();
            break;
        }
    }
    return x;
}

Dataset simulate_miso(const MisoSystem& sys,
                      const std::vector<std::vector<double>>& inputs,
                      std::size_t burn_in) {
    if (sys.channels.empty()) throw InputError("simulate_miso: system has no channels");
    if (inputs.size() != sys.n_inputs()) {
        throw InputError("simulate_miso: expected " + std::to_string(sys.n_inputs()) +
                         " inputs, got " + std::to_string(inputs.size()));
    }
    const std::size_t n = inputs.front().size();
    for (const auto& ui : inputs) {
        if (ui.size() != n) throw InputError("simulate_miso: input length mismatch");
    }
    if (n <= burn_in) throw InputError("simulate_miso: burn-in consumes all samples");

    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const std::vector<double> yi = filter(sys.channels[i], inputs[i]);
        for (std::size_t k = 0; k < n; ++k) y[k] += yi[k];
    }

    Dataset out;
    out.y.assign(y.begin() + static_cast<std::ptrdiff_t>(burn_in), y.end());
    out.u.resize(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        out.u[i].assign(inputs[i].begin() + static_cast<std::ptrdiff_t>(burn_in),
                        inputs[i].end());
    }
    out.labels = Dataset::default_labels(inputs.size());
    out.meta.clean = true;
    out.meta.noise_variances.assign(out.n_vars(), 0.0);
    out.validate();
    return out;
}

double sample_mean(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
    if (x.empty()) return 0.0;
    const double m = sample_mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size());
}

CorruptResult corrupt(const Dataset& clean, const NoiseSpec& spec, std::uint64_t seed) {
    if (spec.entries.size() != clean.n_vars()) {
        throw InputError("corrupt: noise spec must cover every variable (" +
                         std::to_string(clean.n_vars()) + " expected)");
    }
    CorruptResult out;
    out.noisy = clean;
    out.variances.resize(clean.n_vars());
    for (std::size_t m = 0; m < clean.n_vars(); ++m) {
        const NoiseEntry& e = spec.entries[m];
        double var = 0.0;
        if (e.kind == NoiseEntry::Kind::Variance) {
            if (e.value < 0.0) {
                throw InputError("corrupt: negative variance for " + clean.label(m));
            }
            var = e.value;
        } else {
            if (e.value <= 0.0) {
                throw InputError("corrupt: SNR must be positive for " + clean.label(m));
            }
            var = sample_variance(clean.variable(m)) / e.value;
        }
        out.variances[m] = var;
        if (var > 0.0) {
            rng::GaussianStream g(rng::substream(seed, 1000 + m));
            const double sd = std::sqrt(var);
            for (double& v : out.noisy.variable(m)) v += sd * g.next();
        }
    }
    out.noisy.meta.seed = seed;
    out.noisy.meta.clean = false;
    out.noisy.meta.noise_variances = out.variances;
    out.noisy.validate();
    return out;
}

}  // namespace misoid
