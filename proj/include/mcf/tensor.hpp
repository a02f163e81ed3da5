#ifndef MCF_TENSOR_HPP_
#define MCF_TENSOR_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mcf/errors.hpp"

namespace mcf {

// K-channel real 2-D array, channel-major, row-major within each channel.
struct MultiChannelImage {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> data;  // size == channels*height*width

    MultiChannelImage() = default;
    MultiChannelImage(int k, int h, int w)
        : channels(k), height(h), width(w),
          data(static_cast<size_t>(k) * h * w, 0.0) {
        if (k < 1 || h < 1 || w < 1)
            throw ConfigError("tensor dims must be >= 1");
    }

    size_t size() const { return data.size(); }
    size_t plane_size() const { return static_cast<size_t>(height) * width; }

    double& at(int k, int r, int c) {
        return data[(static_cast<size_t>(k) * height + r) * width + c];
    }
    double at(int k, int r, int c) const {
        return data[(static_cast<size_t>(k) * height + r) * width + c];
    }

    bool same_dims(const MultiChannelImage& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }

    bool all_finite() const;
    void require_finite(const char* what) const;  // throws NumericError
};

using CellCoord = std::pair<int, int>;  // (row, col)

// One labeled sample; invariants checked on construction.
struct TrainingSample {
    MultiChannelImage features;
    int label = 1;                     // exactly -1 or +1
    double target_response = 1.0;      // q_i, finite and > 0
    std::optional<CellCoord> object_center;  // absent for negatives

    TrainingSample() = default;
    TrainingSample(MultiChannelImage f, int y, double q,
                   std::optional<CellCoord> center);
};

struct DatasetManifest {
    int channels = 0;
    int height = 0;
    int width = 0;
    uint64_t seed = 0;
    std::vector<TrainingSample> samples;  // order defines sample index i

    void require_uniform_dims() const;  // throws ConfigError on mismatch
};

struct SynthConfig {
    int channels = 1;
    int height = 16;
    int width = 16;
    int n_pos = 10;
    int n_neg = 10;
    uint64_t template_seed = 1;
    double noise_sigma = 0.1;
    int shift_range = 0;           // circular shifts drawn from [-r, r] per axis
    double outlier_fraction = 0.0; // in [0, 1)
    uint64_t seed = 0;
    double q_positive = 1.0;
    double q_negative = 1.0;
};

// Planted-template synthetic dataset; pure function of cfg.
DatasetManifest generate_planted_dataset(const SynthConfig& cfg);

// The fixed template the generator plants (shift 0, no noise).
MultiChannelImage planted_template(const SynthConfig& cfg);

}  // namespace mcf

#endif  // MCF_TENSOR_HPP_
