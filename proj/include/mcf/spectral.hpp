#ifndef MCF_SPECTRAL_HPP_
#define MCF_SPECTRAL_HPP_

#include <complex>
#include <vector>

#include "mcf/tensor.hpp"

namespace mcf {

using cplx = std::complex<double>;

// Per-channel unnormalized forward DFT of a MultiChannelImage.
struct SpectrumStack {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<cplx> coeff;  // channel-major, row-major

    SpectrumStack() = default;
    SpectrumStack(int k, int h, int w)
        : channels(k), height(h), width(w),
          coeff(static_cast<size_t>(k) * h * w) {}

    cplx& at(int k, int u, int v) {
        return coeff[(static_cast<size_t>(k) * height + u) * width + v];
    }
    cplx at(int k, int u, int v) const {
        return coeff[(static_cast<size_t>(k) * height + u) * width + v];
    }
    bool same_dims(const SpectrumStack& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }
};

// Real correlation output plane with its (first row-major) argmax.
struct CorrelationPlane {
    int height = 0;
    int width = 0;
    std::vector<double> values;
    int peak_row = 0;
    int peak_col = 0;
    double peak_value = 0.0;

    CorrelationPlane() = default;
    CorrelationPlane(int h, int w, std::vector<double> v);

    double at(int r, int c) const {
        return values[static_cast<size_t>(r) * width + c];
    }
};

// 2-D DFT, unnormalized forward; idft2 applies the 1/(H*W) factor.
std::vector<cplx> dft2(const std::vector<double>& plane, int h, int w);
std::vector<cplx> idft2(const std::vector<cplx>& spec, int h, int w);

// Discards the imaginary part; throws NumericError when its magnitude
// exceeds 1e-10 * max|input| (input was not conjugate-symmetric).
std::vector<double> to_real(const std::vector<cplx>& plane, int h, int w);

SpectrumStack dft_stack(const MultiChannelImage& x);
MultiChannelImage idft_stack(const SpectrumStack& s);

// Circular cross-correlation summed over channels:
//   c = idft2( sum_k x_hat^k .* conj(f_hat^k) ),  c(0,0) == <f, x>.
CorrelationPlane cross_correlate(const MultiChannelImage& x,
                                 const MultiChannelImage& f);
CorrelationPlane cross_correlate(const SpectrumStack& xs,
                                 const SpectrumStack& fs);

// Parseval inner product (1/(H*W)) Re sum conj(f_hat) x_hat == <f, x>.
// Throws NumericError if the imaginary residual exceeds 1e-9*||f||*||x||.
double freq_inner(const SpectrumStack& x, const SpectrumStack& f);

}  // namespace mcf

#endif  // MCF_SPECTRAL_HPP_
