#ifndef MCF_TENSOR_IO_HPP_
#define MCF_TENSOR_IO_HPP_

#include <string>

#include "mcf/tensor.hpp"

namespace mcf {

// Binary tensor container: magic "MCF1", u32le K,H,W, then K*H*W f32le
// values channel-major row-major. Round-trips bit-exactly.
void save_tensor(const MultiChannelImage& t, const std::string& path);
MultiChannelImage load_tensor(const std::string& path);

// Binary PGM (P5), 8-bit maxval only; values scaled to [0,1] as pixel/255.
MultiChannelImage load_image_gray(const std::string& path);

// Manifest persistence: tensors as MCF1 files next to a manifest.json
// listing paths, labels, targets, centers, dims and seed.
std::string save_manifest(const DatasetManifest& m, const std::string& dir);
DatasetManifest load_manifest(const std::string& manifest_path);

}  // namespace mcf

#endif  // MCF_TENSOR_IO_HPP_
