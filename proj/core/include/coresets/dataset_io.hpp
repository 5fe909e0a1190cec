#ifndef CORESETS_DATASET_IO_HPP
#define CORESETS_DATASET_IO_HPP

#include <string>

#include "coresets/benchmark_gen.hpp"
#include "coresets/point_set.hpp"

namespace coresets {

enum class DatasetFormat { csv_dense, svmlight_sparse };

/// csv_dense: one point per line, comma-separated reals; a non-numeric
/// first line is treated as a header. svmlight_sparse: whitespace-separated
/// "index:value" pairs (1-based indices), densified to the largest index
/// seen in the file; a bare leading numeric token per line (a label) is
/// ignored. Empty files, ragged csv rows and non-numeric fields each raise
/// a distinct diagnostic.
PointSet load_dataset(const std::string& path,
                      DatasetFormat format = DatasetFormat::csv_dense);

/// Full-precision CSV (round-trips doubles exactly).
void save_dataset_csv(const std::string& path, const Matrix& points);

/// Key-value sidecar carrying k, alpha and the planted label vectors.
void save_benchmark_metadata(const std::string& path,
                             const BenchmarkInstance& instance);

/// Re-attach sidecar metadata to a separately loaded matrix.
BenchmarkInstance load_benchmark_instance(const std::string& data_path,
                                          const std::string& meta_path);

/// Coreset CSV: x0..x{d-1},weight,source_index with an empty source column
/// for synthetic points.
void save_coreset_csv(const std::string& path, const WeightedCoreset& coreset);
WeightedCoreset load_coreset_csv(const std::string& path);

}  // namespace coresets

#endif  // CORESETS_DATASET_IO_HPP
