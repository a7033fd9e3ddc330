#ifndef PIPADMM_DATASET_HPP_
#define PIPADMM_DATASET_HPP_

#include <string>
#include <vector>

#include "pipadmm/problem.hpp"

namespace pipadmm {

enum class DataFormat { CSV, SPARSE };
enum class ScalingMode { COLUMNS, ROWS, AUTO };

struct Dataset {
  Matrix features;
  Vector labels;               ///< mapped to {-1, +1}; empty when none present
  std::string name;
  bool scaling_applied = false;
  std::vector<Eigen::Index> skipped_by_scaling;  ///< zero rows/columns left untouched

  bool has_labels() const { return labels.size() > 0; }
};

/// Parses a dense CSV (header optional; comma separated; decimal point) or a
/// sparse file with lines `label idx:val ...` using 1-based indices.
///
/// `label_column` selects the CSV label column by 0-based index or, when a
/// header is present, by name; pass "" for a feature-only CSV. Labels must be
/// in {-1, 0, +1} and are mapped to {-1, +1} (0 -> -1). NaN/Inf entries and
/// ragged rows are rejected with the offending line number.
Dataset load_dataset(const std::string& path, DataFormat format,
                     const std::string& label_column = "", bool has_header = false);

/// Normalizes rows or columns of the feature matrix to unit 2-norm. AUTO
/// picks COLUMNS when n >= m and ROWS otherwise. Zero rows/columns are left
/// untouched and reported in skipped_by_scaling. Scaling twice is an error.
Dataset apply_scaling(Dataset ds, ScalingMode mode);

/// Writes `label,feat1,...` rows (no header) with enough digits that a
/// load_dataset round trip is bit-exact.
void save_dataset_csv(const Dataset& ds, const std::string& path);

}  // namespace pipadmm

#endif  // PIPADMM_DATASET_HPP_
