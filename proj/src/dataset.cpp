#include "pipadmm/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pipadmm {

namespace {

[[noreturn]] void fail(const std::string& path, long line, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

double parse_field(const std::string& s, const std::string& path, long line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) fail(path, line, "trailing characters in field '" + s + "'");
    if (!std::isfinite(v)) fail(path, line, "non-finite value '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail(path, line, "unparseable field '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(path, line, "out-of-range value '" + s + "'");
  }
}

double map_label(double raw, const std::string& path, long line) {
  if (raw == -1.0 || raw == 1.0) return raw;
  if (raw == 0.0) return -1.0;
  fail(path, line, "label must be one of {-1, 0, +1}");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Dataset load_csv(const std::string& path, const std::string& label_column, bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_dataset: cannot open " + path);

  std::string line;
  long lineno = 0;
  long label_idx = -1;

  if (has_header) {
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    ++lineno;
    const auto names = split_csv(line);
    if (!label_column.empty()) {
      int parsed = -1;
      const auto [p, ec] = std::from_chars(label_column.data(),
                                           label_column.data() + label_column.size(), parsed);
      if (ec == std::errc() && p == label_column.data() + label_column.size()) {
        label_idx = parsed;
      } else {
        for (std::size_t j = 0; j < names.size(); ++j) {
          if (names[j] == label_column) label_idx = static_cast<long>(j);
        }
        if (label_idx < 0) {
          throw std::runtime_error(path + ": no header column named '" + label_column + "'");
        }
      }
    }
  } else if (!label_column.empty()) {
    int parsed = -1;
    const auto [p, ec] = std::from_chars(label_column.data(),
                                         label_column.data() + label_column.size(), parsed);
    if (ec != std::errc() || p != label_column.data() + label_column.size()) {
      throw std::runtime_error(path + ": label column by name requires a header");
    }
    label_idx = parsed;
  }

  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (width == 0) {
      width = fields.size();
      if (label_idx >= static_cast<long>(width)) {
        throw std::runtime_error(path + ": label column index out of range");
      }
    } else if (fields.size() != width) {
      fail(path, lineno, "ragged row (expected " + std::to_string(width) + " fields)");
    }
    std::vector<double> row;
    row.reserve(width);
    for (std::size_t j = 0; j < fields.size(); ++j) {
      const double v = parse_field(fields[j], path, lineno);
      if (static_cast<long>(j) == label_idx) {
        labels.push_back(map_label(v, path, lineno));
      } else {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": no data rows");

  Dataset ds;
  ds.name = path;
  ds.features.resize(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      ds.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  if (!labels.empty()) {
    ds.labels = Eigen::Map<const Vector>(labels.data(), static_cast<Eigen::Index>(labels.size()));
  }
  return ds;
}

Dataset load_sparse(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_dataset: cannot open " + path);

  std::vector<std::vector<std::pair<long, double>>> rows;
  std::vector<double> labels;
  long max_idx = 0;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    labels.push_back(map_label(parse_field(tok, path, lineno), path, lineno));
    std::vector<std::pair<long, double>> row;
    while (ss >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) fail(path, lineno, "expected idx:val, got '" + tok + "'");
      long idx = 0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + colon, idx);
      if (ec != std::errc() || p != tok.data() + colon || idx < 1) {
        fail(path, lineno, "bad 1-based index in '" + tok + "'");
      }
      const double v = parse_field(tok.substr(colon + 1), path, lineno);
      row.emplace_back(idx - 1, v);
      max_idx = std::max(max_idx, idx);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": no data rows");

  Dataset ds;
  ds.name = path;
  ds.features = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), max_idx);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, v] : rows[i]) {
      ds.features(static_cast<Eigen::Index>(i), j) = v;
    }
  }
  ds.labels = Eigen::Map<const Vector>(labels.data(), static_cast<Eigen::Index>(labels.size()));
  return ds;
}

}  // namespace

Dataset load_dataset(const std::string& path, DataFormat format,
                     const std::string& label_column, bool has_header) {
  if (format == DataFormat::CSV) return load_csv(path, label_column, has_header);
  return load_sparse(path);
}

Dataset apply_scaling(Dataset ds, ScalingMode mode) {
  if (ds.scaling_applied) {
    throw std::runtime_error("apply_scaling: dataset is already scaled");
  }
  const Eigen::Index m = ds.features.rows(), n = ds.features.cols();
  if (mode == ScalingMode::AUTO) {
    mode = (n >= m) ? ScalingMode::COLUMNS : ScalingMode::ROWS;
  }
  if (mode == ScalingMode::COLUMNS) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double nrm = ds.features.col(j).norm();
      if (nrm > 0.0) ds.features.col(j) /= nrm;
      else ds.skipped_by_scaling.push_back(j);
    }
  } else {
    for (Eigen::Index i = 0; i < m; ++i) {
      const double nrm = ds.features.row(i).norm();
      if (nrm > 0.0) ds.features.row(i) /= nrm;
      else ds.skipped_by_scaling.push_back(i);
    }
  }
  ds.scaling_applied = true;
  return ds;
}

void save_dataset_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_dataset_csv: cannot open " + path);
  out.precision(std::numeric_limits<double>::max_digits10);
  for (Eigen::Index i = 0; i < ds.features.rows(); ++i) {
    if (ds.has_labels()) out << ds.labels[i] << ',';
    for (Eigen::Index j = 0; j < ds.features.cols(); ++j) {
      out << ds.features(i, j);
      if (j + 1 < ds.features.cols()) out << ',';
    }
    out << '\n';
  }
}

}  // namespace pipadmm
