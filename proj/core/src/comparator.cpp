#include "burstforge/comparator.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "burstforge/error.hpp"
#include "burstforge/owe.hpp"

using json = nlohmann::json;

namespace burstforge {

namespace {

constexpr double kZetaTie = 1e-12;

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void check_shapes(const Frame& a, const Frame& b) {
  if (!a.image.same_shape(b.image))
    throw DimensionError("compare: frame shapes differ");
}

}  // namespace

double OracleComparator::compare(const Frame& a, const Frame& b) const {
  check_shapes(a, b);
  if (!a.zeta || !b.zeta)
    throw MissingLabelError("oracle comparator: frame without a zeta label");
  const double diff = *a.zeta - *b.zeta;
  if (std::abs(diff) <= kZetaTie) return 0.5;
  return diff > 0.0 ? 1.0 : 0.0;
}

double SingleMetricComparator::compare(const Frame& a, const Frame& b) const {
  check_shapes(a, b);
  const double sa = sharpness_score(metric_, center_tile(a.image, tile_));
  const double sb = sharpness_score(metric_, center_tile(b.image, tile_));
  return logistic(sb - sa);
}

double ComparatorModel::score(const FeatureVector& a,
                              const FeatureVector& b) const {
  const auto fa = a.as_array();
  const auto fb = b.as_array();
  double z = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k)
    z += weights[k] * (fa[k] - fb[k]);
  return logistic(z);
}

void save_model(const ComparatorModel& model, const std::string& path) {
  json names = json::array();
  for (const auto& n : FeatureVector::names()) names.push_back(n);
  const json doc = {{"weights", model.weights},
                    {"feature_names", names},
                    {"trained_on", model.trained_on}};
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

ComparatorModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UnsupportedFormatError("bad model " + path + ": " + e.what());
  }
  ComparatorModel model;
  const auto& weights = doc.at("weights");
  if (weights.size() != model.weights.size())
    throw UnsupportedFormatError("bad model " + path + ": expected " +
                                 std::to_string(model.weights.size()) +
                                 " weights");
  for (std::size_t k = 0; k < model.weights.size(); ++k)
    model.weights[k] = weights[k].get<double>();
  if (doc.contains("trained_on"))
    model.trained_on = doc["trained_on"].get<std::size_t>();
  return model;
}

double FeatureModelComparator::compare(const Frame& a, const Frame& b) const {
  check_shapes(a, b);
  return model_.score(features(center_tile(a.image, tile_)),
                      features(center_tile(b.image, tile_)));
}

ExternalScoresComparator::ExternalScoresComparator(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw IoError("cannot open scores: " + csv_path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::size_t i = 0, j = 0;
    double p = 0.0;
    char comma1 = 0, comma2 = 0;
    row >> i >> comma1 >> j >> comma2 >> p;
    if (!row || comma1 != ',' || comma2 != ',')
      throw UnsupportedFormatError("bad scores row '" + line + "' in " +
                                   csv_path);
    scores_.push_back({{i, j}, p});
  }
}

double ExternalScoresComparator::compare(const Frame& a, const Frame& b) const {
  if (!a.index || !b.index)
    throw MissingLabelError(
        "external comparator: frames without burst indices");
  for (const auto& [pair, p] : scores_) {
    if (pair.first == *a.index && pair.second == *b.index) return p;
  }
  for (const auto& [pair, p] : scores_) {
    if (pair.first == *b.index && pair.second == *a.index) return 1.0 - p;
  }
  throw ComparatorError("external comparator: no score for pair (" +
                        std::to_string(*a.index) + ", " +
                        std::to_string(*b.index) + ")");
}

double OweComparator::compare(const Frame& a, const Frame& b) const {
  check_shapes(a, b);
  const std::vector<ImageF> pair = {center_tile(a.image, tile_),
                                    center_tile(b.image, tile_)};
  const std::vector<double> energy = owe_scores(pair, p_, sigma_s_);
  return logistic(energy[1] - energy[0]);
}

}  // namespace burstforge
