#include "tdahrv/ecoc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tdahrv {

EcocModel train_ecoc_ovo(const FeatureMatrix& x, std::span<const int> labels, std::vector<int> classes,
                         const SvmOptions& options) {
  if (labels.size() != x.rows()) throw std::invalid_argument("ECOC: label count does not match row count");
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.size() < 2) throw std::invalid_argument("ECOC: needs at least two classes");
  for (int c : classes)
    if (std::find(labels.begin(), labels.end(), c) == labels.end())
      throw std::invalid_argument("ECOC: class " + std::to_string(c) + " has no rows");

  EcocModel model;
  model.classes = classes;
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      FeatureMatrix sub(x.cols());
      std::vector<int> y;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == classes[a]) y.push_back(-1);
        else if (labels[i] == classes[b]) y.push_back(1);
        else continue;
        sub.add_row(x.row(i));
      }
      auto member = train_linear_svm(sub, y, options);
      member.class_pair = {classes[a], classes[b]};
      model.members.push_back(std::move(member));
    }
  return model;
}

int resolve_votes(const EcocModel& model, std::span<const double> scores) {
  const std::size_t m = model.classes.size();
  std::vector<int> votes(m, 0);
  std::vector<double> margin(m, 0.0);
  auto slot = [&](int label) {
    return static_cast<std::size_t>(std::find(model.classes.begin(), model.classes.end(), label) -
                                    model.classes.begin());
  };
  for (std::size_t k = 0; k < model.members.size(); ++k) {
    const auto& pair = model.members[k].class_pair;
    const std::size_t winner = slot(scores[k] > 0.0 ? pair.second : pair.first);
    ++votes[winner];
    margin[winner] += std::abs(scores[k]);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < m; ++c)
    if (votes[c] > votes[best] || (votes[c] == votes[best] && margin[c] > margin[best])) best = c;
  return model.classes[best];
}

int predict(const EcocModel& model, std::span<const double> x) {
  std::vector<double> scores;
  scores.reserve(model.members.size());
  for (const auto& member : model.members) scores.push_back(decision_score(member, x));
  return resolve_votes(model, scores);
}

}  // namespace tdahrv
