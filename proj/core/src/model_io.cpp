#include "augtk/model_io.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace augtk {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

void save_model(const Model& model, std::ostream& out) {
  ordered_json j;
  j["format"] = "augtk-model";
  j["version"] = kModelFormatVersion;
  j["labels"] = model.labels.names();
  j["features"] = model.features.names();
  if (model.schema) {
    j["schema"] = ordered_json{{"domains", model.schema->domain_names()}};
  } else {
    j["schema"] = nullptr;
  }
  ordered_json profile;
  profile["kind"] = model.profile.descriptor();
  ordered_json gazetteers = ordered_json::array();
  for (const Gazetteer& g : model.profile.gazetteers) {
    std::vector<std::string> words(g.words.begin(), g.words.end());
    std::sort(words.begin(), words.end());
    gazetteers.push_back(ordered_json{{"name", g.name}, {"words", words}});
  }
  profile["gazetteers"] = std::move(gazetteers);
  j["profile"] = std::move(profile);
  j["scheme"] = model.scheme_kind.empty()
                    ? ordered_json(nullptr)
                    : ordered_json(model.scheme_kind);
  j["chosen_iteration"] = model.chosen_iteration;
  j["dev_errors"] = model.dev_errors;

  ordered_json weights = ordered_json::array();
  for (const auto& row : model.weights) {
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0.0) {
        entries.push_back(ordered_json::array({i, row[i]}));
      }
    }
    weights.push_back(std::move(entries));
  }
  j["weights"] = std::move(weights);
  out << j.dump(2) << '\n';
}

void save_model(const Model& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  save_model(model, out);
  if (!out) throw Error("failed writing model to " + path.string());
}

Model load_model(std::istream& in) {
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw Error(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("format", "") != "augtk-model") {
      throw Error("not an augtk model file (missing format tag)");
    }
    if (j.value("version", 0) != kModelFormatVersion) {
      throw Error("unsupported model format version");
    }
    Model m;
    for (const auto& name : j.at("labels")) {
      m.labels.intern(name.get<std::string>());
    }
    for (const auto& name : j.at("features")) {
      m.features.intern(name.get<std::string>());
    }
    m.labels.freeze();
    m.features.freeze();
    if (!j.at("schema").is_null()) {
      std::vector<std::string> domains;
      for (const auto& d : j.at("schema").at("domains")) {
        domains.push_back(d.get<std::string>());
      }
      m.schema.emplace(std::move(domains), m.features.size());
    }
    const auto& profile = j.at("profile");
    m.profile = FeatureProfile::from_descriptor(
        profile.at("kind").get<std::string>());
    for (const auto& g : profile.at("gazetteers")) {
      Gazetteer gaz;
      gaz.name = g.at("name").get<std::string>();
      for (const auto& w : g.at("words")) {
        gaz.words.insert(w.get<std::string>());
      }
      m.profile.gazetteers.push_back(std::move(gaz));
    }
    m.scheme_kind =
        j.at("scheme").is_null() ? "" : j.at("scheme").get<std::string>();
    m.chosen_iteration = j.at("chosen_iteration").get<unsigned>();
    m.dev_errors = j.at("dev_errors").get<std::vector<double>>();

    const std::size_t dim =
        m.schema ? m.schema->augmented_dim() : m.features.size();
    const auto& weights = j.at("weights");
    if (weights.size() != m.labels.size()) {
      throw Error("model weight rows do not match the label set");
    }
    m.weights.assign(m.labels.size(), std::vector<double>(dim, 0.0));
    for (std::size_t c = 0; c < weights.size(); ++c) {
      for (const auto& entry : weights[c]) {
        std::size_t id = entry.at(0).get<std::size_t>();
        if (id >= dim) {
          throw Error("weight id " + std::to_string(id) +
                      " outside the model space");
        }
        m.weights[c][id] = entry.at(1).get<double>();
      }
    }
    return m;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("malformed model file: ") + e.what());
  }
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file " + path.string());
  return load_model(in);
}

}  // namespace augtk
