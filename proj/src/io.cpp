#include "liv/io.hpp"

#include <fstream>

namespace liv {

namespace {

nlohmann::json parse_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError(std::string("io: cannot open ") + what + " file '" +
                     path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("io: malformed ") + what + " file '" + path +
                     "': " + e.what());
  }
  return j;
}

} // namespace

KFTensor tensor_from_json(const nlohmann::json& j) {
  const int present = static_cast<int>(j.contains("uniform")) +
                      static_cast<int>(j.contains("kappa")) +
                      static_cast<int>(j.contains("components"));
  if (present != 1) {
    throw UsageError("io: tensor JSON must contain exactly one of "
                     "\"uniform\", \"kappa\", \"components\"");
  }
  try {
    if (j.contains("uniform")) {
      return KFTensor::uniform(j.at("uniform").get<double>());
    }
    if (j.contains("kappa")) {
      const auto rows = j.at("kappa");
      if (!rows.is_array() || rows.size() != 3) {
        throw UsageError("io: \"kappa\" must be a 3x3 array");
      }
      Eigen::Matrix3d m;
      for (int r = 0; r < 3; ++r) {
        const auto& row = rows.at(r);
        if (!row.is_array() || row.size() != 3) {
          throw UsageError("io: \"kappa\" must be a 3x3 array");
        }
        for (int c = 0; c < 3; ++c) {
          m(r, c) = row.at(c).get<double>();
        }
      }
      return KFTensor::from_kappa(KappaMatrix(m));
    }
    std::vector<std::pair<Index4, double>> entries;
    for (const auto& item : j.at("components")) {
      const auto idx = item.at("indices");
      if (!idx.is_array() || idx.size() != 4) {
        throw UsageError("io: component \"indices\" must have 4 entries");
      }
      Index4 index{};
      for (int k = 0; k < 4; ++k) {
        index[static_cast<std::size_t>(k)] = idx.at(k).get<int>();
      }
      entries.emplace_back(index, item.at("value").get<double>());
    }
    return KFTensor::from_components(entries);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("io: malformed tensor JSON: ") + e.what());
  }
}

KFTensor tensor_from_file(const std::string& path) {
  return tensor_from_json(parse_file(path, "tensor"));
}

DiscretizedSource source_from_json(const nlohmann::json& j) {
  DiscretizedSource source;
  try {
    for (const auto& item : j.at("samples")) {
      SourceSample s;
      const auto pos = item.at("pos");
      const auto cur = item.at("j");
      if (pos.size() != 3 || cur.size() != 4) {
        throw UsageError("io: source sample needs pos[3] and j[4]");
      }
      for (int k = 0; k < 3; ++k) {
        s.pos[k] = pos.at(k).get<double>();
      }
      for (int k = 0; k < 4; ++k) {
        s.j[k] = cur.at(k).get<double>();
      }
      s.w = item.at("w").get<double>();
      if (!(s.w > 0.0)) {
        throw UsageError("io: source sample weight must be positive");
      }
      source.samples.push_back(s);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("io: malformed source JSON: ") + e.what());
  }
  return source;
}

DiscretizedSource source_from_file(const std::string& path) {
  return source_from_json(parse_file(path, "source"));
}

void RunConfig::validate() const {
  if (!(hartree_ev > 0.0) || !(bohr_m > 0.0) || !(default_accuracy_ev > 0.0)) {
    throw UsageError("config: constants must be positive");
  }
  if (output_format != "json" && output_format != "csv" &&
      output_format != "text") {
    throw UsageError("config: output_format must be json, csv, or text");
  }
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig cfg;
  try {
    if (j.contains("constants")) {
      const auto& c = j.at("constants");
      if (c.contains("hartree_eV")) {
        cfg.hartree_ev = c.at("hartree_eV").get<double>();
      }
      if (c.contains("bohr_m")) {
        cfg.bohr_m = c.at("bohr_m").get<double>();
      }
    }
    if (j.contains("default_accuracy_eV")) {
      cfg.default_accuracy_ev = j.at("default_accuracy_eV").get<double>();
    }
    if (j.contains("mc_samples")) {
      cfg.mc_samples = j.at("mc_samples").get<std::uint64_t>();
    }
    if (j.contains("seed")) {
      cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("output_format")) {
      cfg.output_format = j.at("output_format").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("io: malformed config JSON: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

RunConfig config_from_file(const std::string& path) {
  return config_from_json(parse_file(path, "config"));
}

nlohmann::json to_json(const ShiftResult& r, double hartree_ev) {
  nlohmann::json j;
  j["value_hartree"] = r.value_hartree;
  j["value_ev"] = r.value_ev;
  j["method"] = r.method;
  j["error_estimate"] = r.error_estimate;
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [name, value] : r.terms) {
    terms[name] = value;
  }
  j["terms"] = terms;
  if (r.paper_formula_value_hartree) {
    j["paper_formula_value_hartree"] = *r.paper_formula_value_hartree;
    j["paper_formula_value_ev"] = *r.paper_formula_value_hartree * hartree_ev;
  }
  j["discrepancy_flag"] = r.discrepancy_flag;
  if (!r.note.empty()) {
    j["note"] = r.note;
  }
  return j;
}

nlohmann::json to_json(const ManifoldSpectrum& s, double hartree_ev) {
  nlohmann::json j;
  j["n"] = s.n;
  j["eigenvalues_hartree"] = s.eigenvalues_hartree;
  std::vector<double> ev;
  ev.reserve(s.eigenvalues_hartree.size());
  for (double e : s.eigenvalues_hartree) {
    ev.push_back(e * hartree_ev);
  }
  j["eigenvalues_ev"] = ev;
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& label : s.basis_labels) {
    nlohmann::json entry;
    entry["l"] = label.l;
    entry["m"] = label.m;
    if (label.two_s != 0) {
      entry["spin"] = label.two_s > 0 ? "+1/2" : "-1/2";
    }
    labels.push_back(entry);
  }
  j["basis_labels"] = labels;
  return j;
}

nlohmann::json to_json(const BoundResult& r) {
  nlohmann::json j;
  j["system"] = to_string(r.system);
  j["label"] = table_label(r.system);
  j["slope_ev_per_k"] = r.slope_ev_per_k;
  j["accuracy_ev"] = r.accuracy_ev;
  j["bound"] = r.bound;
  j["paper_bound"] = r.paper_bound;
  j["ratio"] = r.ratio;
  return j;
}

nlohmann::json to_json(const FieldSample& f) {
  nlohmann::json j;
  j["A0"] = f.A0;
  j["A"] = {f.A[0], f.A[1], f.A[2]};
  j["E"] = {f.E[0], f.E[1], f.E[2]};
  return j;
}

std::string table_label(BoundSystem system) {
  switch (system) {
  case BoundSystem::hydrogen:
    return "Hydrogen atom";
  case BoundSystem::permanent_stark:
    return "Stark effect";
  case BoundSystem::spin_orbit:
    return "spin-orbit interaction";
  case BoundSystem::helium:
    return "Helium atom";
  }
  return "unknown";
}

} // namespace liv
