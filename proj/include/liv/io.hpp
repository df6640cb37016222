#pragma once

#include <string>

#include <json.hpp>

#include "liv/bounds.hpp"
#include "liv/fields.hpp"
#include "liv/kf_tensor.hpp"
#include "liv/perturbation.hpp"
#include "liv/run_config.hpp"
#include "liv/shift_result.hpp"

namespace liv {

/// Tensor file: exactly one of
///   {"uniform": K}
///   {"kappa": [[...],[...],[...]]}        (must be exactly symmetric)
///   {"components": [{"indices":[m,n,r,s], "value": v}, ...]}
KFTensor tensor_from_json(const nlohmann::json& j);
KFTensor tensor_from_file(const std::string& path);

/// {"samples": [{"pos":[x,y,z], "j":[j0,j1,j2,j3], "w": w}, ...]}
DiscretizedSource source_from_json(const nlohmann::json& j);
DiscretizedSource source_from_file(const std::string& path);

RunConfig config_from_json(const nlohmann::json& j);
RunConfig config_from_file(const std::string& path);

nlohmann::json to_json(const ShiftResult& r, double hartree_ev);
nlohmann::json to_json(const ManifoldSpectrum& s, double hartree_ev);
nlohmann::json to_json(const BoundResult& r);
nlohmann::json to_json(const FieldSample& f);

/// Row label used in the published comparison table.
std::string table_label(BoundSystem system);

} // namespace liv
