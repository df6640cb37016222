#include "liv/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "liv/bounds.hpp"
#include "liv/fields.hpp"
#include "liv/helium.hpp"
#include "liv/io.hpp"
#include "liv/perturbation.hpp"

namespace liv {

namespace {

/// Shortest round-trip decimal form, shared by the csv and text writers.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct TensorArgs {
  std::optional<double> uniform_k;
  std::string kf_file;

  KFTensor load() const {
    if (uniform_k && !kf_file.empty()) {
      throw UsageError("cli: --uniform-k and --kf-file are exclusive");
    }
    if (uniform_k) {
      return KFTensor::uniform(*uniform_k);
    }
    if (!kf_file.empty()) {
      return tensor_from_file(kf_file);
    }
    throw UsageError("cli: a tensor is required; pass --uniform-k or "
                     "--kf-file");
  }

  nlohmann::json describe() const {
    nlohmann::json j;
    if (uniform_k) {
      j["uniform_k"] = *uniform_k;
    } else {
      j["file"] = kf_file;
    }
    return j;
  }
};

void add_tensor_flags(CLI::App* cmd, TensorArgs& args) {
  cmd->add_option("--uniform-k", args.uniform_k,
                  "Set (K_F)_{0j0k} = K for all spatial j,k");
  cmd->add_option("--kf-file", args.kf_file,
                  "JSON tensor file (uniform | kappa | components)");
}

Eigen::Vector3d parse_triplet(const std::string& text) {
  Eigen::Vector3d v;
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 3) {
      throw UsageError("cli: expected three comma-separated values, got '" +
                       text + "'");
    }
    try {
      v[i++] = std::stod(item);
    } catch (const std::exception&) {
      throw UsageError("cli: cannot parse coordinate '" + item + "'");
    }
  }
  if (i != 3) {
    throw UsageError("cli: expected three comma-separated values, got '" +
                     text + "'");
  }
  return v;
}

void emit_kv_text(const nlohmann::json& j, std::ostream& out,
                  const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      emit_kv_text(value, out, prefix + key + ".");
    } else if (value.is_number_float()) {
      out << prefix << key << ": " << num(value.get<double>()) << "\n";
    } else if (value.is_array()) {
      out << prefix << key << ": " << value.dump() << "\n";
    } else {
      out << prefix << key << ": "
          << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
}

void emit_kv_csv(const nlohmann::json& j, std::ostream& out,
                 const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      emit_kv_csv(value, out, prefix + key + ".");
    } else if (value.is_number_float()) {
      out << prefix << key << "," << num(value.get<double>()) << "\n";
    } else if (value.is_array()) {
      out << prefix << key << ",\"" << value.dump() << "\"\n";
    } else {
      out << prefix << key << ","
          << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
}

void emit_bound_rows_text(const std::vector<BoundResult>& rows,
                          std::ostream& out) {
  out << "Quantum system or Quantum effect  computed bound  paper bound  "
         "ratio (computed/paper)\n";
  for (const BoundResult& r : rows) {
    std::string label = table_label(r.system);
    label.resize(34, ' ');
    out << label << num(r.bound) << "  " << num(r.paper_bound) << "  "
        << num(r.ratio) << "\n";
  }
}

void emit_bound_rows_csv(const std::vector<BoundResult>& rows,
                         std::ostream& out) {
  out << "system,label,slope_ev_per_k,accuracy_ev,bound,paper_bound,ratio\n";
  for (const BoundResult& r : rows) {
    out << to_string(r.system) << "," << table_label(r.system) << ","
        << num(r.slope_ev_per_k) << "," << num(r.accuracy_ev) << ","
        << num(r.bound) << "," << num(r.paper_bound) << "," << num(r.ratio)
        << "\n";
  }
}

void emit_generic(const nlohmann::json& j, const std::string& format,
                  std::ostream& out) {
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    emit_kv_csv(j, out);
  } else {
    emit_kv_text(j, out);
  }
}

nlohmann::json constants_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["hartree_ev"] = cfg.hartree_ev;
  j["bohr_m"] = cfg.bohr_m;
  return j;
}

struct CliState {
  std::string config_path;
  std::string format; // overrides config when set
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> mc_samples;

  RunConfig resolve() const {
    RunConfig cfg = config_path.empty() ? RunConfig{}
                                        : config_from_file(config_path);
    if (seed) {
      cfg.seed = *seed;
    }
    if (mc_samples) {
      cfg.mc_samples = *mc_samples;
    }
    if (!format.empty()) {
      cfg.output_format = format;
    }
    cfg.validate();
    return cfg;
  }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Coefficient-tensor corrections to hydrogen and helium "
               "spectra, fields, and accuracy-derived coefficient bounds"};
  app.require_subcommand(1);

  CliState state;
  app.add_option("--config", state.config_path, "JSON run configuration");
  app.add_option("--format", state.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", state.seed, "Monte Carlo seed");
  app.add_option("--mc-samples", state.mc_samples, "Monte Carlo sample count");

  // shift ------------------------------------------------------------
  auto* shift = app.add_subcommand("shift", "First-order energy shifts");
  shift->require_subcommand(1);

  struct ShiftArgs {
    double z = 1.0;
    int n = 1, l = 0, m = 0;
    double j = -1.0; // <0 means "default to l + 1/2"
    TensorArgs tensor;
  } shift_args;

  auto add_state_flags = [&](CLI::App* cmd, bool with_j) {
    cmd->add_option("--z", shift_args.z, "Nuclear charge");
    cmd->add_option("--n", shift_args.n, "Principal quantum number");
    cmd->add_option("--l", shift_args.l, "Orbital quantum number");
    cmd->add_option("--m", shift_args.m, "Magnetic quantum number");
    if (with_j) {
      cmd->add_option("--j", shift_args.j, "Total angular momentum l +/- 1/2");
    }
    add_tensor_flags(cmd, shift_args.tensor);
    cmd->fallthrough();
  };

  auto* shift_hydrogen =
      shift->add_subcommand("hydrogen", "Diagonal modified-Coulomb shift");
  add_state_flags(shift_hydrogen, false);
  auto* shift_stark =
      shift->add_subcommand("stark", "Permanent-Stark shift (internal field)");
  add_state_flags(shift_stark, false);
  auto* shift_so =
      shift->add_subcommand("spin-orbit", "Spin-orbit coefficient correction");
  add_state_flags(shift_so, true);

  struct HeliumArgs {
    double z = 2.0;
    TensorArgs tensor;
  } helium_args;
  auto* shift_helium =
      shift->add_subcommand("helium", "Helium ground-state shift");
  shift_helium->add_option("--z", helium_args.z, "Nuclear charge");
  add_tensor_flags(shift_helium, helium_args.tensor);
  shift_helium->fallthrough();
  shift->fallthrough();

  // manifold ----------------------------------------------------------
  struct ManifoldArgs {
    int n = 2;
    double z = 1.0;
    bool spin = false;
    TensorArgs tensor;
  } manifold_args;
  auto* manifold =
      app.add_subcommand("manifold", "Degenerate n-manifold eigenvalues");
  manifold->add_option("--n", manifold_args.n, "Principal quantum number")
      ->required();
  manifold->add_option("--z", manifold_args.z, "Nuclear charge");
  manifold->add_flag("--spin", manifold_args.spin, "Double each level");
  add_tensor_flags(manifold, manifold_args.tensor);
  manifold->fallthrough();

  // field ---------------------------------------------------------------
  struct FieldArgs {
    double charge = 1.0;
    std::string at;
    std::string source_file;
    TensorArgs tensor;
  } field_args;
  auto* field =
      app.add_subcommand("field", "Potentials and field of a point charge");
  field->add_option("--charge", field_args.charge, "Charge in units of e");
  field->add_option("--at", field_args.at, "Evaluation point x,y,z in bohr")
      ->required();
  field->add_option("--source-file", field_args.source_file,
                    "Discretized source JSON; adds the convolution route");
  add_tensor_flags(field, field_args.tensor);
  field->fallthrough();

  // bound ---------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "Coefficient bounds");
  bound->require_subcommand(1);

  struct BoundArgs {
    std::string system = "hydrogen";
    double accuracy_ev = -1.0; // <0: use config default
    std::string model = "computed";
    double z = -1.0;
    int n = -1, l = -1, m = 0;
    double j = -1.0;
  } bound_args;

  auto* bound_single = bound->add_subcommand("single", "One system");
  bound_single
      ->add_option("--system", bound_args.system,
                   "hydrogen | stark | spin-orbit | helium")
      ->required()
      ->check(CLI::IsMember({"hydrogen", "stark", "spin-orbit", "helium"}));
  bound_single->add_option("--accuracy-ev", bound_args.accuracy_ev,
                           "Measurement accuracy in eV");
  bound_single
      ->add_option("--model", bound_args.model, "computed | paper")
      ->check(CLI::IsMember({"computed", "paper"}));
  bound_single->add_option("--z", bound_args.z, "Nuclear charge");
  bound_single->add_option("--n", bound_args.n, "Principal quantum number");
  bound_single->add_option("--l", bound_args.l, "Orbital quantum number");
  bound_single->add_option("--m", bound_args.m, "Magnetic quantum number");
  bound_single->add_option("--j", bound_args.j, "Total angular momentum");
  bound_single->fallthrough();

  double table_accuracy_ev = -1.0;
  auto* bound_table_cmd =
      bound->add_subcommand("table", "All four systems, published-table "
                                     "comparison");
  bound_table_cmd->add_option("--accuracy-ev", table_accuracy_ev,
                              "Measurement accuracy in eV");
  bound_table_cmd->fallthrough();
  bound->fallthrough();

  // check -----------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Diagnostics");
  check->require_subcommand(1);
  TensorArgs check_tensor;
  auto* check_consistency = check->add_subcommand(
      "consistency", "Trace tension between the Green-function route and "
                     "the closed-form potential");
  add_tensor_flags(check_consistency, check_tensor);
  check_consistency->fallthrough();
  check->fallthrough();

  // parse + dispatch ------------------------------------------------------
  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("liv");
    for (const std::string& a : args) {
      argv.push_back(a.c_str());
    }
    app.parse(static_cast<int>(argv.size()), argv.data());

    const RunConfig cfg = state.resolve();
    const std::string format = cfg.output_format;

    nlohmann::json report;
    report["constants"] = constants_json(cfg);

    if (shift_hydrogen->parsed() || shift_stark->parsed()) {
      const KFTensor t = shift_args.tensor.load();
      const HydrogenicState st{shift_args.z,
                               {shift_args.n, shift_args.l, shift_args.m, {}}};
      const ShiftResult r = shift_hydrogen->parsed()
                                ? hydrogen_shift_diagonal(st, t, cfg.hartree_ev)
                                : permanent_stark_shift(st, t, cfg.hartree_ev);
      report["command"] =
          shift_hydrogen->parsed() ? "shift hydrogen" : "shift stark";
      report["state"] = {{"Z", shift_args.z},
                         {"n", shift_args.n},
                         {"l", shift_args.l},
                         {"m", shift_args.m}};
      report["tensor"] = shift_args.tensor.describe();
      report.update(to_json(r, cfg.hartree_ev));
      emit_generic(report, format, out);
    } else if (shift_so->parsed()) {
      const KFTensor t = shift_args.tensor.load();
      const double j =
          shift_args.j > 0.0 ? shift_args.j : shift_args.l + 0.5;
      HydrogenicState st{shift_args.z,
                         {shift_args.n, shift_args.l, shift_args.m, j}};
      const ShiftResult r = spin_orbit_shift(st, t, cfg.hartree_ev);
      report["command"] = "shift spin-orbit";
      report["state"] = {{"Z", shift_args.z},
                         {"n", shift_args.n},
                         {"l", shift_args.l},
                         {"m", shift_args.m},
                         {"j", j}};
      report["tensor"] = shift_args.tensor.describe();
      report.update(to_json(r, cfg.hartree_ev));
      emit_generic(report, format, out);
    } else if (shift_helium->parsed()) {
      const KFTensor t = helium_args.tensor.load();
      const HeliumConfig hcfg{helium_args.z, cfg.mc_samples, cfg.seed};
      const ShiftResult r = helium_ground_shift(hcfg, t, cfg.hartree_ev);
      report["command"] = "shift helium";
      report["state"] = {{"Z", helium_args.z},
                         {"mc_samples", cfg.mc_samples},
                         {"seed", cfg.seed}};
      report["tensor"] = helium_args.tensor.describe();
      report.update(to_json(r, cfg.hartree_ev));
      emit_generic(report, format, out);
    } else if (manifold->parsed()) {
      const KFTensor t = manifold_args.tensor.load();
      const ManifoldSpectrum s = degenerate_manifold_shifts(
          manifold_args.n, manifold_args.z, t, manifold_args.spin);
      report["command"] = "manifold";
      report["state"] = {{"Z", manifold_args.z},
                         {"n", manifold_args.n},
                         {"spin", manifold_args.spin}};
      report["tensor"] = manifold_args.tensor.describe();
      report.update(to_json(s, cfg.hartree_ev));
      emit_generic(report, format, out);
    } else if (field->parsed()) {
      const KFTensor t = field_args.tensor.load();
      const Eigen::Vector3d x = parse_triplet(field_args.at);
      const PointCharge charge{field_args.charge, Eigen::Vector3d::Zero()};
      report["command"] = "field";
      report["charge"] = field_args.charge;
      report["at"] = {x[0], x[1], x[2]};
      report["tensor"] = field_args.tensor.describe();
      report.update(to_json(field_sample(x, charge, t)));
      if (!field_args.source_file.empty()) {
        const DiscretizedSource src = source_from_file(field_args.source_file);
        const Eigen::Vector4d a = potential_from_source(x, src, t);
        report["convolution_A"] = {a[0], a[1], a[2], a[3]};
        report["convolution_minus_closed_form_A0"] = a[0] - report["A0"]
                                                                .get<double>();
      }
      emit_generic(report, format, out);
    } else if (bound_single->parsed()) {
      BoundSystem system = BoundSystem::hydrogen;
      if (bound_args.system == "stark") {
        system = BoundSystem::permanent_stark;
      } else if (bound_args.system == "spin-orbit") {
        system = BoundSystem::spin_orbit;
      } else if (bound_args.system == "helium") {
        system = BoundSystem::helium;
      }
      BoundStateParams params = BoundStateParams::defaults_for(system);
      params.mc_samples = cfg.mc_samples;
      params.seed = cfg.seed;
      if (bound_args.z > 0.0) {
        (system == BoundSystem::helium ? params.helium_Z : params.Z) =
            bound_args.z;
      }
      if (bound_args.n > 0) {
        params.n = bound_args.n;
      }
      if (bound_args.l >= 0) {
        params.l = bound_args.l;
      }
      params.m = bound_args.m;
      if (bound_args.j > 0.0) {
        params.j = bound_args.j;
      }
      const AccuracyRecord acc{bound_args.accuracy_ev > 0.0
                                   ? bound_args.accuracy_ev
                                   : cfg.default_accuracy_ev,
                               "cli"};
      const SlopeModel model = bound_args.model == "paper"
                                   ? SlopeModel::paper_formula
                                   : SlopeModel::computed;
      const BoundResult r =
          bound_from_accuracy(system, params, acc, model, cfg.hartree_ev);
      report["command"] = "bound single";
      report.update(to_json(r));
      emit_generic(report, format, out);
    } else if (bound_table_cmd->parsed()) {
      const AccuracyRecord acc{table_accuracy_ev > 0.0
                                   ? table_accuracy_ev
                                   : cfg.default_accuracy_ev,
                               "cli"};
      const std::vector<BoundResult> rows =
          bound_table(acc, cfg.mc_samples, cfg.seed, cfg.hartree_ev);
      if (format == "text") {
        emit_bound_rows_text(rows, out);
      } else if (format == "csv") {
        emit_bound_rows_csv(rows, out);
      } else {
        report["command"] = "bound table";
        report["accuracy_ev"] = acc.value_ev;
        nlohmann::json array = nlohmann::json::array();
        for (const BoundResult& r : rows) {
          array.push_back(to_json(r));
        }
        report["rows"] = array;
        out << report.dump(2) << "\n";
      }
    } else if (check_consistency->parsed()) {
      const KFTensor t = check_tensor.load();
      const ConsistencyReport r = eq_consistency_report(t);
      report["command"] = "check consistency";
      report["tensor"] = check_tensor.describe();
      report["trace_0j0j"] = r.trace_0j0j;
      report["consistent"] = r.consistent;
      emit_generic(report, format, out);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    args.emplace_back(argv[i]);
  }
  return run_cli(args, out, err);
}

} // namespace liv
