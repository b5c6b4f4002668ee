#include "cumulant/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cumulant/cumulant_bijection.hpp"
#include "cumulant/errors.hpp"
#include "cumulant/io.hpp"
#include "cumulant/probability.hpp"
#include "cumulant/transfer.hpp"

namespace cumulant::cli {

namespace {

using io::Json;

struct UsageError : Error {
  using Error::Error;
};

struct JobConfig {
  std::string command;
  int weight_cap = SymmetricCoalgebra::kDefaultCap;
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "json";
  std::string kind;
  int order = 0;

  std::multimap<std::string, std::string> roles;

  std::vector<std::string> paths(const std::string& role) const {
    std::vector<std::string> out;
    for (auto [it, end] = roles.equal_range(role); it != end; ++it) out.push_back(it->second);
    return out;
  }
  std::string single(const std::string& role) const {
    auto p = paths(role);
    if (p.size() != 1) throw UsageError(command + " needs exactly one --input " + role + "=<path>");
    return p.front();
  }
};

const std::set<std::string> kRoles = {"algebra", "map", "retract", "transfer", "moments"};

void resolve_roles(JobConfig& job) {
  for (const auto& input : job.inputs) {
    const auto eq = input.find('=');
    if (eq == std::string::npos) throw UsageError("--input must be role=path, got '" + input + "'");
    std::string role = input.substr(0, eq);
    std::string path = input.substr(eq + 1);
    if (!kRoles.count(role)) throw UsageError("unknown input role '" + role + "'");
    if (!std::filesystem::exists(path)) throw UsageError("input file '" + path + "' does not exist");
    job.roles.emplace(std::move(role), std::move(path));
  }
}

Json base_report(const JobConfig& job) {
  return {{"command", job.command}, {"weight_cap", job.weight_cap}, {"overflow", false}, {"status", "ok"}};
}

Json checks_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(io::to_json(r));
  return out;
}

Algebra load_algebra(const std::string& path) {
  Json doc = io::read_json_file(path);
  if (!doc.contains("name")) doc["name"] = std::filesystem::path(path).stem().string();
  return io::parse_algebra(doc);
}

// ---------------------------------------------------------------------------

Json run_validate(const JobConfig& job) {
  Json report = base_report(job);
  std::vector<CheckReport> checks;
  const auto algebras = job.paths("algebra");
  const auto retracts = job.paths("retract");
  const auto transfers = job.paths("transfer");
  if (algebras.empty() && retracts.empty() && transfers.empty()) {
    throw UsageError("validate needs an algebra, retract or transfer input");
  }
  for (const auto& path : algebras) {
    CheckReport check{"algebra:" + std::filesystem::path(path).stem().string()};
    try {
      const Algebra a = load_algebra(path);
      check.checked = a.dimension();
    } catch (const ValidationError& e) {
      check.passed = false;
      check.witness = {e.witness()};
      check.detail = e.what();
    }
    checks.push_back(check);
  }
  for (const auto& path : retracts) {
    for (auto& r : validate_retract(io::parse_retract(io::read_json_file(path)))) checks.push_back(std::move(r));
  }
  for (const auto& path : transfers) {
    const TransferInput input = io::parse_transfer(io::read_json_file(path));
    for (auto& r : validate_retract(input.retract)) checks.push_back(std::move(r));
    for (auto& r : validate_transfer_input(input, job.weight_cap)) checks.push_back(std::move(r));
  }
  report["checks"] = checks_json(checks);
  if (!all_passed(checks)) report["status"] = "failed";
  return report;
}

Json run_lift(const JobConfig& job, bool inverse) {
  const CumulantContext context(load_algebra(job.single("algebra")), job.weight_cap);
  Json report = base_report(job);
  report["algebra"] = context.space()->label();
  const TabulatedMap& map = inverse ? context.inverse() : context.forward();
  report["table"] = io::table_to_json(map);
  const TabulatedMap id = TabulatedMap::identity(context.coalgebra());
  std::vector<CheckReport> checks{check_comorphism(map), check_unitriangular(map),
                                  compare_maps("inverse", compose(context.inverse(), context.forward()), id)};
  report["checks"] = checks_json(checks);
  if (!all_passed(checks)) report["status"] = "failed";
  return report;
}

Json run_defects(const JobConfig& job) {
  if (job.kind != "hom" && job.kind != "der") throw UsageError("defects needs --kind hom|der");
  const auto algebra_paths = job.paths("algebra");
  if (algebra_paths.empty() || algebra_paths.size() > 2) throw UsageError("defects needs one or two algebra inputs");
  std::vector<Algebra> algebras;
  for (const auto& p : algebra_paths) algebras.push_back(load_algebra(p));
  const Json map_doc = io::read_json_file(job.single("map"));

  auto pick = [&](const char* key) -> const Algebra& {
    if (algebras.size() == 1) return algebras.front();
    const std::string label = map_doc.value(key, std::string{});
    for (const auto& a : algebras) {
      if (a.space()->label() == label) return a;
    }
    throw UsageError(std::string("map ") + key + " '" + label + "' names none of the algebra inputs");
  };
  const Algebra& source = pick("source");
  const Algebra& target = pick("target");
  const LinearMap f = io::parse_linear_map(map_doc, source.space(), target.space());

  Json report = base_report(job);
  report["kind"] = job.kind;
  TaylorFamily defects;
  if (job.kind == "hom") {
    if (f.degree() != 0) throw ValidationError("homomorphism defects need a degree-0 map", "degree");
    const CumulantContext src(source, job.weight_cap);
    const CumulantContext tgt(target, job.weight_cap);
    defects = homomorphism_defects(f, src, tgt);
  } else {
    if (!same_space(source.space(), target.space())) throw UsageError("derivation defects need an endomorphism");
    defects = derivation_defects(f, CumulantContext(source, job.weight_cap));
  }
  report["defects"] = io::to_json(defects);
  report["vanishes_above_1"] = vanishes_above_arity_one(defects);
  return report;
}

Json run_transfer(const JobConfig& job) {
  const TransferInput input = io::parse_transfer(io::read_json_file(job.single("transfer")));
  const InducedBijection result = certify_induced_bijection(input, job.weight_cap);
  Json report = base_report(job);
  report["hypotheses"] = checks_json(result.hypotheses);
  report["certificates"] = checks_json(result.certificates);
  report["certified"] = result.certified();
  report["induced"] = io::to_json(result.family);
  report["table"] = io::table_to_json(result.map);
  if (!result.certified()) report["status"] = "failed";
  return report;
}

Json run_cumulants(const JobConfig& job) {
  const MomentSequence moments = io::parse_moments(io::read_json_file(job.single("moments")));
  const int available = std::min(static_cast<int>(moments.size()), job.weight_cap);
  const int n = job.order == 0 ? available : job.order;
  if (n < 1 || n > available) {
    throw UsageError("--order must lie in 1.." + std::to_string(available) + " (moments given and weight cap)");
  }
  const auto kappa = cumulants_from_moments(moments, n);
  const auto oracle = oracle_cumulants(moments, n);
  Json report = base_report(job);
  Json k = Json::array();
  Json o = Json::array();
  for (const auto& v : kappa) k.push_back(format_scalar(v));
  for (const auto& v : oracle) o.push_back(format_scalar(v));
  report["order"] = n;
  report["cumulants"] = std::move(k);
  report["oracle"] = std::move(o);
  report["agree"] = kappa == oracle;
  if (kappa != oracle) report["status"] = "failed";
  return report;
}

// ---------------------------------------------------------------------------

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); })) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : ", ") + e.get<std::string>();
    return "[" + out + "]";
  }
  return v.dump();
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object() && value.front().contains("passed")) {
      out << key << ":\n";
      for (const auto& check : value) {
        out << "  [" << (check["passed"].get<bool>() ? "pass" : "FAIL") << "] " << check["name"].get<std::string>();
        if (check.contains("witness")) out << "  witness: " << render_value(check["witness"]);
        out << "\n";
      }
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ": " << value.size() << " entries\n";
    } else if (value.is_object()) {
      out << key << ": object with " << value.size() << " keys\n";
    } else {
      out << key << ": " << render_value(value) << "\n";
    }
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cumulant-bijection engine for graded commutative algebras", "cumulant"};
  JobConfig job;
  app.require_subcommand(1);
  app.add_option("--weight-cap", job.weight_cap, "Weight cap W (default 6, at most 10)");
  app.add_option("--input", job.inputs, "Role-tagged input: algebra=, map=, retract=, transfer=, moments=");
  app.add_option("--output", job.output, "Write the JSON report to this path");
  app.add_option("--format", job.format, "stdout format")->check(CLI::IsMember({"json", "text"}));

  std::vector<CLI::App*> subs;
  subs.push_back(app.add_subcommand("validate", "Check algebra, retract and transfer documents"));
  subs.push_back(app.add_subcommand("lift", "Tabulate the cumulant bijection up to the weight cap"));
  subs.push_back(app.add_subcommand("invert", "Tabulate the inverse cumulant bijection"));
  auto* defects = app.add_subcommand("defects", "Homomorphism or derivation defect tables");
  defects->add_option("--kind", job.kind, "hom or der")->required()->check(CLI::IsMember({"hom", "der"}));
  subs.push_back(defects);
  subs.push_back(app.add_subcommand("transfer", "Induced cumulant bijection of a retract, with certification"));
  auto* cumulants = app.add_subcommand("cumulants", "Classical cumulants from moments");
  cumulants->add_option("--order", job.order, "Number of cumulants (default: all available)");
  subs.push_back(cumulants);
  for (auto* s : subs) s->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  job.command = app.get_subcommands().front()->get_name();

  Json report;
  try {
    if (job.weight_cap < 1 || job.weight_cap > kMaxWeightCap) {
      throw UsageError("--weight-cap must lie in 1.." + std::to_string(kMaxWeightCap));
    }
    if (job.weight_cap >= 8) {
      err << "warning: weight cap " << job.weight_cap << " enumerates up to Bell(" << job.weight_cap
          << ") = " << bell_number(job.weight_cap) << " partitions per monomial\n";
    }
    resolve_roles(job);
    if (job.command == "validate") report = run_validate(job);
    else if (job.command == "lift") report = run_lift(job, false);
    else if (job.command == "invert") report = run_lift(job, true);
    else if (job.command == "defects") report = run_defects(job);
    else if (job.command == "transfer") report = run_transfer(job);
    else report = run_cumulants(job);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    report = base_report(job);
    report["status"] = "failed";
    report["error"] = {{"message", e.what()}, {"witness", e.witness()}};
  } catch (const Error& e) {
    report = base_report(job);
    report["status"] = "failed";
    report["error"] = {{"message", e.what()}};
  }

  const std::string json = io::dump(report);
  if (!job.output.empty()) {
    std::ofstream file(job.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << job.output << "'\n";
      return kExitUsage;
    }
    file << json;
  }
  if (job.format == "text") {
    out << render_text(report);
  } else if (job.output.empty()) {
    out << json;
  }
  return report["status"] == "ok" ? kExitOk : kExitValidation;
}

}  // namespace cumulant::cli
